#pragma once

#include <memory>
#include <random>
#include <string>

#include "cf/linalg.hpp"

namespace cf {

using Rng = std::mt19937_64;

// (H, α) with α(v) = A·conj(v). b(v,w) = ⟨α v | w⟩ = vᵀ·conj(A)ᵀ·w.
struct AntiinvolutiveSpace {
  Field field = Field::Q;
  int dim = 0;
  Matrix inv;
  std::string name;

  Vec alpha(const Vec& v) const;
  Matrix gram() const { return inv.conj().transpose(); }
};

using SpacePtr = std::shared_ptr<const AntiinvolutiveSpace>;

struct CheckResult {
  bool ok = true;
  std::string reason;
};

CheckResult validate_space(const AntiinvolutiveSpace& h);
// InvalidInput unless validate_space passes.
SpacePtr make_space(Field f, const Matrix& inv, std::string name = "");
bool same_space(const AntiinvolutiveSpace& a, const AntiinvolutiveSpace& b);

Scalar bilinear_form(const AntiinvolutiveSpace& h, const Vec& v, const Vec& w);
Subspace alpha_of(const AntiinvolutiveSpace& h, const Subspace& s);

struct LagrangianReport {
  bool ok = false;
  bool isotropic = false;
  bool splits = false;  // S ∩ α(S) = 0 and dim S + dim α(S) = dim H
  std::string reason;
};

LagrangianReport validate_lagrangian(const AntiinvolutiveSpace& h, const Subspace& s);
// Isotropic with U ∩ α(U) = 0.
bool is_sublagrangian(const AntiinvolutiveSpace& h, const Subspace& s);

struct Lagrangian {
  SpacePtr space;
  Subspace sub;
};

Lagrangian make_lagrangian(const SpacePtr& h, const Subspace& s);  // InvalidInput if not Lagrangian

SpacePtr negate(const AntiinvolutiveSpace& h);
SpacePtr direct_sum(const AntiinvolutiveSpace& a, const AntiinvolutiveSpace& b);
Lagrangian lagrangian_sum(const Lagrangian& a, const Lagrangian& b);

// Lagrangian of (H_i, −α_i) ⊕ (H_j, α_j); coordinates (x_i, x_j).
struct Correspondence {
  SpacePtr source;
  SpacePtr target;
  SpacePtr ambient;
  Subspace lag;
};

SpacePtr corr_space(const AntiinvolutiveSpace& hi, const AntiinvolutiveSpace& hj);
Correspondence make_correspondence(const SpacePtr& hi, const SpacePtr& hj, const Subspace& l);
Correspondence identity_corr(const SpacePtr& h);
Correspondence graph_corr(const SpacePtr& h, const Matrix& g);
Correspondence compose_corr(const Correspondence& lij, const Correspondence& ljk);

// π_j-fibre product of L_ij and L_jk inside H_i ⊕ H_j ⊕ H_j ⊕ H_k.
Subspace corr_pullback(const Correspondence& lij, const Correspondence& ljk);

// Generalized Lagrangian η: W → (H_i,−α_i) ⊕ (H_j,α_j).
struct Span {
  SpacePtr source;
  SpacePtr target;
  SpacePtr ambient;
  int w_dim = 0;
  Matrix eta;  // ambient dim x w_dim
};

struct SpanReport {
  bool ok = false;
  int ker_dim = 0;
  std::string reason;
};

SpanReport validate_span(const Span& s);
Span make_span(const SpacePtr& hi, const SpacePtr& hj, const Matrix& eta);
Span inclusion_span(const Correspondence& c);
// W_ij ×_{H_j} W_jk inside W_ij ⊕ W_jk; its RREF rows are the basis of the composite's W.
Subspace span_fibre(const Span& sij, const Span& sjk);
Span compose_spans(const Span& sij, const Span& sjk);
Correspondence span_image(const Span& s);
Subspace span_kernel(const Span& s);

Lagrangian random_lagrangian(const SpacePtr& h, Rng& rng);
Lagrangian random_lagrangian(const SpacePtr& h, unsigned long seed);

}  // namespace cf
