#pragma once

#include "cf/fock.hpp"

namespace cf {

// K_ijk = ker(π_{i,k}) on L_jk ∘_spans L_ij, stored by its middle components:
// a ∈ H_j with (0,a) ∈ L_ij and (a,0) ∈ L_jk. The kernel element itself is (0,a,a,0).
Subspace pf_kernel(const Correspondence& lij, const Correspondence& ljk);
// det(K_ijk) with K_ijk embedded in H_i ⊕ H_j ⊕ H_j ⊕ H_k.
DetLine pf_det(const Correspondence& lij, const Correspondence& ljk);
// Hom(F(L_ik), F(L_jk) ⊗_{Cl(H_j)} F(L_ij)); InternalError unless one-dimensional.
HomSpace pf_hom(const Correspondence& lij, const Correspondence& ljk, const Scalar& kappa = kDefaultKappa);

// λ: F(L_ik) ⊗ Pf(L_ij, L_jk) → F(L_jk) ⊗_{Cl(H_j)} F(L_ij). Pf enters as det(K)^∨;
// `matrix` is written on the basis x ⊗ g^∨, g the wedge of the RREF kernel basis.
struct LambdaIso {
  Correspondence lij, ljk, lik;
  Subspace kernel;
  int parity = 0;
  SuperBimodule source;  // shift(F(L_ik), parity)
  RelTensor target;
  HomSpace hom;
  Matrix hom_image;   // h with h(Ω) = Ω ⊗ w_1⋯w_n Ω, w dual to the kernel basis in α(K)
  Scalar comparison;  // hom_image = comparison · hom.line_generator()
  Matrix matrix;      // λ(x ⊗ g^∨) = (−1)^{|x| parity} hom_image(x)
};

// w_1⋯w_n Ω in F(L_ij), w the b-dual basis of `kernel` (a basis of K) inside α(K).
Vec pf_vacuum_value(const Correspondence& lij, const std::vector<Vec>& kernel, const FockModule& fij);
LambdaIso lambda_iso(const Correspondence& lij, const Correspondence& ljk, const Scalar& kappa = kDefaultKappa);

// The isomorphisms through det(M_ijkl) for the chain L_ij, L_jk, L_kl. In canonical generators
//   k_ijk ⊗ k_ikl ↦ c1 · m   and   k_jkl ⊗ k_ijl ↦ c2 · m.
struct PhiIso {
  Subspace k_ijk, k_ikl, k_jkl, k_ijl;
  Subspace m;  // (a, b) ∈ H_j ⊕ H_k
  Scalar c1, c2;
  // Pf(jk,kl) ⊗ Pf(ij,jl) → Pf(ij,jk) ⊗ Pf(ik,kl)
  Scalar forward() const { return c2 / c1; }
  // Pf(ij,jk) ⊗ Pf(ik,kl) → Pf(jk,kl) ⊗ Pf(ij,jl), as it appears in the pentagon
  Scalar backward() const { return c1 / c2; }
};

// `lift_shift` perturbs the lifts in both sequences (for lift-independence checks).
PhiIso phi_iso(const Correspondence& lij, const Correspondence& ljk, const Correspondence& lkl, Rng* lift_shift = nullptr);

struct CoherenceOptions {
  bool koszul = true;  // sign of the symmetry of graded lines
  Scalar kappa = kDefaultKappa;
};

CoherenceReport check_fock_pentagon(const Correspondence& lij, const Correspondence& ljk, const Correspondence& lkl,
                                    const Correspondence& llm, const CoherenceOptions& opt = {});
CoherenceReport check_fock_mixed(const Correspondence& lij, const Correspondence& ljk, const Correspondence& lkl,
                                 const CoherenceOptions& opt = {});

// Vector helper: c with x = c·y, y nonzero.
std::optional<Scalar> vec_ratio(const Vec& x, const Vec& y);

}  // namespace cf
