#pragma once

#include "cf/clifford.hpp"

namespace cf {

// Annihilation normalization making ρ(v)² = −b(v,v).
inline const Scalar kDefaultKappa{-2};

// F(L) = ⋀ α(L) on the wedges y_S of the RREF basis y_0 < … of α(L),
// S a bitmask. v = v_L + v_αL acts by contraction with v_L and wedge with v_αL.
struct FockModule {
  Lagrangian lag;
  Subspace alpha_lag;
  int m = 0;  // dim L
  Scalar kappa = kDefaultKappa;
  Matrix split;  // 2m x n: coordinates of v against [L rows; α(L) rows]
  std::vector<Matrix> ann;  // contraction with the k-th L basis row
  std::vector<Matrix> cre;  // wedge with y_k
  std::vector<int> parity;

  int dim() const { return 1 << m; }
  Matrix rho(const Vec& v) const;
  Vec act(const Vec& v, const Vec& w) const { return rho(v).apply(w); }
  Vec vacuum() const;
  Vec basis_top() const;  // y_0 ∧ … ∧ y_{m-1}
};

FockModule build_fock(const Lagrangian& l, const Scalar& kappa = kDefaultKappa);
Vec fock_act(const FockModule& f, const Vec& v, const Vec& w);

// ρ(v)² = −b(v,v) for every v in `samples`.
bool check_module_axiom(const FockModule& f, const std::vector<Vec>& samples);
// Same on the probes e_a + e_b, a ≤ b, which determine the quadratic form.
bool check_module_axiom(const FockModule& f);

// F(L) for L ⊂ (H_i,−α_i)⊕(H_j,α_j), as a (Cl(H_j), Cl(H_i))-bimodule:
// u·w = ρ(0,u) w and w·u = −(−1)^{|w|} ρ(u,0) w.
struct FockBimodule {
  Correspondence corr;
  FockModule fock;
  SuperBimodule mod;
};

FockBimodule fock_bimodule(const Correspondence& c, const Scalar& kappa = kDefaultKappa);

}  // namespace cf
