#pragma once

#include <map>

#include "cf/pfaffian.hpp"

namespace cf {

// ---------------------------------------------------------------- categories

struct Morphism {
  std::string id;
  int src = 0;
  int dst = 0;
};

// compose[{f, g}] = g ∘ f, for f: i → j and g: j → k.
struct FiniteCategory {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::map<std::pair<int, int>, int> compose;
  std::vector<int> identities;  // per object

  int then(int f, int g) const;  // InvalidInput if not composable
  int find(const std::string& id) const;
};

CheckResult validate_category(const FiniteCategory& c);
// Objects 0..n, one morphism a → b for a ≤ b, named "a<b" (identities "a=a").
FiniteCategory poset_category(int n);
// One object; `table[a][b]` is the index of a·b, element 0 the unit. The
// morphism for g then h is h·g.
FiniteCategory group_category(const std::vector<std::string>& names, const std::vector<std::vector<int>>& table);
FiniteCategory z2_category();
FiniteCategory z2xz2_category();
int poset_morphism(const FiniteCategory& c, int a, int b);

// ---------------------------------------------------------------- scalar wannabes

// Lines over each object, ρ_f a nonzero scalar in the generators.
struct ScalarWannabe {
  const FiniteCategory* cat = nullptr;
  std::vector<int> parity;  // per object
  std::vector<Scalar> rho;  // per morphism
  // injected α values, for negative controls
  std::map<std::pair<int, int>, Scalar> alpha_override;
};

// α = ρ_ik⁻¹ ρ_jk ρ_ij for f = f_ij, g = f_jk.
Scalar scalar_cocycle(const ScalarWannabe& r, int f, int g);
// Cocycle law α_ikl α_ijk = α_ijl α_jkl and ρ_jk ρ_ij = ρ_ik α_ijk on the quadruple.
CoherenceReport check_scalar_laws(const ScalarWannabe& r, int fij, int fjk, int fkl);

// ---------------------------------------------------------------- wannabe functors

struct WannabeFunctor {
  const FiniteCategory* cat = nullptr;
  std::vector<AlgPtr> objects;
  std::vector<SuperBimodule> values;  // M_f is a (A_dst, A_src)-bimodule
};

// Endpoints match, identities are regular bimodules; with `invertibility` also
// runs invertibility_check on every value.
CheckResult validate_wannabe(const WannabeFunctor& w, bool invertibility = true);

// The poset [n] with M_ab = F(L_ab), L_ab the composite of the chain from a to b.
struct FockWannabe {
  FiniteCategory cat;
  std::vector<Correspondence> corr;  // per morphism; identities get Δ
  WannabeFunctor w;
};
std::unique_ptr<FockWannabe> fock_wannabe(const std::vector<Correspondence>& chain, const Scalar& kappa = kDefaultKappa);

// l = Hom(M_ik, M_jk ⊗ M_ij) for f = f_ij, g = f_jk.
struct LineCocycle {
  int f = 0, g = 0, h = 0;
  HomSpace hom;
  RelTensor target;
  Matrix gen;
  int parity = 0;
};

LineCocycle line_cocycle(const WannabeFunctor& w, int f, int g);

// m = Hom(M_il, (M_kl ⊗ M_jk) ⊗ M_ij) and
//   τ_odd:  l_ijk ⊗ l_ikl → m, g ⊗ f ↦ (id ⊗ g) ∘ f
//   τ_even: l_jkl ⊗ l_ijl → m, g ⊗ f ↦ (g ⊗ id) ∘ f
// as scalars against the generators.
struct TauMaps {
  LineCocycle l_ijk, l_ikl, l_jkl, l_ijl;
  RelTensor t3;
  HomSpace m;
  Matrix m_gen;
  Matrix odd_image, even_image;
  Scalar tau_odd, tau_even;
  Scalar psi() const { return tau_even / tau_odd; }  // l_jkl l_ijl → l_ijk l_ikl
  Scalar phi() const { return tau_odd / tau_even; }
};

TauMaps tau_maps(const WannabeFunctor& w, int fij, int fjk, int fkl);

// n = Hom(M_im, ((M_lm ⊗ M_kl) ⊗ M_jk) ⊗ M_ij) with
//   κ_1: m_ijkl ⊗ l_ilm → n, μ ⊗ h ↦ (id ⊗ μ) ∘ h
//   κ_2: l_ijk ⊗ m_iklm → n, g ⊗ ν ↦ (id ⊗ g) ∘ ν
// and the square with τ_ijk,ikl ⊗ id and id ⊗ τ_ikl,ilm.
struct KappaOptions {
  bool negate_kappa = false;  // negative control
};
CoherenceReport kappa_and_two_kappas(const WannabeFunctor& w, int fij, int fjk, int fkl, int flm,
                                     const KappaOptions& opt = {});

// ε: M_ik ⊗ l → M_jk ⊗ M_ij, x ⊗ h ↦ (−1)^{|x||h|} h(x), on the basis x ⊗ h of shift(M_ik, |h|).
struct Epsilon {
  LineCocycle l;
  SuperBimodule source;
  Matrix matrix;
  Matrix inverse;
};

Epsilon epsilon_and_inverse(const WannabeFunctor& w, int f, int g);

CoherenceReport check_generic_pentagon(const WannabeFunctor& w, int fij, int fjk, int fkl, int flm,
                                       const CoherenceOptions& opt = {});
// The inverted mixed diagram: ε⁻¹ down both sides, then id ⊗ φ.
CoherenceReport check_generic_mixed(const WannabeFunctor& w, int fij, int fjk, int fkl,
                                    const CoherenceOptions& opt = {});
// Both of the above on the quintuple, reported together.
CoherenceReport check_generic_coherences(const WannabeFunctor& w, int fij, int fjk, int fkl, int flm,
                                         const CoherenceOptions& opt = {});

}  // namespace cf
