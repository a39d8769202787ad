#pragma once

#include "cf/pfaffian.hpp"

namespace cf {

// β(η) = det(ker η), ker η ⊂ W in the span's own W coordinates.
struct TwistingLine {
  Span span;
  DetLine line;
  int parity() const { return line.parity(); }
};

TwistingLine beta_line(const Span& s);

// ψ: β_jk ⊗ β_ij ⊗ Pf(L_ij, L_jk) → β_ik, here with Pf = det(K_ijk):
//   g_jk ⊗ g_ij ⊗ k ↦ scalar · g_ik
// from 0 → ker η_jk ⊕ ker η_ij → ker η_ik → K_ijk → 0.
struct PsiIso {
  Span sij, sjk, sik;
  ShortExactSequence ses;  // inj columns: ker η_jk basis, then ker η_ij basis
  Scalar scalar;
};

PsiIso psi_iso(const Span& sij, const Span& sjk, Rng* lift_shift = nullptr);

// c with g_R = c·g_L, for the two generators of det ker η_il coming from
// (η_ij ∘ η_jk) ∘ η_kl and η_ij ∘ (η_jk ∘ η_kl); both kernels are compared in W_ij ⊕ W_jk ⊕ W_kl.
Scalar bracketing_scalar(const Span& sij, const Span& sjk, const Span& skl);

CoherenceReport check_beta_coherence(const Span& sij, const Span& sjk, const Span& skl,
                                     const CoherenceOptions& opt = {});

// F(Im η) ⊗ β(η)^∨: the Fock bimodule shifted by dim ker η, basis x ⊗ g^∨.
struct TwistedFockValue {
  Span span;
  FockBimodule fock;
  TwistingLine beta;
  SuperBimodule mod;
};

TwistedFockValue twisted_fock(const Span& s, const Scalar& kappa = kDefaultKappa);

// μ: TF(η_ik) → TF(η_jk) ⊗_{Cl(H_j)} TF(η_ij), built from ψ and λ.
struct TwistedComposition {
  TwistedFockValue tik, tjk, tij;
  RelTensor target;
  Matrix matrix;
};

TwistedComposition twisted_composition(const Span& sij, const Span& sjk, const Scalar& kappa = kDefaultKappa);

CoherenceReport check_twisted_functoriality(const Span& sij, const Span& sjk, const Span& skl,
                                            const CoherenceOptions& opt = {});

}  // namespace cf
