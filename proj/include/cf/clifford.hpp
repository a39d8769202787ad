#pragma once

#include "cf/hilbert.hpp"
#include "cf/superalg.hpp"

namespace cf {

// Cl(H, α) on the monomial basis e_S, S ⊆ {0..n-1} encoded as a bitmask
// (basis index = mask), with e_i e_j + e_j e_i = −2 b(e_i, e_j).
struct CliffordAlgebra {
  SpacePtr space;
  AlgPtr alg;
  Matrix gamma;  // 2^n x n, v ↦ Σ v_k e_{k}

  Vec embed(const Vec& v) const { return gamma.apply(v); }
};

// Same algebra object for structurally equal spaces.
CliffordAlgebra build_clifford(const SpacePtr& h);
// Clifford algebra of an arbitrary symmetric bilinear form b(v,w) = vᵀ G w.
AlgPtr clifford_from_gram(Field f, const Matrix& g);

Vec clifford_multiply(const CliffordAlgebra& c, const Vec& x, const Vec& y);

struct AlgebraIso {
  AlgPtr source;
  AlgPtr target;
  Matrix map;  // target.dim x source.dim
};

// Algebra map determined by the images of the source generators; checked to
// be a unital, even, multiplicative bijection (InternalError otherwise).
AlgebraIso extend_from_generators(const AlgPtr& src, const AlgPtr& tgt, const std::vector<Vec>& gen_images);

AlgebraIso iso_opposite(const SpacePtr& h);                           // Cl(H,−α) → Cl(H,α)^op
AlgebraIso iso_direct_sum(const SpacePtr& h, const SpacePtr& hprime);  // Cl(H⊕H') → Cl(H)⊗̂Cl(H')

}  // namespace cf
