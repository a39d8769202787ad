#pragma once

#include "cf/hilbert.hpp"

namespace cf {

// The shipped named instances (also in data/fixtures.json).
struct Fixtures {
  SpacePtr r2;  // (Q², diag(1,−1))
  SpacePtr c1;  // (Q(i)¹, conj)
  SpacePtr c2;  // (Q(i)², conj)
  SpacePtr zero_q, zero_qi;
  Subspace l_r;      // span{(1,1)} in r2
  Subspace l_plus;   // span{(1,i)} in c2
  Subspace l_minus;  // span{(1,−i)} in c2
  Matrix g;          // [[5/3, 4i/3], [−4i/3, 5/3]]
  Correspondence graph_g, graph_ginv;
  Correspondence p1, p2;  // L₋⊕L₊ and L₊⊕L₊ on c2
};

const Fixtures& fixtures();

}  // namespace cf
