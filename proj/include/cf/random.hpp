#pragma once

#include <vector>

#include "cf/hilbert.hpp"

namespace cf {

// Spaces handed out together share a dimension parity (and, over Q, a
// signature), so every correspondence between them has Lagrangians.
struct SpaceFamily {
  Field field = Field::Qi;
  int parity = 0;
  int signature = 0;  // Q only
};

SpaceFamily random_family(Field f, int max_dim, Rng& rng);
SpacePtr random_space(const SpaceFamily& fam, int max_dim, Rng& rng);
Correspondence random_correspondence(const SpacePtr& hi, const SpacePtr& hj, Rng& rng);
// n+1 spaces and the n correspondences between consecutive ones.
std::vector<Correspondence> random_chain(Field f, int length, int max_dim, Rng& rng, int max_total = 8);
// Every space is P ⊕ P (or P alone with summands = 1), P two-dimensional; each link
// is, per summand, a product of Lagrangians or a random graph, then conjugated by
// random isometries. Pfaffian kernels of dimension up to `summands` are common.
std::vector<Correspondence> random_kernel_chain(Field f, int length, Rng& rng, int summands = 2);
// η = inclusion of L followed by up to `max_ker` redundant directions, in a random basis of W.
Span random_span(const Correspondence& c, int max_ker, Rng& rng);
Matrix random_invertible(int n, Field f, Rng& rng);
Scalar random_scalar(Field f, Rng& rng, bool nonzero = false);

}  // namespace cf
