#pragma once

// Small hand-rolled generators for property tests.

#include <random>

#include "cf/matrix.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline long small_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Mostly small integers, sometimes zero, sometimes a fraction.
inline cf::Scalar scalar(Rng& rng, cf::Field f = cf::Field::Q) {
  long kind = small_int(rng, 0, 9);
  if (kind < 3) return cf::Scalar(0);
  long a = small_int(rng, -3, 3);
  long b = f == cf::Field::Qi ? small_int(rng, -2, 2) : 0;
  cf::Scalar s = cf::Scalar::gauss(a, b);
  if (kind == 9) s /= cf::Scalar(small_int(rng, 2, 3));
  return s;
}

inline cf::Vec vec(Rng& rng, int n, cf::Field f = cf::Field::Q) {
  cf::Vec v(n);
  for (auto& x : v) x = scalar(rng, f);
  return v;
}

inline cf::Matrix matrix(Rng& rng, int r, int c, cf::Field f = cf::Field::Q) {
  cf::Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = scalar(rng, f);
  return m;
}

inline cf::Matrix invertible(Rng& rng, int n, cf::Field f = cf::Field::Q) {
  for (;;) {
    cf::Matrix m = matrix(rng, n, n, f);
    if (!cf::det(m).is_zero()) return m;
  }
}

}  // namespace gen
