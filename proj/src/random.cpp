#include "cf/random.hpp"

#include <algorithm>

#include "cf/errors.hpp"

namespace cf {

Scalar random_scalar(Field f, Rng& rng, bool nonzero) {
  for (;;) {
    long re = static_cast<long>(rng() % 7) - 3;
    long im = f == Field::Qi ? static_cast<long>(rng() % 5) - 2 : 0;
    Scalar s = Scalar::gauss(re, im);
    if (rng() % 6 == 0) s /= Scalar(static_cast<long>(rng() % 3) + 2);
    if (!nonzero || !s.is_zero()) return s;
  }
}

Matrix random_invertible(int n, Field f, Rng& rng) {
  for (;;) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = random_scalar(f, rng);
    if (!det(m).is_zero()) return m;
  }
}

SpaceFamily random_family(Field f, int max_dim, Rng& rng) {
  SpaceFamily fam;
  fam.field = f;
  fam.parity = max_dim >= 1 ? static_cast<int>(rng() % 2) : 0;
  if (f == Field::Q) fam.signature = fam.parity;
  return fam;
}

SpacePtr random_space(const SpaceFamily& fam, int max_dim, Rng& rng) {
  if (max_dim < fam.parity) throw InvalidInput("dimension bound too small for the space family");
  int choices = (max_dim - fam.parity) / 2 + 1;
  int d = fam.parity + 2 * static_cast<int>(rng() % choices);
  Matrix a = Matrix::identity(d);
  if (fam.field == Field::Q)
    for (int k = (d + fam.signature) / 2; k < d; ++k) a(k, k) = -1;
  return make_space(fam.field, a, "H" + std::to_string(d));
}

Correspondence random_correspondence(const SpacePtr& hi, const SpacePtr& hj, Rng& rng) {
  auto amb = corr_space(*hi, *hj);
  auto l = random_lagrangian(amb, rng);
  return make_correspondence(hi, hj, l.sub);
}

std::vector<Correspondence> random_chain(Field f, int length, int max_dim, Rng& rng, int max_total) {
  SpaceFamily fam = random_family(f, max_dim, rng);
  std::vector<SpacePtr> hs;
  int total = 0;
  for (int k = 0; k <= length; ++k) {
    int room = std::max(fam.parity, std::min(max_dim, max_total - total - fam.parity * (length - k)));
    hs.push_back(random_space(fam, room, rng));
    total += hs.back()->dim;
  }
  std::vector<Correspondence> cs;
  for (int k = 0; k < length; ++k) cs.push_back(random_correspondence(hs[k], hs[k + 1], rng));
  return cs;
}

Span random_span(const Correspondence& c, int max_ker, Rng& rng) {
  Field f = c.ambient->field;
  int l = c.lag.dim();
  int k = max_ker > 0 ? static_cast<int>(rng() % (max_ker + 1)) : 0;
  Matrix b = c.lag.basis().transpose();
  Matrix x(l, k);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < k; ++j) x(i, j) = random_scalar(f, rng);
  Matrix eta = Matrix::hstack(b, b * x);
  eta = eta * random_invertible(l + k, f, rng);
  return make_span(c.source, c.target, eta);
}

namespace {

// g with L = {(x, g x)}, when L is a graph
std::optional<Matrix> graph_matrix(const Correspondence& c) {
  int n = c.source->dim;
  Matrix b = c.lag.basis();
  Matrix x = b.block(0, 0, n, n), y = b.block(0, n, n, c.target->dim);
  if (det(x).is_zero()) return std::nullopt;
  return y.transpose() * inverse(x.transpose());
}

Matrix random_isometry(const SpacePtr& h, Rng& rng) {
  for (;;) {
    auto g = graph_matrix(random_correspondence(h, h, rng));
    if (g) return *g;
  }
}

}  // namespace

std::vector<Correspondence> random_kernel_chain(Field f, int length, Rng& rng, int summands) {
  if (summands != 1 && summands != 2) throw InvalidInput("kernel chains have one or two summands");
  Matrix pa = f == Field::Q ? Matrix::diag({Scalar(1), Scalar(-1)}) : Matrix::identity(2);
  auto p = make_space(f, pa, "P");
  auto h = summands == 1 ? p : direct_sum(*p, *p);
  int n = 2 * summands;
  std::vector<Subspace> lags;
  for (const auto& v : f == Field::Q ? std::vector<Vec>{{1, 1}, {1, -1}}
                                     : std::vector<Vec>{{1, Scalar::gauss(0, 1)}, {1, Scalar::gauss(0, -1)}})
    lags.push_back(span_of({v}, 2));
  std::vector<Matrix> conj;
  for (int k = 0; k <= length; ++k) conj.push_back(random_isometry(h, rng));

  std::vector<Correspondence> cs;
  for (int k = 0; k < length; ++k) {
    // per summand: rows (x_i, x_j)
    std::vector<Vec> rows;
    for (int part = 0; part < summands; ++part) {
      Matrix piece;
      if (rng() % 3 != 0) {
        Vec a = lags[rng() % 2].vec(0), b = lags[rng() % 2].vec(0);
        piece = Matrix::from_rows({{a[0], a[1], 0, 0}, {0, 0, b[0], b[1]}}, 4);
      } else {
        piece = random_correspondence(p, p, rng).lag.basis();
      }
      for (int r = 0; r < piece.rows(); ++r) {
        Vec v(2 * n);
        for (int c = 0; c < 2; ++c) {
          v[2 * part + c] = piece(r, c);
          v[n + 2 * part + c] = piece(r, 2 + c);
        }
        rows.push_back(v);
      }
    }
    Matrix g = Matrix::block_diag(conj[k], conj[k + 1]);
    std::vector<Vec> moved;
    for (const auto& v : rows) moved.push_back(g.apply(v));
    cs.push_back(make_correspondence(h, h, span_of(moved, 2 * n)));
  }
  return cs;
}

}  // namespace cf
