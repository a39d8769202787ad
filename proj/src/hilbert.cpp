#include "cf/hilbert.hpp"

#include <algorithm>
#include <functional>

#include "cf/errors.hpp"

namespace cf {

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return mpq_class(rn, rd);
}

// Some w in the field with w² = z.
std::optional<Scalar> field_sqrt(const Scalar& z, Field f) {
  if (z.is_zero()) return Scalar(0);
  if (z.is_real()) {
    if (auto r = rational_sqrt(z.re())) return Scalar(*r);
    if (f == Field::Qi)
      if (auto r = rational_sqrt(-z.re())) return Scalar(mpq_class(0), *r);
    return std::nullopt;
  }
  if (f == Field::Q) return std::nullopt;
  // (a+bi)² = x+yi: a² = (x+r)/2, b² = (r−x)/2 with r = |z|.
  mpq_class x = z.re(), y = z.im();
  auto r = rational_sqrt(x * x + y * y);
  if (!r) return std::nullopt;
  auto a = rational_sqrt((x + *r) / 2);
  auto b = rational_sqrt((*r - x) / 2);
  if (!a || !b) return std::nullopt;
  mpq_class bb = *b;
  if (sgn(y) < 0) bb = -bb;
  Scalar w(*a, bb);
  if (w * w != z) return std::nullopt;
  return w;
}

Matrix proj_rows(int off, int n, int total) { return Matrix::identity(total).block(off, 0, n, total); }

}  // namespace

Vec AntiinvolutiveSpace::alpha(const Vec& v) const {
  if (static_cast<int>(v.size()) != dim) throw InvalidInput("vector length differs from space dimension");
  return inv.apply(conj(v));
}

CheckResult validate_space(const AntiinvolutiveSpace& h) {
  CheckResult r;
  auto fail = [&](std::string why) {
    r.ok = false;
    r.reason = std::move(why);
    return r;
  };
  if (h.inv.rows() != h.dim || h.inv.cols() != h.dim) return fail("involution matrix has the wrong shape");
  if (h.field == Field::Q)
    for (int i = 0; i < h.dim; ++i)
      for (int j = 0; j < h.dim; ++j)
        if (!h.inv(i, j).is_real()) return fail("complex entry in a space over Q");
  Matrix id = Matrix::identity(h.dim);
  if (h.inv.conj().transpose() * h.inv != id) return fail("α is not antiunitary");
  if (h.inv * h.inv.conj() != id) return fail("α is not an involution");
  Matrix g = h.gram();
  if (g != g.transpose()) return fail("b_α is not symmetric");
  if (det(g).is_zero()) return fail("b_α is degenerate");
  return r;
}

SpacePtr make_space(Field f, const Matrix& inv, std::string name) {
  auto h = std::make_shared<AntiinvolutiveSpace>();
  h->field = f;
  h->dim = inv.rows();
  h->inv = inv;
  h->name = std::move(name);
  auto r = validate_space(*h);
  if (!r.ok) throw InvalidInput("space " + h->name + ": " + r.reason);
  return h;
}

bool same_space(const AntiinvolutiveSpace& a, const AntiinvolutiveSpace& b) {
  return &a == &b || (a.field == b.field && a.dim == b.dim && a.inv == b.inv);
}

Scalar bilinear_form(const AntiinvolutiveSpace& h, const Vec& v, const Vec& w) {
  if (static_cast<int>(v.size()) != h.dim || static_cast<int>(w.size()) != h.dim)
    throw InvalidInput("vector length differs from space dimension");
  return dot(v, h.gram().apply(w));
}

Subspace alpha_of(const AntiinvolutiveSpace& h, const Subspace& s) {
  std::vector<Vec> vs;
  for (int k = 0; k < s.dim(); ++k) vs.push_back(h.alpha(s.vec(k)));
  return span_of(vs, h.dim);
}

LagrangianReport validate_lagrangian(const AntiinvolutiveSpace& h, const Subspace& s) {
  LagrangianReport r;
  if (s.ambient() != h.dim) {
    r.reason = "subspace lives in the wrong ambient dimension";
    return r;
  }
  Matrix g = h.gram();
  Matrix b = s.basis();
  r.isotropic = (b * g * b.transpose()).is_zero();
  Subspace as = alpha_of(h, s);
  r.splits = 2 * s.dim() == h.dim && intersect(s, as).dim() == 0;
  r.ok = r.isotropic && r.splits;
  if (!r.isotropic)
    r.reason = "not isotropic";
  else if (!r.splits)
    r.reason = "L + α(L) is not a direct sum decomposition of H";
  return r;
}

bool is_sublagrangian(const AntiinvolutiveSpace& h, const Subspace& s) {
  if (s.ambient() != h.dim) return false;
  Matrix b = s.basis();
  if (!(b * h.gram() * b.transpose()).is_zero()) return false;
  return intersect(s, alpha_of(h, s)).dim() == 0;
}

Lagrangian make_lagrangian(const SpacePtr& h, const Subspace& s) {
  auto r = validate_lagrangian(*h, s);
  if (!r.ok) throw InvalidInput("lagrangian in " + h->name + ": " + r.reason);
  return {h, s};
}

SpacePtr negate(const AntiinvolutiveSpace& h) {
  auto n = std::make_shared<AntiinvolutiveSpace>(h);
  n->inv = -h.inv;
  n->name = "-" + h.name;
  return n;
}

SpacePtr direct_sum(const AntiinvolutiveSpace& a, const AntiinvolutiveSpace& b) {
  if (a.field != b.field) throw InvalidInput("direct sum of spaces over different fields");
  auto s = std::make_shared<AntiinvolutiveSpace>();
  s->field = a.field;
  s->dim = a.dim + b.dim;
  s->inv = Matrix::block_diag(a.inv, b.inv);
  s->name = a.name + "⊕" + b.name;
  return s;
}

Lagrangian lagrangian_sum(const Lagrangian& a, const Lagrangian& b) {
  auto h = direct_sum(*a.space, *b.space);
  Matrix rows = Matrix::block_diag(a.sub.basis(), b.sub.basis());
  return make_lagrangian(h, canonicalize_subspace(rows, h->dim));
}

SpacePtr corr_space(const AntiinvolutiveSpace& hi, const AntiinvolutiveSpace& hj) {
  return direct_sum(*negate(hi), hj);
}

Correspondence make_correspondence(const SpacePtr& hi, const SpacePtr& hj, const Subspace& l) {
  Correspondence c{hi, hj, corr_space(*hi, *hj), l};
  auto r = validate_lagrangian(*c.ambient, l);
  if (!r.ok) throw InvalidInput("correspondence " + hi->name + "→" + hj->name + ": " + r.reason);
  return c;
}

Correspondence identity_corr(const SpacePtr& h) {
  return make_correspondence(h, h, canonicalize_subspace(Matrix::hstack(Matrix::identity(h->dim),
                                                                       Matrix::identity(h->dim)),
                                                         2 * h->dim));
}

Correspondence graph_corr(const SpacePtr& h, const Matrix& g) {
  // {(v, g v)}
  return make_correspondence(h, h, canonicalize_subspace(Matrix::hstack(Matrix::identity(h->dim), g.transpose()),
                                                         2 * h->dim));
}

Subspace corr_pullback(const Correspondence& lij, const Correspondence& ljk) {
  if (!same_space(*lij.target, *ljk.source)) throw InvalidInput("correspondences are not composable");
  int ni = lij.source->dim, nj = lij.target->dim, nk = ljk.target->dim;
  Matrix bij = lij.lag.basis().transpose();  // (ni+nj) x dij
  Matrix bjk = ljk.lag.basis().transpose();  // (nj+nk) x djk
  Matrix f = proj_rows(ni, nj, ni + nj) * bij;
  Matrix g = proj_rows(0, nj, nj + nk) * bjk;
  Subspace pb = pullback(f, g);
  return image_of(Matrix::block_diag(bij, bjk), pb);
}

Correspondence compose_corr(const Correspondence& lij, const Correspondence& ljk) {
  Subspace pb = corr_pullback(lij, ljk);
  int ni = lij.source->dim, nj = lij.target->dim, nk = ljk.target->dim;
  int tot = ni + 2 * nj + nk;
  Matrix pik = Matrix::vstack(proj_rows(0, ni, tot), proj_rows(ni + 2 * nj, nk, tot));
  Subspace l = image_of(pik, pb);
  Correspondence c{lij.source, ljk.target, corr_space(*lij.source, *ljk.target), l};
  auto r = validate_lagrangian(*c.ambient, l);
  if (!r.ok) throw InternalError("composite of Lagrangian correspondences failed validation: " + r.reason);
  return c;
}

// ---------------------------------------------------------------- spans

SpanReport validate_span(const Span& s) {
  SpanReport r;
  if (!s.ambient || s.eta.rows() != s.ambient->dim || s.eta.cols() != s.w_dim) {
    r.reason = "η has the wrong shape";
    return r;
  }
  auto [k, im] = kernel_image(s.eta);
  r.ker_dim = k.dim();
  auto lr = validate_lagrangian(*s.ambient, im);
  r.ok = lr.ok;
  if (!lr.ok) r.reason = "image of η: " + lr.reason;
  return r;
}

Span make_span(const SpacePtr& hi, const SpacePtr& hj, const Matrix& eta) {
  Span s{hi, hj, corr_space(*hi, *hj), eta.cols(), eta};
  auto r = validate_span(s);
  if (!r.ok) throw InvalidInput("span " + hi->name + "→" + hj->name + ": " + r.reason);
  return s;
}

Span inclusion_span(const Correspondence& c) {
  return Span{c.source, c.target, c.ambient, c.lag.dim(), c.lag.basis().transpose()};
}

Subspace span_kernel(const Span& s) { return kernel(s.eta); }

Subspace span_fibre(const Span& sij, const Span& sjk) {
  if (!same_space(*sij.target, *sjk.source)) throw InvalidInput("spans are not composable");
  int ni = sij.source->dim, nj = sij.target->dim, nk = sjk.target->dim;
  Matrix pj_ij = proj_rows(ni, nj, ni + nj) * sij.eta;
  Matrix pj_jk = proj_rows(0, nj, nj + nk) * sjk.eta;
  return pullback(pj_ij, pj_jk);
}

Span compose_spans(const Span& sij, const Span& sjk) {
  Subspace w = span_fibre(sij, sjk);
  int ni = sij.source->dim, nj = sij.target->dim, nk = sjk.target->dim;
  Matrix pi = proj_rows(0, ni, ni + nj) * sij.eta;
  Matrix pk = proj_rows(nj, nk, nj + nk) * sjk.eta;
  Matrix eta = Matrix::block_diag(pi, pk) * w.basis().transpose();
  Span s{sij.source, sjk.target, corr_space(*sij.source, *sjk.target), w.dim(), eta};
  auto r = validate_span(s);
  if (!r.ok) throw InternalError("composite span failed validation: " + r.reason);
  if (image(eta) != compose_corr(span_image(sij), span_image(sjk)).lag)
    throw InternalError("image of composite span differs from composite of images");
  return s;
}

Correspondence span_image(const Span& s) {
  auto r = validate_span(s);
  if (!r.ok) throw InvalidInput("span_image of an invalid span: " + r.reason);
  return Correspondence{s.source, s.target, s.ambient, image(s.eta)};
}

// ---------------------------------------------------------------- sampling

Lagrangian random_lagrangian(const SpacePtr& h, Rng& rng) {
  int n = h->dim;
  if (n % 2) throw Unsupported("odd-dimensional space " + h->name + " has no Lagrangian subspace");
  Matrix g = h->gram();
  auto b = [&](const Vec& v, const Vec& w) { return dot(v, g.apply(w)); };
  // Orthogonal basis for b.
  std::vector<Vec> f = Matrix::identity(n).row_list();
  std::vector<Scalar> d(n);
  for (int k = 0; k < n; ++k) {
    d[k] = b(f[k], f[k]);
    if (d[k].is_zero()) {
      for (int j = k + 1; j < n && d[k].is_zero(); ++j)
        if (!b(f[j], f[j]).is_zero()) {
          std::swap(f[k], f[j]);
          d[k] = b(f[k], f[k]);
        }
      for (int j = k + 1; j < n && d[k].is_zero(); ++j)
        if (!b(f[k], f[j]).is_zero()) {
          f[k] = f[k] + f[j];
          d[k] = b(f[k], f[k]);
        }
      if (d[k].is_zero()) throw InvalidInput("degenerate form on " + h->name);
    }
    for (int j = k + 1; j < n; ++j) {
      Scalar c = b(f[k], f[j]);
      if (!c.is_zero()) f[j] = f[j] - scale(c / d[k], f[k]);
    }
  }
  // Pair up a,b with −d_a/d_b a square; f_a + c f_b is then isotropic.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> mate(n, -1);
  std::function<bool(int)> match = [&](int pos) -> bool {
    while (pos < n && mate[order[pos]] >= 0) ++pos;
    if (pos == n) return true;
    int a = order[pos];
    for (int q = pos + 1; q < n; ++q) {
      int c = order[q];
      if (mate[c] >= 0 || !field_sqrt(-d[a] / d[c], h->field)) continue;
      mate[a] = c;
      mate[c] = a;
      if (match(pos + 1)) return true;
      mate[a] = mate[c] = -1;
    }
    return false;
  };
  if (!match(0)) throw Unsupported("no Lagrangian subspace found for " + h->name);
  std::vector<Vec> rows;
  for (int a = 0; a < n; ++a) {
    int c = mate[a];
    if (c < a) continue;
    Scalar s = *field_sqrt(-d[a] / d[c], h->field);
    if (rng() % 2) s = -s;
    rows.push_back(f[a] + scale(s, f[c]));
  }
  Matrix lb = Matrix::from_rows(rows, n);

  // Cayley transform of a random S with G·S skew keeps b, hence isotropy.
  if (n > 0 && rng() % 4 != 0) {
    Matrix k(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 3 == 0) continue;
        long re = static_cast<long>(rng() % 5) - 2;
        long im = h->field == Field::Qi ? static_cast<long>(rng() % 3) - 1 : 0;
        k(i, j) = Scalar::gauss(re, im);
        k(j, i) = -k(i, j);
      }
    Matrix s = inverse(g) * k;
    Matrix id = Matrix::identity(n);
    if (!det(id - s).is_zero()) {
      Matrix cay = inverse(id - s) * (id + s);
      lb = (cay * lb.transpose()).transpose();
    }
  }
  Subspace l = canonicalize_subspace(lb, n);
  auto r = validate_lagrangian(*h, l);
  if (!r.ok) throw InternalError("sampled subspace is not Lagrangian: " + r.reason);
  return {h, l};
}

Lagrangian random_lagrangian(const SpacePtr& h, unsigned long seed) {
  Rng rng(seed);
  return random_lagrangian(h, rng);
}

}  // namespace cf
