#include "cf/errors.hpp"
#include "cf/linalg.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace cf;

namespace {

Scalar q(long a, long b = 1) { return Scalar::frac(a, b); }
Scalar g(long a, long b) { return Scalar::gauss(a, b); }

Matrix rows(std::initializer_list<std::initializer_list<Scalar>> rs) {
  std::vector<Vec> v;
  int w = 0;
  for (auto& r : rs) {
    v.emplace_back(r);
    w = static_cast<int>(r.size());
  }
  return Matrix::from_rows(v, w);
}

// Naive cofactor expansion, independent of the elimination code.
Scalar cofactor_det(const Matrix& m) {
  int n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar d;
  for (int j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    std::vector<int> rs, cs;
    for (int i = 1; i < n; ++i) rs.push_back(i);
    for (int k = 0; k < n; ++k)
      if (k != j) cs.push_back(k);
    Scalar minor = cofactor_det(m.select_rows(rs).select_cols(cs));
    d += sign_of(j) * m(0, j) * minor;
  }
  return d;
}

}  // namespace

TEST_CASE("scalar arithmetic and normal form") {
  CHECK(q(2, 4) == q(1, 2));
  CHECK(q(1, -2).re().get_den() == 2);
  CHECK(g(1, 1) * g(1, -1) == Scalar(2));
  CHECK(g(3, 4).inv() * g(3, 4) == Scalar(1));
  CHECK(g(2, -5).conj().conj() == g(2, -5));
  CHECK_THROWS_AS(Scalar(0).inv(), InvalidInput);
  CHECK(parse_rational("-6/4") == mpq_class(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
}

TEST_CASE("canonicalize_subspace examples") {
  auto s = canonicalize_subspace(rows({{2, 2}}), 2);
  CHECK(s.basis() == rows({{1, 1}}));
  auto z = canonicalize_subspace(Matrix(0, 3), 3);
  CHECK(z.dim() == 0);
  CHECK(z.ambient() == 3);
  auto c = canonicalize_subspace(rows({{1, Scalar::i()}, {Scalar::i(), -1}}), 2);
  CHECK(c.dim() == 1);
  CHECK(c.basis() == rows({{1, Scalar::i()}}));
  CHECK_THROWS_AS(canonicalize_subspace(rows({{1, 2, 3}}), 2), InvalidInput);
}

TEST_CASE("kernel_image examples") {
  auto [k, im] = kernel_image(rows({{1, 1}}));
  CHECK(k == span_of({{1, -1}}, 2));
  CHECK(im == Subspace::full(1));
  auto [k3, im3] = kernel_image(Matrix::identity(3));
  CHECK(k3.dim() == 0);
  CHECK(im3.dim() == 3);
  auto [ki, imi] = kernel_image(rows({{1, Scalar::i()}}));
  CHECK(ki == span_of({{-Scalar::i(), 1}}, 2));
  CHECK(imi.dim() == 1);
}

TEST_CASE("pullback examples") {
  auto d = pullback(Matrix::identity(2), Matrix::identity(2));
  CHECK(d == span_of({{1, 0, 1, 0}, {0, 1, 0, 1}}, 4));
  CHECK(pullback(Matrix(1, 2), Matrix(1, 2)).dim() == 4);
  auto p = pullback(rows({{1, 0}}), rows({{0, 1}}));
  CHECK(p.dim() == 3);
  // x = v
  for (int k = 0; k < p.dim(); ++k) CHECK(p.vec(k)[0] == p.vec(k)[3]);
  CHECK_THROWS_AS(pullback(Matrix(1, 2), Matrix(2, 2)), InvalidInput);
}

TEST_CASE("quotient_space examples") {
  auto full = Subspace::full(2);
  auto q1 = quotient_space(full, span_of({{1, 0}}, 2));
  CHECK(q1.dim == 1);
  CHECK(q1.projection == rows({{0, 1}}));
  auto q2 = quotient_space(full, full);
  CHECK(q2.dim == 0);
  auto u = span_of({{1, 1, 0}}, 3);
  auto q3 = quotient_space(Subspace::full(3), u);
  CHECK(q3.dim == 2);
  CHECK(kernel(q3.projection) == u);
  CHECK(q3.projection * q3.section == Matrix::identity(2));
  CHECK_THROWS_AS(quotient_space(span_of({{1, 0, 0}}, 3), u), InvalidInput);
}

TEST_CASE("quotient of a proper subspace") {
  auto v = span_of({{1, 0, 1}, {0, 1, 1}}, 3);
  auto u = span_of({{1, 1, 2}}, 3);
  auto q = quotient_space(v, u);
  CHECK(q.dim == 1);
  CHECK(q.projection.apply(u.vec(0)) == Vec{0});
  CHECK(q.projection * q.section == Matrix::identity(1));
  CHECK(v.contains(q.section.col(0)));
}

TEST_CASE("ses_det_iso examples") {
  // A = 0: re-expression of the lifted generator.
  ShortExactSequence s0{Matrix(2, 0), rows({{1, 1}, {0, 2}})};
  CHECK(ses_det_iso(s0) == det(inverse(rows({{1, 1}, {0, 2}}))));
  // B = A ⊕ C, canonical maps: identity permutation.
  ShortExactSequence s1{rows({{1}, {0}}), rows({{0, 1}})};
  CHECK(ses_det_iso(s1) == Scalar(1));
  // A sits in the second slot: one transposition.
  ShortExactSequence s2{rows({{0}, {1}}), rows({{1, 0}})};
  CHECK(ses_det_iso(s2) == Scalar(-1));
  ShortExactSequence s3{rows({{2}, {0}}), rows({{0, 1}})};
  CHECK(ses_det_iso(s3) == Scalar(2));
  ShortExactSequence bad{rows({{1}, {0}}), rows({{1, 0}})};
  CHECK_THROWS_AS(ses_det_iso(bad), InvalidInput);
}

TEST_CASE("check_diagram examples") {
  Diagram d;
  d.id = "single";
  d.add_node("X", 2);
  d.pairs.push_back({{0, {}}, {0, {}}});
  CHECK(check_diagram(d).commutes);

  Diagram sq;
  sq.id = "square";
  int a = sq.add_node("A", 1), b = sq.add_node("B", 1), c = sq.add_node("C", 1), e = sq.add_node("D", 1);
  int f = sq.add_edge("f", a, b, Matrix::diag({Scalar(2)}));
  int g = sq.add_edge("g", b, e, Matrix::diag({Scalar(3)}));
  int f2 = sq.add_edge("f'", a, c, Matrix::diag({Scalar(3)}));
  int g2 = sq.add_edge("g'", c, e, Matrix::diag({Scalar(2)}));
  sq.pairs.push_back({{a, {f, g}}, {a, {f2, g2}}});
  CHECK(check_diagram(sq).commutes);
  sq.edges[g2].map = -sq.edges[g2].map;
  auto rep = check_diagram(sq);
  CHECK_FALSE(rep.commutes);
  REQUIRE(rep.pairs[0].witness);
  CHECK(rep.pairs[0].witness->row == 0);
  CHECK(rep.pairs[0].witness->col == 0);
  CHECK(rep.pairs[0].witness->lhs == Scalar(6));
  CHECK(rep.pairs[0].witness->rhs == Scalar(-6));

  sq.pairs.push_back({{a, {f, f2}}, {a, {f}}});
  CHECK_THROWS_AS(check_diagram(sq), InvalidInput);
}

TEST_CASE("det agrees with cofactor expansion") {
  gen::Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    int n = static_cast<int>(gen::small_int(rng, 0, 4));
    auto m = gen::matrix(rng, n, n, t % 2 ? Field::Qi : Field::Q);
    CHECK(det(m) == cofactor_det(m));
  }
}

TEST_CASE("property: canonical form is idempotent and rank-nullity holds") {
  gen::Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    Field f = t % 2 ? Field::Qi : Field::Q;
    int r = static_cast<int>(gen::small_int(rng, 0, 4)), c = static_cast<int>(gen::small_int(rng, 0, 5));
    auto m = gen::matrix(rng, r, c, f);
    auto s = canonicalize_subspace(m, c);
    CHECK(canonicalize_subspace(s.basis(), c) == s);
    auto [k, im] = kernel_image(m);
    CHECK(k.dim() + im.dim() == c);
    for (int i = 0; i < k.dim(); ++i) CHECK(is_zero(m.apply(k.vec(i))));
  }
}

TEST_CASE("property: pullback projects onto the preimage of the image") {
  gen::Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    auto f = gen::matrix(rng, 4, 4), g = gen::matrix(rng, 4, 4);
    auto pb = pullback(f, g);
    Matrix proj_a = Matrix::hstack(Matrix::identity(4), Matrix(4, 4));
    auto lhs = image_of(proj_a, pb);
    auto rhs = preimage(f, image(g));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("property: ses_det_iso is lift independent") {
  gen::Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    int a = static_cast<int>(gen::small_int(rng, 0, 3)), c = static_cast<int>(gen::small_int(rng, 0, 3));
    int b = a + c;
    // Random SES: B = K^b, inj = first a columns of an invertible T, surj kills them.
    auto T = gen::invertible(rng, b);
    Matrix inj = T.select_cols([&] {
      std::vector<int> v;
      for (int i = 0; i < a; ++i) v.push_back(i);
      return v;
    }());
    Matrix surj = inverse(T).select_rows([&] {
      std::vector<int> v;
      for (int i = a; i < b; ++i) v.push_back(i);
      return v;
    }());
    ShortExactSequence s{inj, surj};
    auto c1 = ses_det_iso(s);
    auto c2 = ses_det_iso(s, gen::matrix(rng, a, c));
    CHECK(c1 == c2);
    CHECK_FALSE(c1.is_zero());
  }
}

TEST_CASE("property: DetLine rebasing multiplies by det") {
  gen::Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    int n = static_cast<int>(gen::small_int(rng, 1, 3));
    auto src = canonicalize_subspace(gen::matrix(rng, n, 4, Field::Qi), 4);
    DetLine line{src};
    auto T = gen::invertible(rng, src.dim(), Field::Qi);
    Matrix rebased = T * src.basis();
    CHECK(line.wedge_coord(rebased.row_list()) == det(T));
  }
}
