#include "clifford_oracle.hpp"
#include "cf/clifford.hpp"
#include "cf/errors.hpp"
#include "cf/fixtures.hpp"
#include "cf/random.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace cf;

namespace {

Matrix random_symmetric(gen::Rng& rng, int n, Field f) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) g(i, j) = g(j, i) = gen::scalar(rng, f);
  return g;
}

void check_against_oracle(Field f, const Matrix& g) {
  int n = g.rows();
  auto a = clifford_from_gram(f, g);
  oracle::TensorReducer red(g, 2 * n);
  for (int s = 0; s < a->dim; ++s)
    for (int t = 0; t < a->dim; ++t)
      CHECK(a->multiply(a->basis_vec(s), a->basis_vec(t)) == oracle::product(red, n, s, t));
}

}  // namespace

TEST_CASE("build_clifford examples") {
  auto k = build_clifford(fixtures().zero_q);
  CHECK(k.alg->dim == 1);
  CHECK(k.alg->mul == ground_field(Field::Q)->mul);

  auto c1 = build_clifford(make_space(Field::Q, Matrix::identity(1)));
  CHECK(c1.alg->dim == 2);
  Vec e = c1.alg->basis_vec(1);
  CHECK(c1.alg->multiply(e, e) == scale(Scalar(-1), c1.alg->unit));

  auto c2 = build_clifford(fixtures().c2);
  CHECK(c2.alg->dim == 4);
  Vec e1 = c2.alg->basis_vec(1), e2 = c2.alg->basis_vec(2);
  CHECK(c2.alg->multiply(e1, e2) == scale(Scalar(-1), c2.alg->multiply(e2, e1)));
  Vec e12 = c2.alg->multiply(e1, e2);
  CHECK(c2.alg->multiply(e12, e12) == scale(Scalar(-1), c2.alg->unit));
  CHECK(validate_superalgebra(*c2.alg).ok);
  CHECK(c2.alg->multiply(c2.alg->unit, e12) == e12);
}

TEST_CASE("structure constants agree with the tensor-algebra oracle") {
  check_against_oracle(Field::Q, Matrix::identity(2));
  check_against_oracle(Field::Q, Matrix::diag({Scalar(1), Scalar(-1), Scalar(1)}));
  check_against_oracle(Field::Qi, Matrix::from_rows({{0, 1}, {1, 0}}, 2));
  gen::Rng rng(5);
  for (int t = 0; t < 4; ++t) {
    int n = static_cast<int>(gen::small_int(rng, 1, 3));
    Field f = t % 2 ? Field::Qi : Field::Q;
    check_against_oracle(f, random_symmetric(rng, n, f));
  }
}

TEST_CASE("property: defining and polarized relations") {
  gen::Rng rng(6);
  for (int t = 0; t < 6; ++t) {
    Field f = t % 2 ? Field::Qi : Field::Q;
    auto h = random_space(random_family(f, 4, rng), 4, rng);
    auto c = build_clifford(h);
    CHECK(validate_superalgebra(*c.alg).ok);
    for (int s = 0; s < 20; ++s) {
      Vec v = gen::vec(rng, h->dim, f), w = gen::vec(rng, h->dim, f);
      Vec cv = c.embed(v), cw = c.embed(w);
      CHECK(c.alg->multiply(cv, cv) == scale(-bilinear_form(*h, v, v), c.alg->unit));
      CHECK(c.alg->multiply(cv, cw) + c.alg->multiply(cw, cv) ==
            scale(Scalar(-2) * bilinear_form(*h, v, w), c.alg->unit));
    }
  }
}

TEST_CASE("iso_opposite") {
  const auto& fx = fixtures();
  auto triv = iso_opposite(fx.zero_q);
  CHECK(triv.map == Matrix::identity(1));
  auto one = iso_opposite(make_space(Field::Q, Matrix::identity(1)));
  CHECK(one.map == Matrix::identity(2));
  for (const auto& h : {fx.r2, fx.c1, fx.c2}) {
    auto iso = iso_opposite(h);
    Matrix inv = inverse(iso.map);
    // the inverse is multiplicative too
    for (int a = 0; a < iso.target->dim; ++a)
      for (int b = 0; b < iso.target->dim; ++b) {
        Vec x = iso.target->basis_vec(a), y = iso.target->basis_vec(b);
        CHECK(inv.apply(iso.target->multiply(x, y)) == iso.source->multiply(inv.apply(x), inv.apply(y)));
      }
  }
}

TEST_CASE("iso_direct_sum") {
  const auto& fx = fixtures();
  auto triv = iso_direct_sum(fx.c2, fx.zero_qi);
  CHECK(triv.map == Matrix::identity(4));
  auto iso = iso_direct_sum(fx.c1, fx.c2);
  CHECK(iso.source->dim == 8);
  CHECK(iso.target->dim == 2 * 4);
  // ((v,0)+(0,v'))² = −b(v,v) − b(v',v')
  Vec v{Scalar(2), Scalar::i(), Scalar(1)};
  auto sum = direct_sum(*fx.c1, *fx.c2);
  Vec x = iso.map.apply(build_clifford(sum).embed(v));
  CHECK(iso.target->multiply(x, x) == scale(-bilinear_form(*sum, v, v), iso.target->unit));
  CHECK_THROWS_AS(iso_direct_sum(fx.r2, fx.c1), InvalidInput);
  CHECK_NOTHROW(iso_direct_sum(fx.r2, fx.r2));
}
