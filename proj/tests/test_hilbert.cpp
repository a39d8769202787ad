#include "cf/errors.hpp"
#include "cf/fixtures.hpp"
#include "cf/random.hpp"
#include "doctest.h"

using namespace cf;

namespace {

const Scalar I = Scalar::i();

}  // namespace

TEST_CASE("bilinear_form examples") {
  const auto& fx = fixtures();
  CHECK(bilinear_form(*fx.r2, {1, 0}, {1, 0}) == Scalar(1));
  CHECK(bilinear_form(*fx.r2, {0, 1}, {0, 1}) == Scalar(-1));
  CHECK(bilinear_form(*fx.c2, {1, I}, {1, I}) == Scalar(0));
  CHECK_THROWS_AS(bilinear_form(*fx.c2, {1}, {1, I}), InvalidInput);
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    Vec v{random_scalar(Field::Qi, rng), random_scalar(Field::Qi, rng)};
    Vec w{random_scalar(Field::Qi, rng), random_scalar(Field::Qi, rng)};
    CHECK(bilinear_form(*fx.c2, v, w) == bilinear_form(*fx.c2, w, v));
  }
}

TEST_CASE("space validation") {
  CHECK_THROWS_AS(make_space(Field::Q, Matrix::diag({Scalar(2)})), InvalidInput);
  // α(v) = i·conj(v) is still involutive
  CHECK_NOTHROW(make_space(Field::Qi, Matrix::diag({I})));
  Matrix rot = Matrix::from_rows({{0, 1}, {-1, 0}}, 2);
  CHECK_THROWS_AS(make_space(Field::Q, rot), InvalidInput);
}

TEST_CASE("validate_lagrangian examples") {
  const auto& fx = fixtures();
  CHECK(validate_lagrangian(*fx.r2, fx.l_r).ok);
  CHECK(validate_lagrangian(*fx.c2, fx.l_plus).ok);
  CHECK(validate_lagrangian(*fx.c2, fx.l_minus).ok);
  auto id2 = make_space(Field::Q, Matrix::identity(2));
  auto r = validate_lagrangian(*id2, span_of({{1, 0}}, 2));
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.isotropic);
  // (H, id) has no nonzero subLagrangian
  CHECK_FALSE(is_sublagrangian(*id2, span_of({{1, 0}}, 2)));
  CHECK(is_sublagrangian(*id2, Subspace::zero(2)));
  CHECK(is_sublagrangian(*fx.c2, fx.l_plus));
}

TEST_CASE("duals and sums") {
  const auto& fx = fixtures();
  CHECK(same_space(*negate(*negate(*fx.c2)), *fx.c2));
  auto s = lagrangian_sum({fx.c2, fx.l_plus}, {fx.c2, fx.l_minus});
  CHECK(s.space->dim == 4);
  CHECK(validate_lagrangian(*s.space, s.sub).ok);
  CHECK_THROWS_AS(direct_sum(*fx.c2, *fx.r2), InvalidInput);
}

TEST_CASE("identity and composition of correspondences") {
  const auto& fx = fixtures();
  auto d1 = identity_corr(fx.c1);
  CHECK(d1.lag == span_of({{1, 1}}, 2));
  CHECK(alpha_of(*d1.ambient, d1.lag) == span_of({{1, -1}}, 2));
  CHECK(compose_corr(fx.graph_g, fx.graph_ginv).lag == identity_corr(fx.c2).lag);
  CHECK(compose_corr(fx.p1, fx.p2).lag == canonicalize_subspace(Matrix::block_diag(fx.l_minus.basis(), fx.l_plus.basis()), 4));
  for (const auto* c : {&fx.graph_g, &fx.p1, &fx.p2}) {
    CHECK(compose_corr(identity_corr(c->source), *c).lag == c->lag);
    CHECK(compose_corr(*c, identity_corr(c->target)).lag == c->lag);
  }
  CHECK_THROWS_AS(compose_corr(d1, fx.p1), InvalidInput);
}

TEST_CASE("spans") {
  const auto& fx = fixtures();
  auto inc = inclusion_span(fx.p1);
  auto r = validate_span(inc);
  CHECK(r.ok);
  CHECK(r.ker_dim == 0);

  Matrix eta = Matrix::from_rows({{1, 1}, {1, 1}}, 2);
  auto s = make_span(fx.c1, fx.c1, eta);
  CHECK(validate_span(s).ker_dim == 1);
  CHECK(span_image(s).lag == identity_corr(fx.c1).lag);

  Matrix bad = Matrix::from_rows({{1}, {0}}, 1);
  CHECK_FALSE(validate_span(Span{fx.c1, fx.c1, corr_space(*fx.c1, *fx.c1), 1, bad}).ok);
  CHECK_THROWS_AS(make_span(fx.c1, fx.c1, bad), InvalidInput);

  auto comp = compose_spans(inclusion_span(fx.p1), inclusion_span(fx.p2));
  CHECK(comp.w_dim == 3);
  CHECK(span_kernel(comp).dim() == 1);
  CHECK(span_image(comp).lag == compose_corr(fx.p1, fx.p2).lag);

  auto delta = inclusion_span(identity_corr(fx.c2));
  auto dd = compose_spans(delta, delta);
  CHECK(span_kernel(dd).dim() == 0);
  CHECK(span_image(dd).lag == identity_corr(fx.c2).lag);

  // composing with a span that has its own kernel adds kernel dimensions
  auto sk = make_span(fx.c1, fx.c1, eta);
  auto twice = compose_spans(sk, sk);
  CHECK(span_kernel(twice).dim() == 2);
}

TEST_CASE("random_lagrangian") {
  const auto& fx = fixtures();
  auto a = random_lagrangian(fx.c2, 1UL);
  CHECK(validate_lagrangian(*fx.c2, a.sub).ok);
  CHECK(random_lagrangian(fx.c2, 1UL).sub == a.sub);
  CHECK_THROWS_AS(random_lagrangian(make_space(Field::Q, Matrix::identity(1)), 1UL), Unsupported);
  CHECK_THROWS_AS(random_lagrangian(make_space(Field::Q, Matrix::identity(2)), 1UL), Unsupported);
  CHECK(validate_lagrangian(*fx.r2, random_lagrangian(fx.r2, 3UL).sub).ok);
}

TEST_CASE("property: composition closure, associativity and identity laws") {
  Rng rng(21);
  for (int t = 0; t < 60; ++t) {
    Field f = t % 3 == 0 ? Field::Q : Field::Qi;
    auto ch = random_chain(f, 3, 4, rng, 10);
    auto c01 = compose_corr(ch[0], ch[1]);
    CHECK(validate_lagrangian(*c01.ambient, c01.lag).ok);
    auto left = compose_corr(c01, ch[2]);
    auto right = compose_corr(ch[0], compose_corr(ch[1], ch[2]));
    CHECK(left.lag == right.lag);
    CHECK(compose_corr(identity_corr(ch[0].source), ch[0]).lag == ch[0].lag);
    CHECK(compose_corr(ch[0], identity_corr(ch[0].target)).lag == ch[0].lag);
    CHECK(validate_space(*ch[1].ambient).ok);
  }
}

TEST_CASE("property: span images intertwine composition") {
  Rng rng(22);
  for (int t = 0; t < 40; ++t) {
    auto ch = random_chain(Field::Qi, 2, 4, rng);
    auto s1 = random_span(ch[0], 2, rng), s2 = random_span(ch[1], 2, rng);
    auto s12 = compose_spans(s1, s2);
    CHECK(span_image(s12).lag == compose_corr(span_image(s1), span_image(s2)).lag);
  }
}
