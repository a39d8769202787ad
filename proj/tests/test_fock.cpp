#include "cf/errors.hpp"
#include "cf/fixtures.hpp"
#include "cf/fock.hpp"
#include "cf/random.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace cf;

namespace {

const Scalar I = Scalar::i();

std::vector<Vec> samples(gen::Rng& rng, int n, Field f, int count) {
  std::vector<Vec> out;
  for (int k = 0; k < count; ++k) out.push_back(gen::vec(rng, n, f));
  return out;
}

std::vector<Correspondence> fixture_corrs() {
  const auto& fx = fixtures();
  return {fx.graph_g,
          fx.graph_ginv,
          fx.p1,
          fx.p2,
          identity_corr(fx.r2),
          identity_corr(fx.c1),
          identity_corr(fx.c2),
          make_correspondence(fx.zero_qi, fx.c2, fx.l_plus)};
}

}  // namespace

TEST_CASE("build_fock examples on L+") {
  const auto& fx = fixtures();
  auto f = build_fock(make_lagrangian(fx.c2, fx.l_plus));
  CHECK(f.dim() == 2);
  CHECK(f.parity == std::vector<int>{0, 1});
  Vec omega = f.vacuum();
  Vec y{0, 1};
  CHECK(fock_act(f, {1, -I}, omega) == y);
  CHECK(fock_act(f, {1, I}, y) == Vec{Scalar(-4), 0});
  CHECK(fock_act(f, {1, I}, omega) == Vec{0, 0});
  CHECK(fock_act(f, {0, 0}, y) == Vec{0, 0});
  CHECK_THROWS_AS(fock_act(f, {1, I}, {1}), InvalidInput);
  CHECK_THROWS_AS(f.rho({1}), InvalidInput);
  CHECK_THROWS_AS(build_fock(Lagrangian{fx.c2, span_of({{1, 0}}, 2)}), InvalidInput);
}

TEST_CASE("wedge nilpotence and vacuum") {
  const auto& fx = fixtures();
  auto f = build_fock(Lagrangian{fx.p1.ambient, fx.p1.lag});
  CHECK(f.dim() == 4);
  CHECK((f.cre[0].apply(f.basis_top()) == Vec(4)));
  for (const auto& a : f.ann) CHECK(is_zero(a.apply(f.vacuum())));
}

TEST_CASE("module axiom holds with the chosen normalization only") {
  gen::Rng rng(11);
  const auto& fx = fixtures();
  for (const auto& c : fixture_corrs()) {
    Lagrangian l{c.ambient, c.lag};
    auto f = build_fock(l);
    CHECK(check_module_axiom(f, samples(rng, c.ambient->dim, c.ambient->field, 50)));
  }
  auto r = build_fock(make_lagrangian(fx.r2, fx.l_r));
  CHECK(check_module_axiom(r, samples(rng, 2, Field::Q, 50)));
  auto bad = build_fock(make_lagrangian(fx.c2, fx.l_plus), Scalar(1));
  CHECK_FALSE(check_module_axiom(bad, samples(rng, 2, Field::Qi, 50)));
}

TEST_CASE("fock_bimodule on the diagonal") {
  const auto& fx = fixtures();
  auto fb = fock_bimodule(identity_corr(fx.c1));
  CHECK(fb.mod.dim == 2);
  CHECK(validate_bimodule(fb.mod).ok);
  // Ω·u = −ρ(u, 0)Ω on the even vacuum
  Vec u_src{1, 0};
  CHECK(fb.mod.rgen[0].apply(fb.fock.vacuum()) == scale(Scalar(-1), fb.fock.act(u_src, fb.fock.vacuum())));
  CHECK(fb.mod.lgen[0] == fb.fock.rho({0, 1}));
}

TEST_CASE("fixture bimodules are valid and invertible") {
  for (const auto& c : fixture_corrs()) {
    auto fb = fock_bimodule(c);
    CHECK(fb.mod.dim == (1 << c.lag.dim()));
    CHECK(validate_bimodule(fb.mod).ok);
    CHECK(invertibility_check(fb.mod).invertible);
  }
  for (const auto& h : {fixtures().r2, fixtures().c1, fixtures().c2})
    CHECK(invertibility_check(regular_bimodule(build_clifford(h).alg)).invertible);
}

TEST_CASE("property: random Fock bimodules") {
  gen::Rng rng(12);
  for (int t = 0; t < 12; ++t) {
    Field f = t % 3 == 0 ? Field::Q : Field::Qi;
    auto ch = random_chain(f, 1, 4, rng, 6);
    auto fb = fock_bimodule(ch[0]);
    CHECK(fb.mod.dim == (1 << ch[0].lag.dim()));
    CHECK(check_module_axiom(fb.fock, samples(rng, ch[0].ambient->dim, f, 20)));
    CHECK(validate_bimodule(fb.mod).ok);
    CHECK(invertibility_check(fb.mod).invertible);
  }
}

TEST_CASE("property: relative tensors of Fock bimodules") {
  gen::Rng rng(13);
  for (int t = 0; t < 6; ++t) {
    auto ch = random_chain(Field::Qi, 3, 2, rng, 6);
    auto f01 = fock_bimodule(ch[0]).mod, f12 = fock_bimodule(ch[1]).mod, f23 = fock_bimodule(ch[2]).mod;
    auto a = relative_tensor(f12, f01);
    CHECK(validate_bimodule(a.mod).ok);
    auto pn = relative_tensor(f23, f12);
    auto pn_m = relative_tensor(pn.mod, f01);
    auto p_nm = relative_tensor(f23, a.mod);
    Matrix assoc = associator(pn, pn_m, a, p_nm);
    CHECK(assoc.is_square());
    CHECK(!det(assoc).is_zero());
    CHECK(is_bimodule_hom(assoc, 0, pn_m.mod, p_nm.mod));
  }
}
