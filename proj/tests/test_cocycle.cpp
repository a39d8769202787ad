#include "cf/cocycle.hpp"
#include "cf/errors.hpp"
#include "cf/fixtures.hpp"
#include "cf/random.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace cf;

namespace {

ScalarWannabe scalar_on(const FiniteCategory& c, gen::Rng& rng, Field f = Field::Qi) {
  ScalarWannabe r;
  r.cat = &c;
  r.parity.assign(c.objects.size(), 0);
  for (auto& p : r.parity) p = static_cast<int>(gen::small_int(rng, 0, 1));
  for (size_t m = 0; m < c.morphisms.size(); ++m) {
    Scalar s;
    do s = gen::scalar(rng, f);
    while (s.is_zero());
    r.rho.push_back(s);
  }
  for (int e : c.identities) r.rho[e] = Scalar(1);
  return r;
}

// every composable triple of morphisms
std::vector<std::array<int, 3>> triples(const FiniteCategory& c) {
  std::vector<std::array<int, 3>> out;
  int n = static_cast<int>(c.morphisms.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        if (c.morphisms[a].dst == c.morphisms[b].src && c.morphisms[b].dst == c.morphisms[d].src) out.push_back({a, b, d});
  return out;
}

std::vector<Correspondence> c2_chain() {
  const auto& fx = fixtures();
  return {fx.p1, fx.graph_g, fx.p2, fx.graph_ginv};
}

WannabeFunctor regular_on(const FiniteCategory& c, const AlgPtr& a) {
  WannabeFunctor w;
  w.cat = &c;
  w.objects.assign(c.objects.size(), a);
  w.values.assign(c.morphisms.size(), regular_bimodule(a));
  return w;
}

struct Chain {
  std::unique_ptr<FockWannabe> fw;
  int f[5][5];
  explicit Chain(const std::vector<Correspondence>& ch) : fw(fock_wannabe(ch)) {
    int n = static_cast<int>(ch.size());
    for (int a = 0; a <= n; ++a)
      for (int b = a; b <= n; ++b) f[a][b] = poset_morphism(fw->cat, a, b);
  }
  const WannabeFunctor& w() const { return fw->w; }
  const Correspondence& corr(int a, int b) const { return fw->corr[f[a][b]]; }
};

}  // namespace

TEST_CASE("finite categories") {
  auto p = poset_category(3);
  CHECK(validate_category(p).ok);
  CHECK(p.morphisms.size() == 10);
  CHECK(p.then(poset_morphism(p, 0, 1), poset_morphism(p, 1, 3)) == poset_morphism(p, 0, 3));
  CHECK_THROWS_AS(p.then(poset_morphism(p, 0, 1), poset_morphism(p, 2, 3)), InvalidInput);
  CHECK(validate_category(z2_category()).ok);
  CHECK(validate_category(z2xz2_category()).ok);

  // ℤ/3 written down with a wrong entry
  auto bad = group_category({"e", "r", "rr"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 0}});
  CHECK_FALSE(validate_category(bad).ok);
  auto gap = poset_category(2);
  gap.compose.erase({poset_morphism(gap, 0, 1), poset_morphism(gap, 1, 2)});
  CHECK_FALSE(validate_category(gap).ok);
}

TEST_CASE("scalar cocycle examples") {
  gen::Rng rng(71);
  auto p = poset_category(3);

  // ρ_ab = x_b / x_a is an honest functor
  ScalarWannabe honest = scalar_on(p, rng);
  std::vector<Scalar> x = {Scalar(2), Scalar::gauss(1, 1), Scalar(-3), Scalar::gauss(0, 2)};
  for (size_t m = 0; m < p.morphisms.size(); ++m) honest.rho[m] = x[p.morphisms[m].dst] / x[p.morphisms[m].src];
  for (auto [a, b, c] : triples(p)) {
    CHECK(scalar_cocycle(honest, a, b) == Scalar(1));
    CHECK(check_scalar_laws(honest, a, b, c).commutes);
  }

  auto z2 = z2_category();
  ScalarWannabe r = scalar_on(z2, rng);
  Scalar s = Scalar::gauss(2, -1);
  r.rho[1] = s;
  CHECK(scalar_cocycle(r, 1, 1) == s * s);
  CHECK(scalar_cocycle(r, 0, 1) == Scalar(1));
  r.rho[1] = Scalar(-1);
  CHECK(scalar_cocycle(r, 1, 1) == Scalar(1));

  // coboundary behaviour on [2]
  auto p2 = poset_category(2);
  ScalarWannabe q = scalar_on(p2, rng);
  int f01 = poset_morphism(p2, 0, 1), f12 = poset_morphism(p2, 1, 2), f02 = poset_morphism(p2, 0, 2);
  int f00 = poset_morphism(p2, 0, 0);
  Scalar a = scalar_cocycle(q, f01, f12), a0 = scalar_cocycle(q, f00, f01);
  Scalar t = Scalar::gauss(3, 1);
  ScalarWannabe q1 = q;
  q1.rho[f01] *= t;
  CHECK(scalar_cocycle(q1, f01, f12) == t * a);
  CHECK(scalar_cocycle(q1, f00, f01) == a0);
  ScalarWannabe q2 = q;
  q2.rho[f02] *= t;
  CHECK(scalar_cocycle(q2, f01, f12) == a / t);

  CHECK_THROWS_AS(scalar_cocycle(q, f12, f01), InvalidInput);
}

TEST_CASE("scalar laws: corruption is caught") {
  gen::Rng rng(72);
  auto p = poset_category(3);
  auto r = scalar_on(p, rng);
  int f01 = poset_morphism(p, 0, 1), f12 = poset_morphism(p, 1, 2), f23 = poset_morphism(p, 2, 3);
  CHECK(check_scalar_laws(r, f01, f12, f23).commutes);
  r.alpha_override[{f01, f12}] = scalar_cocycle(r, f01, f12) * Scalar(2);
  auto rep = check_scalar_laws(r, f01, f12, f23);
  CHECK_FALSE(rep.commutes);
  CHECK(rep.failing_pair == 0);
}

TEST_CASE("property: scalar laws hold on [3] and on Z/2 x Z/2") {
  gen::Rng rng(73);
  auto p = poset_category(3);
  auto k = z2xz2_category();
  auto tp = triples(p), tk = triples(k);
  for (int t = 0; t < 100; ++t) {
    auto r = scalar_on(p, rng, t % 2 ? Field::Q : Field::Qi);
    for (auto [a, b, c] : tp) REQUIRE(check_scalar_laws(r, a, b, c).commutes);
    auto g = scalar_on(k, rng);
    for (auto [a, b, c] : tk) REQUIRE(check_scalar_laws(g, a, b, c).commutes);
  }
}

TEST_CASE("wannabe validation") {
  const auto& fx = fixtures();
  Chain c(c2_chain());
  CHECK(validate_wannabe(c.w()).ok);
  CHECK(c.fw->cat.morphisms.size() == 15);

  WannabeFunctor w = c.w();
  std::swap(w.values[c.f[0][1]], w.values[c.f[0][0]]);
  CHECK_FALSE(validate_wannabe(w).ok);

  // wrong algebra at the endpoint
  auto r2 = build_clifford(fx.r2).alg;
  WannabeFunctor v = c.w();
  v.values[c.f[1][2]] = regular_bimodule(r2);
  CHECK_FALSE(validate_wannabe(v).ok);
  CHECK_THROWS_AS(fock_wannabe({fx.p1, fx.graph_g, identity_corr(fx.r2)}), InvalidInput);
}

TEST_CASE("honest wannabe: regular bimodules on Z/2") {
  auto z2 = z2_category();
  auto w = regular_on(z2, build_clifford(fixtures().c2).alg);
  REQUIRE(validate_wannabe(w).ok);
  auto l = line_cocycle(w, 1, 1);
  CHECK(l.hom.total_dim() == 1);
  CHECK(l.parity == 0);
  auto t = tau_maps(w, 1, 1, 1);
  CHECK(t.phi() == Scalar(1));
  CHECK(kappa_and_two_kappas(w, 1, 1, 0, 1).commutes);
  CHECK(check_generic_coherences(w, 1, 1, 1, 1).commutes);
  auto e = epsilon_and_inverse(w, 1, 1);
  CHECK(e.matrix * e.inverse == Matrix::identity(e.matrix.rows()));
}

TEST_CASE("Fock chain: cross-module equalities") {
  Chain c(c2_chain());
  const auto& w = c.w();

  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int d = b + 1; d <= 4; ++d) {
        auto l = line_cocycle(w, c.f[a][b], c.f[b][d]);
        auto ph = pf_hom(c.corr(a, b), c.corr(b, d));
        CHECK(l.gen == ph.line_generator());
        CHECK(l.parity == ph.line_parity());

        auto lam = lambda_iso(c.corr(a, b), c.corr(b, d));
        auto e = epsilon_and_inverse(w, c.f[a][b], c.f[b][d]);
        CHECK(lam.matrix == e.matrix.scaled(lam.comparison));
        CHECK(e.matrix * e.inverse == Matrix::identity(e.matrix.rows()));
      }

  // ψ from τ against the Pfaffian φ, once the line generators are matched up
  auto cmp = [&](int a, int b, int d) { return lambda_iso(c.corr(a, b), c.corr(b, d)).comparison; };
  for (auto q : {std::array<int, 4>{0, 1, 2, 3}, {0, 1, 2, 4}, {1, 2, 3, 4}}) {
    auto t = tau_maps(w, c.f[q[0]][q[1]], c.f[q[1]][q[2]], c.f[q[2]][q[3]]);
    auto pi = phi_iso(c.corr(q[0], q[1]), c.corr(q[1], q[2]), c.corr(q[2], q[3]));
    Scalar g = cmp(q[0], q[2], q[3]) * cmp(q[0], q[1], q[2]) / (cmp(q[1], q[2], q[3]) * cmp(q[0], q[1], q[3]));
    CHECK(t.psi() / g == pi.backward());
    CHECK(t.phi() * g == pi.forward());
  }
}

TEST_CASE("Fock chain: generic coherences") {
  Chain c(c2_chain());
  const auto& w = c.w();
  CHECK(check_generic_pentagon(w, c.f[0][1], c.f[1][2], c.f[2][3], c.f[3][4]).commutes);
  CHECK(check_generic_mixed(w, c.f[0][1], c.f[1][2], c.f[2][3]).commutes);
  CHECK(check_generic_mixed(w, c.f[1][2], c.f[2][3], c.f[3][4]).commutes);
  CHECK(kappa_and_two_kappas(w, c.f[0][1], c.f[1][2], c.f[2][3], c.f[3][4]).commutes);
  KappaOptions neg;
  neg.negate_kappa = true;
  CHECK_FALSE(kappa_and_two_kappas(w, c.f[0][1], c.f[1][2], c.f[2][3], c.f[3][4], neg).commutes);

  // l_012 ⊗ l_234 is odd ⊗ odd here
  const auto& fx = fixtures();
  Chain odd({fx.p1, fx.p2, fx.p1, fx.p2});
  CHECK(check_generic_pentagon(odd.w(), odd.f[0][1], odd.f[1][2], odd.f[2][3], odd.f[3][4]).commutes);
  CHECK(line_cocycle(odd.w(), odd.f[0][1], odd.f[1][2]).parity + line_cocycle(odd.w(), odd.f[2][3], odd.f[3][4]).parity == 2);
  CoherenceOptions drop;
  drop.koszul = false;
  auto r = check_generic_pentagon(odd.w(), odd.f[0][1], odd.f[1][2], odd.f[2][3], odd.f[3][4], drop);
  CHECK_FALSE(r.commutes);
}

TEST_CASE("line cocycle under a parity shift") {
  Chain c(c2_chain());
  WannabeFunctor w = c.w();
  int before = line_cocycle(w, c.f[0][1], c.f[1][2]).parity;
  w.values[c.f[0][1]] = shift(w.values[c.f[0][1]], 1);
  auto l = line_cocycle(w, c.f[0][1], c.f[1][2]);
  CHECK(l.hom.total_dim() == 1);
  CHECK(l.parity == 1 - before);
  CHECK_THROWS_AS(line_cocycle(w, c.f[1][2], c.f[0][1]), InvalidInput);
}

TEST_CASE("property: generic freeness on Fock chains") {
  Rng rng(74);
  for (int t = 0; t < 5; ++t) {
    Field f = t % 2 ? Field::Q : Field::Qi;
    auto ch = t == 4 ? random_kernel_chain(f, 4, rng) : random_chain(f, 4, 2, rng, 8);
    Chain c(ch);
    const auto& w = c.w();
    REQUIRE(validate_wannabe(w).ok);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 4; ++b)
        for (int d = b + 1; d <= 4; ++d) {
          auto e = epsilon_and_inverse(w, c.f[a][b], c.f[b][d]);
          CHECK(e.l.hom.total_dim() == 1);
          CHECK(e.l.gen == pf_hom(c.corr(a, b), c.corr(b, d)).line_generator());
        }
    CHECK(check_generic_coherences(w, c.f[0][1], c.f[1][2], c.f[2][3], c.f[3][4]).commutes);
    CHECK(check_generic_mixed(w, c.f[1][2], c.f[2][3], c.f[3][4]).commutes);
    CHECK(kappa_and_two_kappas(w, c.f[0][1], c.f[1][2], c.f[2][3], c.f[3][4]).commutes);
  }
}
