#include "cf/cocycle.hpp"

#include <array>

#include "cf/errors.hpp"

namespace cf {

// ---------------------------------------------------------------- categories

int FiniteCategory::then(int f, int g) const {
  auto it = compose.find({f, g});
  if (it == compose.end())
    throw InvalidInput("morphisms " + morphisms.at(f).id + ", " + morphisms.at(g).id + " are not composable");
  return it->second;
}

int FiniteCategory::find(const std::string& id) const {
  for (size_t k = 0; k < morphisms.size(); ++k)
    if (morphisms[k].id == id) return static_cast<int>(k);
  throw InvalidInput("unknown morphism " + id);
}

CheckResult validate_category(const FiniteCategory& c) {
  int no = static_cast<int>(c.objects.size()), nm = static_cast<int>(c.morphisms.size());
  auto fail = [](std::string r) { return CheckResult{false, std::move(r)}; };
  if (static_cast<int>(c.identities.size()) != no) return fail("one identity per object required");
  for (const auto& m : c.morphisms)
    if (m.src < 0 || m.src >= no || m.dst < 0 || m.dst >= no) return fail("morphism " + m.id + " has a bad endpoint");
  for (const auto& [fg, h] : c.compose) {
    auto [f, g] = fg;
    if (f < 0 || f >= nm || g < 0 || g >= nm || h < 0 || h >= nm) return fail("composition refers to unknown morphisms");
    const auto &mf = c.morphisms[f], &mg = c.morphisms[g], &mh = c.morphisms[h];
    if (mf.dst != mg.src) return fail("composite of non-composable " + mf.id + ", " + mg.id);
    if (mh.src != mf.src || mh.dst != mg.dst) return fail("composite " + mh.id + " has the wrong endpoints");
  }
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g)
      if (c.morphisms[f].dst == c.morphisms[g].src && !c.compose.count({f, g}))
        return fail("missing composite of " + c.morphisms[f].id + ", " + c.morphisms[g].id);
  for (int o = 0; o < no; ++o) {
    int e = c.identities[o];
    if (e < 0 || e >= nm || c.morphisms[e].src != o || c.morphisms[e].dst != o) return fail("bad identity");
  }
  for (int f = 0; f < nm; ++f) {
    const auto& m = c.morphisms[f];
    if (c.then(c.identities[m.src], f) != f || c.then(f, c.identities[m.dst]) != f)
      return fail("identity law fails at " + m.id);
  }
  for (const auto& [fg, h] : c.compose)
    for (int k = 0; k < nm; ++k)
      if (c.morphisms[fg.second].dst == c.morphisms[k].src &&
          c.then(h, k) != c.then(fg.first, c.then(fg.second, k)))
        return fail("composition is not associative");
  return {};
}

FiniteCategory poset_category(int n) {
  FiniteCategory c;
  std::vector<std::vector<int>> idx(n + 1, std::vector<int>(n + 1, -1));
  for (int a = 0; a <= n; ++a) c.objects.push_back(std::to_string(a));
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      idx[a][b] = static_cast<int>(c.morphisms.size());
      c.morphisms.push_back({std::to_string(a) + (a == b ? "=" : "<") + std::to_string(b), a, b});
    }
  for (int a = 0; a <= n; ++a) c.identities.push_back(idx[a][a]);
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b)
      for (int d = b; d <= n; ++d) c.compose[{idx[a][b], idx[b][d]}] = idx[a][d];
  return c;
}

int poset_morphism(const FiniteCategory& c, int a, int b) {
  return c.find(std::to_string(a) + (a == b ? "=" : "<") + std::to_string(b));
}

FiniteCategory group_category(const std::vector<std::string>& names, const std::vector<std::vector<int>>& table) {
  FiniteCategory c;
  c.objects = {"*"};
  for (const auto& n : names) c.morphisms.push_back({n, 0, 0});
  c.identities = {0};
  int n = static_cast<int>(names.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) c.compose[{a, b}] = table.at(b).at(a);
  return c;
}

FiniteCategory z2_category() { return group_category({"e", "g"}, {{0, 1}, {1, 0}}); }

FiniteCategory z2xz2_category() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return group_category({"e", "a", "b", "ab"}, t);
}

// ---------------------------------------------------------------- scalar wannabes

Scalar scalar_cocycle(const ScalarWannabe& r, int f, int g) {
  int h = r.cat->then(f, g);
  auto it = r.alpha_override.find({f, g});
  if (it != r.alpha_override.end()) return it->second;
  return r.rho.at(h).inv() * r.rho.at(g) * r.rho.at(f);
}

CoherenceReport check_scalar_laws(const ScalarWannabe& r, int fij, int fjk, int fkl) {
  const auto& c = *r.cat;
  int fik = c.then(fij, fjk), fjl = c.then(fjk, fkl), fil = c.then(fik, fkl);
  auto one = [](const Scalar& s) { return Matrix::diag({s}); };
  Diagram d;
  d.id = "scalar-laws";
  int unit = d.add_node("1", 1);
  std::map<int, int> v;
  for (int f : {fij, fjk, fkl}) {
    for (int o : {c.morphisms[f].src, c.morphisms[f].dst})
      if (!v.count(o)) v[o] = d.add_node("V_" + c.objects[o], 1);
  }
  auto rho = [&](int f) { return d.add_edge("rho_" + c.morphisms[f].id, v[c.morphisms[f].src], v[c.morphisms[f].dst], one(r.rho.at(f))); };
  auto alpha = [&](int f, int g, int node) {
    return d.add_edge("alpha(" + c.morphisms[f].id + "," + c.morphisms[g].id + ")", node, node,
                      one(scalar_cocycle(r, f, g)));
  };
  int a_ijk = alpha(fij, fjk, unit), a_ikl = alpha(fik, fkl, unit);
  int a_ijl = alpha(fij, fjl, unit), a_jkl = alpha(fjk, fkl, unit);
  d.pairs.push_back({DiagramPath{unit, {a_ijk, a_ikl}}, DiagramPath{unit, {a_jkl, a_ijl}}});
  for (auto [f, g] : {std::pair{fij, fjk}, std::pair{fik, fkl}, std::pair{fjk, fkl}, std::pair{fij, fjl}}) {
    int h = c.then(f, g);
    int src = v[c.morphisms[f].src];
    int ef = rho(f), eg = rho(g), eh = rho(h), ea = alpha(f, g, src);
    d.pairs.push_back({DiagramPath{src, {ef, eg}}, DiagramPath{src, {ea, eh}}});
  }
  return check_diagram(d);
}

// ---------------------------------------------------------------- wannabe functors

namespace {

bool same_bimodule(const SuperBimodule& a, const SuperBimodule& b) {
  return a.dim == b.dim && a.parity == b.parity && a.lgen == b.lgen && a.rgen == b.rgen;
}

Matrix parity_sign(const std::vector<int>& parity, int p) {
  Matrix d(static_cast<int>(parity.size()), static_cast<int>(parity.size()));
  for (size_t s = 0; s < parity.size(); ++s) d(s, s) = sign_of(p * parity[s]);
  return d;
}

Scalar ratio_or_throw(const Matrix& x, const Matrix& gen, const std::string& what) {
  auto c = proportionality(x, gen);
  if (!c) throw InternalError(what + " does not land in the hom line");
  if (c->is_zero()) throw InternalError(what + " is not invertible");
  return *c;
}

Matrix invert(const Matrix& m, const std::string& what) {
  if (!m.is_square() || det(m).is_zero()) throw InternalError(what + " is not invertible");
  return inverse(m);
}

}  // namespace

CheckResult validate_wannabe(const WannabeFunctor& w, bool invertibility) {
  const auto& c = *w.cat;
  if (w.objects.size() != c.objects.size() || w.values.size() != c.morphisms.size())
    return {false, "wannabe functor does not cover the category"};
  for (size_t f = 0; f < c.morphisms.size(); ++f) {
    const auto& m = c.morphisms[f];
    const auto& v = w.values[f];
    if (!same_algebra(*v.left, *w.objects[m.dst]) || !same_algebra(*v.right, *w.objects[m.src]))
      return {false, "value of " + m.id + " has the wrong algebras"};
  }
  for (size_t o = 0; o < c.objects.size(); ++o)
    if (!same_bimodule(w.values[c.identities[o]], regular_bimodule(w.objects[o])))
      return {false, "identity of " + c.objects[o] + " is not the regular bimodule"};
  if (invertibility)
    for (size_t f = 0; f < c.morphisms.size(); ++f) {
      auto rep = invertibility_check(w.values[f]);
      if (!rep.invertible) return {false, "value of " + c.morphisms[f].id + " is not invertible: " + rep.reason};
    }
  return {};
}

std::unique_ptr<FockWannabe> fock_wannabe(const std::vector<Correspondence>& chain, const Scalar& kappa) {
  auto fw = std::make_unique<FockWannabe>();
  int n = static_cast<int>(chain.size());
  fw->cat = poset_category(n);
  fw->w.cat = &fw->cat;
  std::vector<SpacePtr> hs;
  if (n > 0) hs.push_back(chain[0].source);
  for (const auto& c : chain) hs.push_back(c.target);
  for (int k = 0; k + 1 < n; ++k)
    if (!same_space(*chain[k].target, *chain[k + 1].source)) throw InvalidInput("chain is not composable");
  for (const auto& h : hs) fw->w.objects.push_back(build_clifford(h).alg);
  fw->corr.resize(fw->cat.morphisms.size());
  fw->w.values.resize(fw->cat.morphisms.size());
  for (int a = 0; a <= n; ++a) {
    int e = poset_morphism(fw->cat, a, a);
    fw->corr[e] = identity_corr(hs[a]);
    fw->w.values[e] = regular_bimodule(fw->w.objects[a]);
    Correspondence cur;
    for (int b = a + 1; b <= n; ++b) {
      cur = b == a + 1 ? chain[a] : compose_corr(cur, chain[b - 1]);
      int f = poset_morphism(fw->cat, a, b);
      fw->corr[f] = cur;
      fw->w.values[f] = fock_bimodule(cur, kappa).mod;
    }
  }
  return fw;
}

LineCocycle line_cocycle(const WannabeFunctor& w, int f, int g) {
  LineCocycle l;
  l.f = f;
  l.g = g;
  l.h = w.cat->then(f, g);
  l.target = relative_tensor(w.values.at(g), w.values.at(f));
  l.hom = bimodule_hom_space(w.values.at(l.h), l.target.mod);
  if (l.hom.total_dim() != 1)
    throw InternalError("line cocycle has dimension " + std::to_string(l.hom.total_dim()));
  l.gen = l.hom.line_generator();
  l.parity = l.hom.line_parity();
  return l;
}

TauMaps tau_maps(const WannabeFunctor& w, int fij, int fjk, int fkl) {
  const auto& c = *w.cat;
  int fik = c.then(fij, fjk), fjl = c.then(fjk, fkl);
  const auto& mij = w.values.at(fij);
  const auto& mkl = w.values.at(fkl);
  const auto& mjl = w.values.at(fjl);
  TauMaps t;
  t.l_ijk = line_cocycle(w, fij, fjk);
  t.l_ikl = line_cocycle(w, fik, fkl);
  t.l_jkl = line_cocycle(w, fjk, fkl);
  t.l_ijl = line_cocycle(w, fij, fjl);
  t.t3 = relative_tensor(t.l_jkl.target.mod, mij);
  t.m = bimodule_hom_space(w.values.at(t.l_ikl.h), t.t3.mod);
  if (t.m.total_dim() != 1) throw InternalError("m has dimension " + std::to_string(t.m.total_dim()));
  t.m_gen = t.m.line_generator();

  auto p_nm = relative_tensor(mkl, t.l_ijk.target.mod);
  Matrix up = descend(tensor_maps(Matrix::identity(mkl.dim), t.l_ijk.gen, t.l_ijk.parity, mkl.parity),
                      t.l_ikl.target, p_nm);
  Matrix assoc = associator(t.l_jkl.target, t.t3, t.l_ijk.target, p_nm);
  t.odd_image = invert(assoc, "associator") * up * t.l_ikl.gen;
  t.even_image = descend(tensor_maps(t.l_jkl.gen, Matrix::identity(mij.dim), 0, mjl.parity), t.l_ijl.target, t.t3) *
                 t.l_ijl.gen;
  t.tau_odd = ratio_or_throw(t.odd_image, t.m_gen, "τ_odd");
  t.tau_even = ratio_or_throw(t.even_image, t.m_gen, "τ_even");
  return t;
}

CoherenceReport kappa_and_two_kappas(const WannabeFunctor& w, int fij, int fjk, int fkl, int flm,
                                     const KappaOptions& opt) {
  const std::string id = "two-kappas";
  const auto& c = *w.cat;
  Scalar tau1, tau2, k1, k2;
  try {
    int fik = c.then(fij, fjk), fim = c.then(c.then(fik, fkl), flm);
    const auto& mij = w.values.at(fij);
    const auto& mjk = w.values.at(fjk);
    const auto& mlm = w.values.at(flm);
    TauMaps a = tau_maps(w, fij, fjk, fkl);  // m_ijkl
    TauMaps b = tau_maps(w, fik, fkl, flm);  // m_iklm
    tau1 = a.tau_odd;
    tau2 = b.tau_odd;

    const auto& x = b.l_jkl.target;  // lm ⊗ kl
    auto y = relative_tensor(x.mod, mjk);
    auto t4 = relative_tensor(y.mod, mij);
    auto n = bimodule_hom_space(w.values.at(fim), t4.mod);
    if (n.total_dim() != 1) throw InternalError("n has dimension " + std::to_string(n.total_dim()));
    const Matrix& n_gen = n.line_generator();

    // κ_1: lm ⊗ ((kl ⊗ jk) ⊗ ij) → ((lm ⊗ kl) ⊗ jk) ⊗ ij
    const auto& wkj = a.l_jkl.target;  // kl ⊗ jk
    const auto& h = b.l_ikl;           // l_ilm, into lm ⊗ il
    auto z = relative_tensor(mlm, a.t3.mod);
    Matrix id_mu = descend(tensor_maps(Matrix::identity(mlm.dim), a.m_gen, a.m.line_parity(), mlm.parity), h.target, z);
    auto lw = relative_tensor(mlm, wkj.mod);
    auto lw_ij = relative_tensor(lw.mod, mij);
    Matrix step_a = invert(associator(lw, lw_ij, a.t3, z), "associator");
    Matrix inner = invert(associator(x, y, wkj, lw), "associator");
    Matrix step_b = descend(tensor_maps(inner, Matrix::identity(mij.dim), 0, lw.mod.parity), lw_ij, t4);
    k1 = ratio_or_throw(step_b * step_a * id_mu * h.gen, n_gen, "κ");

    // κ_2: (lm ⊗ kl) ⊗ (jk ⊗ ij) → ((lm ⊗ kl) ⊗ jk) ⊗ ij
    const auto& g = a.l_ijk;
    auto v = relative_tensor(x.mod, g.target.mod);
    Matrix id_g = descend(tensor_maps(Matrix::identity(x.mod.dim), g.gen, g.parity, x.mod.parity), b.t3, v);
    Matrix re = invert(associator(y, t4, g.target, v), "associator");
    k2 = ratio_or_throw(re * id_g * b.m_gen, n_gen, "κ");
  } catch (const InternalError& e) {
    return failed_report(id, e.what());
  } catch (const NotBalanced& e) {
    return failed_report(id, e.what());
  }
  if (opt.negate_kappa) k1 = -k1;
  auto one = [](const Scalar& s) { return Matrix::diag({s}); };
  Diagram d;
  d.id = id;
  int top = d.add_node("l_ijk l_ikl l_ilm", 1);
  int left = d.add_node("m_ijkl l_ilm", 1);
  int right = d.add_node("l_ijk m_iklm", 1);
  int bot = d.add_node("n_ijklm", 1);
  int e0 = d.add_edge("tau x id", top, left, one(tau1));
  int e1 = d.add_edge("kappa", left, bot, one(k1));
  int e2 = d.add_edge("id x tau", top, right, one(tau2));
  int e3 = d.add_edge("kappa", right, bot, one(k2));
  d.pairs.push_back({DiagramPath{top, {e0, e1}}, DiagramPath{top, {e2, e3}}});
  return check_diagram(d);
}

Epsilon epsilon_and_inverse(const WannabeFunctor& w, int f, int g) {
  Epsilon e;
  e.l = line_cocycle(w, f, g);
  const auto& m = w.values.at(e.l.h);
  e.source = shift(m, e.l.parity);
  e.matrix = e.l.gen * parity_sign(m.parity, e.l.parity);
  if (!is_bimodule_hom(e.matrix, 0, e.source, e.l.target.mod)) throw InternalError("ε is not a bimodule map");
  e.inverse = invert(e.matrix, "ε");
  return e;
}

CoherenceReport check_generic_pentagon(const WannabeFunctor& w, int fij, int fjk, int fkl, int flm,
                                       const CoherenceOptions& opt) {
  const std::string id = "generic-pentagon";
  const auto& c = *w.cat;
  int f[5][5];
  f[0][1] = fij;
  f[1][2] = fjk;
  f[2][3] = fkl;
  f[3][4] = flm;
  for (int len = 2; len <= 4; ++len)
    for (int a = 0; a + len <= 4; ++a) f[a][a + len] = c.then(f[a][a + len - 1], f[a + len - 1][a + len]);
  std::map<std::array<int, 4>, Scalar> phi;
  int p012 = 0, p234 = 0;
  try {
    for (auto q : {std::array<int, 4>{0, 1, 2, 3}, {0, 2, 3, 4}, {0, 1, 2, 4}, {0, 1, 3, 4}, {1, 2, 3, 4}}) {
      auto t = tau_maps(w, f[q[0]][q[1]], f[q[1]][q[2]], f[q[2]][q[3]]);
      phi[q] = t.phi();
      if (q == std::array<int, 4>{0, 1, 2, 3}) p012 = t.l_ijk.parity;
      if (q == std::array<int, 4>{1, 2, 3, 4}) p234 = t.l_jkl.parity;
    }
  } catch (const InternalError& e) {
    return failed_report(id, e.what());
  } catch (const NotBalanced& e) {
    return failed_report(id, e.what());
  }
  auto ph = [&](int a, int b, int cc, int dd) { return Matrix::diag({phi.at({a, b, cc, dd})}); };
  Scalar swap = opt.koszul ? sign_of(p012 * p234) : Scalar(1);

  Diagram d;
  d.id = id;
  int tr = d.add_node("l_ijk l_ikl l_ilm", 1);
  int tl = d.add_node("l_jkl l_ijl l_ilm", 1);
  int le = d.add_node("l_jkl l_jlm l_ijm", 1);
  int r1 = d.add_node("l_ijk l_klm l_ikm", 1);
  int r2 = d.add_node("l_klm l_ijk l_ikm", 1);
  int bo = d.add_node("l_klm l_jkm l_ijm", 1);
  int e1 = d.add_edge("phi_ijkl x id", tr, tl, ph(0, 1, 2, 3));
  int e2 = d.add_edge("id x phi_iklm", tr, r1, ph(0, 2, 3, 4));
  int e3 = d.add_edge("swap", r1, r2, Matrix::diag({swap}));
  int e4 = d.add_edge("id x phi_ijkm", r2, bo, ph(0, 1, 2, 4));
  int e5 = d.add_edge("id x phi_ijlm", tl, le, ph(0, 1, 3, 4));
  int e6 = d.add_edge("phi_jklm x id", le, bo, ph(1, 2, 3, 4));
  d.pairs.push_back({DiagramPath{tr, {e1, e5, e6}}, DiagramPath{tr, {e2, e3, e4}}});
  return check_diagram(d);
}

CoherenceReport check_generic_mixed(const WannabeFunctor& w, int fij, int fjk, int fkl, const CoherenceOptions& opt) {
  const std::string id = "generic-mixed";
  const auto& c = *w.cat;
  int fik = c.then(fij, fjk), fjl = c.then(fjk, fkl);
  const auto& mij = w.values.at(fij);
  const auto& mkl = w.values.at(fkl);
  auto sw = [&](int a, int b) { return opt.koszul ? sign_of(a * b) : Scalar(1); };

  TauMaps t;
  Epsilon e_ijk, e_ikl, e_ijl, e_jkl;
  Matrix down_l, assoc_l, down_r, move_r, top_assoc;
  RelTensor lb3, p_nm, rb3, pn_m;
  try {
    t = tau_maps(w, fij, fjk, fkl);
    e_ijk = epsilon_and_inverse(w, fij, fjk);
    e_ikl = epsilon_and_inverse(w, fik, fkl);
    e_ijl = epsilon_and_inverse(w, fij, fjl);
    e_jkl = epsilon_and_inverse(w, fjk, fkl);
    const auto& lb2 = e_ikl.l.target;  // kl ⊗ ik
    lb3 = relative_tensor(mkl, e_ijk.source);
    const auto& nm = e_ijk.l.target;
    p_nm = relative_tensor(mkl, nm.mod);
    const auto& rb2 = e_ijl.l.target;  // jl ⊗ ij
    rb3 = relative_tensor(e_jkl.source, mij);
    const auto& pn = e_jkl.l.target;
    pn_m = relative_tensor(pn.mod, mij);

    assoc_l = descend(Matrix::identity(lb2.tensor_dim()), lb2, lb3);
    Matrix up_l = descend(tensor_maps(Matrix::identity(mkl.dim), e_ijk.matrix, 0, mkl.parity), lb3, p_nm);
    Matrix move(rb2.tensor_dim(), rb2.tensor_dim());
    for (int p = 0; p < rb2.ndim; ++p)
      for (int q = 0; q < rb2.mdim; ++q)
        move(rb2.pair_index(p, q), rb2.pair_index(p, q)) = sw(rb2.mparity[q], e_jkl.l.parity);
    move_r = descend(move, rb2, rb3);
    Matrix up_r = descend(tensor_maps(e_jkl.matrix, Matrix::identity(mij.dim), 0, e_jkl.source.parity), rb3, pn_m);
    top_assoc = associator(pn, pn_m, nm, p_nm);
    down_l = invert(up_l, "id x ε");
    down_r = invert(up_r, "ε x id");
  } catch (const InternalError& e) {
    return failed_report(id, e.what());
  } catch (const NotBalanced& e) {
    return failed_report(id, e.what());
  }
  int n1 = e_ijk.l.parity, n2 = e_ikl.l.parity, n3 = e_jkl.l.parity, n4 = e_ijl.l.parity;
  int dil = w.values.at(e_ikl.l.h).dim;
  Matrix id_il = Matrix::identity(dil);

  Diagram d;
  d.id = id;
  int top = d.add_node("M_kl (M_jk M_ij)", p_nm.mod.dim);
  int nlb3 = d.add_node("M_kl (M_ik l_ijk)", lb3.mod.dim);
  int nlb2 = d.add_node("(M_kl M_ik) l_ijk", e_ikl.l.target.mod.dim);
  int lb1 = d.add_node("M_il l_ikl l_ijk", dil);
  int lb0 = d.add_node("M_il l_ijk l_ikl", dil);
  int top2 = d.add_node("(M_kl M_jk) M_ij", pn_m.mod.dim);
  int nrb3 = d.add_node("(M_jl l_jkl) M_ij", rb3.mod.dim);
  int nrb2 = d.add_node("(M_jl M_ij) l_jkl", e_ijl.l.target.mod.dim);
  int rb1 = d.add_node("M_il l_ijl l_jkl", dil);
  int rb0 = d.add_node("M_il l_jkl l_ijl", dil);

  int a0 = d.add_edge("id o eps_ijk^-1", top, nlb3, down_l);
  int a1 = d.add_edge("assoc^-1", nlb3, nlb2, invert(assoc_l, "associator"));
  int a2 = d.add_edge("eps_ikl^-1 x id", nlb2, lb1, e_ikl.inverse);
  int a3 = d.add_edge("swap", lb1, lb0, id_il.scaled(sw(n1, n2)));
  int a4 = d.add_edge("id x phi", lb0, rb0, id_il.scaled(t.phi()));
  int b0 = d.add_edge("assoc^-1", top, top2, invert(top_assoc, "associator"));
  int b1 = d.add_edge("eps_jkl^-1 o id", top2, nrb3, down_r);
  int b2 = d.add_edge("move^-1", nrb3, nrb2, invert(move_r, "interchange"));
  int b3 = d.add_edge("eps_ijl^-1 x id", nrb2, rb1, e_ijl.inverse);
  int b4 = d.add_edge("swap", rb1, rb0, id_il.scaled(sw(n3, n4)));
  d.pairs.push_back({DiagramPath{top, {a0, a1, a2, a3, a4}}, DiagramPath{top, {b0, b1, b2, b3, b4}}});
  return check_diagram(d);
}

CoherenceReport check_generic_coherences(const WannabeFunctor& w, int fij, int fjk, int fkl, int flm,
                                         const CoherenceOptions& opt) {
  auto p = check_generic_pentagon(w, fij, fjk, fkl, flm, opt);
  auto m = check_generic_mixed(w, fij, fjk, fkl, opt);
  CoherenceReport r;
  r.diagram_id = "generic-coherences";
  r.commutes = p.commutes && m.commutes;
  r.pairs = p.pairs;
  r.pairs.insert(r.pairs.end(), m.pairs.begin(), m.pairs.end());
  if (p.failing_pair >= 0)
    r.failing_pair = p.failing_pair;
  else if (m.failing_pair >= 0)
    r.failing_pair = static_cast<int>(p.pairs.size()) + m.failing_pair;
  for (const auto* x : {&p, &m})
    if (!x->note.empty()) r.note += (r.note.empty() ? "" : "; ") + x->diagram_id + ": " + x->note;
  return r;
}

}  // namespace cf
