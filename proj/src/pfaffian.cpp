#include "cf/pfaffian.hpp"

#include <map>

#include "cf/errors.hpp"
#include "cf/random.hpp"

namespace cf {

namespace {

// x ↦ (0, x) or (x, 0) inside a correspondence's ambient
Matrix slot(int before, int n, int after) {
  Matrix e(before + n + after, n);
  for (int k = 0; k < n; ++k) e(before + k, k) = 1;
  return e;
}

Matrix cols_of(const Subspace& s) { return s.basis().transpose(); }

Matrix parity_sign(const std::vector<int>& parity, int p) {
  Matrix d(static_cast<int>(parity.size()), static_cast<int>(parity.size()));
  for (size_t s = 0; s < parity.size(); ++s) d(s, s) = sign_of(p * parity[s]);
  return d;
}

void check_composable(const Correspondence& a, const Correspondence& b) {
  if (!same_space(*a.target, *b.source)) throw InvalidInput("correspondences are not composable");
}

Matrix random_matrix(int r, int c, Field f, Rng& rng) {
  Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = random_scalar(f, rng);
  return m;
}

}  // namespace

std::optional<Scalar> vec_ratio(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) return std::nullopt;
  int piv = -1;
  for (size_t k = 0; k < y.size(); ++k)
    if (!y[k].is_zero()) {
      piv = static_cast<int>(k);
      break;
    }
  if (piv < 0) return std::nullopt;
  Scalar c = x[piv] / y[piv];
  if (scale(c, y) != x) return std::nullopt;
  return c;
}

Subspace pf_kernel(const Correspondence& lij, const Correspondence& ljk) {
  check_composable(lij, ljk);
  int ni = lij.source->dim, nj = lij.target->dim, nk = ljk.target->dim;
  Subspace a = preimage(slot(ni, nj, 0), lij.lag);
  Subspace b = preimage(slot(0, nj, nk), ljk.lag);
  return intersect(a, b);
}

DetLine pf_det(const Correspondence& lij, const Correspondence& ljk) {
  Subspace k = pf_kernel(lij, ljk);
  int ni = lij.source->dim, nj = lij.target->dim, nk = ljk.target->dim;
  Matrix e = slot(ni, nj, nj + nk) + slot(ni + nj, nj, nk);
  // (0, a, a, 0)
  Matrix rows = (e * cols_of(k)).transpose();
  return DetLine{canonicalize_subspace(rows, ni + 2 * nj + nk)};
}

HomSpace pf_hom(const Correspondence& lij, const Correspondence& ljk, const Scalar& kappa) {
  auto lik = compose_corr(lij, ljk);
  auto fij = fock_bimodule(lij, kappa), fjk = fock_bimodule(ljk, kappa), fik = fock_bimodule(lik, kappa);
  auto t = relative_tensor(fjk.mod, fij.mod);
  auto h = bimodule_hom_space(fik.mod, t.mod);
  if (h.total_dim() != 1) throw InternalError("Pfaffian hom space has dimension " + std::to_string(h.total_dim()));
  return h;
}

Vec pf_vacuum_value(const Correspondence& lij, const std::vector<Vec>& kernel, const FockModule& fij) {
  // The kernel directions kill Ω, so the wedge acts through α(K): w_b ∈ α(K) with
  // b(u_a, w_b) = δ_ab, and Ω_ik ⊗ g^∨ ↦ Ω_jk ⊗ w_1⋯w_n Ω_ij.
  int n = static_cast<int>(kernel.size()), ni = lij.source->dim, nj = lij.target->dim;
  const auto& hj = *lij.target;
  std::vector<Vec> cre;
  for (int m = 0; m < n; ++m) cre.push_back(hj.alpha(kernel[m]));
  Vec w = fij.vacuum();
  if (n == 0) return w;
  Matrix pair(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) pair(a, b) = bilinear_form(hj, kernel[a], cre[b]);
  Matrix q = inverse(pair);
  for (int m = n - 1; m >= 0; --m) {
    Vec v(nj);
    for (int c = 0; c < n; ++c) v = v + scale(q(c, m), cre[c]);
    w = fij.rho(slot(ni, nj, 0).apply(v)).apply(w);
  }
  return w;
}

LambdaIso lambda_iso(const Correspondence& lij, const Correspondence& ljk, const Scalar& kappa) {
  LambdaIso l;
  l.lij = lij;
  l.ljk = ljk;
  l.lik = compose_corr(lij, ljk);
  l.kernel = pf_kernel(lij, ljk);
  int n = l.kernel.dim();
  l.parity = n % 2;
  auto fij = fock_bimodule(lij, kappa), fjk = fock_bimodule(ljk, kappa), fik = fock_bimodule(l.lik, kappa);
  l.target = relative_tensor(fjk.mod, fij.mod);
  l.source = shift(fik.mod, l.parity);
  l.hom = bimodule_hom_space(fik.mod, l.target.mod);
  if (l.hom.total_dim() != 1)
    throw InternalError("Pfaffian hom space has dimension " + std::to_string(l.hom.total_dim()));
  if (l.hom.line_parity() != l.parity) throw InternalError("Pfaffian hom line and kernel disagree on parity");

  std::vector<Vec> basis;
  for (int m = 0; m < n; ++m) basis.push_back(l.kernel.vec(m));
  Vec w = pf_vacuum_value(lij, basis, fij.fock);
  Vec t0(l.target.mod.dim);
  for (int q = 0; q < fij.mod.dim; ++q)
    if (!w[q].is_zero()) t0 = t0 + scale(w[q], l.target.class_of(0, q));

  const Matrix& gen = l.hom.line_generator();
  auto c = vec_ratio(t0, gen.apply(fik.fock.vacuum()));
  if (!c) throw InternalError("vacuum value is not in the Pfaffian hom line");
  l.comparison = *c;
  l.hom_image = gen.scaled(*c);
  l.matrix = l.hom_image * parity_sign(fik.mod.parity, l.parity);
  if (!l.matrix.is_square() || det(l.matrix).is_zero()) throw InternalError("λ is not invertible");
  if (!is_bimodule_hom(l.matrix, 0, l.source, l.target.mod)) throw InternalError("λ is not a bimodule map");
  return l;
}

PhiIso phi_iso(const Correspondence& lij, const Correspondence& ljk, const Correspondence& lkl, Rng* lift_shift) {
  check_composable(lij, ljk);
  check_composable(ljk, lkl);
  auto lik = compose_corr(lij, ljk);
  auto ljl = compose_corr(ljk, lkl);
  PhiIso p;
  p.k_ijk = pf_kernel(lij, ljk);
  p.k_ikl = pf_kernel(lik, lkl);
  p.k_jkl = pf_kernel(ljk, lkl);
  p.k_ijl = pf_kernel(lij, ljl);
  int ni = lij.source->dim, nj = lij.target->dim, nk = ljk.target->dim, nl = lkl.target->dim;
  // (0,a) ∈ L_ij, (a,b) ∈ L_jk, (b,0) ∈ L_kl
  Subspace m1 = preimage(Matrix::vstack(Matrix(ni, nj + nk), slot(0, nj, nk).transpose()), lij.lag);
  Subspace m2 = preimage(Matrix::identity(nj + nk), ljk.lag);
  Subspace m3 = preimage(Matrix::vstack(slot(nj, nk, 0).transpose(), Matrix(nl, nj + nk)), lkl.lag);
  p.m = intersect(intersect(m1, m2), m3);
  Matrix to_m = p.m.coord_map();
  Matrix first = slot(0, nj, nk), second = slot(nj, nk, 0);

  ShortExactSequence s1{to_m * first * cols_of(p.k_ijk), p.k_ikl.coord_map() * second.transpose() * cols_of(p.m)};
  ShortExactSequence s2{to_m * second * cols_of(p.k_jkl), p.k_ijl.coord_map() * first.transpose() * cols_of(p.m)};
  std::optional<Matrix> sh1, sh2;
  if (lift_shift) {
    Field f = lij.source->field;
    sh1 = random_matrix(p.k_ijk.dim(), p.k_ikl.dim(), f, *lift_shift);
    sh2 = random_matrix(p.k_jkl.dim(), p.k_ijl.dim(), f, *lift_shift);
  }
  try {
    s1.validate();
    s2.validate();
  } catch (const InvalidInput& e) {
    throw InternalError(std::string("M sequence is not exact: ") + e.what());
  }
  p.c1 = ses_det_iso(s1, sh1);
  p.c2 = ses_det_iso(s2, sh2);
  if (p.c1.is_zero() || p.c2.is_zero()) throw InternalError("degenerate determinant comparison");
  return p;
}

CoherenceReport check_fock_pentagon(const Correspondence& lij, const Correspondence& ljk, const Correspondence& lkl,
                                    const Correspondence& llm, const CoherenceOptions& opt) {
  // spaces 0..4 = i, j, k, l, m
  std::map<std::pair<int, int>, Correspondence> c;
  c[{0, 1}] = lij;
  c[{1, 2}] = ljk;
  c[{2, 3}] = lkl;
  c[{3, 4}] = llm;
  for (int len = 2; len <= 4; ++len)
    for (int a = 0; a + len <= 4; ++a) c[{a, a + len}] = compose_corr(c.at({a, a + 1}), c.at({a + 1, a + len}));
  auto phi = [&](int a, int b, int cc, int d) {
    return phi_iso(c.at({a, b}), c.at({b, cc}), c.at({cc, d})).backward();
  };
  auto one = [](const Scalar& s) { return Matrix::diag({s}); };
  int p012 = pf_kernel(c.at({0, 1}), c.at({1, 2})).dim() % 2;
  int p234 = pf_kernel(c.at({2, 3}), c.at({3, 4})).dim() % 2;
  Scalar swap = opt.koszul ? sign_of(p012 * p234) : Scalar(1);

  Diagram d;
  d.id = "fock-pentagon";
  int tr = d.add_node("Pf(ij,jk) Pf(ik,kl) Pf(il,lm)", 1);
  int tl = d.add_node("Pf(jk,kl) Pf(ij,jl) Pf(il,lm)", 1);
  int le = d.add_node("Pf(jk,kl) Pf(jl,lm) Pf(ij,jm)", 1);
  int r1 = d.add_node("Pf(ij,jk) Pf(kl,lm) Pf(ik,km)", 1);
  int r2 = d.add_node("Pf(kl,lm) Pf(ij,jk) Pf(ik,km)", 1);
  int bo = d.add_node("Pf(kl,lm) Pf(jk,km) Pf(ij,jm)", 1);
  int e1 = d.add_edge("phi_ijkl x id", tr, tl, one(phi(0, 1, 2, 3)));
  int e2 = d.add_edge("id x phi_iklm", tr, r1, one(phi(0, 2, 3, 4)));
  int e3 = d.add_edge("swap", r1, r2, one(swap));
  int e4 = d.add_edge("id x phi_ijkm", r2, bo, one(phi(0, 1, 2, 4)));
  int e5 = d.add_edge("id x phi_ijlm", tl, le, one(phi(0, 1, 3, 4)));
  int e6 = d.add_edge("phi_jklm x id", le, bo, one(phi(1, 2, 3, 4)));
  d.pairs.push_back({DiagramPath{tr, {e1, e5, e6}}, DiagramPath{tr, {e2, e3, e4}}});
  return check_diagram(d);
}

CoherenceReport check_fock_mixed(const Correspondence& lij, const Correspondence& ljk, const Correspondence& lkl,
                                 const CoherenceOptions& opt) {
  const std::string id = "fock-mixed";
  auto lik = compose_corr(lij, ljk);
  auto ljl = compose_corr(ljk, lkl);
  auto lil = compose_corr(lik, lkl);
  if (lil.lag != compose_corr(lij, ljl).lag) return failed_report(id, "composition is not associative");

  auto fij = fock_bimodule(lij, opt.kappa), fjk = fock_bimodule(ljk, opt.kappa), fkl = fock_bimodule(lkl, opt.kappa);
  auto fik = fock_bimodule(lik, opt.kappa), fjl = fock_bimodule(ljl, opt.kappa), fil = fock_bimodule(lil, opt.kappa);
  for (const auto* f : {&fij, &fjk, &fkl, &fik, &fjl, &fil})
    if (!check_module_axiom(f->fock)) return failed_report(id, "Fock module axiom fails");

  LambdaIso l_ijk, l_ikl, l_ijl, l_jkl;
  try {
    l_ijk = lambda_iso(lij, ljk, opt.kappa);
    l_ikl = lambda_iso(lik, lkl, opt.kappa);
    l_ijl = lambda_iso(lij, ljl, opt.kappa);
    l_jkl = lambda_iso(ljk, lkl, opt.kappa);
  } catch (const InternalError& e) {
    return failed_report(id, e.what());
  }
  PhiIso ph = phi_iso(lij, ljk, lkl);
  int n1 = l_ijk.parity, n2 = l_ikl.parity, n3 = l_jkl.parity, n4 = l_ijl.parity;
  auto sw = [&](int a, int b) { return opt.koszul ? sign_of(a * b) : Scalar(1); };
  int dil = fil.mod.dim;

  // left column
  auto lb2 = l_ikl.target;                           // F_kl ⊗ F_ik
  auto lb3 = relative_tensor(fkl.mod, l_ijk.source);  // F_kl ⊗ (F_ik ⊗ Pf)
  auto nm = l_ijk.target;                            // F_jk ⊗ F_ij
  auto p_nm = relative_tensor(fkl.mod, nm.mod);
  // right column
  auto rb2 = l_ijl.target;                           // F_jl ⊗ F_ij
  auto rb3 = relative_tensor(l_jkl.source, fij.mod);  // (F_jl ⊗ Pf) ⊗ F_ij
  auto pn = l_jkl.target;                            // F_kl ⊗ F_jk
  auto pn_m = relative_tensor(pn.mod, fij.mod);

  Matrix assoc_l, up_l, assoc_r, up_r, top_assoc;
  try {
    assoc_l = descend(Matrix::identity(lb2.tensor_dim()), lb2, lb3);
    up_l = descend(tensor_maps(Matrix::identity(fkl.mod.dim), l_ijk.matrix, 0, fkl.mod.parity), lb3, p_nm);
    Matrix move(rb2.tensor_dim(), rb2.tensor_dim());
    for (int p = 0; p < rb2.ndim; ++p)
      for (int q = 0; q < rb2.mdim; ++q) move(rb2.pair_index(p, q), rb2.pair_index(p, q)) = sw(rb2.mparity[q], n3);
    assoc_r = descend(move, rb2, rb3);
    up_r = descend(tensor_maps(l_jkl.matrix, Matrix::identity(fij.mod.dim), 0, l_jkl.source.parity), rb3, pn_m);
    top_assoc = associator(pn, pn_m, nm, p_nm);
  } catch (const NotBalanced& e) {
    return failed_report(id, e.what());
  }

  Diagram d;
  d.id = id;
  int rb0 = d.add_node("F_il Pf(jk,kl) Pf(ij,jl)", dil);
  int lb0 = d.add_node("F_il Pf(ij,jk) Pf(ik,kl)", dil);
  int lb1 = d.add_node("F_il Pf(ik,kl) Pf(ij,jk)", dil);
  int nlb2 = d.add_node("(F_kl F_ik) Pf(ij,jk)", lb2.mod.dim);
  int nlb3 = d.add_node("F_kl (F_ik Pf(ij,jk))", lb3.mod.dim);
  int top = d.add_node("F_kl (F_jk F_ij)", p_nm.mod.dim);
  int rb1 = d.add_node("F_il Pf(ij,jl) Pf(jk,kl)", dil);
  int nrb2 = d.add_node("(F_jl F_ij) Pf(jk,kl)", rb2.mod.dim);
  int nrb3 = d.add_node("(F_jl Pf(jk,kl)) F_ij", rb3.mod.dim);
  int top2 = d.add_node("(F_kl F_jk) F_ij", pn_m.mod.dim);

  Matrix id_il = Matrix::identity(dil);
  // λ pairs F with det(K)^∨, on which φ acts by the inverse transpose
  int a0 = d.add_edge("id x phi", rb0, lb0, id_il.scaled(ph.backward()));
  int a1 = d.add_edge("swap", lb0, lb1, id_il.scaled(sw(n1, n2)));
  int a2 = d.add_edge("lambda_ikl x id", lb1, nlb2, l_ikl.matrix);
  int a3 = d.add_edge("assoc", nlb2, nlb3, assoc_l);
  int a4 = d.add_edge("id x lambda_ijk", nlb3, top, up_l);
  int b0 = d.add_edge("swap", rb0, rb1, id_il.scaled(sw(n3, n4)));
  int b1 = d.add_edge("lambda_ijl x id", rb1, nrb2, l_ijl.matrix);
  int b2 = d.add_edge("assoc", nrb2, nrb3, assoc_r);
  int b3 = d.add_edge("lambda_jkl x id", nrb3, top2, up_r);
  int b4 = d.add_edge("assoc", top2, top, top_assoc);
  d.pairs.push_back({DiagramPath{rb0, {a0, a1, a2, a3, a4}}, DiagramPath{rb0, {b0, b1, b2, b3, b4}}});
  return check_diagram(d);
}

}  // namespace cf
