#include "cf/twist.hpp"

#include "cf/errors.hpp"
#include "cf/random.hpp"

namespace cf {

namespace {

Vec slice(const Vec& v, int off, int n) { return Vec(v.begin() + off, v.begin() + off + n); }

Vec concat(const Vec& a, const Vec& b) {
  Vec v(a);
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

// point of the fibre product with coordinates c, as (w_ij, w_jk)
Vec unfold(const Subspace& fib, const Vec& c) { return fib.basis().transpose().apply(c); }

Vec in_kernel_coords(const Subspace& fib, const Subspace& ker, const Vec& flat) {
  return ker.coords(fib.coords(flat));
}

Matrix one(const Scalar& s) { return Matrix::diag({s}); }

}  // namespace

TwistingLine beta_line(const Span& s) {
  auto rep = validate_span(s);
  if (!rep.ok) throw InvalidInput("twisting line of an invalid span: " + rep.reason);
  return TwistingLine{s, DetLine{span_kernel(s)}};
}

PsiIso psi_iso(const Span& sij, const Span& sjk, Rng* lift_shift) {
  PsiIso p{sij, sjk, compose_spans(sij, sjk), {}, {}};
  Subspace fib = span_fibre(sij, sjk);
  Subspace kij = span_kernel(sij), kjk = span_kernel(sjk), kik = span_kernel(p.sik);
  Subspace k = pf_kernel(span_image(sij), span_image(sjk));
  int wij = sij.w_dim, wjk = sjk.w_dim;
  int ni = sij.source->dim, nj = sij.target->dim;

  Matrix inj(kik.dim(), kjk.dim() + kij.dim());
  for (int r = 0; r < kjk.dim(); ++r) inj.set_col(r, in_kernel_coords(fib, kik, concat(Vec(wij), kjk.vec(r))));
  for (int r = 0; r < kij.dim(); ++r)
    inj.set_col(kjk.dim() + r, in_kernel_coords(fib, kik, concat(kij.vec(r), Vec(wjk))));
  Matrix surj(k.dim(), kik.dim());
  for (int r = 0; r < kik.dim(); ++r) {
    Vec w = slice(unfold(fib, kik.vec(r)), 0, wij);
    Vec a = slice(sij.eta.apply(w), ni, nj);
    surj.set_col(r, k.coords(a));
  }
  p.ses = {inj, surj};
  try {
    p.ses.validate();
  } catch (const InvalidInput& e) {
    throw InternalError(std::string("kernel sequence is not exact: ") + e.what());
  }
  std::optional<Matrix> shift;
  if (lift_shift) {
    Matrix m(inj.cols(), surj.rows());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = random_scalar(sij.ambient->field, *lift_shift);
    shift = m;
  }
  p.scalar = ses_det_iso(p.ses, shift);
  if (p.scalar.is_zero()) throw InternalError("ψ is zero");
  return p;
}

Scalar bracketing_scalar(const Span& sij, const Span& sjk, const Span& skl) {
  Span sjl = compose_spans(sjk, skl), sik = compose_spans(sij, sjk);
  Subspace fjl = span_fibre(sjk, skl), fik = span_fibre(sij, sjk);
  Subspace fl = span_fibre(sij, sjl), fr = span_fibre(sik, skl);
  Subspace kl = span_kernel(compose_spans(sij, sjl)), kr = span_kernel(compose_spans(sik, skl));
  int wij = sij.w_dim, wkl = skl.w_dim;

  std::vector<Vec> left, right;
  for (int r = 0; r < kl.dim(); ++r) {
    Vec v = unfold(fl, kl.vec(r));
    left.push_back(concat(slice(v, 0, wij), unfold(fjl, slice(v, wij, fjl.dim()))));
  }
  for (int r = 0; r < kr.dim(); ++r) {
    Vec v = unfold(fr, kr.vec(r));
    right.push_back(concat(unfold(fik, slice(v, 0, fik.dim())), slice(v, fik.dim(), wkl)));
  }
  int flat = wij + sjk.w_dim + wkl;
  DetLine common{span_of(left, flat)};
  if (span_of(right, flat) != common.source) throw InternalError("the two bracketings have different kernels");
  return common.wedge_coord(right) / common.wedge_coord(left);
}

CoherenceReport check_beta_coherence(const Span& sij, const Span& sjk, const Span& skl, const CoherenceOptions& opt) {
  const std::string id = "beta-hexagon";
  Span sik = compose_spans(sij, sjk), sjl = compose_spans(sjk, skl);
  Scalar psi_ijk, psi_jkl, psi_ijl, psi_ikl, phi, assoc;
  try {
    psi_ijk = psi_iso(sij, sjk).scalar;
    psi_jkl = psi_iso(sjk, skl).scalar;
    psi_ijl = psi_iso(sij, sjl).scalar;
    psi_ikl = psi_iso(sik, skl).scalar;
    phi = phi_iso(span_image(sij), span_image(sjk), span_image(skl)).forward();
    assoc = bracketing_scalar(sij, sjk, skl);
  } catch (const InternalError& e) {
    return failed_report(id, e.what());
  }
  int b_ij = beta_line(sij).parity();
  int pf_jkl = pf_kernel(span_image(sjk), span_image(skl)).dim() % 2;
  Scalar swap = opt.koszul ? sign_of(b_ij * pf_jkl) : Scalar(1);

  Diagram d;
  d.id = id;
  int bot = d.add_node("b_kl b_jk b_ij Pf(jk,kl) Pf(ij,jl)", 1);
  int n3 = d.add_node("b_kl b_jk Pf(jk,kl) b_ij Pf(ij,jl)", 1);
  int n1 = d.add_node("b_jl b_ij Pf(ij,jl)", 1);
  int top = d.add_node("b_il", 1);
  int n5 = d.add_node("b_kl b_jk b_ij Pf(ij,jk) Pf(ik,kl)", 1);
  int n2 = d.add_node("b_kl b_ik Pf(ik,kl)", 1);
  int top_r = d.add_node("b_il'", 1);
  int a0 = d.add_edge("swap", bot, n3, one(swap));
  int a1 = d.add_edge("psi_jkl x id", n3, n1, one(psi_jkl));
  int a2 = d.add_edge("psi_ijl", n1, top, one(psi_ijl));
  int b0 = d.add_edge("id x phi", bot, n5, one(phi));
  int b1 = d.add_edge("id x psi_ijk x id", n5, n2, one(psi_ijk));
  int b2 = d.add_edge("psi_ikl", n2, top_r, one(psi_ikl));
  int b3 = d.add_edge("rebracket", top_r, top, one(assoc));
  d.pairs.push_back({DiagramPath{bot, {a0, a1, a2}}, DiagramPath{bot, {b0, b1, b2, b3}}});
  return check_diagram(d);
}

TwistedFockValue twisted_fock(const Span& s, const Scalar& kappa) {
  TwistedFockValue t;
  t.span = s;
  t.beta = beta_line(s);
  t.fock = fock_bimodule(span_image(s), kappa);
  t.mod = shift(t.fock.mod, t.beta.parity());
  return t;
}

TwistedComposition twisted_composition(const Span& sij, const Span& sjk, const Scalar& kappa) {
  TwistedComposition c;
  Span sik = compose_spans(sij, sjk);
  c.tik = twisted_fock(sik, kappa);
  c.tjk = twisted_fock(sjk, kappa);
  c.tij = twisted_fock(sij, kappa);
  c.target = relative_tensor(c.tjk.mod, c.tij.mod);
  PsiIso psi = psi_iso(sij, sjk);
  LambdaIso lam = lambda_iso(span_image(sij), span_image(sjk), kappa);
  int pk = lam.parity, pjk = c.tjk.beta.parity(), pij = c.tij.beta.parity();

  // β^∨_ik → β^∨_jk β^∨_ij Pf, then Pf moved next to F_ik
  Scalar lead = psi.scalar * sign_of(pk * (pjk + pij));
  // (p ⊗ q) g_jk g_ij ↦ (p g_jk) ⊗ (q g_ij)
  const auto& src = lam.target;
  Matrix move(src.tensor_dim(), src.tensor_dim());
  for (int p = 0; p < src.ndim; ++p)
    for (int q = 0; q < src.mdim; ++q) move(src.pair_index(p, q), src.pair_index(p, q)) = sign_of(src.mparity[q] * pjk);
  c.matrix = descend(move, src, c.target) * lam.matrix.scaled(lead);
  if (!is_bimodule_hom(c.matrix, 0, c.tik.mod, c.target.mod))
    throw InternalError("twisted composition is not a bimodule map");
  if (!c.matrix.is_square() || det(c.matrix).is_zero()) throw InternalError("twisted composition is not invertible");
  return c;
}

CoherenceReport check_twisted_functoriality(const Span& sij, const Span& sjk, const Span& skl,
                                            const CoherenceOptions& opt) {
  const std::string id = "twisted-associativity";
  Span sik = compose_spans(sij, sjk), sjl = compose_spans(sjk, skl);
  TwistedComposition m_ijk, m_ikl, m_jkl, m_ijl;
  Scalar s;
  Matrix up_l, up_r, assoc;
  RelTensor pn_m, p_nm;
  try {
    m_ijk = twisted_composition(sij, sjk, opt.kappa);
    m_ikl = twisted_composition(sik, skl, opt.kappa);
    m_jkl = twisted_composition(sjk, skl, opt.kappa);
    m_ijl = twisted_composition(sij, sjl, opt.kappa);
    s = bracketing_scalar(sij, sjk, skl);
    const auto& tij = m_ijk.tij;
    const auto& tkl = m_jkl.tjk;
    pn_m = relative_tensor(m_jkl.target.mod, tij.mod);
    p_nm = relative_tensor(tkl.mod, m_ijk.target.mod);
    up_l = descend(tensor_maps(m_jkl.matrix, Matrix::identity(tij.mod.dim), 0, m_jkl.tik.mod.parity), m_ijl.target,
                   pn_m);
    up_r = descend(tensor_maps(Matrix::identity(tkl.mod.dim), m_ijk.matrix, 0, tkl.mod.parity), m_ikl.target, p_nm);
    assoc = associator(m_jkl.target, pn_m, m_ijk.target, p_nm);
  } catch (const InternalError& e) {
    return failed_report(id, e.what());
  } catch (const NotBalanced& e) {
    return failed_report(id, e.what());
  }
  if (m_ijl.tik.fock.corr.lag != m_ikl.tik.fock.corr.lag) return failed_report(id, "composition is not associative");
  for (const auto* m : {&m_ijk, &m_ikl, &m_jkl, &m_ijl})
    for (const auto* t : {&m->tik, &m->tjk, &m->tij})
      if (!check_module_axiom(t->fock.fock)) return failed_report(id, "Fock module axiom fails");

  Diagram d;
  d.id = id;
  int dil = m_ikl.tik.mod.dim;
  int tr = d.add_node("TF_il'", dil);
  int tl = d.add_node("TF_il", dil);
  int l1 = d.add_node("TF_jl TF_ij", m_ijl.target.mod.dim);
  int l2 = d.add_node("(TF_kl TF_jk) TF_ij", pn_m.mod.dim);
  int r1 = d.add_node("TF_kl TF_ik", m_ikl.target.mod.dim);
  int top = d.add_node("TF_kl (TF_jk TF_ij)", p_nm.mod.dim);
  // g_R = s g_L on the lines, so 1/s on their duals
  int a0 = d.add_edge("rebracket", tr, tl, Matrix::identity(dil).scaled(s.inv()));
  int a1 = d.add_edge("mu_ijl", tl, l1, m_ijl.matrix);
  int a2 = d.add_edge("mu_jkl x id", l1, l2, up_l);
  int a3 = d.add_edge("assoc", l2, top, assoc);
  int b0 = d.add_edge("mu_ikl", tr, r1, m_ikl.matrix);
  int b1 = d.add_edge("id x mu_ijk", r1, top, up_r);
  d.pairs.push_back({DiagramPath{tr, {a0, a1, a2, a3}}, DiagramPath{tr, {b0, b1}}});
  return check_diagram(d);
}

}  // namespace cf
