#include "cf/fock.hpp"

#include <bit>

#include "cf/errors.hpp"

namespace cf {

Vec FockModule::vacuum() const {
  Vec v(dim());
  v[0] = 1;
  return v;
}

Vec FockModule::basis_top() const {
  Vec v(dim());
  v[dim() - 1] = 1;
  return v;
}

Matrix FockModule::rho(const Vec& v) const {
  const auto& h = *lag.space;
  if (static_cast<int>(v.size()) != h.dim) throw InvalidInput("vector length differs from Fock ambient");
  Vec c = split.apply(v);
  Matrix r(dim(), dim());
  for (int k = 0; k < m; ++k) {
    if (!c[k].is_zero()) r = r + ann[k].scaled(c[k]);
    if (!c[m + k].is_zero()) r = r + cre[k].scaled(c[m + k]);
  }
  return r;
}

FockModule build_fock(const Lagrangian& l, const Scalar& kappa) {
  const auto& h = *l.space;
  auto rep = validate_lagrangian(h, l.sub);
  if (!rep.ok) throw InvalidInput("Fock module of a non-Lagrangian: " + rep.reason);
  FockModule f;
  f.lag = l;
  f.kappa = kappa;
  f.alpha_lag = alpha_of(h, l.sub);
  f.m = l.sub.dim();
  int d = 1 << f.m;
  f.split = inverse(Matrix::vstack(l.sub.basis(), f.alpha_lag.basis()).transpose());
  f.parity.resize(d);
  for (int s = 0; s < d; ++s) f.parity[s] = std::popcount(static_cast<unsigned>(s)) % 2;
  Matrix g = h.gram();
  for (int k = 0; k < f.m; ++k) {
    Matrix c(d, d);
    for (int s = 0; s < d; ++s) {
      if (s & (1 << k)) continue;
      int below = std::popcount(static_cast<unsigned>(s & ((1 << k) - 1)));
      c(s | (1 << k), s) = sign_of(below);
    }
    f.cre.push_back(std::move(c));
  }
  for (int k = 0; k < f.m; ++k) {
    Vec lk = l.sub.vec(k);
    Matrix a(d, d);
    for (int s = 0; s < d; ++s) {
      int pos = 0;
      for (int j = 0; j < f.m; ++j) {
        if (!(s & (1 << j))) continue;
        // (−1)^{pos} κ b(l_k, y_j) on the wedge with y_j removed
        Scalar bb = dot(lk, g.apply(f.alpha_lag.vec(j)));
        if (!bb.is_zero()) a(s & ~(1 << j), s) += sign_of(pos) * kappa * bb;
        ++pos;
      }
    }
    f.ann.push_back(std::move(a));
  }
  return f;
}

Vec fock_act(const FockModule& f, const Vec& v, const Vec& w) {
  if (static_cast<int>(w.size()) != f.dim()) throw InvalidInput("Fock vector has the wrong length");
  return f.act(v, w);
}

bool check_module_axiom(const FockModule& f, const std::vector<Vec>& samples) {
  Matrix id = Matrix::identity(f.dim());
  for (const auto& v : samples) {
    Matrix r = f.rho(v);
    if (r * r != id.scaled(-bilinear_form(*f.lag.space, v, v))) return false;
  }
  return true;
}

bool check_module_axiom(const FockModule& f) {
  int n = f.lag.space->dim;
  std::vector<Vec> probes;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Vec v(n);
      v[a] += 1;
      v[b] += 1;
      probes.push_back(v);
    }
  return check_module_axiom(f, probes);
}

FockBimodule fock_bimodule(const Correspondence& c, const Scalar& kappa) {
  FockBimodule fb;
  fb.corr = c;
  fb.fock = build_fock(Lagrangian{c.ambient, c.lag}, kappa);
  int ni = c.source->dim, nj = c.target->dim;
  auto& mod = fb.mod;
  mod.left = build_clifford(c.target).alg;
  mod.right = build_clifford(c.source).alg;
  mod.dim = fb.fock.dim();
  mod.parity = fb.fock.parity;
  Matrix sign(mod.dim, mod.dim);
  for (int s = 0; s < mod.dim; ++s) sign(s, s) = sign_of(mod.parity[s]);
  for (int k = 0; k < nj; ++k) {
    Vec v(ni + nj);
    v[ni + k] = 1;
    mod.lgen.push_back(fb.fock.rho(v));
  }
  for (int k = 0; k < ni; ++k) {
    Vec v(ni + nj);
    v[k] = 1;
    mod.rgen.push_back(-(fb.fock.rho(v) * sign));
  }
  return fb;
}

}  // namespace cf
