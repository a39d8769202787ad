#include "cf/superalg.hpp"

#include <algorithm>

#include "cf/errors.hpp"

namespace cf {

namespace {

std::vector<SparseVec> sparse_cols(const Matrix& m) {
  std::vector<SparseVec> c(m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) c[j].emplace_back(i, m(i, j));
  return c;
}

SparseVec merge(std::vector<std::pair<int, Scalar>> v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& e : v) {
    if (!out.empty() && out.back().first == e.first)
      out.back().second += e.second;
    else
      out.push_back(std::move(e));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second.is_zero(); }), out.end());
  return out;
}

int gen_position(const SuperAlgebra& a, int basis) {
  auto it = std::find(a.gens.begin(), a.gens.end(), basis);
  if (it == a.gens.end()) throw InternalError("word uses a non-generator");
  return static_cast<int>(it - a.gens.begin());
}

// Solutions φ (rows x cols, parity p) of φ·X_k = sign_k·Y_k·φ.
struct Intertwine {
  const Matrix* x;
  const Matrix* y;
  Scalar sign;
};

std::vector<Matrix> solve_intertwiners(int rows, int cols, const std::vector<int>& rowpar,
                                       const std::vector<int>& colpar, int p,
                                       const std::vector<Intertwine>& eqs) {
  std::vector<int> var(static_cast<size_t>(rows) * cols, -1);
  std::vector<std::pair<int, int>> pos;
  for (int r = 0; r < rows; ++r)
    for (int s = 0; s < cols; ++s)
      if (rowpar[r] == (colpar[s] + p) % 2) {
        var[static_cast<size_t>(r) * cols + s] = static_cast<int>(pos.size());
        pos.emplace_back(r, s);
      }
  int nv = static_cast<int>(pos.size());
  RowReducer red(nv);
  for (const auto& eq : eqs) {
    auto xc = sparse_cols(*eq.x);
    auto yr = eq.y->sparse_rows();
    for (int r = 0; r < rows; ++r)
      for (int s = 0; s < cols; ++s) {
        std::vector<std::pair<int, Scalar>> e;
        // (φX)(r,s) = Σ_t φ(r,t) X(t,s)
        for (const auto& [t, x] : xc[s]) {
          int v = var[static_cast<size_t>(r) * cols + t];
          if (v >= 0) e.emplace_back(v, x);
        }
        // (YФ)(r,s) = Σ_t Y(r,t) φ(t,s)
        for (const auto& [t, y] : yr[r]) {
          int v = var[static_cast<size_t>(t) * cols + s];
          if (v >= 0) e.emplace_back(v, -(eq.sign * y));
        }
        if (!e.empty()) red.add(merge(std::move(e)));
      }
    if (red.rank() == nv) break;
  }
  std::vector<Matrix> out;
  for (const auto& sol : red.nullspace()) {
    Matrix m(rows, cols);
    for (int v = 0; v < nv; ++v) m(pos[v].first, pos[v].second) = sol[v];
    out.push_back(std::move(m));
  }
  return out;
}

Vec vectorize(const Matrix& m) {
  Vec v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

Matrix unvectorize(const Vec& v, int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = v[static_cast<size_t>(i) * cols + j];
  return m;
}

}  // namespace

// ---------------------------------------------------------------- algebras

Vec SuperAlgebra::basis_vec(int i) const {
  Vec v(dim);
  v[i] = 1;
  return v;
}

Vec SuperAlgebra::multiply(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw InvalidInput("algebra element has the wrong length");
  Vec r(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& [k, s] : mul[i][j]) r[k].add_mul(c, s);
    }
  }
  return r;
}

Matrix SuperAlgebra::left_mult(const Vec& a) const {
  Matrix m(dim, dim);
  for (int j = 0; j < dim; ++j) m.set_col(j, multiply(a, basis_vec(j)));
  return m;
}

Matrix SuperAlgebra::right_mult(const Vec& b) const {
  Matrix m(dim, dim);
  for (int j = 0; j < dim; ++j) m.set_col(j, multiply(basis_vec(j), b));
  return m;
}

void SuperAlgebra::set_trivial_presentation() {
  gens.clear();
  words.assign(dim, Word{});
  for (int i = 0; i < dim; ++i) {
    gens.push_back(i);
    words[i].gens = {i};
  }
}

static AlgPtr make_field(Field f) {
  auto a = std::make_shared<SuperAlgebra>();
  a->field = f;
  a->name = "K";
  a->dim = 1;
  a->parity = {0};
  a->mul = {{SparseVec{{0, Scalar(1)}}}};
  a->unit = {Scalar(1)};
  a->words = {SuperAlgebra::Word{}};
  return a;
}

AlgPtr ground_field(Field f) {
  static const AlgPtr q = make_field(Field::Q);
  static const AlgPtr qi = make_field(Field::Qi);
  return f == Field::Q ? q : qi;
}

bool same_algebra(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (&a == &b) return true;
  return a.field == b.field && a.dim == b.dim && a.parity == b.parity && a.unit == b.unit && a.mul == b.mul;
}

bool is_homogeneous(const Vec& v, const std::vector<int>& parity, int* par) {
  int seen = -1;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (seen < 0)
      seen = parity[i];
    else if (seen != parity[i])
      return false;
  }
  if (par) *par = seen < 0 ? 0 : seen;
  return true;
}

void ValidationReport::fail(std::string what, std::vector<int> where) {
  ok = false;
  if (violations.size() < 64) violations.push_back({std::move(what), std::move(where)});
}

ValidationReport validate_superalgebra(const SuperAlgebra& a) {
  ValidationReport rep;
  int n = a.dim;
  if (static_cast<int>(a.parity.size()) != n || static_cast<int>(a.mul.size()) != n ||
      static_cast<int>(a.unit.size()) != n) {
    rep.fail("shape");
    return rep;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : a.mul[i][j])
        if (a.parity[k] != (a.parity[i] + a.parity[j]) % 2) rep.fail("grading", {i, j, k});
  for (int i = 0; i < n; ++i) {
    Vec e = a.basis_vec(i);
    if (a.multiply(a.unit, e) != e) rep.fail("left unit", {i});
    if (a.multiply(e, a.unit) != e) rep.fail("right unit", {i});
  }
  // (e_i e_j) e_k = e_i (e_j e_k)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec lhs(n), rhs(n);
        for (const auto& [t, c] : a.mul[i][j])
          for (const auto& [u, d] : a.mul[t][k]) lhs[u].add_mul(c, d);
        for (const auto& [t, c] : a.mul[j][k])
          for (const auto& [u, d] : a.mul[i][t]) rhs[u].add_mul(c, d);
        if (lhs != rhs) rep.fail("associativity", {i, j, k});
      }
  if (!a.words.empty()) {
    for (int g : a.gens)
      if (g < 0 || g >= n) rep.fail("generator index", {g});
    for (int i = 0; i < n && rep.ok; ++i) {
      Vec p = a.unit;
      for (int g : a.words[i].gens) p = a.multiply(p, a.basis_vec(g));
      if (p != scale(a.words[i].coeff, a.basis_vec(i))) rep.fail("presentation word", {i});
    }
  }
  return rep;
}

AlgPtr graded_tensor(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (a.field != b.field) throw InvalidInput("graded tensor of algebras over different fields");
  auto t = std::make_shared<SuperAlgebra>();
  t->field = a.field;
  t->name = a.name + "⊗" + b.name;
  t->dim = a.dim * b.dim;
  t->parity.resize(t->dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j) t->parity[i * b.dim + j] = (a.parity[i] + b.parity[j]) % 2;
  t->mul.assign(t->dim, std::vector<SparseVec>(t->dim));
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j)
      for (int k = 0; k < a.dim; ++k)
        for (int l = 0; l < b.dim; ++l) {
          const auto& ak = a.mul[i][k];
          const auto& bl = b.mul[j][l];
          if (ak.empty() || bl.empty()) continue;
          Scalar s = sign_of(b.parity[j] * a.parity[k]);
          SparseVec r;
          for (const auto& [x, c] : ak)
            for (const auto& [y, d] : bl) r.emplace_back(x * b.dim + y, s * c * d);
          std::sort(r.begin(), r.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
          t->mul[i * b.dim + j][k * b.dim + l] = std::move(r);
        }
  t->unit.assign(t->dim, Scalar(0));
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j) t->unit[i * b.dim + j] = a.unit[i] * b.unit[j];

  auto unit_index = [](const SuperAlgebra& x) {
    int idx = -1;
    for (int i = 0; i < x.dim; ++i) {
      if (x.unit[i].is_zero()) continue;
      if (idx >= 0 || !x.unit[i].is_one()) return -1;
      idx = i;
    }
    return idx;
  };
  int ua = unit_index(a), ub = unit_index(b);
  if (ua >= 0 && ub >= 0 && !a.words.empty() && !b.words.empty()) {
    // (x⊗1)(1⊗y) = x⊗y, so words concatenate.
    for (int g : a.gens) t->gens.push_back(g * b.dim + ub);
    for (int h : b.gens) t->gens.push_back(ua * b.dim + h);
    t->words.resize(t->dim);
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < b.dim; ++j) {
        auto& w = t->words[i * b.dim + j];
        w.coeff = a.words[i].coeff * b.words[j].coeff;
        for (int g : a.words[i].gens) w.gens.push_back(g * b.dim + ub);
        for (int h : b.words[j].gens) w.gens.push_back(ua * b.dim + h);
      }
  } else {
    t->set_trivial_presentation();
  }
  return t;
}

AlgPtr opposite(const SuperAlgebra& a) {
  auto o = std::make_shared<SuperAlgebra>(a);
  o->name = a.name + "^op";
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      SparseVec r = a.mul[j][i];
      if (a.parity[i] && a.parity[j]) for (auto& e : r) e.second = -e.second;
      o->mul[i][j] = std::move(r);
    }
  // Reversed words; the Koszul sign collects one factor per pair.
  for (auto& w : o->words) {
    int odd = 0;
    for (int g : w.gens) odd += a.parity[g];
    long pairs = static_cast<long>(odd) * (odd - 1) / 2;
    w.coeff = w.coeff * sign_of(static_cast<int>(pairs % 2));
    std::reverse(w.gens.begin(), w.gens.end());
  }
  return o;
}

// ---------------------------------------------------------------- bimodules

Matrix SuperBimodule::left_basis(int a) const {
  const auto& w = left->words.at(a);
  Matrix m = Matrix::identity(dim);
  for (int g : w.gens) m = m * lgen[gen_position(*left, g)];
  return w.coeff.is_one() ? m : m.scaled(w.coeff.inv());
}

Matrix SuperBimodule::right_basis(int b) const {
  const auto& w = right->words.at(b);
  Matrix m = Matrix::identity(dim);
  for (int g : w.gens) m = rgen[gen_position(*right, g)] * m;
  return w.coeff.is_one() ? m : m.scaled(w.coeff.inv());
}

Matrix SuperBimodule::left_elem(const Vec& a) const {
  Matrix m(dim, dim);
  for (int i = 0; i < left->dim; ++i)
    if (!a[i].is_zero()) m = m + left_basis(i).scaled(a[i]);
  return m;
}

Matrix SuperBimodule::right_elem(const Vec& b) const {
  Matrix m(dim, dim);
  for (int i = 0; i < right->dim; ++i)
    if (!b[i].is_zero()) m = m + right_basis(i).scaled(b[i]);
  return m;
}

SuperBimodule regular_bimodule(const AlgPtr& a) {
  SuperBimodule m;
  m.left = a;
  m.right = a;
  m.dim = a->dim;
  m.parity = a->parity;
  for (int g : a->gens) {
    m.lgen.push_back(a->left_mult(a->basis_vec(g)));
    m.rgen.push_back(a->right_mult(a->basis_vec(g)));
  }
  return m;
}

ValidationReport validate_bimodule(const SuperBimodule& m) {
  ValidationReport rep;
  const auto& L = *m.left;
  const auto& R = *m.right;
  if (static_cast<int>(m.lgen.size()) != static_cast<int>(L.gens.size()) ||
      static_cast<int>(m.rgen.size()) != static_cast<int>(R.gens.size())) {
    rep.fail("generator count");
    return rep;
  }
  auto graded = [&](const Matrix& x, int p) {
    for (int i = 0; i < m.dim; ++i)
      for (int j = 0; j < m.dim; ++j)
        if (!x(i, j).is_zero() && m.parity[i] != (m.parity[j] + p) % 2) return false;
    return true;
  };
  std::vector<Matrix> lb, rb;
  for (int a = 0; a < L.dim; ++a) lb.push_back(m.left_basis(a));
  for (int b = 0; b < R.dim; ++b) rb.push_back(m.right_basis(b));
  auto combo = [&](const std::vector<Matrix>& basis, const SparseVec& v) {
    Matrix x(m.dim, m.dim);
    for (const auto& [k, c] : v) x = x + basis[k].scaled(c);
    return x;
  };
  Matrix id = Matrix::identity(m.dim);
  Vec lu(L.unit), ru(R.unit);
  Matrix lunit(m.dim, m.dim), runit(m.dim, m.dim);
  for (int a = 0; a < L.dim; ++a)
    if (!lu[a].is_zero()) lunit = lunit + lb[a].scaled(lu[a]);
  for (int b = 0; b < R.dim; ++b)
    if (!ru[b].is_zero()) runit = runit + rb[b].scaled(ru[b]);
  if (lunit != id) rep.fail("left unit");
  if (runit != id) rep.fail("right unit");
  for (size_t k = 0; k < L.gens.size(); ++k) {
    int g = L.gens[k];
    if (!graded(m.lgen[k], L.parity[g])) rep.fail("left grading", {g});
    for (int a = 0; a < L.dim; ++a)
      if (m.lgen[k] * lb[a] != combo(lb, L.mul[g][a])) rep.fail("left associativity", {g, a});
  }
  for (size_t k = 0; k < R.gens.size(); ++k) {
    int g = R.gens[k];
    if (!graded(m.rgen[k], R.parity[g])) rep.fail("right grading", {g});
    // m·(b g) = (m·b)·g
    for (int b = 0; b < R.dim; ++b)
      if (m.rgen[k] * rb[b] != combo(rb, R.mul[b][g])) rep.fail("right associativity", {b, g});
  }
  for (size_t k = 0; k < L.gens.size(); ++k)
    for (size_t l = 0; l < R.gens.size(); ++l)
      if (m.lgen[k] * m.rgen[l] != m.rgen[l] * m.lgen[k])
        rep.fail("actions do not commute", {L.gens[k], R.gens[l]});
  return rep;
}

SuperBimodule shift(const SuperBimodule& m, int p) {
  SuperBimodule s(m);
  if (p % 2 == 0) return s;
  for (auto& x : s.parity) x ^= 1;
  for (size_t k = 0; k < s.rgen.size(); ++k)
    if (m.right->parity[m.right->gens[k]]) s.rgen[k] = -s.rgen[k];
  return s;
}

SuperBimodule direct_sum(const SuperBimodule& a, const SuperBimodule& b) {
  if (!same_algebra(*a.left, *b.left) || !same_algebra(*a.right, *b.right))
    throw InvalidInput("direct sum of bimodules over different algebras");
  SuperBimodule s;
  s.left = a.left;
  s.right = a.right;
  s.dim = a.dim + b.dim;
  s.parity = a.parity;
  s.parity.insert(s.parity.end(), b.parity.begin(), b.parity.end());
  for (size_t k = 0; k < a.lgen.size(); ++k) s.lgen.push_back(Matrix::block_diag(a.lgen[k], b.lgen[k]));
  for (size_t k = 0; k < a.rgen.size(); ++k) s.rgen.push_back(Matrix::block_diag(a.rgen[k], b.rgen[k]));
  return s;
}

// ---------------------------------------------------------------- relative tensor

RelTensor relative_tensor(const SuperBimodule& n, const SuperBimodule& m) {
  if (!same_algebra(*n.right, *m.left)) throw InvalidInput("relative tensor over mismatched algebras");
  RelTensor t;
  t.ndim = n.dim;
  t.mdim = m.dim;
  t.nparity = n.parity;
  t.mparity = m.parity;
  int T = n.dim * m.dim;
  RowReducer red(T);
  for (size_t k = 0; k < n.rgen.size(); ++k) {
    auto rc = sparse_cols(n.rgen[k]);
    auto lc = sparse_cols(m.lgen[k]);
    for (int p = 0; p < n.dim; ++p)
      for (int q = 0; q < m.dim; ++q) {
        std::vector<std::pair<int, Scalar>> e;
        for (const auto& [p2, x] : rc[p]) e.emplace_back(p2 * m.dim + q, x);
        for (const auto& [q2, y] : lc[q]) e.emplace_back(p * m.dim + q2, -y);
        if (!e.empty()) red.add(merge(std::move(e)));
      }
  }
  auto rows = red.rref();
  auto piv = red.pivots();
  Matrix bal(static_cast<int>(rows.size()), T);
  for (size_t k = 0; k < rows.size(); ++k)
    for (const auto& [c, x] : rows[k]) bal(static_cast<int>(k), c) = x;
  t.balancing = canonicalize_subspace(bal, T);

  std::vector<int> index(T, -1);
  for (int c = 0, p = 0; c < T; ++c) {
    if (p < static_cast<int>(piv.size()) && piv[p] == c) {
      ++p;
      continue;
    }
    index[c] = static_cast<int>(t.free.size());
    t.free.push_back(c);
  }
  int d = static_cast<int>(t.free.size());
  t.proj = Matrix(d, T);
  for (int c : t.free) t.proj(index[c], c) = 1;
  for (size_t k = 0; k < rows.size(); ++k)
    for (const auto& [c, x] : rows[k])
      if (index[c] >= 0) t.proj(index[c], piv[k]) = -x;
  t.sect = Matrix(T, d);
  for (int i = 0; i < d; ++i) t.sect(t.free[i], i) = 1;

  auto& mod = t.mod;
  mod.left = n.left;
  mod.right = m.right;
  mod.dim = d;
  mod.parity.resize(d);
  for (int i = 0; i < d; ++i) mod.parity[i] = (n.parity[t.free[i] / m.dim] + m.parity[t.free[i] % m.dim]) % 2;
  for (const auto& lg : n.lgen) {
    auto lc = sparse_cols(lg);
    Matrix a(d, d);
    for (int i = 0; i < d; ++i) {
      int p = t.free[i] / m.dim, q = t.free[i] % m.dim;
      for (const auto& [p2, x] : lc[p])
        for (int r = 0; r < d; ++r) a(r, i).add_mul(x, t.proj(r, p2 * m.dim + q));
    }
    mod.lgen.push_back(std::move(a));
  }
  for (const auto& rg : m.rgen) {
    auto rc = sparse_cols(rg);
    Matrix a(d, d);
    for (int i = 0; i < d; ++i) {
      int p = t.free[i] / m.dim, q = t.free[i] % m.dim;
      for (const auto& [q2, y] : rc[q])
        for (int r = 0; r < d; ++r) a(r, i).add_mul(y, t.proj(r, p * m.dim + q2));
    }
    mod.rgen.push_back(std::move(a));
  }
  return t;
}

Matrix tensor_maps(const Matrix& f, const Matrix& g, int gpar, const std::vector<int>& nparity) {
  if (static_cast<int>(nparity.size()) != f.cols()) throw InvalidInput("tensor_maps: parity length mismatch");
  Matrix k = Matrix::kron(f, g);
  if (gpar % 2 == 0) return k;
  for (int p = 0; p < f.cols(); ++p) {
    if (!nparity[p]) continue;
    for (int q = 0; q < g.cols(); ++q) {
      int c = p * g.cols() + q;
      for (int r = 0; r < k.rows(); ++r)
        if (!k(r, c).is_zero()) k(r, c) = -k(r, c);
    }
  }
  return k;
}

Matrix descend(const Matrix& x, const RelTensor& src, const RelTensor& tgt) {
  if (x.cols() != src.tensor_dim() || x.rows() != tgt.tensor_dim()) throw InvalidInput("descend: shape mismatch");
  Matrix y = tgt.proj * x;
  Matrix u = src.balancing.basis().transpose();
  if (!(y * u).is_zero()) throw NotBalanced("map does not respect the balancing relations");
  return y.select_cols(src.free);
}

Matrix descend(const Matrix& x, const RelTensor& src) {
  if (x.cols() != src.tensor_dim()) throw InvalidInput("descend: shape mismatch");
  Matrix u = src.balancing.basis().transpose();
  if (!(x * u).is_zero()) throw NotBalanced("map does not respect the balancing relations");
  return x.select_cols(src.free);
}

Matrix into_quotient(const Matrix& x, const RelTensor& tgt) {
  if (x.rows() != tgt.tensor_dim()) throw InvalidInput("into_quotient: shape mismatch");
  return tgt.proj * x;
}

Matrix associator(const RelTensor& pn, const RelTensor& pn_m, const RelTensor& nm, const RelTensor& p_nm) {
  if (pn_m.ndim != pn.mod.dim || p_nm.mdim != nm.mod.dim || pn.ndim != p_nm.ndim || pn.mdim != nm.ndim ||
      pn_m.mdim != nm.mdim)
    throw InvalidInput("associator: tensor factors do not line up");
  int d = pn_m.mod.dim;
  Matrix out(p_nm.mod.dim, d);
  for (int k = 0; k < d; ++k) {
    int a = pn_m.free[k] / pn_m.mdim, m = pn_m.free[k] % pn_m.mdim;
    int p = pn.free[a] / pn.mdim, n = pn.free[a] % pn.mdim;
    for (int j = 0; j < nm.mod.dim; ++j) {
      const Scalar& c = nm.proj(j, nm.pair_index(n, m));
      if (c.is_zero()) continue;
      int col = p_nm.pair_index(p, j);
      for (int r = 0; r < out.rows(); ++r) out(r, k).add_mul(c, p_nm.proj(r, col));
    }
  }
  return out;
}

// ---------------------------------------------------------------- homs

std::vector<Matrix> bimodule_homs(const SuperBimodule& m, const SuperBimodule& n, int parity) {
  if (!same_algebra(*m.left, *n.left) || !same_algebra(*m.right, *n.right))
    throw InvalidInput("hom between bimodules over different algebras");
  std::vector<Intertwine> eqs;
  for (size_t k = 0; k < m.lgen.size(); ++k) {
    int ap = m.left->parity[m.left->gens[k]];
    eqs.push_back({&m.lgen[k], &n.lgen[k], sign_of(parity * ap)});
  }
  for (size_t k = 0; k < m.rgen.size(); ++k) eqs.push_back({&m.rgen[k], &n.rgen[k], Scalar(1)});
  return solve_intertwiners(n.dim, m.dim, n.parity, m.parity, parity % 2, eqs);
}

HomSpace bimodule_hom_space(const SuperBimodule& m, const SuperBimodule& n) {
  HomSpace h;
  h.source_dim = m.dim;
  h.target_dim = n.dim;
  h.even_basis = bimodule_homs(m, n, 0);
  h.odd_basis = bimodule_homs(m, n, 1);
  return h;
}

bool is_bimodule_hom(const Matrix& f, int parity, const SuperBimodule& m, const SuperBimodule& n) {
  if (f.rows() != n.dim || f.cols() != m.dim) return false;
  for (int r = 0; r < n.dim; ++r)
    for (int s = 0; s < m.dim; ++s)
      if (!f(r, s).is_zero() && n.parity[r] != (m.parity[s] + parity) % 2) return false;
  for (size_t k = 0; k < m.lgen.size(); ++k) {
    int ap = m.left->parity[m.left->gens[k]];
    if (f * m.lgen[k] != (n.lgen[k] * f).scaled(sign_of(parity * ap))) return false;
  }
  for (size_t k = 0; k < m.rgen.size(); ++k)
    if (f * m.rgen[k] != n.rgen[k] * f) return false;
  return true;
}

std::optional<Scalar> proportionality(const Matrix& x, const Matrix& basis) {
  if (x.rows() != basis.rows() || x.cols() != basis.cols()) return std::nullopt;
  for (int i = 0; i < basis.rows(); ++i)
    for (int j = 0; j < basis.cols(); ++j)
      if (!basis(i, j).is_zero()) {
        Scalar c = x(i, j) / basis(i, j);
        if (basis.scaled(c) != x) return std::nullopt;
        return c;
      }
  if (x.is_zero()) return Scalar(0);
  return std::nullopt;
}

// M is a (B,A)-bimodule. M^∨ = Hom_A(M, A) with (a·f)(m) = a f(m) and
// (f·b)(m) = f(b m); M is invertible iff ev: M^∨⊗_B M → A is bijective and
// coev: M⊗_A M^∨ → End(M), m⊗f ↦ (x ↦ m f(x)), is injective onto the image
// of a faithful B-action.
InvertibilityReport invertibility_check(const SuperBimodule& m) {
  InvertibilityReport rep;
  const auto& A = m.right;
  const auto& B = m.left;
  int da = A->dim, dm = m.dim;

  std::vector<Matrix> ra;
  for (int g : A->gens) ra.push_back(A->right_mult(A->basis_vec(g)));
  std::vector<Intertwine> eqs;
  for (size_t k = 0; k < m.rgen.size(); ++k) eqs.push_back({&m.rgen[k], &ra[k], Scalar(1)});
  std::vector<Vec> sols;
  for (int p = 0; p < 2; ++p)
    for (auto& f : solve_intertwiners(da, dm, A->parity, m.parity, p, eqs)) sols.push_back(vectorize(f));
  Subspace dual = span_of(sols, da * dm);
  int dd = dual.dim();
  rep.dual_dim = dd;
  std::vector<Matrix> fs;
  for (int k = 0; k < dd; ++k) fs.push_back(unvectorize(dual.vec(k), da, dm));

  SuperBimodule mv;
  mv.left = A;
  mv.right = B;
  mv.dim = dd;
  mv.parity.resize(dd);
  for (int k = 0; k < dd; ++k) {
    int piv = dual.pivots()[k];
    mv.parity[k] = (A->parity[piv / dm] + m.parity[piv % dm]) % 2;
  }
  for (int g : A->gens) {
    Matrix la = A->left_mult(A->basis_vec(g));
    Matrix act(dd, dd);
    for (int k = 0; k < dd; ++k) act.set_col(k, dual.coords(vectorize(la * fs[k])));
    mv.lgen.push_back(std::move(act));
  }
  for (const auto& lb : m.lgen) {
    Matrix act(dd, dd);
    for (int k = 0; k < dd; ++k) act.set_col(k, dual.coords(vectorize(fs[k] * lb)));
    mv.rgen.push_back(std::move(act));
  }

  RelTensor vm = relative_tensor(mv, m);
  rep.ev_source_dim = vm.mod.dim;
  rep.target_dim = da;
  Matrix ev(da, vm.mod.dim);
  for (int k = 0; k < vm.mod.dim; ++k) {
    int f = vm.free[k] / dm, q = vm.free[k] % dm;
    ev.set_col(k, fs[f].col(q));
  }
  rep.ev_rank = rank(ev);

  RelTensor mvv = relative_tensor(m, mv);
  rep.coev_source_dim = mvv.mod.dim;
  std::vector<Matrix> rb;
  for (int r = 0; r < da; ++r) rb.push_back(m.right_basis(r));
  Matrix coev(dm * dm, mvv.mod.dim);
  for (int k = 0; k < mvv.mod.dim; ++k) {
    int q = mvv.free[k] / dd, f = mvv.free[k] % dd;
    Matrix e(dm, dm);
    for (int r = 0; r < da; ++r)
      for (int s = 0; s < dm; ++s) {
        const Scalar& c = fs[f](r, s);
        if (c.is_zero()) continue;
        for (int t = 0; t < dm; ++t) e(t, s).add_mul(c, rb[r](t, q));
      }
    coev.set_col(k, vectorize(e));
  }
  rep.coev_rank = rank(coev);
  std::vector<Vec> lvecs;
  for (int b = 0; b < B->dim; ++b) lvecs.push_back(vectorize(m.left_basis(b)));
  Subspace lspan = span_of(lvecs, dm * dm);
  Subspace cimg = image(coev);

  if (rep.ev_source_dim != da || rep.ev_rank != da)
    rep.reason = "evaluation M^∨⊗M → A is not bijective";
  else if (rep.coev_rank != rep.coev_source_dim)
    rep.reason = "coevaluation M⊗M^∨ → End(M) is not injective";
  else if (lspan.dim() != B->dim)
    rep.reason = "left algebra does not act faithfully";
  else if (cimg != lspan)
    rep.reason = "coevaluation image differs from the left action";
  else
    rep.invertible = true;
  return rep;
}

}  // namespace cf
