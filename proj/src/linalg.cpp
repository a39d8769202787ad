#include "cf/linalg.hpp"

#include "cf/errors.hpp"

namespace cf {

Subspace canonicalize_subspace(const Matrix& rows, int ambient) {
  if (rows.cols() != ambient && !(rows.rows() == 0))
    throw InvalidInput("subspace rows have width " + std::to_string(rows.cols()) + ", ambient is " +
                       std::to_string(ambient));
  RowReducer r(ambient);
  for (auto& row : rows.sparse_rows()) r.add(std::move(row));
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = r.rref_matrix();
  s.pivots_ = r.pivots();
  return s;
}

Subspace span_of(const std::vector<Vec>& vs, int ambient) {
  for (const auto& v : vs)
    if (static_cast<int>(v.size()) != ambient) throw InvalidInput("vector length differs from ambient");
  return canonicalize_subspace(Matrix::from_rows(vs, ambient), ambient);
}

Subspace Subspace::zero(int ambient) { return canonicalize_subspace(Matrix(0, ambient), ambient); }
Subspace Subspace::full(int ambient) { return canonicalize_subspace(Matrix::identity(ambient), ambient); }

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw InvalidInput("vector length differs from ambient");
  Vec r(v);
  for (int k = 0; k < dim(); ++k) {
    Scalar c = r[pivots_[k]];
    if (c.is_zero()) continue;
    for (int j = 0; j < ambient_; ++j)
      if (!basis_(k, j).is_zero()) r[j].sub_mul(c, basis_(k, j));
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& u) const {
  if (u.ambient() != ambient_) return false;
  for (int k = 0; k < u.dim(); ++k)
    if (!contains(u.vec(k))) return false;
  return true;
}

Vec Subspace::coords(const Vec& v) const {
  if (!contains(v)) throw InvalidInput("vector not in subspace");
  Vec c(dim());
  for (int k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
  return c;
}

Matrix Subspace::coord_map() const {
  Matrix m(dim(), ambient_);
  for (int k = 0; k < dim(); ++k) m(k, pivots_[k]) = 1;
  return m;
}

std::pair<Subspace, Subspace> kernel_image(const Matrix& f) { return {kernel(f), image(f)}; }

Subspace kernel(const Matrix& f) { return span_of(nullspace(f), f.cols()); }

Subspace image(const Matrix& f) { return canonicalize_subspace(f.transpose(), f.rows()); }

Subspace image_of(const Matrix& f, const Subspace& s) {
  if (f.cols() != s.ambient()) throw InvalidInput("map domain differs from subspace ambient");
  return canonicalize_subspace((f * s.basis().transpose()).transpose(), f.rows());
}

Subspace preimage(const Matrix& f, const Subspace& s) {
  if (f.rows() != s.ambient()) throw InvalidInput("map codomain differs from subspace ambient");
  // x with f x ∈ s: kernel of (quotient projection)∘f.
  Quotient q = quotient_space(Subspace::full(s.ambient()), s);
  return kernel(q.projection * f);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw InvalidInput("ambient mismatch in intersection");
  Matrix incl = a.basis().transpose();
  return image_of(incl, preimage(incl, b));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw InvalidInput("ambient mismatch in sum");
  return canonicalize_subspace(Matrix::vstack(a.basis(), b.basis()), a.ambient());
}

Subspace pullback(const Matrix& f, const Matrix& g) {
  if (f.rows() != g.rows()) throw InvalidInput("pullback maps have different codomains");
  return kernel(Matrix::hstack(f, -g));
}

Quotient quotient_space(const Subspace& v, const Subspace& u) {
  if (!v.contains(u)) throw InvalidInput("quotient by a subspace that is not contained");
  int n = v.dim();
  // U in V-coordinates, reduced.
  RowReducer r(n);
  for (int k = 0; k < u.dim(); ++k) r.add(v.coords(u.vec(k)));
  auto rows = r.rref();
  std::vector<int> piv = r.pivots();
  std::vector<int> index(n, -1);
  Quotient q;
  for (int c = 0, p = 0; c < n; ++c) {
    if (p < static_cast<int>(piv.size()) && piv[p] == c) {
      ++p;
      continue;
    }
    index[c] = static_cast<int>(q.free.size());
    q.free.push_back(c);
  }
  q.dim = static_cast<int>(q.free.size());
  Matrix pv(q.dim, n);  // on V-coordinates
  for (int c : q.free) pv(index[c], c) = 1;
  for (size_t k = 0; k < rows.size(); ++k)
    for (const auto& [c, x] : rows[k])
      if (index[c] >= 0) pv(index[c], piv[k]) = -x;
  q.projection = v.dim() == v.ambient() ? pv : pv * v.coord_map();
  q.section = Matrix(v.ambient(), q.dim);
  for (int i = 0; i < q.dim; ++i) q.section.set_col(i, v.vec(q.free[i]));
  return q;
}

Scalar DetLine::wedge_coord(const std::vector<Vec>& vs) const {
  if (static_cast<int>(vs.size()) != source.dim()) return Scalar(0);
  Matrix m(source.dim(), source.dim());
  for (int i = 0; i < source.dim(); ++i) m.set_row(i, source.coords(vs[i]));
  return det(m);
}

void ShortExactSequence::validate() const {
  if (surj.cols() != inj.rows() && !(surj.cols() == 0 && inj.rows() == 0))
    throw InvalidInput("short exact sequence maps do not compose");
  int a = inj.cols(), b = inj.rows(), c = surj.rows();
  if (rank(inj) != a) throw InvalidInput("short exact sequence: first map not injective");
  if (rank(surj) != c) throw InvalidInput("short exact sequence: second map not surjective");
  if (a + c != b) throw InvalidInput("short exact sequence: dimensions do not add up");
  if (!(surj * inj).is_zero()) throw InvalidInput("short exact sequence: composite not zero");
}

Scalar ses_det_iso(const ShortExactSequence& s, const std::optional<Matrix>& lift_shift) {
  s.validate();
  int a = s.inj.cols(), b = s.inj.rows(), c = s.surj.rows();
  Matrix m(b, b);
  for (int j = 0; j < a; ++j) m.set_col(j, s.inj.col(j));
  for (int l = 0; l < c; ++l) {
    Vec e(c);
    e[l] = 1;
    auto x = solve(s.surj, e);
    if (!x) throw InternalError("surjection has no preimage");
    Vec lift = *x;
    if (lift_shift) lift = lift + s.inj.apply(lift_shift->col(l));
    m.set_col(a + l, lift);
  }
  return det(m);
}

// ---------------------------------------------------------------- diagrams

int Diagram::add_node(std::string name, int dim) {
  nodes.push_back(std::move(name));
  dims.push_back(dim);
  return static_cast<int>(nodes.size()) - 1;
}

int Diagram::add_edge(std::string name, int src, int dst, Matrix map) {
  edges.push_back({std::move(name), src, dst, std::move(map)});
  return static_cast<int>(edges.size()) - 1;
}

static std::string path_name(const Diagram& d, const DiagramPath& p) {
  if (p.edges.empty()) return "id_" + d.nodes.at(p.start);
  std::string s;
  for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it) {
    if (!s.empty()) s += "∘";
    s += d.edges.at(*it).name;
  }
  return s;
}

static int path_end(const Diagram& d, const DiagramPath& p) {
  int at = p.start;
  for (int e : p.edges) {
    const auto& edge = d.edges.at(e);
    if (edge.src != at) throw InvalidInput("path not composable at edge " + edge.name);
    at = edge.dst;
  }
  return at;
}

Matrix compose_path(const Diagram& d, const DiagramPath& p) {
  int at = p.start;
  Matrix m = Matrix::identity(d.dims.at(at));
  for (int e : p.edges) {
    const auto& edge = d.edges.at(e);
    if (edge.src != at) throw InvalidInput("path not composable at edge " + edge.name);
    if (edge.map.cols() != d.dims.at(edge.src) || edge.map.rows() != d.dims.at(edge.dst))
      throw InvalidInput("edge " + edge.name + " has the wrong shape");
    m = edge.map * m;
    at = edge.dst;
  }
  return m;
}

CoherenceReport check_diagram(const Diagram& d) {
  CoherenceReport rep;
  rep.diagram_id = d.id;
  for (const auto& [p, q] : d.pairs) {
    if (p.start != q.start || path_end(d, p) != path_end(d, q))
      throw InvalidInput("paths in diagram " + d.id + " do not share endpoints");
    PairVerdict v;
    v.lhs = path_name(d, p);
    v.rhs = path_name(d, q);
    Matrix a = compose_path(d, p), b = compose_path(d, q);
    for (int i = 0; i < a.rows() && v.commutes; ++i)
      for (int j = 0; j < a.cols(); ++j)
        if (a(i, j) != b(i, j)) {
          v.commutes = false;
          v.witness = EntryWitness{i, j, a(i, j), b(i, j)};
          break;
        }
    if (!v.commutes && rep.commutes) {
      rep.commutes = false;
      rep.failing_pair = static_cast<int>(rep.pairs.size());
    }
    rep.pairs.push_back(std::move(v));
  }
  return rep;
}

CoherenceReport failed_report(std::string id, std::string note) {
  CoherenceReport r;
  r.diagram_id = std::move(id);
  r.commutes = false;
  r.note = std::move(note);
  return r;
}

}  // namespace cf
