#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cf/matrix.hpp"

namespace cf {

// Row space of `basis`, kept in RREF so that equality is entrywise.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(int ambient);
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec vec(int k) const { return basis_.row(k); }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& u) const;
  // Coordinates against the RREF rows; v must lie in the subspace.
  Vec coords(const Vec& v) const;
  // dim x ambient matrix sending ambient vectors in the subspace to coordinates.
  Matrix coord_map() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  friend Subspace canonicalize_subspace(const Matrix& rows, int ambient);
  int ambient_ = 0;
  Matrix basis_;
  std::vector<int> pivots_;
};

Subspace canonicalize_subspace(const Matrix& rows, int ambient);
Subspace span_of(const std::vector<Vec>& vs, int ambient);

std::pair<Subspace, Subspace> kernel_image(const Matrix& f);
Subspace kernel(const Matrix& f);
Subspace image(const Matrix& f);
Subspace image_of(const Matrix& f, const Subspace& s);
Subspace preimage(const Matrix& f, const Subspace& s);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
// {(a,b) : f a = g b} inside A ⊕ B.
Subspace pullback(const Matrix& f, const Matrix& g);

struct Quotient {
  int dim = 0;
  std::vector<int> free;  // coordinates of V (pivot order) used as the section
  Matrix projection;      // dim x ambient, kills U, defined on V
  Matrix section;         // ambient x dim, lands in V
};
Quotient quotient_space(const Subspace& v, const Subspace& u);

// det of a subspace, generated by the wedge of its RREF rows.
struct DetLine {
  Subspace source;
  int parity() const { return source.dim() % 2; }
  int dim() const { return source.dim(); }
  // c with v_1 ∧ ... ∧ v_k = c · generator.
  Scalar wedge_coord(const std::vector<Vec>& vs) const;
};

// Maps in coordinates: inj is dim B x dim A, surj is dim C x dim B.
struct ShortExactSequence {
  Matrix inj;
  Matrix surj;
  void validate() const;  // InvalidInput unless exact
};

// c with a_1∧…∧a_p∧c̃_1∧…∧c̃_q = c · (e_1∧…∧e_n) in B. `lift_shift` (dim A x dim C)
// perturbs the lifts by inj·shift; the result must not depend on it.
Scalar ses_det_iso(const ShortExactSequence& s, const std::optional<Matrix>& lift_shift = std::nullopt);

// ---------------------------------------------------------------- diagrams

struct DiagramEdge {
  std::string name;
  int src = 0;
  int dst = 0;
  Matrix map;  // dim dst x dim src
};

// Edges applied first to last; an empty edge list is the identity at `start`.
struct DiagramPath {
  int start = 0;
  std::vector<int> edges;
};

struct Diagram {
  std::string id;
  std::vector<std::string> nodes;
  std::vector<int> dims;
  std::vector<DiagramEdge> edges;
  std::vector<std::pair<DiagramPath, DiagramPath>> pairs;

  int add_node(std::string name, int dim);
  int add_edge(std::string name, int src, int dst, Matrix map);
};

struct EntryWitness {
  int row = 0;
  int col = 0;
  Scalar lhs;
  Scalar rhs;
};

struct PairVerdict {
  std::string lhs;
  std::string rhs;
  bool commutes = true;
  std::optional<EntryWitness> witness;
};

struct CoherenceReport {
  std::string diagram_id;
  bool commutes = true;
  std::vector<PairVerdict> pairs;
  int failing_pair = -1;
  std::string note;  // set when the check failed before any comparison
};

Matrix compose_path(const Diagram& d, const DiagramPath& p);
CoherenceReport check_diagram(const Diagram& d);
// Report for a check that could not be assembled (e.g. a failed upstream invariant).
CoherenceReport failed_report(std::string id, std::string note);

}  // namespace cf
