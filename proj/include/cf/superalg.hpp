#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cf/linalg.hpp"

namespace cf {

// Finite-dimensional Z/2-graded algebra given by structure constants.
// `gens` are homogeneous basis indices generating the algebra; words[a]
// records e_{g_1}⋯e_{g_k} = coeff · e_a, which lets modules store only the
// generator actions.
struct SuperAlgebra {
  struct Word {
    Scalar coeff{1};
    std::vector<int> gens;  // basis indices
  };

  Field field = Field::Q;
  std::string name;
  int dim = 0;
  std::vector<int> parity;
  std::vector<std::vector<SparseVec>> mul;  // mul[i][j] = e_i e_j
  Vec unit;
  std::vector<int> gens;
  std::vector<Word> words;

  Vec multiply(const Vec& x, const Vec& y) const;
  Vec basis_vec(int i) const;
  Matrix left_mult(const Vec& a) const;   // x ↦ a x
  Matrix right_mult(const Vec& b) const;  // x ↦ x b
  // Every basis element its own generator; used when no presentation is known.
  void set_trivial_presentation();
};

using AlgPtr = std::shared_ptr<const SuperAlgebra>;

AlgPtr ground_field(Field f);
bool same_algebra(const SuperAlgebra& a, const SuperAlgebra& b);
bool is_homogeneous(const Vec& v, const std::vector<int>& parity, int* par = nullptr);

struct Violation {
  std::string what;
  std::vector<int> where;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
  void fail(std::string what, std::vector<int> where = {});
};

ValidationReport validate_superalgebra(const SuperAlgebra& a);
AlgPtr graded_tensor(const SuperAlgebra& a, const SuperAlgebra& b);
AlgPtr opposite(const SuperAlgebra& a);

// (left, right)-bimodule. lgen[k] is the matrix of m ↦ g·m for the k-th
// generator of `left`; rgen[k] the matrix of m ↦ m·g for `right`.
struct SuperBimodule {
  AlgPtr left;
  AlgPtr right;
  int dim = 0;
  std::vector<int> parity;
  std::vector<Matrix> lgen;
  std::vector<Matrix> rgen;

  Matrix left_basis(int a) const;
  Matrix right_basis(int b) const;
  Matrix left_elem(const Vec& a) const;
  Matrix right_elem(const Vec& b) const;
};

SuperBimodule regular_bimodule(const AlgPtr& a);
ValidationReport validate_bimodule(const SuperBimodule& m);
// M ⊗ (line of parity p): parities shift by p, right actions pick up (−1)^{|b|p}.
SuperBimodule shift(const SuperBimodule& m, int p);
SuperBimodule direct_sum(const SuperBimodule& a, const SuperBimodule& b);

// N ⊗_B M together with the data needed to push maps through the quotient.
// Tensor index of n_p ⊗ m_q is p·mdim + q.
struct RelTensor {
  SuperBimodule mod;
  int ndim = 0;
  int mdim = 0;
  std::vector<int> nparity;
  std::vector<int> mparity;
  Subspace balancing;
  std::vector<int> free;  // quotient basis element k is the class of e_{free[k]}
  Matrix proj;            // dim x (ndim·mdim)
  Matrix sect;            // (ndim·mdim) x dim

  int tensor_dim() const { return ndim * mdim; }
  int pair_index(int p, int q) const { return p * mdim + q; }
  Vec class_of(int p, int q) const { return proj.col(pair_index(p, q)); }
};

RelTensor relative_tensor(const SuperBimodule& n, const SuperBimodule& m);

// (f⊗g)(n⊗m) = (−1)^{|g||n|} f(n)⊗g(m) on plain tensors; nparity is the
// grading of the source of f.
Matrix tensor_maps(const Matrix& f, const Matrix& g, int gpar, const std::vector<int>& nparity);

// Induced map on quotients: tgt.proj · x · src.sect, after checking that x
// sends the balancing subspace of src into that of tgt (NotBalanced otherwise).
Matrix descend(const Matrix& x, const RelTensor& src, const RelTensor& tgt);
// Same with a plain target.
Matrix descend(const Matrix& x, const RelTensor& src);
// x composed with the quotient map: plain source into tgt.
Matrix into_quotient(const Matrix& x, const RelTensor& tgt);

// (P⊗N)⊗M → P⊗(N⊗M) built from representatives.
//   pn = P⊗N, pn_m = (P⊗N)⊗M, nm = N⊗M, p_nm = P⊗(N⊗M).
Matrix associator(const RelTensor& pn, const RelTensor& pn_m, const RelTensor& nm, const RelTensor& p_nm);

struct HomSpace {
  int source_dim = 0;
  int target_dim = 0;
  std::vector<Matrix> even_basis;
  std::vector<Matrix> odd_basis;

  int total_dim() const { return static_cast<int>(even_basis.size() + odd_basis.size()); }
  // Parity of a one-dimensional space.
  int line_parity() const { return odd_basis.empty() ? 0 : 1; }
  const Matrix& line_generator() const { return odd_basis.empty() ? even_basis.at(0) : odd_basis.at(0); }
};

// Graded homs: φ(a m b) = (−1)^{|φ||a|} a φ(m) b.
HomSpace bimodule_hom_space(const SuperBimodule& m, const SuperBimodule& n);
// Only one parity.
std::vector<Matrix> bimodule_homs(const SuperBimodule& m, const SuperBimodule& n, int parity);
bool is_bimodule_hom(const Matrix& f, int parity, const SuperBimodule& m, const SuperBimodule& n);

// c with x = c·basis, or nullopt when x is not a multiple.
std::optional<Scalar> proportionality(const Matrix& x, const Matrix& basis);

struct InvertibilityReport {
  bool invertible = false;
  int dual_dim = 0;
  int ev_source_dim = 0;
  int ev_rank = 0;
  int coev_source_dim = 0;
  int coev_rank = 0;
  int target_dim = 0;
  std::string reason;
};

InvertibilityReport invertibility_check(const SuperBimodule& m);

}  // namespace cf
