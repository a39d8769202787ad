#include "cf/fixtures.hpp"

namespace cf {

namespace {

Fixtures make() {
  Fixtures f;
  Scalar i = Scalar::i();
  f.r2 = make_space(Field::Q, Matrix::diag({Scalar(1), Scalar(-1)}), "FIX-R2");
  f.c1 = make_space(Field::Qi, Matrix::identity(1), "FIX-C1");
  f.c2 = make_space(Field::Qi, Matrix::identity(2), "FIX-C2");
  f.zero_q = make_space(Field::Q, Matrix(0, 0), "0");
  f.zero_qi = make_space(Field::Qi, Matrix(0, 0), "0");
  f.l_r = span_of({{1, 1}}, 2);
  f.l_plus = span_of({{1, i}}, 2);
  f.l_minus = span_of({{1, -i}}, 2);
  f.g = Matrix::from_rows({{Scalar::frac(5, 3), Scalar(0, mpq_class(4, 3))},
                           {Scalar(0, mpq_class(-4, 3)), Scalar::frac(5, 3)}},
                          2);
  f.graph_g = graph_corr(f.c2, f.g);
  f.graph_ginv = graph_corr(f.c2, inverse(f.g));
  Matrix lm = f.l_minus.basis(), lp = f.l_plus.basis();
  f.p1 = make_correspondence(f.c2, f.c2, canonicalize_subspace(Matrix::block_diag(lm, lp), 4));
  f.p2 = make_correspondence(f.c2, f.c2, canonicalize_subspace(Matrix::block_diag(lp, lp), 4));
  return f;
}

}  // namespace

const Fixtures& fixtures() {
  static const Fixtures f = make();
  return f;
}

}  // namespace cf
