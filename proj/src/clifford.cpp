#include "cf/clifford.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "cf/errors.hpp"

namespace cf {

namespace {

using Elem = std::map<int, Scalar>;

void add_to(Elem& e, int mask, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = e.emplace(mask, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

struct Rewriter {
  const Matrix& g;
  std::map<std::pair<int, int>, Elem> memo;

  // e_S · e_k in normal form.
  const Elem& times_gen(int s, int k) {
    auto key = std::make_pair(s, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Elem out;
    if (s == 0) {
      out[1 << k] = Scalar(1);
    } else {
      int top = 31 - std::countl_zero(static_cast<unsigned>(s));
      int rest = s & ~(1 << top);
      if (top < k) {
        out[s | (1 << k)] = Scalar(1);
      } else if (top == k) {
        // e_k e_k = −b(e_k, e_k)
        add_to(out, rest, -g(k, k));
      } else {
        // e_rest e_top e_k = −(e_rest e_k) e_top − 2 b(e_top, e_k) e_rest
        Elem first = times_gen(rest, k);
        for (const auto& [m, c] : first) {
          Elem second = times_gen(m, top);
          for (const auto& [m2, c2] : second) add_to(out, m2, -(c * c2));
        }
        add_to(out, rest, Scalar(-2) * g(top, k));
      }
    }
    return memo[key] = std::move(out);
  }
};

std::mutex cache_mutex;
std::map<std::string, AlgPtr> cache;

std::string gram_key(Field f, const Matrix& g) {
  std::string k = field_name(f);
  k += ":" + std::to_string(g.rows());
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) k += "," + g(i, j).str();
  return k;
}

}  // namespace

AlgPtr clifford_from_gram(Field f, const Matrix& g) {
  if (!g.is_square() || g != g.transpose()) throw InvalidInput("Clifford algebra needs a symmetric form");
  std::string key = gram_key(f, g);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  int n = g.rows();
  if (n > 12) throw Unsupported("Clifford algebra of a space of dimension > 12");
  int d = 1 << n;
  auto a = std::make_shared<SuperAlgebra>();
  a->field = f;
  a->name = "Cl" + std::to_string(n);
  a->dim = d;
  a->parity.resize(d);
  for (int s = 0; s < d; ++s) a->parity[s] = std::popcount(static_cast<unsigned>(s)) % 2;
  a->unit.assign(d, Scalar(0));
  a->unit[0] = 1;
  Rewriter rw{g, {}};
  a->mul.assign(d, std::vector<SparseVec>(d));
  for (int s = 0; s < d; ++s)
    for (int t = 0; t < d; ++t) {
      Elem cur{{s, Scalar(1)}};
      for (int k = 0; k < n; ++k) {
        if (!(t & (1 << k))) continue;
        Elem next;
        for (const auto& [m, c] : cur)
          for (const auto& [m2, c2] : rw.times_gen(m, k)) add_to(next, m2, c * c2);
        cur = std::move(next);
      }
      SparseVec sv(cur.begin(), cur.end());
      a->mul[s][t] = std::move(sv);
    }
  for (int k = 0; k < n; ++k) a->gens.push_back(1 << k);
  a->words.resize(d);
  for (int s = 0; s < d; ++s)
    for (int k = 0; k < n; ++k)
      if (s & (1 << k)) a->words[s].gens.push_back(1 << k);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(key, a).first->second;
}

CliffordAlgebra build_clifford(const SpacePtr& h) {
  CliffordAlgebra c;
  c.space = h;
  c.alg = clifford_from_gram(h->field, h->gram());
  int n = h->dim;
  c.gamma = Matrix(1 << n, n);
  for (int k = 0; k < n; ++k) c.gamma(1 << k, k) = 1;
  return c;
}

Vec clifford_multiply(const CliffordAlgebra& c, const Vec& x, const Vec& y) { return c.alg->multiply(x, y); }

AlgebraIso extend_from_generators(const AlgPtr& src, const AlgPtr& tgt, const std::vector<Vec>& gen_images) {
  if (gen_images.size() != src->gens.size()) throw InvalidInput("one image per generator required");
  AlgebraIso iso{src, tgt, Matrix(tgt->dim, src->dim)};
  for (int a = 0; a < src->dim; ++a) {
    const auto& w = src->words[a];
    Vec img = tgt->unit;
    for (int g : w.gens) {
      size_t pos = std::find(src->gens.begin(), src->gens.end(), g) - src->gens.begin();
      img = tgt->multiply(img, gen_images[pos]);
    }
    iso.map.set_col(a, scale(w.coeff.inv(), img));
  }
  // unital, even, multiplicative, bijective
  if (iso.map.apply(src->unit) != tgt->unit) throw InternalError("algebra map is not unital");
  for (int a = 0; a < src->dim; ++a) {
    int p = 0;
    Vec col = iso.map.col(a);
    if (!is_homogeneous(col, tgt->parity, &p) || (!is_zero(col) && p != src->parity[a]))
      throw InternalError("algebra map does not preserve parity");
  }
  for (int a = 0; a < src->dim; ++a)
    for (int b = 0; b < src->dim; ++b) {
      Vec lhs = iso.map.apply(to_dense(src->mul[a][b], src->dim));
      Vec rhs = tgt->multiply(iso.map.col(a), iso.map.col(b));
      if (lhs != rhs) throw InternalError("algebra map is not multiplicative");
    }
  if (!iso.map.is_square() || det(iso.map).is_zero()) throw InternalError("algebra map is not bijective");
  return iso;
}

AlgebraIso iso_opposite(const SpacePtr& h) {
  auto src = build_clifford(negate(*h)).alg;
  auto tgt = opposite(*build_clifford(h).alg);
  std::vector<Vec> imgs;
  for (int k = 0; k < h->dim; ++k) imgs.push_back(tgt->basis_vec(1 << k));
  return extend_from_generators(src, tgt, imgs);
}

AlgebraIso iso_direct_sum(const SpacePtr& h, const SpacePtr& hprime) {
  auto src = build_clifford(direct_sum(*h, *hprime)).alg;
  auto a = build_clifford(h).alg;
  auto b = build_clifford(hprime).alg;
  auto tgt = graded_tensor(*a, *b);
  std::vector<Vec> imgs;
  for (int k = 0; k < h->dim; ++k) imgs.push_back(tgt->basis_vec((1 << k) * b->dim));
  for (int k = 0; k < hprime->dim; ++k) imgs.push_back(tgt->basis_vec(1 << k));
  return extend_from_generators(src, tgt, imgs);
}

}  // namespace cf
