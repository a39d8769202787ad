#pragma once

// Clifford products by brute force in the tensor algebra: span every relation
// instance x·(e_i e_j + e_j e_i + 2 G_ij)·y up to a length bound, eliminate the
// non-normal words, and read off the normal form of a concatenated word.

#include <map>
#include <stdexcept>
#include <vector>

#include "cf/matrix.hpp"

namespace oracle {

using Word = std::vector<int>;
using Row = std::map<Word, cf::Scalar>;

inline bool normal(const Word& w) {
  for (size_t k = 1; k < w.size(); ++k)
    if (w[k - 1] >= w[k]) return false;
  return true;
}

// non-normal words above normal ones, then longer above shorter, then lex
inline bool above(const Word& a, const Word& b) {
  bool na = normal(a), nb = normal(b);
  if (na != nb) return nb;
  if (a.size() != b.size()) return a.size() > b.size();
  return a > b;
}

class TensorReducer {
 public:
  TensorReducer(const cf::Matrix& g, int max_len) : n_(g.rows()) {
    std::vector<std::vector<Word>> by_len(max_len + 1);
    by_len[0].push_back({});
    for (int l = 1; l <= max_len; ++l)
      for (const auto& w : by_len[l - 1])
        for (int k = 0; k < n_; ++k) {
          Word x = w;
          x.push_back(k);
          by_len[l].push_back(x);
        }
    for (int lx = 0; lx + 2 <= max_len; ++lx)
      for (int ly = 0; lx + ly + 2 <= max_len; ++ly)
        for (const auto& x : by_len[lx])
          for (const auto& y : by_len[ly])
            for (int i = 0; i < n_; ++i)
              for (int j = i; j < n_; ++j) {
                Row r;
                Word a = x, b = x, c = x;
                a.push_back(i), a.push_back(j);
                b.push_back(j), b.push_back(i);
                for (int t : y) a.push_back(t), b.push_back(t), c.push_back(t);
                add(r, a, cf::Scalar(1));
                add(r, b, cf::Scalar(1));
                add(r, c, cf::Scalar(2) * g(i, j));
                insert(std::move(r));
              }
  }

  // Normal form of the word, as {sorted word: coefficient}.
  Row reduce(const Word& w) const {
    Row r{{w, cf::Scalar(1)}};
    reduce_row(r);
    for (const auto& [k, c] : r)
      if (!normal(k)) throw std::logic_error("oracle could not reduce a word");
    return r;
  }

 private:
  static void add(Row& r, const Word& w, const cf::Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = r.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) r.erase(it);
    }
  }

  static const Word& top(const Row& r) {
    const Word* best = &r.begin()->first;
    for (const auto& [k, c] : r)
      if (above(k, *best)) best = &k;
    return *best;
  }

  void reduce_row(Row& r) const {
    for (;;) {
      const Word* hit = nullptr;
      for (const auto& [k, c] : r)
        if (!normal(k) && pivots_.count(k) && (!hit || above(k, *hit))) hit = &k;
      if (!hit) return;
      Word p = *hit;
      cf::Scalar c = r.at(p);
      for (const auto& [k, v] : pivots_.at(p)) add(r, k, -(c * v));
    }
  }

  void insert(Row r) {
    reduce_row(r);
    if (r.empty()) return;
    Word p = top(r);
    // a relation among normal words would contradict the PBW basis
    if (normal(p)) throw std::logic_error("normal words are dependent");
    cf::Scalar inv = r.at(p).inv();
    for (auto& [k, v] : r) v *= inv;
    pivots_.emplace(p, std::move(r));
  }

  int n_;
  std::map<Word, Row> pivots_;
};

// Product e_S · e_T by the oracle, as a dense vector over bitmask indices.
inline cf::Vec product(const TensorReducer& red, int n, int s, int t) {
  Word w;
  for (int k = 0; k < n; ++k)
    if (s & (1 << k)) w.push_back(k);
  for (int k = 0; k < n; ++k)
    if (t & (1 << k)) w.push_back(k);
  cf::Vec out(1 << n);
  for (const auto& [k, c] : red.reduce(w)) {
    int mask = 0;
    for (int x : k) mask |= 1 << x;
    out[mask] += c;
  }
  return out;
}

}  // namespace oracle
