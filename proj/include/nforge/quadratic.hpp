#pragma once

// Orbits of the pair dynamics (i, j) -> (i > j, i) on X x X, and the quadratic
// elements b_C spanning the degree-2 kernel of (braiding + id) on admissible
// orbits. Each class is stored through its generating sequence
//   i_1 = j, i_2 = i, i_{h+2} = i_{h+1} > i_h
// started at the lexicographically smallest pair of the orbit.

#include <utility>
#include <vector>

#include "nforge/cocycle.hpp"
#include "nforge/linalg.hpp"
#include "nforge/rack.hpp"
#include "nforge/scalars.hpp"

namespace nforge {

struct QuadClass {
  std::vector<int> seq;  // i_1 .. i_{n(C)}

  int size() const { return static_cast<int>(seq.size()); }

  // The orbit as ordered pairs (i_{h+1}, i_h), h = 1..n(C), cyclically.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    int n = size();
    for (int h = 1; h <= n; ++h) out.emplace_back(seq[h % n], seq[h - 1]);
    return out;
  }
};

inline std::vector<QuadClass> enumerate_classes(const Rack& X) {
  std::vector<QuadClass> out;
  std::vector<bool> seen(static_cast<std::size_t>(X.size) * X.size, false);
  auto flat = [&](int a, int b) { return static_cast<std::size_t>(a) * X.size + b; };
  for (int i = 0; i < X.size; ++i)
    for (int j = 0; j < X.size; ++j) {
      if (seen[flat(i, j)]) continue;
      // walk the orbit, find its lexicographically smallest pair
      std::pair<int, int> start{i, j}, best{i, j}, cur{i, j};
      do {
        seen[flat(cur.first, cur.second)] = true;
        if (cur < best) best = cur;
        cur = {X.op(cur.first, cur.second), cur.first};
      } while (cur != start);
      QuadClass cls;
      cls.seq.push_back(best.second);  // i_1 = j
      cls.seq.push_back(best.first);   // i_2 = i
      for (;;) {
        int next = X.op(cls.seq.back(), cls.seq[cls.seq.size() - 2]);
        std::pair<int, int> p{next, cls.seq.back()};
        if (p == std::make_pair(best.first, best.second)) break;
        cls.seq.push_back(next);
      }
      // the sequence has period n(C): seq holds i_1..i_n with i_{n+1} = i_1
      cls.seq.pop_back();
      out.push_back(std::move(cls));
    }
  return out;
}

inline GaussRational admissibility_product(const QuadClass& c, const Cocycle& q) {
  GaussRational out(1);
  for (auto [a, b] : c.pairs()) out *= q(a, b);
  return out;
}

inline bool is_admissible(const QuadClass& c, const Cocycle& q) {
  return admissibility_product(c, q) == GaussRational(c.size() % 2 ? -1 : 1);
}

// eta_1 = 1, eta_h = (-1)^{h+1} q_{i_2 i_1} q_{i_3 i_2} ... q_{i_h i_{h-1}}.
inline std::vector<GaussRational> etas(const QuadClass& c, const Cocycle& q) {
  std::vector<GaussRational> out{GaussRational(1)};
  GaussRational prod(1);
  for (int h = 2; h <= c.size(); ++h) {
    prod *= q(c.seq[h - 1], c.seq[h - 2]);
    out.push_back(h % 2 ? prod : -prod);
  }
  return out;
}

struct QuadRelation {
  QuadClass cls;
  // coefficient eta_h on the length-2 word (i_{h+1}, i_h)
  std::vector<std::pair<GaussRational, std::pair<int, int>>> terms;
};

inline std::vector<QuadRelation> quadratic_basis(const Rack& X, const Cocycle& q) {
  std::vector<QuadRelation> out;
  for (QuadClass& c : enumerate_classes(X)) {
    if (!is_admissible(c, q)) continue;
    QuadRelation rel;
    auto e = etas(c, q);
    auto ps = c.pairs();
    for (int h = 0; h < c.size(); ++h) rel.terms.emplace_back(e[h], ps[h]);
    rel.cls = std::move(c);
    out.push_back(std::move(rel));
  }
  return out;
}

// (braiding + id) as a size^2 x size^2 matrix over basis tensors x_i ox x_j,
// flattened as i*size + j.
inline Mat<GaussRational> braiding_plus_id(const Rack& X, const Cocycle& q) {
  int N = X.size * X.size;
  Mat<GaussRational> m(N, N);
  for (int i = 0; i < X.size; ++i)
    for (int j = 0; j < X.size; ++j) {
      int col = i * X.size + j;
      BraidImage b = braid(X, q, i, j);
      m.at(b.left * X.size + b.right, col) += b.coeff;
      m.at(col, col) += GaussRational(1);
    }
  return m;
}

// det of (braiding + id) restricted to the span of a class's pair tensors
// equals prod_h q_{i_{h+1} i_h} * (-1)^{n(C)+1} + 1.
inline GaussRational class_restriction_det(const QuadClass& c, const Rack& X,
                                           const Cocycle& q) {
  auto ps = c.pairs();
  int n = c.size();
  auto index_of = [&](std::pair<int, int> p) {
    for (int k = 0; k < n; ++k)
      if (ps[k] == p) return k;
    throw std::logic_error("pair left its class");
  };
  Mat<GaussRational> m(n, n);
  for (int k = 0; k < n; ++k) {
    auto [i, j] = ps[k];
    BraidImage b = braid(X, q, i, j);
    m.at(index_of({b.left, b.right}), k) += b.coeff;
    m.at(k, k) += GaussRational(1);
  }
  return det(std::move(m));
}

}  // namespace nforge
