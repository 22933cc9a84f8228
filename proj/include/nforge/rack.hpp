#pragma once

// Finite racks: a carrier {0..size-1} with a binary operation i > j whose left
// translations are bijections satisfying self-distributivity
//   i > (j > k) == (i > j) > (i > k).

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "nforge/perm.hpp"

namespace nforge {

struct Rack {
  int size = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table;  // table[i][j] = i > j
  std::vector<std::vector<int>> inv;    // inv[i][i > j] = j

  int op(int i, int j) const { return table[i][j]; }
  int op_inv(int i, int j) const { return inv[i][j]; }

  // Builds the inverse translations; requires bijective rows.
  void finalize() {
    inv.assign(size, std::vector<int>(size, -1));
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        int v = table[i][j];
        if (v < 0 || v >= size || inv[i][v] != -1)
          throw std::invalid_argument("rack row " + std::to_string(i) +
                                      " is not a bijection");
        inv[i][v] = j;
      }
    }
  }

  int label_index(const std::string& s) const {
    for (int i = 0; i < size; ++i)
      if (labels[i] == s) return i;
    throw std::invalid_argument("unknown rack label: " + s);
  }
};

struct RackReport {
  bool rows_bijective = true;
  bool self_distributive = true;
  std::vector<std::array<int, 3>> failures;  // offending (i, j, k) triples
  bool ok() const { return rows_bijective && self_distributive; }
};

inline RackReport check_rack_axioms(const Rack& X) {
  RackReport rep;
  for (int i = 0; i < X.size && rep.rows_bijective; ++i) {
    std::vector<bool> hit(X.size, false);
    for (int j = 0; j < X.size; ++j) {
      int v = X.table[i][j];
      if (v < 0 || v >= X.size || hit[v]) {
        rep.rows_bijective = false;
        break;
      }
      hit[v] = true;
    }
  }
  if (!rep.rows_bijective) return rep;
  for (int i = 0; i < X.size; ++i)
    for (int j = 0; j < X.size; ++j)
      for (int k = 0; k < X.size; ++k)
        if (X.op(i, X.op(j, k)) != X.op(X.op(i, j), X.op(i, k))) {
          rep.self_distributive = false;
          if (rep.failures.size() < 16) rep.failures.push_back({i, j, k});
        }
  return rep;
}

inline Rack rack_from_table(std::vector<std::string> labels,
                            std::vector<std::vector<int>> table) {
  Rack X;
  X.size = static_cast<int>(table.size());
  X.labels = std::move(labels);
  X.table = std::move(table);
  if (static_cast<int>(X.labels.size()) != X.size)
    throw std::invalid_argument("label count does not match carrier size");
  X.finalize();
  return X;
}

// A conjugacy class of S_n with i > j = s_i s_j s_i^{-1}; elements sorted by
// one-line notation, labels in cycle notation.
struct ClassRack {
  Rack rack;
  int group_n = 0;
  std::vector<Perm> elems;  // elems[i] realizes carrier element i
};

inline ClassRack conjugacy_class_rack(int n, const Perm& rep) {
  ClassRack out;
  out.group_n = n;
  out.elems = conjugacy_class(n, rep);
  int m = static_cast<int>(out.elems.size());
  out.rack.size = m;
  out.rack.labels.reserve(m);
  for (const Perm& p : out.elems) out.rack.labels.push_back(p.cycle_string());
  out.rack.table.assign(m, std::vector<int>(m, -1));
  auto index_of = [&](const Perm& p) {
    auto it = std::lower_bound(out.elems.begin(), out.elems.end(), p);
    if (it == out.elems.end() || !(*it == p))
      throw std::logic_error("conjugate left the class");
    return static_cast<int>(it - out.elems.begin());
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      out.rack.table[i][j] = index_of(conjugate(out.elems[i], out.elems[j]));
  out.rack.finalize();
  return out;
}

// The inverse rack: same carrier, i >' j = translation-inverse of j under i.
inline Rack inverse_rack(const Rack& X) {
  Rack out;
  out.size = X.size;
  out.labels = X.labels;
  out.table = X.inv;
  out.finalize();
  return out;
}

inline bool is_faithful(const Rack& X) {
  for (int i = 0; i < X.size; ++i)
    for (int j = i + 1; j < X.size; ++j)
      if (X.table[i] == X.table[j]) return false;
  return true;
}

inline bool is_indecomposable(const Rack& X) {
  if (X.size == 0) return false;
  std::vector<bool> seen(X.size, false);
  std::vector<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int j = queue.back();
    queue.pop_back();
    for (int i = 0; i < X.size; ++i) {
      int v = X.op(i, j);
      if (!seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  for (bool b : seen)
    if (!b) return false;
  return true;
}

}  // namespace nforge
