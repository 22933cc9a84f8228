#pragma once

// Rack 2-cocycles q_{ij} and the associated braiding
//   c(x_i ox x_j) = q_{ij} x_{i>j} ox x_i
// on the free module with basis indexed by the rack carrier.

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nforge/rack.hpp"
#include "nforge/scalars.hpp"

namespace nforge {

struct Cocycle {
  std::vector<std::vector<GaussRational>> q;  // q[i][j]

  const GaussRational& operator()(int i, int j) const { return q[i][j]; }
  int size() const { return static_cast<int>(q.size()); }
};

inline Cocycle constant_cocycle(const Rack& X, const GaussRational& c) {
  if (c.is_zero()) throw std::invalid_argument("cocycle values must be nonzero");
  Cocycle out;
  out.q.assign(X.size, std::vector<GaussRational>(X.size, c));
  return out;
}

// The comparison cocycle on a transposition class: for tau = (i j) with i < j,
// q_{sigma,tau} = +1 if sigma(i) < sigma(j), else -1.
inline Cocycle chi_cocycle(const ClassRack& X) {
  Cocycle out;
  int m = X.rack.size;
  out.q.assign(m, std::vector<GaussRational>(m, GaussRational(0)));
  for (int t = 0; t < m; ++t) {
    auto cyc = X.elems[t].cycles();
    if (cyc.size() != 1 || cyc[0].size() != 2)
      throw std::invalid_argument("comparison cocycle needs a transposition class");
    int i = std::min(cyc[0][0], cyc[0][1]);
    int j = std::max(cyc[0][0], cyc[0][1]);
    for (int s = 0; s < m; ++s)
      out.q[s][t] = GaussRational(X.elems[s](i) < X.elems[s](j) ? 1 : -1);
  }
  return out;
}

struct CocycleReport {
  bool values_nonzero = true;
  bool condition_holds = true;
  std::vector<std::array<int, 3>> failures;  // offending (i, j, k) triples
  bool ok() const { return values_nonzero && condition_holds; }
};

// q_{i,j>k} q_{j,k} == q_{i>j,i>k} q_{i,k} for all triples.
inline CocycleReport check_cocycle(const Rack& X, const Cocycle& q) {
  CocycleReport rep;
  if (q.size() != X.size) throw std::invalid_argument("cocycle size mismatch");
  for (const auto& row : q.q)
    for (const auto& v : row)
      if (v.is_zero()) rep.values_nonzero = false;
  for (int i = 0; i < X.size; ++i)
    for (int j = 0; j < X.size; ++j)
      for (int k = 0; k < X.size; ++k) {
        GaussRational lhs = q(i, X.op(j, k)) * q(j, k);
        GaussRational rhs = q(X.op(i, j), X.op(i, k)) * q(i, k);
        if (lhs != rhs) {
          rep.condition_holds = false;
          if (rep.failures.size() < 16) rep.failures.push_back({i, j, k});
        }
      }
  return rep;
}

// Dual cocycle on the inverse rack: qd_{kl} = q_{k, k >inv l}.
inline Cocycle dual_cocycle(const Rack& X, const Cocycle& q) {
  Cocycle out;
  out.q.assign(X.size, std::vector<GaussRational>(X.size, GaussRational(0)));
  for (int k = 0; k < X.size; ++k)
    for (int l = 0; l < X.size; ++l) out.q[k][l] = q(k, X.op_inv(k, l));
  return out;
}

struct BraidImage {
  GaussRational coeff;
  int left, right;  // basis tensor x_left ox x_right
};

inline BraidImage braid(const Rack& X, const Cocycle& q, int i, int j) {
  return {q(i, j), X.op(i, j), i};
}

// (c ox id)(id ox c)(c ox id) == (id ox c)(c ox id)(id ox c) on basis tensors.
inline bool check_braid_equation(const Rack& X, const Cocycle& q) {
  struct T {
    GaussRational c;
    int a, b, d;
  };
  auto c12 = [&](T t) {
    BraidImage s = braid(X, q, t.a, t.b);
    return T{t.c * s.coeff, s.left, s.right, t.d};
  };
  auto c23 = [&](T t) {
    BraidImage s = braid(X, q, t.b, t.d);
    return T{t.c * s.coeff, t.a, s.left, s.right};
  };
  for (int a = 0; a < X.size; ++a)
    for (int b = 0; b < X.size; ++b)
      for (int d = 0; d < X.size; ++d) {
        T lhs = c12(c23(c12(T{GaussRational(1), a, b, d})));
        T rhs = c23(c12(c23(T{GaussRational(1), a, b, d})));
        if (lhs.a != rhs.a || lhs.b != rhs.b || lhs.d != rhs.d || lhs.c != rhs.c)
          return false;
      }
  return true;
}

// Pairing <x_i ox x_j, y^k ox y^l> = delta_{i,l} delta_{j,k}; the dual braiding
// acts by c*(y^k ox y^l) = qd_{kl} y^{k >inv l} ox y^k. Checks
// <c(x_i ox x_j), -> == <-, c*(y^k ox y^l)> on all basis pairs.
inline bool check_dual_pairing(const Rack& X, const Cocycle& q) {
  Cocycle qd = dual_cocycle(X, q);
  for (int i = 0; i < X.size; ++i)
    for (int j = 0; j < X.size; ++j)
      for (int k = 0; k < X.size; ++k)
        for (int l = 0; l < X.size; ++l) {
          BraidImage ci = braid(X, q, i, j);
          GaussRational lhs =
              (ci.left == l && ci.right == k) ? ci.coeff : GaussRational(0);
          int kl = X.op_inv(k, l);
          GaussRational rhs =
              (i == k && j == kl) ? qd(k, l) : GaussRational(0);
          if (lhs != rhs) return false;
        }
  return true;
}

}  // namespace nforge
