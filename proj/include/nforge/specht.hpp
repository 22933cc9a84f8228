#pragma once

// Exact matrix models of three S_n representations on the basis
// v_i = e_i - e_n (i < n): the standard (n-1)-dimensional one, its twist by
// the sign character, and the sign character itself.  Matrices are stored for
// the adjacent transpositions s_k = (k, k+1); arbitrary elements come from
// reduced words.

#include <stdexcept>
#include <string>
#include <vector>

#include "nforge/linalg.hpp"
#include "nforge/perm.hpp"
#include "nforge/scalars.hpp"

namespace nforge {

enum class SpechtKind { standard, sign_twist, sign };

inline std::string to_string(SpechtKind k) {
  switch (k) {
    case SpechtKind::standard: return "standard";
    case SpechtKind::sign_twist: return "sign-twist";
    case SpechtKind::sign: return "sign";
  }
  return "?";
}

struct SpechtModule {
  int n = 0;
  SpechtKind kind = SpechtKind::standard;
  int dim = 0;
  std::vector<Mat<GaussRational>> gen;  // gen[k-1] acts for s_k, 1 <= k < n

  // Matrix of an arbitrary permutation: factor into adjacent transpositions
  // and multiply.  reduced_word lists factors left to right, the rightmost
  // acting first, so the matrix product runs in the same order.
  Mat<GaussRational> matrix(const Perm& p) const {
    Mat<GaussRational> m = Mat<GaussRational>::identity(dim);
    for (int k : reduced_word(p)) m = m * gen[k - 1];
    return m;
  }
};

// On the basis v_i = e_i - e_n the permutation action t . v_i = v_{t(i)},
// with v_n read as 0: s_k for k < n-1 swaps two basis vectors, while
// s_{n-1} sends v_{n-1} to -v_{n-1} and adds -v_{n-1} to every other image.
inline SpechtModule specht(int n, SpechtKind kind) {
  int min_n = kind == SpechtKind::sign_twist ? 4 : 3;
  if (n < min_n)
    throw std::invalid_argument("specht: n too small for " + to_string(kind));
  SpechtModule sp;
  sp.n = n;
  sp.kind = kind;
  sp.dim = kind == SpechtKind::sign ? 1 : n - 1;
  for (int k = 1; k < n; ++k) {
    Mat<GaussRational> m = Mat<GaussRational>::identity(sp.dim);
    if (kind == SpechtKind::sign) {
      m.at(0, 0) = GaussRational(-1);
    } else {
      if (k < n - 1) {
        m.at(k - 1, k - 1) = GaussRational(0);
        m.at(k, k) = GaussRational(0);
        m.at(k - 1, k) = GaussRational(1);
        m.at(k, k - 1) = GaussRational(1);
      } else {
        for (int j = 0; j < sp.dim; ++j) m.at(n - 2, j) = GaussRational(-1);
      }
      if (kind == SpechtKind::sign_twist) m = m.scaled(GaussRational(-1));
    }
    sp.gen.push_back(m);
  }
  return sp;
}

// Braid and involution relations for the generator matrices; the matrices
// define a representation of S_n exactly when these hold.
inline bool check_coxeter(const SpechtModule& sp) {
  Mat<GaussRational> id = Mat<GaussRational>::identity(sp.dim);
  int m = static_cast<int>(sp.gen.size());
  for (int a = 0; a < m; ++a) {
    if (!(sp.gen[a] * sp.gen[a] == id)) return false;
    for (int b = a + 1; b < m; ++b) {
      Mat<GaussRational> ab = sp.gen[a] * sp.gen[b];
      Mat<GaussRational> ba = sp.gen[b] * sp.gen[a];
      if (b == a + 1) {
        if (!(ab * ab * ab == id)) return false;
      } else {
        if (!(ab == ba)) return false;
      }
    }
  }
  return true;
}

}  // namespace nforge
