#pragma once

// Permutations of {1..n}, stored 0-based in one-line notation.
// Composition is (a*b)(x) = a(b(x)): b acts first.

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nforge {

struct Perm {
  std::vector<int> im;  // im[k] = image of k, 0-based

  Perm() = default;
  explicit Perm(std::vector<int> v) : im(std::move(v)) {}

  static Perm identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Perm(std::move(v));
  }

  int n() const { return static_cast<int>(im.size()); }
  int operator()(int k) const { return im[k]; }
  bool is_identity() const {
    for (int k = 0; k < n(); ++k)
      if (im[k] != k) return false;
    return true;
  }

  Perm inverse() const {
    std::vector<int> v(im.size());
    for (int k = 0; k < n(); ++k) v[im[k]] = k;
    return Perm(std::move(v));
  }

  friend Perm operator*(const Perm& a, const Perm& b) {
    std::vector<int> v(a.im.size());
    for (int k = 0; k < a.n(); ++k) v[k] = a.im[b.im[k]];
    return Perm(std::move(v));
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.im == b.im; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.im < b.im; }

  int sign() const {
    int inv = 0;
    for (int a = 0; a < n(); ++a)
      for (int b = a + 1; b < n(); ++b)
        if (im[a] > im[b]) ++inv;
    return inv % 2 ? -1 : 1;
  }

  std::vector<std::vector<int>> cycles() const {  // nontrivial cycles, 0-based
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(im.size(), false);
    for (int s = 0; s < n(); ++s) {
      if (seen[s] || im[s] == s) continue;
      std::vector<int> cyc;
      for (int k = s; !seen[k]; k = im[k]) {
        seen[k] = true;
        cyc.push_back(k);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  std::string cycle_string() const {  // compact 1-based, e.g. "(12)(34)"; "e" if trivial
    auto cs = cycles();
    if (cs.empty()) return "e";
    std::string out;
    for (const auto& c : cs) {
      out += '(';
      for (int k : c) out += std::to_string(k + 1);
      out += ')';
    }
    return out;
  }
};

inline Perm transposition(int n, int a, int b) {  // 1-based points
  if (a < 1 || b < 1 || a > n || b > n || a == b)
    throw std::invalid_argument("bad transposition");
  Perm p = Perm::identity(n);
  std::swap(p.im[a - 1], p.im[b - 1]);
  return p;
}

inline Perm adjacent_transposition(int n, int k) {  // s_k = (k, k+1), 1 <= k < n
  return transposition(n, k, k + 1);
}

inline Perm perm_from_cycles(int n, const std::string& s) {
  Perm p = Perm::identity(n);
  if (s == "e" || s == "()" || s.empty()) return p;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && (s[k] == ' ' || s[k] == ',')) ++k;
    if (k == s.size()) break;
    if (s[k] != '(') throw std::invalid_argument("bad cycle string: " + s);
    ++k;
    std::vector<int> cyc;
    while (k < s.size() && s[k] != ')') {
      if (s[k] == ' ' || s[k] == ',') {
        ++k;
        continue;
      }
      if (s[k] < '1' || s[k] > '9')
        throw std::invalid_argument("bad cycle string: " + s);
      int v = s[k] - '0';
      if (v > n) throw std::invalid_argument("cycle entry out of range: " + s);
      cyc.push_back(v - 1);
      ++k;
    }
    if (k == s.size()) throw std::invalid_argument("unterminated cycle: " + s);
    ++k;  // ')'
    if (cyc.size() < 2) throw std::invalid_argument("cycle too short: " + s);
    Perm c = Perm::identity(n);
    for (std::size_t t = 0; t < cyc.size(); ++t)
      c.im[cyc[t]] = cyc[(t + 1) % cyc.size()];
    p = c * p;
  }
  return p;
}

inline Perm conjugate(const Perm& g, const Perm& x) { return g * x * g.inverse(); }

inline std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline std::vector<Perm> conjugacy_class(int n, const Perm& rep) {
  std::vector<Perm> out;
  for (const Perm& g : all_perms(n)) {
    Perm c = conjugate(g, rep);
    if (!std::binary_search(out.begin(), out.end(), c)) {
      out.insert(std::upper_bound(out.begin(), out.end(), c), c);
    }
  }
  return out;  // sorted by one-line notation
}

// Factorization into adjacent transpositions: p = s_{w[0]} * s_{w[1]} * ...
// (rightmost factor acts first); length equals the inversion number.
inline std::vector<int> reduced_word(Perm p) {
  std::vector<int> w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k + 1 < p.n(); ++k) {
      if (p.im[k] > p.im[k + 1]) {
        std::swap(p.im[k], p.im[k + 1]);  // p := p * s_{k+1}
        w.push_back(k + 1);
        changed = true;
        break;
      }
    }
  }
  std::reverse(w.begin(), w.end());
  return w;
}

inline std::ostream& operator<<(std::ostream& os, const Perm& p) {
  return os << p.cycle_string();
}

}  // namespace nforge
