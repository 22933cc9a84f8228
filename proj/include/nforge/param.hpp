#pragma once

// Polynomials in two deformation parameters (written Lambda, Gamma) with
// Gaussian-rational coefficients. Sparse, no zero terms stored; equality is
// coefficient-wise.

#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "nforge/scalars.hpp"

namespace nforge {

struct ParamScalar {
  // (Lambda exponent, Gamma exponent) -> coefficient
  std::map<std::pair<int, int>, GaussRational> terms;

  ParamScalar() = default;
  ParamScalar(long n) { set({0, 0}, GaussRational(n)); }
  ParamScalar(const GaussRational& c) { set({0, 0}, c); }

  static ParamScalar lambda() {
    ParamScalar p;
    p.set({1, 0}, GaussRational(1));
    return p;
  }
  static ParamScalar gamma() {
    ParamScalar p;
    p.set({0, 1}, GaussRational(1));
    return p;
  }

  void set(std::pair<int, int> e, const GaussRational& c) {
    if (c.is_zero())
      terms.erase(e);
    else
      terms[e] = c;
  }
  void add_term(std::pair<int, int> e, const GaussRational& c) {
    auto it = terms.find(e);
    if (it == terms.end()) {
      if (!c.is_zero()) terms.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    return terms.empty() ||
           (terms.size() == 1 && terms.begin()->first == std::make_pair(0, 0));
  }
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, e.first + e.second);
    return d;
  }
  GaussRational constant_value() const {
    auto it = terms.find({0, 0});
    return it == terms.end() ? GaussRational(0) : it->second;
  }

  ParamScalar operator-() const {
    ParamScalar out;
    for (const auto& [e, c] : terms) out.terms.emplace(e, -c);
    return out;
  }
  ParamScalar& operator+=(const ParamScalar& o) {
    for (const auto& [e, c] : o.terms) add_term(e, c);
    return *this;
  }
  ParamScalar& operator-=(const ParamScalar& o) {
    for (const auto& [e, c] : o.terms) add_term(e, -c);
    return *this;
  }
  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
    ParamScalar out;
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms)
        out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return out;
  }
  ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
  ParamScalar& scale(const GaussRational& c) {
    ParamScalar out;
    for (const auto& [e, t] : terms) out.add_term(e, t * c);
    return *this = std::move(out);
  }
  friend ParamScalar operator*(const GaussRational& c, ParamScalar p) { return p.scale(c); }
  friend ParamScalar operator/(ParamScalar p, const GaussRational& c) {
    return p.scale(c.inverse());
  }
  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    return a.terms == b.terms;
  }
  friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }

  GaussRational eval(const GaussRational& L, const GaussRational& G) const {
    GaussRational out(0);
    for (const auto& [e, c] : terms)
      out += c * L.pow(e.first) * G.pow(e.second);
    return out;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms) {
      if (!out.empty()) out += " + ";
      std::string mono;
      if (e.first > 0) mono += e.first == 1 ? "Lambda" : "Lambda^" + std::to_string(e.first);
      if (e.second > 0) {
        if (!mono.empty()) mono += "*";
        mono += e.second == 1 ? "Gamma" : "Gamma^" + std::to_string(e.second);
      }
      if (mono.empty())
        out += "(" + to_string(c) + ")";
      else if (c == GaussRational(1))
        out += mono;
      else
        out += "(" + to_string(c) + ")*" + mono;
    }
    return out;
  }
};

inline std::ostream& operator<<(std::ostream& os, const ParamScalar& p) {
  return os << p.str();
}

}  // namespace nforge
