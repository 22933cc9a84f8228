#pragma once

// Exact scalar arithmetic: GMP-backed rationals and Gaussian rationals.
// String forms are canonical and round-trip: "p", "p/q", "i", "-2/3i", "1+i".

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace nforge {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t pos = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (std::size_t k = pos; k < s.size(); ++k) {
    if (s[k] == '/') {
      if (seen_slash || !seen_digit || k + 1 == s.size())
        throw std::invalid_argument("bad rational literal: " + s);
      seen_slash = true;
    } else if (s[k] < '0' || s[k] > '9') {
      throw std::invalid_argument("bad rational literal: " + s);
    } else {
      seen_digit = true;
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad rational literal: " + s);
  Rational r(s[0] == '+' ? s.substr(1) : s);  // mpq_set_str rejects a leading '+'
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) {
  return r.get_str();  // canonical "p" or "p/q", reduced, den > 0
}

// Exact square root of a nonnegative rational, if it is a perfect square.
inline std::optional<Rational> sqrt_rational(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rational out(sn, sd);
  out.canonicalize();
  return out;
}

struct GaussRational {
  Rational re, im;

  GaussRational() : re(0), im(0) {}
  GaussRational(long n) : re(n, 1), im(0) {}
  GaussRational(const Rational& r) : re(r), im(0) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational unit_i() { return GaussRational(rat(0), rat(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussRational conj() const { return GaussRational(re, Rational(-im)); }
  Rational norm2() const { return re * re + im * im; }

  GaussRational operator-() const {
    return GaussRational(Rational(-re), Rational(-im));
  }
  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRational inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rational n = norm2();
    return GaussRational(re / n, -im / n);
  }
  GaussRational& operator/=(const GaussRational& o) { return *this *= o.inverse(); }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  GaussRational pow(unsigned long e) const {
    GaussRational out(1), base = *this;
    while (e) {
      if (e & 1) out *= base;
      base *= base;
      e >>= 1;
    }
    return out;
  }
};

inline std::string to_string(const GaussRational& z) {
  if (z.is_real()) return to_string(z.re);
  std::string ip;
  Rational a = abs(z.im);
  ip = (a == 1) ? "i" : to_string(a) + "i";
  if (sgn(z.re) == 0) return (sgn(z.im) < 0 ? "-" : "") + ip;
  return to_string(z.re) + (sgn(z.im) < 0 ? "-" : "+") + ip;
}

inline GaussRational gauss_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  // split off a trailing imaginary part at the last top-level +/-
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k < s.size(); ++k)
    if (s[k] == '+' || s[k] == '-') split = k;
  auto parse_imag = [](std::string t) -> Rational {
    // t ends with 'i'
    t.pop_back();
    if (t.empty() || t == "+") return rat(1);
    if (t == "-") return rat(-1);
    return rational_from_string(t);
  };
  if (s.back() == 'i') {
    if (split == std::string::npos)
      return GaussRational(rat(0), parse_imag(s));
    std::string head = s.substr(0, split);
    std::string tail = s.substr(split);  // sign included
    return GaussRational(rational_from_string(head), parse_imag(tail));
  }
  return GaussRational(rational_from_string(s));
}

// Square root in Q(i), when one exists there.
inline std::optional<GaussRational> sqrt_gauss(const GaussRational& z) {
  if (z.is_zero()) return GaussRational(0);
  if (z.is_real()) {
    if (sgn(z.re) > 0) {
      auto r = sqrt_rational(z.re);
      if (!r) return std::nullopt;
      return GaussRational(*r);
    }
    auto r = sqrt_rational(Rational(-z.re));
    if (!r) return std::nullopt;
    return GaussRational(rat(0), *r);
  }
  auto n = sqrt_rational(z.norm2());
  if (!n) return std::nullopt;
  Rational x2 = (z.re + *n) / 2;
  auto x = sqrt_rational(x2);
  if (!x || sgn(*x) == 0) return std::nullopt;
  Rational y = z.im / (*x * 2);
  GaussRational s(*x, y);
  if (s * s != z) return std::nullopt;
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const GaussRational& z) {
  return os << to_string(z);
}

}  // namespace nforge
