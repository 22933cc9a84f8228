#pragma once

// Skew-derivations delta_j on the free algebra attached to a rack-cocycle
// pair, dual to right multiplication by the letter j. On a monomial,
//
//   delta_j(x_{i_1} .. x_{i_m}) =
//     sum over positions k with i_k = j of
//       (prod_{l>k} q_{j, i_l}) x_{i_1} .. x_{i_{k-1}} x_{j>i_{k+1}} .. x_{j>i_m}
//
// Iterating a chain of these down to degree zero yields a scalar; a nonzero
// scalar certifies that the starting word survives in the quotient algebra.

#include <optional>
#include <stdexcept>
#include <vector>

#include "nforge/cocycle.hpp"
#include "nforge/freealg.hpp"
#include "nforge/rack.hpp"

namespace nforge {

inline NCPoly delta(const Rack& X, const Cocycle& q, int j, const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : p)
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] != j) continue;
      GaussRational coeff = c;
      Word img(w, 0, k);
      for (std::size_t l = k + 1; l < w.size(); ++l) {
        coeff *= q(j, w[l]);
        img.push_back(static_cast<char>(X.op(j, w[l])));
      }
      poly_add_term(out, img, coeff);
    }
  return out;
}

struct TermCapExceeded : std::runtime_error {
  explicit TermCapExceeded(unsigned long long cap)
      : std::runtime_error("derivation chain exceeded the term cap of " +
                           std::to_string(cap)) {}
};

// Applies a composition of derivations given outermost-first, i.e. the last
// listed operator acts first. With term_cap > 0, evaluation aborts with
// TermCapExceeded once an intermediate value holds more terms than the cap.
inline NCPoly derivation_chain(const Rack& X, const Cocycle& q,
                               const std::vector<int>& ops, NCPoly p,
                               unsigned long long term_cap = 0) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    p = delta(X, q, *it, p);
    if (term_cap && p.size() > term_cap) throw TermCapExceeded(term_cap);
  }
  return p;
}

inline GaussRational constant_term(const NCPoly& p) {
  auto it = p.find(Word());
  return it == p.end() ? GaussRational(0) : it->second;
}

struct CertificateSearch {
  bool found = false;
  bool budget_exhausted = false;
  std::vector<int> chain;  // outermost first; empty unless found
  GaussRational scalar;    // chain value on the word when found
  unsigned long long terms_used = 0;
};

namespace detail {

inline bool certificate_dfs(const Rack& X, const Cocycle& q, const NCPoly& p,
                            unsigned long long budget, CertificateSearch& out,
                            std::vector<int>& applied) {
  if (p.empty()) return false;
  if (p.begin()->first.empty()) {
    out.found = true;
    out.scalar = p.begin()->second;
    out.chain.assign(applied.rbegin(), applied.rend());
    return true;
  }
  // Budget accounting charges words produced before cancellation, so
  // cancellation-heavy branches still pay their way.
  unsigned long long width = 0;
  for (const auto& [w, c] : p) width += w.size();
  for (int j = 0; j < X.size; ++j) {
    out.terms_used += width;
    if (out.terms_used > budget) {
      out.budget_exhausted = true;
      return false;
    }
    NCPoly next = delta(X, q, j, p);
    applied.push_back(j);
    if (certificate_dfs(X, q, next, budget, out, applied)) return true;
    applied.pop_back();
    if (out.budget_exhausted) return false;
  }
  return false;
}

}  // namespace detail

// Depth-first search for a derivation chain with nonzero scalar value on the
// given word, trying letters in ascending order. The budget caps the total
// number of terms materialized across the search; exhausting it makes the
// outcome inconclusive rather than negative.
inline CertificateSearch find_nonzero_certificate(
    const Rack& X, const Cocycle& q, const Word& word,
    unsigned long long term_budget = 10000000ULL) {
  CertificateSearch out;
  NCPoly start;
  poly_add_term(start, word, GaussRational(1));
  std::vector<int> applied;
  detail::certificate_dfs(X, q, start, term_budget, out, applied);
  return out;
}

}  // namespace nforge
