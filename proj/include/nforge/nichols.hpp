#pragma once

// Graded dimension computations for the quadratic algebra attached to a
// rack-cocycle pair: the quotient of the free algebra on the rack's letters
// by the two-sided ideal generated by the admissible-class elements b_C.

#include <vector>

#include "nforge/cocycle.hpp"
#include "nforge/freealg.hpp"
#include "nforge/quadratic.hpp"
#include "nforge/rack.hpp"

namespace nforge {

inline Word word_from_labels(const Rack& X,
                             const std::vector<std::string>& tokens) {
  Word w;
  for (const std::string& t : tokens) w.push_back(static_cast<char>(X.label_index(t)));
  return w;
}

inline std::vector<int> letters_from_labels(const Rack& X,
                                            const std::vector<std::string>& tokens) {
  std::vector<int> out;
  for (const std::string& t : tokens) out.push_back(X.label_index(t));
  return out;
}

inline NCPoly relation_poly(const QuadRelation& rel) {
  NCPoly p;
  for (const auto& [coeff, pair] : rel.terms) {
    Word w;
    w.push_back(static_cast<char>(pair.first));
    w.push_back(static_cast<char>(pair.second));
    poly_add_term(p, w, coeff);
  }
  return p;
}

inline std::vector<NCPoly> relation_polys(const Rack& X, const Cocycle& q) {
  std::vector<NCPoly> out;
  for (const QuadRelation& rel : quadratic_basis(X, q))
    out.push_back(relation_poly(rel));
  return out;
}

struct GradedDims {
  GroebnerBasis gb;
  std::vector<mpz_class> dims;  // dims[d] for d = 0..max_degree
};

inline GradedDims graded_dims(const Rack& X, const Cocycle& q, int max_degree,
                              int threads = 1) {
  GradedDims out;
  out.gb = groebner_complete(X.size, relation_polys(X, q), max_degree, threads);
  out.dims = hilbert_dims(out.gb);
  return out;
}

// Degree-d dimension computed without any completion: |X|^d minus the rank of
// the ideal's degree-d component, by sparse elimination.
inline long graded_dim_by_elimination(const Rack& X, const Cocycle& q, int degree) {
  long free_dim = 1;
  for (int k = 0; k < degree; ++k) free_dim *= X.size;
  return free_dim - ideal_component_rank(X.size, relation_polys(X, q), degree);
}

}  // namespace nforge
