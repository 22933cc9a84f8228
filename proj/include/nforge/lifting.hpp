#pragma once

// Group-side data for a conjugacy-class rack: the realization inside the
// symmetric group (elements, conjugation action, scalar 1-cocycles chi_i),
// per-class deformation parameters with their validity conditions, the three
// named parameter families, and projective parameter canonicalization.

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nforge/cocycle.hpp"
#include "nforge/param.hpp"
#include "nforge/perm.hpp"
#include "nforge/quadratic.hpp"
#include "nforge/rack.hpp"

namespace nforge {

struct GroupRealization {
  ClassRack X;
  Cocycle q;
  std::vector<Perm> group;                      // all of S_n, sorted
  std::vector<int> letter_elem;                 // letter -> group index
  std::vector<std::vector<int>> mul;            // composition table
  std::vector<std::vector<int>> action;         // action[t][i] = t g_i t^{-1}
  std::vector<std::vector<GaussRational>> chi;  // chi[i][t]
  std::vector<int> k_subgroup;                  // generated by the letters
  int identity = 0;

  int group_index(const Perm& p) const {
    auto it = std::lower_bound(group.begin(), group.end(), p);
    if (it == group.end() || !(*it == p))
      throw std::invalid_argument("element outside the group");
    return static_cast<int>(it - group.begin());
  }
  int invert(int t) const { return group_index(group[t].inverse()); }
};

namespace detail {

inline int inversions(const Perm& p) {
  int n = p.n(), c = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (p.im[a] > p.im[b]) ++c;
  return c;
}

}  // namespace detail

// Builds the realization and the chi table. For the constant cocycle -1 the
// chi_i are all the sign character; otherwise chi_i is extended from its
// values on adjacent transpositions (which must then be letters) along
// reduced words. Construction fails loudly if the extension is inconsistent,
// if chi_i(g_j) != q_{ji}, or if the cocycle identity fails anywhere.
inline GroupRealization make_realization(const ClassRack& X, const Cocycle& q) {
  GroupRealization r;
  r.X = X;
  r.q = q;
  int n = X.group_n;
  r.group = all_perms(n);
  int G = static_cast<int>(r.group.size());
  r.identity = r.group_index(Perm::identity(n));

  auto letter_of = [&](const Perm& p) {
    auto it = std::lower_bound(X.elems.begin(), X.elems.end(), p);
    if (it == X.elems.end() || !(*it == p))
      throw std::logic_error("conjugate left the class");
    return static_cast<int>(it - X.elems.begin());
  };
  for (const Perm& p : X.elems) r.letter_elem.push_back(r.group_index(p));

  r.mul.assign(G, std::vector<int>(G, 0));
  for (int a = 0; a < G; ++a)
    for (int b = 0; b < G; ++b) r.mul[a][b] = r.group_index(r.group[a] * r.group[b]);

  r.action.assign(G, std::vector<int>(X.rack.size, 0));
  for (int t = 0; t < G; ++t)
    for (int i = 0; i < X.rack.size; ++i)
      r.action[t][i] = letter_of(conjugate(r.group[t], X.elems[i]));

  bool constant = true;
  for (int i = 0; i < X.rack.size && constant; ++i)
    for (int j = 0; j < X.rack.size && constant; ++j)
      if (!(q(i, j) == q(0, 0))) constant = false;

  r.chi.assign(X.rack.size, std::vector<GaussRational>(G, GaussRational(1)));
  if (constant) {
    GaussRational c = q(0, 0);
    if (!(c == GaussRational(1)) && !(c == GaussRational(-1)))
      throw std::invalid_argument("constant cocycle must be 1 or -1 to extend");
    if (c == GaussRational(-1))
      for (int i = 0; i < X.rack.size; ++i)
        for (int t = 0; t < G; ++t) r.chi[i][t] = GaussRational(r.group[t].sign());
  } else {
    // letters for the adjacent transpositions
    std::vector<int> adj;
    for (int k = 1; k < n; ++k) {
      Perm s = adjacent_transposition(n, k);
      auto it = std::lower_bound(X.elems.begin(), X.elems.end(), s);
      if (it == X.elems.end() || !(*it == s))
        throw std::invalid_argument(
            "cocycle extension needs the adjacent transpositions as letters");
      adj.push_back(static_cast<int>(it - X.elems.begin()));
    }
    // order the group by word length and extend chi_i(s_k t') = chi_i(t') q(adj_k, t'.i)
    std::vector<int> order(G);
    for (int t = 0; t < G; ++t) order[t] = t;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int la = detail::inversions(r.group[a]), lb = detail::inversions(r.group[b]);
      return la != lb ? la < lb : a < b;
    });
    for (int t : order) {
      const Perm& p = r.group[t];
      if (t == r.identity) continue;
      int k = -1;
      for (int m = 1; m < n; ++m)
        if (p.im[m - 1] > p.im[m]) {  // right descent: p * s_k is shorter
          k = m;
          break;
        }
      int ts = r.group_index(p * adjacent_transposition(n, k));
      for (int i = 0; i < X.rack.size; ++i)
        r.chi[i][t] = q(adj[k - 1], i) * r.chi[X.rack.op(adj[k - 1], i)][ts];
    }
  }

  // invariants of the construction
  for (int i = 0; i < X.rack.size; ++i)
    for (int j = 0; j < X.rack.size; ++j) {
      if (!(r.chi[i][r.letter_elem[j]] == q(j, i)))
        throw std::logic_error("chi_i on a letter disagrees with the cocycle");
      if (r.action[r.letter_elem[j]][i] != X.rack.op(j, i))
        throw std::logic_error("group action disagrees with the rack operation");
    }
  for (int i = 0; i < X.rack.size; ++i)
    for (int t = 0; t < G; ++t)
      for (int s = 0; s < G; ++s)
        if (!(r.chi[i][r.mul[t][s]] == r.chi[i][s] * r.chi[r.action[s][i]][t]))
          throw std::logic_error("chi extension violates the cocycle identity");

  // subgroup generated by the letters
  std::vector<bool> seen(G, false);
  std::queue<int> bfs;
  seen[r.identity] = true;
  bfs.push(r.identity);
  while (!bfs.empty()) {
    int t = bfs.front();
    bfs.pop();
    r.k_subgroup.push_back(t);
    for (int e : r.letter_elem) {
      int u = r.mul[e][t];
      if (!seen[u]) {
        seen[u] = true;
        bfs.push(u);
      }
    }
  }
  std::sort(r.k_subgroup.begin(), r.k_subgroup.end());
  return r;
}

// Pair-to-class lookup: for each ordered pair, the class that contains it and
// the 1-based position h with pair = (i_{h+1}, i_h) in that class's cycle.
struct ClassLocator {
  std::vector<QuadClass> classes;
  std::map<std::pair<int, int>, std::pair<int, int>> where;
};

// The class's canonical ordered pair (i_2, i_1); both coordinates coincide
// on a one-element orbit.
inline std::pair<int, int> canonical_pair(const QuadClass& c) {
  return {c.seq[1 % c.size()], c.seq[0]};
}

inline ClassLocator locate_classes(const Rack& X) {
  ClassLocator loc;
  loc.classes = enumerate_classes(X);
  for (std::size_t c = 0; c < loc.classes.size(); ++c) {
    auto ps = loc.classes[c].pairs();
    for (std::size_t m = 0; m < ps.size(); ++m)
      loc.where[ps[m]] = {static_cast<int>(c), static_cast<int>(m) + 1};
  }
  return loc;
}

struct QlDatum {
  GroupRealization real;
  std::vector<QuadClass> classes;    // the admissible classes, enumeration order
  std::vector<ParamScalar> lambdas;  // parallel to classes
};

struct QlReport {
  bool classes_cover = false;             // exactly the admissible classes
  bool products_avoid_letters = false;    // g_i != g_j g_k for all i, j, k
  bool normalized = false;                // g_C trivial forces lambda_C = 0
  bool transport_consistent = false;      // translation identity for every letter
  bool character_orbits_consistent = true;  // dual route, constant cocycle only
  bool k_transitive_on_sizes = false;
  std::vector<std::string> failures;
  bool ok() const {
    return classes_cover && products_avoid_letters && normalized &&
           transport_consistent && character_orbits_consistent;
  }
};

// g_C as a group index: product of the realizing elements of the class's
// canonical pair, first coordinate times second.
inline int class_group_element(const GroupRealization& r, const QuadClass& c) {
  auto [i2, i1] = canonical_pair(c);
  return r.mul[r.letter_elem[i2]][r.letter_elem[i1]];
}

inline QlReport validate_ql_datum(const QlDatum& d) {
  QlReport rep;
  const GroupRealization& r = d.real;
  const Rack& X = r.X.rack;
  auto note = [&](std::string s) {
    if (rep.failures.size() < 16) rep.failures.push_back(std::move(s));
  };

  ClassLocator loc = locate_classes(X);
  std::map<std::vector<int>, int> datum_index;
  for (std::size_t c = 0; c < d.classes.size(); ++c)
    datum_index[d.classes[c].seq] = static_cast<int>(c);

  rep.classes_cover = d.lambdas.size() == d.classes.size();
  {
    std::vector<std::vector<int>> want;
    for (const QuadClass& c : loc.classes)
      if (is_admissible(c, r.q)) want.push_back(c.seq);
    std::vector<std::vector<int>> got;
    for (const QuadClass& c : d.classes) got.push_back(c.seq);
    if (want != got) {
      rep.classes_cover = false;
      note("class list is not the admissible classes in enumeration order");
    }
  }

  rep.products_avoid_letters = true;
  for (int i = 0; i < X.size && rep.failures.size() < 16; ++i)
    for (int j = 0; j < X.size; ++j)
      for (int k = 0; k < X.size; ++k)
        if (r.letter_elem[i] == r.mul[r.letter_elem[j]][r.letter_elem[k]]) {
          rep.products_avoid_letters = false;
          note("letter " + X.labels[i] + " equals the product " + X.labels[j] +
               "*" + X.labels[k]);
        }

  rep.normalized = true;
  rep.transport_consistent = true;
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    const QuadClass& C = d.classes[c];
    auto [i2, i1] = canonical_pair(C);
    if (class_group_element(r, C) == r.identity && !d.lambdas[c].is_zero()) {
      rep.normalized = false;
      note("class through (" + X.labels[i2] + "," + X.labels[i1] +
           ") has trivial group element but nonzero parameter");
    }
    for (int k = 0; k < X.size; ++k) {
      std::pair<int, int> moved{X.op(k, i2), X.op(k, i1)};
      auto [cj, h] = loc.where.at(moved);
      auto it = datum_index.find(loc.classes[cj].seq);
      if (it == datum_index.end()) {
        rep.transport_consistent = false;
        note("translated class missing from the datum");
        continue;
      }
      GaussRational eta = etas(loc.classes[cj], r.q)[h - 1];
      ParamScalar rhs = (r.q(k, i2) * r.q(k, i1) * eta.inverse()) *
                        d.lambdas[it->second];
      if (!(d.lambdas[c] == rhs)) {
        rep.transport_consistent = false;
        note("translation by " + X.labels[k] + " moves the class through (" +
             X.labels[i2] + "," + X.labels[i1] + ") inconsistently");
      }
    }
  }

  // dual route for the constant cocycle: the chi are one character, so
  // parameters must be constant along group orbits of classes
  bool constant_minus = true;
  for (int i = 0; i < X.size && constant_minus; ++i)
    for (int j = 0; j < X.size && constant_minus; ++j)
      if (!(r.q(i, j) == GaussRational(-1))) constant_minus = false;
  if (constant_minus) {
    for (std::size_t c = 0; c < d.classes.size(); ++c) {
      auto [i2, i1] = canonical_pair(d.classes[c]);
      for (std::size_t t = 0; t < r.group.size(); ++t) {
        std::pair<int, int> moved{r.action[t][i2], r.action[t][i1]};
        int cj = loc.where.at(moved).first;
        auto it = datum_index.find(loc.classes[cj].seq);
        if (it == datum_index.end() || !(d.lambdas[c] == d.lambdas[it->second])) {
          rep.character_orbits_consistent = false;
          note("group translation changes a parameter despite the constant cocycle");
          break;
        }
      }
    }
  }

  // K-transitivity on same-size admissible classes
  rep.k_transitive_on_sizes = true;
  for (std::size_t a = 0; a < d.classes.size(); ++a)
    for (std::size_t b = 0; b < d.classes.size(); ++b) {
      if (d.classes[a].size() != d.classes[b].size()) continue;
      auto [i2, i1] = canonical_pair(d.classes[a]);
      bool reached = false;
      for (int t : r.k_subgroup) {
        std::pair<int, int> moved{r.action[t][i2], r.action[t][i1]};
        int cj = loc.where.at(moved).first;
        if (loc.classes[cj].seq == d.classes[b].seq) {
          reached = true;
          break;
        }
      }
      if (!reached) rep.k_transitive_on_sizes = false;
    }
  return rep;
}

namespace detail {

inline QlDatum datum_by_size(const ClassRack& X, const Cocycle& q,
                             const ParamScalar& size1, const ParamScalar& size2,
                             const ParamScalar& size3) {
  QlDatum d;
  d.real = make_realization(X, q);
  for (QuadClass& c : enumerate_classes(X.rack)) {
    if (!is_admissible(c, q)) continue;
    switch (c.size()) {
      case 1: d.lambdas.push_back(size1); break;
      case 2: d.lambdas.push_back(size2); break;
      case 3: d.lambdas.push_back(size3); break;
      default: throw std::logic_error("unexpected class size");
    }
    d.classes.push_back(std::move(c));
  }
  return d;
}

}  // namespace detail

// Transpositions with the constant cocycle -1: disjoint pairs carry the
// second parameter, triangles the first, squares vanish.
inline QlDatum family_Q_minus(int n, const ParamScalar& Lambda = ParamScalar::lambda(),
                              const ParamScalar& Gamma = ParamScalar::gamma()) {
  ClassRack X = conjugacy_class_rack(n, transposition(n, 1, 2));
  Cocycle q = constant_cocycle(X.rack, GaussRational(-1));
  return detail::datum_by_size(X, q, ParamScalar(0), Gamma, Lambda);
}

// Four-cycles in degree 4 with the constant cocycle -1: squares of the
// generators carry the second parameter, inverse pairs vanish (their group
// element is trivial), triangles carry the first.
inline QlDatum family_D(const ParamScalar& Lambda = ParamScalar::lambda(),
                        const ParamScalar& Gamma = ParamScalar::gamma()) {
  ClassRack X = conjugacy_class_rack(4, perm_from_cycles(4, "(1234)"));
  Cocycle q = constant_cocycle(X.rack, GaussRational(-1));
  return detail::datum_by_size(X, q, Gamma, ParamScalar(0), Lambda);
}

// Transpositions with the sign-position cocycle: only triangles deform. The
// parameter is anchored at the triangle through ((12),(23)) and transported
// to the other triangles with the translation sign factors.
inline QlDatum family_Q_chi(int n, const ParamScalar& lam = ParamScalar::lambda()) {
  ClassRack X = conjugacy_class_rack(n, transposition(n, 1, 2));
  Cocycle q = chi_cocycle(X);
  QlDatum d;
  d.real = make_realization(X, q);
  ClassLocator loc = locate_classes(X.rack);

  std::map<std::vector<int>, int> slot;
  for (QuadClass& c : loc.classes) {
    if (!is_admissible(c, q)) continue;
    slot[c.seq] = static_cast<int>(d.classes.size());
    d.classes.push_back(c);
    d.lambdas.push_back(ParamScalar(0));
  }

  std::pair<int, int> anchor{X.rack.label_index("(12)"), X.rack.label_index("(23)")};
  auto [a0, h0] = loc.where.at(anchor);
  int start = slot.at(loc.classes[a0].seq);
  d.lambdas[start] = etas(loc.classes[a0], q)[h0 - 1] * lam;

  std::vector<bool> assigned(d.classes.size(), false);
  assigned[start] = true;
  std::queue<int> bfs;
  bfs.push(start);
  while (!bfs.empty()) {
    int c = bfs.front();
    bfs.pop();
    auto [i2, i1] = canonical_pair(d.classes[c]);
    for (int k = 0; k < X.rack.size; ++k) {
      auto [cj, h] = loc.where.at({X.rack.op(k, i2), X.rack.op(k, i1)});
      int cc = slot.at(loc.classes[cj].seq);
      GaussRational eta = etas(loc.classes[cj], q)[h - 1];
      ParamScalar value =
          (eta * d.real.q(k, i2).inverse() * d.real.q(k, i1).inverse()) *
          d.lambdas[c];
      if (!assigned[cc]) {
        assigned[cc] = true;
        d.lambdas[cc] = value;
        bfs.push(cc);
      } else if (!(d.lambdas[cc] == value)) {
        throw std::logic_error("parameter transport is inconsistent");
      }
    }
  }
  for (std::size_t c = 0; c < d.classes.size(); ++c)
    if (d.classes[c].size() == 3 && !assigned[c])
      throw std::logic_error("a triangle class was not reached by transport");
  return d;
}

struct Presentation {
  GroupRealization real;
  struct QuadraticRelation {
    QuadClass cls;
    std::vector<std::pair<GaussRational, std::pair<int, int>>> terms;
    ParamScalar lambda;
    int g_c;  // group index
  };
  std::vector<QuadraticRelation> relations;
};

inline Presentation presentation(const QlDatum& d) {
  QlReport rep = validate_ql_datum(d);
  if (!rep.ok()) {
    std::string msg = "invalid datum";
    for (const std::string& f : rep.failures) msg += "; " + f;
    throw std::invalid_argument(msg);
  }
  Presentation p;
  p.real = d.real;
  std::map<std::vector<int>, int> datum_index;
  for (std::size_t c = 0; c < d.classes.size(); ++c)
    datum_index[d.classes[c].seq] = static_cast<int>(c);
  for (const QuadRelation& rel : quadratic_basis(d.real.X.rack, d.real.q)) {
    Presentation::QuadraticRelation out;
    out.cls = rel.cls;
    out.terms = rel.terms;
    out.lambda = d.lambdas[datum_index.at(rel.cls.seq)];
    out.g_c = class_group_element(d.real, rel.cls);
    p.relations.push_back(std::move(out));
  }
  return p;
}

// Projective representative of a two-parameter family point under the
// square-rescaling equivalence: first nonzero coordinate scaled to 1.
inline std::pair<GaussRational, GaussRational> canonical_parameter(
    const GaussRational& first, const GaussRational& second) {
  if (!first.is_zero()) return {GaussRational(1), second * first.inverse()};
  if (!second.is_zero()) return {GaussRational(0), GaussRational(1)};
  return {GaussRational(0), GaussRational(0)};
}

inline GaussRational canonical_parameter(const GaussRational& lam) {
  return lam.is_zero() ? GaussRational(0) : GaussRational(1);
}

}  // namespace nforge
