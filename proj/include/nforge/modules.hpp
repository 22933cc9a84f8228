#pragma once

// Finite matrix modules over the lifted algebras.  The group part acts
// through a sum of Specht modules pulled back along an explicit base change,
// one distinguished generator acts by a stated table, and every other
// generator matrix is derived from it by the commutation rule
// a_{t.i} = chi_i(t)^{-1} H_t a_i H_t^{-1} along adjacent transpositions.
// Verification replays the commutation rule for every generator, the group
// homomorphism property, and all quadratic relations as exact identities in
// the two deformation parameters.

#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nforge/lifting.hpp"
#include "nforge/linalg.hpp"
#include "nforge/param.hpp"
#include "nforge/specht.hpp"

namespace nforge {

struct RepModule {
  GroupRealization real;
  int dim = 0;
  std::vector<Mat<ParamScalar>> group_mat;  // indexed like real.group
  std::vector<Mat<ParamScalar>> gen_mat;    // indexed by letter
  std::vector<std::string> basis;

  const Mat<ParamScalar>& H(int t) const { return group_mat[t]; }
  const Mat<ParamScalar>& a(int i) const { return gen_mat[i]; }
};

namespace detail {

inline Mat<GaussRational> inverse(const Mat<GaussRational>& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.rows;
  Mat<GaussRational> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = GaussRational(1);
  }
  std::vector<int> piv = row_reduce(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1)
    throw std::invalid_argument("singular base change");
  Mat<GaussRational> out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

inline Mat<GaussRational> block_diag(const Mat<GaussRational>& a,
                                     const Mat<GaussRational>& b) {
  Mat<GaussRational> out(a.rows + b.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) out.at(a.rows + i, a.cols + j) = b.at(i, j);
  return out;
}

inline Mat<ParamScalar> to_param(const Mat<GaussRational>& m) {
  Mat<ParamScalar> out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero()) out.at(i, j) = ParamScalar(m.at(i, j));
  return out;
}

inline Mat<GaussRational> eval_at(const Mat<ParamScalar>& m, const GaussRational& L,
                                  const GaussRational& G) {
  Mat<GaussRational> out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j).eval(L, G);
  return out;
}

// Assembles the module: group matrices are conjugates of the carrier blocks
// by the base change, extended multiplicatively along reduced words; the
// generator matrices spread out from the stated table by the commutation
// rule.  Nothing is verified here; verify_presentation does that.
inline RepModule assemble_module(const ClassRack& X, const Cocycle& q,
                                 const std::vector<SpechtModule>& blocks,
                                 const Mat<GaussRational>& phi,
                                 const std::string& base_letter,
                                 const Mat<ParamScalar>& base_table,
                                 std::vector<std::string> basis) {
  RepModule m;
  m.real = make_realization(X, q);
  m.dim = phi.rows;
  m.basis = std::move(basis);
  int n = X.group_n;
  int G = static_cast<int>(m.real.group.size());
  int L = X.rack.size;

  Mat<GaussRational> phi_inv = inverse(phi);
  std::vector<Mat<ParamScalar>> adj(n - 1);
  for (int k = 1; k < n; ++k) {
    Mat<GaussRational> carrier(0, 0);
    for (const SpechtModule& b : blocks)
      carrier = carrier.rows == 0 ? b.gen[k - 1] : block_diag(carrier, b.gen[k - 1]);
    if (carrier.rows != m.dim) throw std::invalid_argument("carrier/base change mismatch");
    adj[k - 1] = to_param(phi_inv * carrier * phi);
  }

  m.group_mat.assign(G, Mat<ParamScalar>());
  for (int t = 0; t < G; ++t) {
    Mat<ParamScalar> h = Mat<ParamScalar>::identity(m.dim);
    for (int k : reduced_word(m.real.group[t])) h = h * adj[k - 1];
    m.group_mat[t] = std::move(h);
  }

  m.gen_mat.assign(L, Mat<ParamScalar>());
  int base = X.rack.label_index(base_letter);
  if (base_table.rows != m.dim || base_table.cols != m.dim)
    throw std::invalid_argument("generator table has wrong shape");
  m.gen_mat[base] = base_table;
  std::vector<bool> known(L, false);
  known[base] = true;
  std::queue<int> bfs;
  bfs.push(base);
  while (!bfs.empty()) {
    int i = bfs.front();
    bfs.pop();
    for (int k = 1; k < n; ++k) {
      int t = m.real.group_index(adjacent_transposition(n, k));
      int j = m.real.action[t][i];
      if (known[j]) continue;
      GaussRational c = m.real.chi[i][t].inverse();
      m.gen_mat[j] =
          (m.group_mat[t] * m.gen_mat[i] * m.group_mat[m.real.invert(t)]).scaled(ParamScalar(c));
      known[j] = true;
      bfs.push(j);
    }
  }
  for (int i = 0; i < L; ++i)
    if (!known[i]) throw std::logic_error("a generator was not reached by conjugation");
  return m;
}

}  // namespace detail

// Transpositions with the constant cocycle -1 acting on
// standard + sign-twist.  The distinguished table, with
// alpha_n = 2((n-2)Lambda - (n-3)Gamma)/n:
//   a xi_1 = 2 zeta_1,  a zeta_2 = alpha_n xi_2,  a zeta_j = Gamma xi_j (j >= 3),
// everything else to zero.
inline RepModule build_W(int n) {
  if (n != 4 && n != 5) throw std::invalid_argument("build_W: n must be 4 or 5");
  ClassRack X = conjugacy_class_rack(n, transposition(n, 1, 2));
  Cocycle q = constant_cocycle(X.rack, GaussRational(-1));
  int d = n - 1;

  GaussRational b = rat(2, 2 - n);
  Mat<GaussRational> blk(d, d);
  blk.at(0, 0) = GaussRational(1);
  blk.at(0, 1) = GaussRational(1);
  blk.at(1, 0) = GaussRational(-1);
  blk.at(1, 1) = GaussRational(1);
  for (int j = 2; j < d; ++j) {
    blk.at(j, 1) = b;
    blk.at(j, j) = GaussRational(1);
  }
  Mat<GaussRational> phi = detail::block_diag(blk, blk);

  ParamScalar alpha =
      (GaussRational(2 * (n - 2)) * ParamScalar::lambda() -
       GaussRational(2 * (n - 3)) * ParamScalar::gamma()) /
      GaussRational(n);
  Mat<ParamScalar> table(2 * d, 2 * d);
  table.at(d + 0, 0) = ParamScalar(2);
  table.at(1, d + 1) = alpha;
  for (int j = 2; j < d; ++j) table.at(j, d + j) = ParamScalar::gamma();

  std::vector<std::string> basis;
  for (int i = 1; i <= d; ++i) basis.push_back("xi" + std::to_string(i));
  for (int i = 1; i <= d; ++i) basis.push_back("zeta" + std::to_string(i));
  return detail::assemble_module(X, q, {specht(n, SpechtKind::standard),
                                        specht(n, SpechtKind::sign_twist)},
                                 phi, "(12)", table, std::move(basis));
}

// Transpositions with the sign-position cocycle acting on the standard
// module alone; the distinguished generator sends xi_1 to 2*sqrt(-lam)*xi_2
// and kills the rest.  Requires -lam to be a Gaussian-rational square.
inline RepModule build_U(int n, const GaussRational& lam) {
  if (n != 4 && n != 5) throw std::invalid_argument("build_U: n must be 4 or 5");
  auto s = sqrt_gauss(-lam);
  if (!s) throw std::invalid_argument("build_U: -lambda has no square root here");
  ClassRack X = conjugacy_class_rack(n, transposition(n, 1, 2));
  Cocycle q = chi_cocycle(X);
  int d = n - 1;

  Mat<GaussRational> phi(d, d);
  phi.at(0, 0) = GaussRational(1);
  phi.at(1, 0) = GaussRational(1);
  phi.at(0, 1) = GaussRational(1);
  phi.at(1, 1) = GaussRational(-1);
  for (int j = 2; j < d; ++j) phi.at(j, j) = GaussRational(1);

  Mat<ParamScalar> table(d, d);
  table.at(1, 0) = ParamScalar(GaussRational(2) * *s);

  std::vector<std::string> basis;
  for (int i = 1; i <= d; ++i) basis.push_back("xi" + std::to_string(i));
  return detail::assemble_module(X, q, {specht(n, SpechtKind::standard)}, phi, "(12)",
                                 table, std::move(basis));
}

// Four-cycles in degree 4 with the constant cocycle -1 on
// standard + sign-twist.  The distinguished table:
//   a xi_1 = 2 zeta_1, a zeta_1 = Gamma xi_1, a xi_2 = 2 zeta_2,
//   a zeta_2 = Gamma xi_2, a xi_3 = 0, a zeta_3 = (Lambda - Gamma) xi_3.
// The base change is pinned by the relations themselves: xi_1, xi_2 span the
// (-1)-eigenplane of the square of the distinguished four-cycle inside the
// standard summand, xi_3 its (+1)-line, and likewise for the zeta's in the
// sign twist; see the derivation notes in the tests.
inline RepModule build_V() {
  ClassRack X = conjugacy_class_rack(4, perm_from_cycles(4, "(1234)"));
  Cocycle q = constant_cocycle(X.rack, GaussRational(-1));

  Mat<GaussRational> phi(6, 6);
  auto col = [&](int c, int r0, long v0, int r1, long v1, int r2, long v2) {
    phi.at(r0, c) = GaussRational(v0);
    phi.at(r1, c) = GaussRational(v1);
    phi.at(r2, c) = GaussRational(v2);
  };
  col(0, 0, 1, 1, 0, 2, -1);   // xi_1  -> v_1 - v_3
  col(1, 0, 0, 1, 1, 2, 0);    // xi_2  -> v_2
  col(2, 0, 1, 1, -1, 2, 1);   // xi_3  -> v_1 - v_2 + v_3
  col(3, 3, 1, 4, 1, 5, -1);   // zeta_1 -> w_1 + w_2 - w_3
  col(4, 3, -1, 4, 1, 5, 1);   // zeta_2 -> -w_1 + w_2 + w_3
  col(5, 3, 2, 4, -2, 5, 2);   // zeta_3 -> 2(w_1 - w_2 + w_3)

  Mat<ParamScalar> table(6, 6);
  table.at(3, 0) = ParamScalar(2);
  table.at(0, 3) = ParamScalar::gamma();
  table.at(4, 1) = ParamScalar(2);
  table.at(1, 4) = ParamScalar::gamma();
  table.at(2, 5) = ParamScalar::lambda() - ParamScalar::gamma();

  return detail::assemble_module(
      X, q, {specht(4, SpechtKind::standard), specht(4, SpechtKind::sign_twist)}, phi,
      "(1234)", table,
      {"xi1", "xi2", "xi3", "zeta1", "zeta2", "zeta3"});
}

struct VerifyReport {
  bool homomorphism = false;
  bool commutation = false;
  bool relations = false;
  std::vector<std::string> failures;
  bool ok() const { return homomorphism && commutation && relations; }
};

// Exact verification over the parameter polynomials:
//  (a) H_e = 1 and H_{s_k} H_t = H_{s_k t} for every adjacent s_k and every
//      t, which determines the full homomorphism property by induction on
//      word length;
//  (b) H_t a_i H_t^{-1} = chi_i(t) a_{t.i} for every adjacent t and letter i
//      (this also makes the conjugation derivation path-independent);
//  (c) each quadratic relation sum_h eta_h a_{i_{h+1}} a_{i_h}
//      = lambda_C (1 - H_{g_C}) as a matrix identity.
inline VerifyReport verify_presentation(const RepModule& m, const Presentation& p) {
  if (p.real.group.size() != m.real.group.size() ||
      p.real.X.rack.size != m.real.X.rack.size)
    throw std::invalid_argument("module and presentation disagree on rack or group");
  VerifyReport rep;
  int n = m.real.X.group_n;
  int G = static_cast<int>(m.real.group.size());
  const Rack& rk = m.real.X.rack;

  rep.homomorphism = true;
  if (!(m.group_mat[m.real.identity] == Mat<ParamScalar>::identity(m.dim))) {
    rep.homomorphism = false;
    rep.failures.push_back("identity element does not act by the identity matrix");
  }
  for (int k = 1; k < n; ++k) {
    int s = m.real.group_index(adjacent_transposition(n, k));
    for (int t = 0; t < G; ++t)
      if (!(m.group_mat[s] * m.group_mat[t] == m.group_mat[m.real.mul[s][t]])) {
        rep.homomorphism = false;
        rep.failures.push_back("group product fails at s_" + std::to_string(k) + " * " +
                               m.real.group[t].cycle_string());
      }
  }

  rep.commutation = true;
  for (int k = 1; k < n; ++k) {
    int t = m.real.group_index(adjacent_transposition(n, k));
    int tinv = m.real.invert(t);
    for (int i = 0; i < rk.size; ++i) {
      int j = m.real.action[t][i];
      Mat<ParamScalar> lhs = m.group_mat[t] * m.gen_mat[i] * m.group_mat[tinv];
      Mat<ParamScalar> rhs = m.gen_mat[j].scaled(ParamScalar(m.real.chi[i][t]));
      if (!(lhs == rhs)) {
        rep.commutation = false;
        rep.failures.push_back("commutation fails at s_" + std::to_string(k) +
                               " on generator " + rk.labels[i]);
      }
    }
  }

  rep.relations = true;
  for (const Presentation::QuadraticRelation& rel : p.relations) {
    Mat<ParamScalar> lhs(m.dim, m.dim);
    for (const auto& [eta, pr] : rel.terms)
      lhs += (m.gen_mat[pr.first] * m.gen_mat[pr.second]).scaled(ParamScalar(eta));
    Mat<ParamScalar> rhs =
        (Mat<ParamScalar>::identity(m.dim) - m.group_mat[rel.g_c]).scaled(rel.lambda);
    if (!(lhs == rhs)) {
      rep.relations = false;
      std::string cls;
      for (int i : rel.cls.seq) cls += (cls.empty() ? "" : " ") + rk.labels[i];
      rep.failures.push_back("quadratic relation fails on the class {" + cls + "}");
    }
  }
  return rep;
}

struct LiftingConditions {
  bool group_faithful = false;       // only the identity acts trivially
  bool generator_outside_span = false;  // some a_i escapes the span of the H_t
  bool letters_separated = false;    // distinct letters realize distinct elements
  bool ok() const { return group_faithful && generator_outside_span && letters_separated; }
};

// The recognition conditions for the associated graded algebra.  The span
// test instantiates the parameters at a few fixed points; membership outside
// the span at any of them settles the generic statement, since the locus of
// parameters where a_i falls inside is Zariski-closed.
inline LiftingConditions check_lifting_conditions(const RepModule& m) {
  LiftingConditions out;
  int G = static_cast<int>(m.real.group.size());

  int trivial = 0;
  Mat<ParamScalar> id = Mat<ParamScalar>::identity(m.dim);
  for (int t = 0; t < G; ++t)
    if (m.group_mat[t] == id) ++trivial;
  out.group_faithful = trivial == 1;

  std::vector<int> sorted = m.real.letter_elem;
  std::sort(sorted.begin(), sorted.end());
  out.letters_separated =
      std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  const std::pair<long, long> points[] = {{1, 1}, {1, 0}, {0, 1}, {3, 2}};
  for (auto [L, Gm] : points) {
    GaussRational L0(L), G0(Gm);
    Echelon<GaussRational> span;
    for (int t = 0; t < G; ++t) {
      Echelon<GaussRational>::Row row;
      Mat<GaussRational> h = detail::eval_at(m.group_mat[t], L0, G0);
      for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
          if (!h.at(i, j).is_zero()) row[i * m.dim + j] = h.at(i, j);
      span.insert(std::move(row));
    }
    for (const Mat<ParamScalar>& a : m.gen_mat) {
      Echelon<GaussRational>::Row row;
      Mat<GaussRational> av = detail::eval_at(a, L0, G0);
      for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
          if (!av.at(i, j).is_zero()) row[i * m.dim + j] = av.at(i, j);
      if (!row.empty() && !span.in_span(std::move(row))) {
        out.generator_outside_span = true;
        break;
      }
    }
    if (out.generator_outside_span) break;
  }
  return out;
}

// Commutant test at an instantiated parameter point: the joint commutant of
// the adjacent-transposition matrices and all generator matrices (algebra
// generators, so their commutant is the full commutant) has dimension one
// exactly for irreducible modules.
inline bool is_irreducible(const RepModule& m, const GaussRational& L0,
                           const GaussRational& G0) {
  int n = m.real.X.group_n;
  std::vector<Mat<GaussRational>> gens;
  for (int k = 1; k < n; ++k)
    gens.push_back(detail::eval_at(
        m.group_mat[m.real.group_index(adjacent_transposition(n, k))], L0, G0));
  for (const Mat<ParamScalar>& a : m.gen_mat) gens.push_back(detail::eval_at(a, L0, G0));

  int d = m.dim;
  Echelon<GaussRational> rows;
  for (const Mat<GaussRational>& M : gens)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        // coefficient of X_{ab} in (X M - M X)_{ij}
        Echelon<GaussRational>::Row row;
        for (int b = 0; b < d; ++b)
          if (!M.at(b, j).is_zero()) row[i * d + b] += M.at(b, j);
        for (int a = 0; a < d; ++a)
          if (!M.at(i, a).is_zero()) row[a * d + j] -= M.at(i, a);
        for (auto it = row.begin(); it != row.end();)
          it = it->second.is_zero() ? row.erase(it) : std::next(it);
        if (!row.empty()) rows.insert(std::move(row));
      }
  return d * d - rows.rank() == 1;
}

}  // namespace nforge
