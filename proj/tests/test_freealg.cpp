#include <gtest/gtest.h>

#include <vector>

#include "nforge/builtins.hpp"
#include "nforge/freealg.hpp"
#include "nforge/nichols.hpp"

using namespace nforge;

namespace {

Word w(std::initializer_list<int> letters) {
  Word out;
  for (int l : letters) out.push_back(static_cast<char>(l));
  return out;
}

NCPoly poly(std::initializer_list<std::pair<Word, long>> terms) {
  NCPoly p;
  for (const auto& [word, c] : terms) poly_add_term(p, word, GaussRational(c));
  return p;
}

// coefficients of prod_k (1 + t + ... + t^{k-1}) over the given k's
std::vector<long> q_factorial_coeffs(std::initializer_list<int> ks) {
  std::vector<long> acc{1};
  for (int k : ks) {
    std::vector<long> next(acc.size() + k - 1, 0);
    for (std::size_t a = 0; a < acc.size(); ++a)
      for (int b = 0; b < k; ++b) next[a + b] += acc[a];
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

TEST(Freealg, DeglexOrder) {
  DeglexLess less;
  EXPECT_TRUE(less(w({1, 1}), w({0, 0, 0})));  // shorter first
  EXPECT_TRUE(less(w({0, 1}), w({1, 0})));     // then lex
  EXPECT_FALSE(less(w({1, 0}), w({1, 0})));
  NCPoly p = poly({{w({1, 0}), 1}, {w({0, 1}), 5}, {w({2}), 7}});
  EXPECT_EQ(leading_term(p).first, w({1, 0}));
}

TEST(Freealg, PolyArithmetic) {
  NCPoly p = poly({{w({0, 1}), 2}});
  poly_add_term(p, w({0, 1}), GaussRational(-2));
  EXPECT_TRUE(p.empty());
  NCPoly q = poly({{w({0}), 3}, {w({1}), -1}});
  NCPoly s = poly_scaled(q, GaussRational(rat(1, 3)));
  EXPECT_EQ(s.at(w({0})), GaussRational(1));
  int deg = -1;
  EXPECT_TRUE(poly_is_homogeneous(q, &deg));
  EXPECT_EQ(deg, 1);
  EXPECT_FALSE(poly_is_homogeneous(poly({{w({0}), 1}, {w({0, 1}), 1}})));
}

TEST(Freealg, FreeAlgebraCounts) {
  GroebnerBasis gb = groebner_complete(3, {}, 5);
  EXPECT_TRUE(gb.elems.empty());
  std::vector<mpz_class> dims = hilbert_dims(gb);
  ASSERT_EQ(dims.size(), 6u);
  mpz_class want = 1;
  for (int d = 0; d <= 5; ++d, want *= 3) EXPECT_EQ(dims[d], want) << d;
}

TEST(Freealg, CommutativePlane) {
  // yx - xy alone: no self-overlap, basis stays a single element
  GroebnerBasis gb =
      groebner_complete(2, {poly({{w({1, 0}), 1}, {w({0, 1}), -1}})}, 8);
  EXPECT_EQ(gb.elems.size(), 1u);
  std::vector<mpz_class> dims = hilbert_dims(gb);
  for (int d = 0; d <= 8; ++d) EXPECT_EQ(dims[d], d + 1) << d;
}

TEST(Freealg, OverlapResolvesToZero) {
  // xx and yx + xy: the single overlap reduces to zero, dims stay 1,2,2,2,...
  GroebnerBasis gb = groebner_complete(
      2, {poly({{w({0, 0}), 1}}), poly({{w({1, 0}), 1}, {w({0, 1}), 1}})}, 7);
  EXPECT_EQ(gb.elems.size(), 2u);
  std::vector<mpz_class> dims = hilbert_dims(gb);
  EXPECT_EQ(dims[0], 1);
  for (int d = 1; d <= 7; ++d) EXPECT_EQ(dims[d], 2) << d;
}

TEST(Freealg, ExteriorSquare) {
  GroebnerBasis gb = groebner_complete(
      2,
      {poly({{w({0, 0}), 1}}), poly({{w({1, 1}), 1}}),
       poly({{w({1, 0}), 1}, {w({0, 1}), 1}})},
      6);
  std::vector<mpz_class> dims = hilbert_dims(gb);
  std::vector<long> want{1, 2, 1, 0, 0, 0, 0};
  for (int d = 0; d <= 6; ++d) EXPECT_EQ(dims[d], want[d]) << d;
  DimensionBound b = dimension_bound(dims, 2);
  EXPECT_TRUE(b.terminated);
  EXPECT_EQ(b.top_degree, 2);
  EXPECT_EQ(b.total, 4);
  EXPECT_EQ(b.bound, 8);
}

TEST(Freealg, DuplicateGeneratorsCollapse) {
  NCPoly g = poly({{w({1, 0}), 1}, {w({0, 1}), -1}});
  GroebnerBasis gb = groebner_complete(2, {g, g, poly_scaled(g, GaussRational(7))}, 5);
  EXPECT_EQ(gb.elems.size(), 1u);
}

TEST(Freealg, NormalFormProperties) {
  BuiltinFixture fx = builtin_fixture("O2_3_minus");
  GradedDims gd = graded_dims(fx.X.rack, fx.q, 6);
  for (const NCPoly& g : relation_polys(fx.X.rack, fx.q))
    EXPECT_TRUE(normal_form(g, gd.gb).empty());
  NCPoly p = poly({{w({2, 1, 0}), 3}, {w({0, 0, 2}), -1}, {w({1, 1, 1}), 2}});
  NCPoly r = normal_form(p, gd.gb);
  EXPECT_EQ(normal_form(r, gd.gb), r);
  // p - NF(p) lies in the degree-3 component of the ideal
  Echelon<GaussRational> span;
  auto encode = [&](const Word& word) {
    long x = 0;
    for (char ch : word) x = x * fx.X.rack.size + static_cast<unsigned char>(ch);
    return x;
  };
  for (int la = 0; la <= 1; ++la)
    for (int c = 0; c < fx.X.rack.size; ++c)
      for (const NCPoly& g : relation_polys(fx.X.rack, fx.q)) {
        Echelon<GaussRational>::Row row;
        for (const auto& [word, coeff] : g) {
          Word full = la == 0 ? word + static_cast<char>(c)
                              : static_cast<char>(c) + word;
          row[encode(full)] = coeff;
        }
        span.insert(std::move(row));
      }
  NCPoly diff = p;
  for (const auto& [word, coeff] : r) poly_add_term(diff, word, -coeff);
  Echelon<GaussRational>::Row vec;
  for (const auto& [word, coeff] : diff) vec[encode(word)] = coeff;
  EXPECT_TRUE(span.in_span(vec));
  // and NF(p) itself does not, unless it were zero
  Echelon<GaussRational>::Row nfvec;
  for (const auto& [word, coeff] : r) nfvec[encode(word)] = coeff;
  ASSERT_FALSE(r.empty());
  EXPECT_FALSE(span.in_span(nfvec));
}

TEST(Freealg, TriangleFixtureDims) {
  BuiltinFixture fx = builtin_fixture("O2_3_minus");
  GradedDims gd = graded_dims(fx.X.rack, fx.q, 6);
  std::vector<long> want{1, 3, 4, 3, 1, 0, 0};
  ASSERT_EQ(gd.dims.size(), want.size());
  for (std::size_t d = 0; d < want.size(); ++d) EXPECT_EQ(gd.dims[d], want[d]) << d;
  DimensionBound b = dimension_bound(gd.dims, 6);
  EXPECT_TRUE(b.terminated);
  EXPECT_EQ(b.total, 12);
  EXPECT_EQ(b.top_degree, 4);
  EXPECT_EQ(b.bound, 72);
}

TEST(Freealg, TruncationTooLowIsFlagged) {
  BuiltinFixture fx = builtin_fixture("O2_3_minus");
  GradedDims gd = graded_dims(fx.X.rack, fx.q, 3);
  EXPECT_FALSE(dimension_bound(gd.dims, 6).terminated);
}

TEST(Freealg, DeterminismAcrossThreads) {
  BuiltinFixture fx = builtin_fixture("O2_4_chi");
  GradedDims one = graded_dims(fx.X.rack, fx.q, 7, 1);
  GradedDims four = graded_dims(fx.X.rack, fx.q, 7, 4);
  ASSERT_EQ(one.gb.elems.size(), four.gb.elems.size());
  EXPECT_EQ(one.gb.leads, four.gb.leads);
  for (std::size_t k = 0; k < one.gb.elems.size(); ++k)
    EXPECT_EQ(one.gb.elems[k], four.gb.elems[k]) << k;
  EXPECT_EQ(one.dims, four.dims);
}

TEST(Freealg, EliminationOracleTriangle) {
  BuiltinFixture fx = builtin_fixture("O2_3_minus");
  GradedDims gd = graded_dims(fx.X.rack, fx.q, 5);
  for (int d = 2; d <= 5; ++d)
    EXPECT_EQ(gd.dims[d], graded_dim_by_elimination(fx.X.rack, fx.q, d)) << d;
}

TEST(Freealg, EliminationOracleSymmetric4) {
  for (const char* name : {"O2_4_minus", "O2_4_chi", "O4_4_minus"}) {
    BuiltinFixture fx = builtin_fixture(name);
    GradedDims gd = graded_dims(fx.X.rack, fx.q, 4);
    for (int d = 2; d <= 4; ++d)
      EXPECT_EQ(gd.dims[d], graded_dim_by_elimination(fx.X.rack, fx.q, d))
          << name << " degree " << d;
  }
  BuiltinFixture fx = builtin_fixture("O2_4_chi");
  GradedDims gd = graded_dims(fx.X.rack, fx.q, 5);
  EXPECT_EQ(gd.dims[5], graded_dim_by_elimination(fx.X.rack, fx.q, 5));
}

TEST(Freealg, EliminationOracleSymmetric5) {
  // ten letters: elimination stays affordable through degree 3
  for (const char* name : {"O2_5_minus", "O2_5_chi"}) {
    BuiltinFixture fx = builtin_fixture(name);
    GradedDims gd = graded_dims(fx.X.rack, fx.q, 3);
    for (int d = 2; d <= 3; ++d)
      EXPECT_EQ(gd.dims[d], graded_dim_by_elimination(fx.X.rack, fx.q, d))
          << name << " degree " << d;
  }
}

TEST(Freealg, ChiFixtureFullVector) {
  BuiltinFixture fx = builtin_fixture("O2_4_chi");
  GradedDims gd = graded_dims(fx.X.rack, fx.q, 13);
  std::vector<long> want = q_factorial_coeffs({2, 2, 3, 3, 4, 4});
  ASSERT_EQ(want.size(), 13u);  // top degree 12
  for (int d = 0; d <= 12; ++d) EXPECT_EQ(gd.dims[d], want[d]) << d;
  EXPECT_EQ(gd.dims[13], 0);
  DimensionBound b = dimension_bound(gd.dims, 24);
  EXPECT_TRUE(b.terminated);
  EXPECT_EQ(b.total, 576);
  EXPECT_EQ(b.top_degree, 12);
}
