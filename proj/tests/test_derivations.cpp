#include <gtest/gtest.h>

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "nforge/builtins.hpp"
#include "nforge/deriv.hpp"
#include "nforge/nichols.hpp"

using namespace nforge;

namespace {

// First-principles comparison object: the braided coproduct on the tensor
// square, built only from the elementary crossing
//   x_a (x) x_b  |->  q_{ab} x_{a>b} (x) x_a
// and the twisted multiplication (a (x) b)(c (x) d) = a sigma(b (x) c) d.
using Tensor2 = std::map<std::pair<Word, Word>, GaussRational>;

void tensor_add(Tensor2& t, std::pair<Word, Word> key, const GaussRational& c) {
  if (c.is_zero()) return;
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t.erase(it);
}

// sigma on blocks: crosses every letter of u over v one elementary step at a
// time (last letter of u first); u emerges unchanged, v letterwise conjugated.
std::pair<GaussRational, Word> cross_blocks(const Rack& X, const Cocycle& q,
                                            const Word& u, const Word& v) {
  GaussRational coeff(1);
  Word cur = v;
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    int a = static_cast<unsigned char>(*it);
    Word next;
    for (char ch : cur) {
      int b = static_cast<unsigned char>(ch);
      coeff *= q(a, b);
      next.push_back(static_cast<char>(X.op(a, b)));
    }
    cur = std::move(next);
  }
  return {coeff, cur};
}

Tensor2 coproduct(const Rack& X, const Cocycle& q, const Word& w) {
  Tensor2 cur;
  cur.emplace(std::make_pair(Word(), Word()), GaussRational(1));
  for (char ch : w) {
    int i = static_cast<unsigned char>(ch);
    Tensor2 next;
    for (const auto& [ab, c] : cur) {
      const auto& [a, b] = ab;
      auto [coeff, img] = cross_blocks(X, q, b, Word(1, static_cast<char>(i)));
      tensor_add(next, {a + img, b}, c * coeff);
      tensor_add(next, {a, b + static_cast<char>(i)}, c);
    }
    cur = std::move(next);
  }
  return cur;
}

// coefficient of (.) (x) x_j in the coproduct
NCPoly delta_from_coproduct(const Rack& X, const Cocycle& q, int j, const Word& w) {
  NCPoly out;
  for (const auto& [ab, c] : coproduct(X, q, w))
    if (ab.second == Word(1, static_cast<char>(j))) poly_add_term(out, ab.first, c);
  return out;
}

std::vector<Word> all_words(int nletters, int length) {
  std::vector<Word> out{Word()};
  for (int l = 0; l < length; ++l) {
    std::vector<Word> next;
    for (const Word& w : out)
      for (int a = 0; a < nletters; ++a) next.push_back(w + static_cast<char>(a));
    out = std::move(next);
  }
  return out;
}

NCPoly mono(const Word& w) {
  NCPoly p;
  poly_add_term(p, w, GaussRational(1));
  return p;
}

}  // namespace

TEST(Derivations, MatchesBraidedCoproduct) {
  for (const std::string& name : builtin_names()) {
    BuiltinFixture fx = builtin_fixture(name);
    const Rack& X = fx.X.rack;
    for (int len = 1; len <= 4; ++len)
      for (const Word& w : all_words(X.size, len))
        for (int j = 0; j < X.size; ++j)
          ASSERT_EQ(delta(X, fx.q, j, mono(w)), delta_from_coproduct(X, fx.q, j, w))
              << name << " len " << len << " j " << j;
  }
}

TEST(Derivations, KillsDefiningRelations) {
  for (const std::string& name : builtin_names()) {
    BuiltinFixture fx = builtin_fixture(name);
    for (const NCPoly& rel : relation_polys(fx.X.rack, fx.q))
      for (int j = 0; j < fx.X.rack.size; ++j)
        EXPECT_TRUE(delta(fx.X.rack, fx.q, j, rel).empty()) << name << " j " << j;
  }
}

TEST(Derivations, TwistedLeibnizRule) {
  std::mt19937 rng(20240817);
  for (const std::string& name : {std::string("O2_3_minus"), std::string("O2_4_chi"),
                                  std::string("O2_5_chi")}) {
    BuiltinFixture fx = builtin_fixture(name);
    const Rack& X = fx.X.rack;
    std::uniform_int_distribution<int> letter(0, X.size - 1), len(0, 3);
    for (int trial = 0; trial < 60; ++trial) {
      Word u, v;
      for (int k = len(rng); k-- > 0;) u.push_back(static_cast<char>(letter(rng)));
      for (int k = len(rng); k-- > 0;) v.push_back(static_cast<char>(letter(rng)));
      int j = letter(rng);
      // delta_j(uv) = u delta_j(v) + (prod_l q_{j,v_l}) delta_j(u) (j>v)
      NCPoly lhs = delta(X, fx.q, j, mono(u + v));
      NCPoly rhs;
      for (const auto& [w, c] : delta(X, fx.q, j, mono(v)))
        poly_add_term(rhs, u + w, c);
      GaussRational twist(1);
      Word jv;
      for (char ch : v) {
        int b = static_cast<unsigned char>(ch);
        twist *= fx.q(j, b);
        jv.push_back(static_cast<char>(X.op(j, b)));
      }
      for (const auto& [w, c] : delta(X, fx.q, j, mono(u)))
        poly_add_term(rhs, w + jv, c * twist);
      ASSERT_EQ(lhs, rhs) << name << " trial " << trial;
    }
  }
}

TEST(Derivations, ChainAppliesRightToLeft) {
  BuiltinFixture fx = builtin_fixture("O2_3_minus");
  const Rack& X = fx.X.rack;
  Word w = word_from_labels(X, {"(12)", "(13)", "(12)"});
  std::vector<int> ops = letters_from_labels(X, {"(13)", "(12)"});
  NCPoly by_chain = derivation_chain(X, fx.q, ops, mono(w));
  NCPoly by_hand = delta(X, fx.q, ops[0], delta(X, fx.q, ops[1], mono(w)));
  EXPECT_EQ(by_chain, by_hand);
}

TEST(Derivations, DegreeDropAndLinearity) {
  BuiltinFixture fx = builtin_fixture("O2_4_minus");
  const Rack& X = fx.X.rack;
  NCPoly p = mono(word_from_labels(X, {"(12)", "(23)", "(34)"}));
  NCPoly r = delta(X, fx.q, X.label_index("(23)"), p);
  ASSERT_FALSE(r.empty());
  int deg = -1;
  EXPECT_TRUE(poly_is_homogeneous(r, &deg));
  EXPECT_EQ(deg, 2);
  NCPoly q2 = mono(word_from_labels(X, {"(23)", "(14)", "(23)"}));
  NCPoly sum = p;
  for (const auto& [w, c] : q2) poly_add_term(sum, w, c);
  NCPoly lhs = delta(X, fx.q, X.label_index("(23)"), sum);
  NCPoly rhs = delta(X, fx.q, X.label_index("(23)"), p);
  for (const auto& [w, c] : delta(X, fx.q, X.label_index("(23)"), q2))
    poly_add_term(rhs, w, c);
  EXPECT_EQ(lhs, rhs);
}

TEST(Derivations, TopDegreeSurvivorCertificate) {
  SurvivorCertificate cert = survivor_certificate_s4();
  BuiltinFixture fx = builtin_fixture(cert.fixture);
  const Rack& X = fx.X.rack;
  ASSERT_EQ(cert.word.size(), 12u);
  ASSERT_EQ(cert.chain.size(), 12u);
  NCPoly value = derivation_chain(X, fx.q, letters_from_labels(X, cert.chain),
                                  mono(word_from_labels(X, cert.word)), 10000000ULL);
  GaussRational scalar = constant_term(value);
  EXPECT_FALSE(scalar.is_zero());
}

TEST(Derivations, SearchFindsTriangleTopCertificate) {
  BuiltinFixture fx = builtin_fixture("O2_3_minus");
  const Rack& X = fx.X.rack;
  bool any = false;
  for (const Word& w : all_words(X.size, 4)) {
    CertificateSearch s = find_nonzero_certificate(X, fx.q, w, 100000);
    EXPECT_FALSE(s.budget_exhausted);
    if (!s.found) continue;
    any = true;
    ASSERT_EQ(s.chain.size(), 4u);
    NCPoly replay = derivation_chain(X, fx.q, s.chain, mono(w));
    EXPECT_EQ(constant_term(replay), s.scalar);
    EXPECT_FALSE(s.scalar.is_zero());
  }
  EXPECT_TRUE(any);
}

TEST(Derivations, SearchRejectsVanishingWord) {
  BuiltinFixture fx = builtin_fixture("O2_3_minus");
  const Rack& X = fx.X.rack;
  Word w = word_from_labels(X, {"(12)", "(12)"});  // a defining relation
  CertificateSearch s = find_nonzero_certificate(X, fx.q, w);
  EXPECT_FALSE(s.found);
  EXPECT_FALSE(s.budget_exhausted);
}

TEST(Derivations, SearchFindsTwelveLetterCertificate) {
  SurvivorCertificate cert = survivor_certificate_s4();
  BuiltinFixture fx = builtin_fixture(cert.fixture);
  const Rack& X = fx.X.rack;
  Word w = word_from_labels(X, cert.word);
  CertificateSearch s = find_nonzero_certificate(X, fx.q, w);
  ASSERT_TRUE(s.found);
  ASSERT_EQ(s.chain.size(), 12u);
  NCPoly replay = derivation_chain(X, fx.q, s.chain, mono(w));
  EXPECT_EQ(constant_term(replay), s.scalar);
  EXPECT_FALSE(s.scalar.is_zero());
}

TEST(Derivations, SearchReportsExhaustedBudget) {
  SurvivorCertificate cert = survivor_certificate_s4();
  BuiltinFixture fx = builtin_fixture(cert.fixture);
  const Rack& X = fx.X.rack;
  // the very first delta materializes more than three terms
  CertificateSearch s =
      find_nonzero_certificate(X, fx.q, word_from_labels(X, cert.word), 3);
  EXPECT_FALSE(s.found);
  EXPECT_TRUE(s.budget_exhausted);
  EXPECT_LE(s.terms_used, 3u + 12u);  // one delta may overshoot by a word's worth
}

TEST(Derivations, ChainTermCapTrips) {
  BuiltinFixture fx = builtin_fixture("O2_4_chi");
  const Rack& X = fx.X.rack;
  // (12) hits both ends of the word, leaving two distinct images
  Word w = word_from_labels(X, {"(12)", "(23)", "(12)"});
  std::vector<int> ops = letters_from_labels(X, {"(12)"});
  ASSERT_EQ(delta(X, fx.q, ops[0], mono(w)).size(), 2u);
  EXPECT_THROW(derivation_chain(X, fx.q, ops, mono(w), 1), TermCapExceeded);
  EXPECT_NO_THROW(derivation_chain(X, fx.q, ops, mono(w), 2));
}
