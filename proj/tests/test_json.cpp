#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "nforge/builtins.hpp"
#include "nforge/io_json.hpp"
#include "nforge/nichols.hpp"

using namespace nforge;
using Q = GaussRational;

namespace {
std::string temp_dir() {
  std::string dir = ::testing::TempDir();
  if (!dir.empty() && dir.back() == '/') dir.pop_back();
  return dir;
}
}  // namespace

TEST(JsonScalars, GaussRoundTrip) {
  for (const Q& z : {Q(0), Q(-7), Q(rat(3, 2)), Q::unit_i(),
                     Q(rat(-1, 3), rat(2, 5)), Q(rat(0), rat(-1))}) {
    EXPECT_EQ(gauss_from_json(gauss_to_json(z)), z);
    EXPECT_EQ(gauss_from_json(Json(to_string(z))), z);  // string form
  }
  EXPECT_EQ(gauss_from_json(Json(4)), Q(4));  // bare integer form
}

TEST(JsonScalars, MalformedGaussRejected) {
  EXPECT_THROW(gauss_from_json(Json("2//3")), FixtureError);
  EXPECT_THROW(gauss_from_json(Json("")), FixtureError);
  EXPECT_THROW(gauss_from_json(Json::array()), FixtureError);
  EXPECT_THROW(gauss_from_json(Json{{"re", "1"}}), FixtureError);
  EXPECT_THROW(gauss_from_json(Json{{"re", "1/0"}, {"im", "0"}}), FixtureError);
}

TEST(JsonScalars, ParamRoundTrip) {
  ParamScalar p = ParamScalar(2) * ParamScalar::lambda() -
                  ParamScalar(Q(rat(3, 2))) * ParamScalar::gamma() +
                  ParamScalar(Q(rat(1), rat(1)));
  ParamScalar back = param_from_json(param_to_json(p));
  EXPECT_EQ(back, p);
  EXPECT_EQ(param_from_json(param_to_json(ParamScalar())), ParamScalar());
  EXPECT_THROW(param_from_json(Json{{"poly", Json::array({Json::array({1, 2})})}}),
               FixtureError);
  EXPECT_THROW(param_from_json(Json::array()), FixtureError);
}

TEST(JsonRack, RoundTrip) {
  for (const std::string& name : builtin_names()) {
    const Rack& X = builtin_fixture(name).X.rack;
    Rack back = rack_from_json(rack_to_json(X));
    EXPECT_EQ(back.size, X.size) << name;
    EXPECT_EQ(back.labels, X.labels) << name;
    EXPECT_EQ(back.table, X.table) << name;
    ASSERT_TRUE(check_rack_axioms(back).ok()) << name;
    back.finalize();
    for (int i = 0; i < X.size; ++i)
      for (int j = 0; j < X.size; ++j)
        EXPECT_EQ(back.op_inv(i, j), X.op_inv(i, j));
  }
}

TEST(JsonRack, MalformedShapesRejected) {
  Json good = rack_to_json(builtin_fixture("O2_3_minus").X.rack);

  Json missing = good;
  missing.erase("table");
  EXPECT_THROW(rack_from_json(missing), FixtureError);

  Json ragged = good;
  ragged["table"][1].erase(0);
  EXPECT_THROW(rack_from_json(ragged), FixtureError);

  Json out_of_range = good;
  out_of_range["table"][0][0] = 99;
  EXPECT_THROW(rack_from_json(out_of_range), FixtureError);

  Json bad_labels = good;
  bad_labels["labels"] = Json::array({"x"});
  EXPECT_THROW(rack_from_json(bad_labels), FixtureError);

  EXPECT_THROW(rack_from_json(Json{{"size", 0}, {"labels", Json::array()},
                                   {"table", Json::array()}}),
               FixtureError);
}

TEST(JsonRack, AxiomFailureIsSemanticNotShape) {
  // constant rows are bijection failures: the file loads, the check reports
  Json j = rack_to_json(builtin_fixture("O2_3_minus").X.rack);
  for (auto& v : j["table"][0]) v = 0;
  Rack X = rack_from_json(j);
  EXPECT_FALSE(check_rack_axioms(X).rows_bijective);
}

TEST(JsonCocycle, RoundTrip) {
  for (const std::string& name : {std::string("O2_4_chi"), std::string("O2_3_minus")}) {
    BuiltinFixture f = builtin_fixture(name);
    CocycleFile back = cocycle_from_json(cocycle_to_json(f.X.rack, f.q));
    EXPECT_EQ(back.rack.table, f.X.rack.table);
    for (int i = 0; i < f.X.rack.size; ++i)
      for (int j = 0; j < f.X.rack.size; ++j)
        EXPECT_EQ(back.q(i, j), f.q(i, j)) << name;
  }
}

TEST(JsonCocycle, MalformedShapesRejected) {
  BuiltinFixture f = builtin_fixture("O2_3_minus");
  Json good = cocycle_to_json(f.X.rack, f.q);

  Json no_values = good;
  no_values.erase("values");
  EXPECT_THROW(cocycle_from_json(no_values), FixtureError);

  Json short_row = good;
  short_row["values"][0].erase(0);
  EXPECT_THROW(cocycle_from_json(short_row), FixtureError);

  Json bad_scalar = good;
  bad_scalar["values"][0][0] = "one";
  EXPECT_THROW(cocycle_from_json(bad_scalar), FixtureError);
}

TEST(JsonReports, RelationsListIsLabeledAndParsesBack) {
  BuiltinFixture f = builtin_fixture("O2_3_minus");
  Json rels = relations_to_json(f.X.rack, quadratic_basis(f.X.rack, f.q));
  ASSERT_EQ(rels.size(), 5u);  // squares 3 + triangles 2
  for (const Json& rel : rels) {
    EXPECT_TRUE(rel.contains("label"));
    EXPECT_EQ(rel.at("class").size(), rel.at("class_size").get<std::size_t>());
    for (const Json& term : rel.at("terms")) {
      ASSERT_EQ(term.size(), 3u);
      EXPECT_FALSE(gauss_from_string(term[0].get<std::string>()).is_zero());
    }
  }
}

TEST(JsonReports, HilbertReportShape) {
  std::vector<mpz_class> dims{1, 3, 4, 3, 1, 0};
  Json h = hilbert_to_json(dims, 9);
  EXPECT_EQ(h.at("total").get<std::string>(), "12");
  EXPECT_EQ(h.at("top_degree").get<int>(), 4);
  EXPECT_EQ(h.at("gb_size").get<std::size_t>(), 9u);
  EXPECT_EQ(h.at("dims").size(), 6u);
  EXPECT_EQ(h.at("dims")[2].get<std::string>(), "4");
}

TEST(JsonCache, StoreAndReload) {
  BuiltinFixture f = builtin_fixture("O2_3_minus");
  GradedDims gd = graded_dims(f.X.rack, f.q, 5);
  std::string key = gb_cache_key(f.X.rack, f.q, 5);
  gb_cache_store(temp_dir(), key, gd);

  auto loaded = gb_cache_load(temp_dir(), key);
  ASSERT_TRUE(loaded.has_value());
  EXPECT_EQ(loaded->dims, gd.dims);
  EXPECT_EQ(loaded->gb.elems, gd.gb.elems);
  EXPECT_EQ(loaded->gb.leads, gd.gb.leads);
  EXPECT_EQ(loaded->gb.max_degree, 5);
}

TEST(JsonCache, KeySeparatesInputs) {
  BuiltinFixture a = builtin_fixture("O2_4_minus");
  BuiltinFixture b = builtin_fixture("O2_4_chi");
  EXPECT_NE(gb_cache_key(a.X.rack, a.q, 5), gb_cache_key(b.X.rack, b.q, 5));
  EXPECT_NE(gb_cache_key(a.X.rack, a.q, 5), gb_cache_key(a.X.rack, a.q, 6));
}

TEST(JsonCache, RejectsMismatchedOrCorruptEntries) {
  BuiltinFixture f = builtin_fixture("O2_3_minus");
  GradedDims gd = graded_dims(f.X.rack, f.q, 4);
  std::string key = gb_cache_key(f.X.rack, f.q, 4);

  EXPECT_FALSE(gb_cache_load(temp_dir(), "0000000000000000").has_value());

  // an entry stored under one key never answers for another
  gb_cache_store(temp_dir(), key, gd);
  std::rename((temp_dir() + "/" + key + ".json").c_str(),
              (temp_dir() + "/aaaaaaaaaaaaaaaa.json").c_str());
  EXPECT_FALSE(gb_cache_load(temp_dir(), "aaaaaaaaaaaaaaaa").has_value());

  // version bumps invalidate
  Json j = graded_to_cache_json(key, gd);
  j["format_version"] = kCacheFormatVersion + 1;
  std::ofstream(temp_dir() + "/" + key + ".json") << j;
  EXPECT_FALSE(gb_cache_load(temp_dir(), key).has_value());

  // syntactically broken files are ignored
  std::ofstream(temp_dir() + "/" + key + ".json") << "{not json";
  EXPECT_FALSE(gb_cache_load(temp_dir(), key).has_value());
}

TEST(JsonFiles, LoadErrors) {
  EXPECT_THROW(load_json_file(temp_dir() + "/does-not-exist.json"), FixtureError);
  std::string path = temp_dir() + "/broken.json";
  std::ofstream(path) << "[1, 2,";
  EXPECT_THROW(load_json_file(path), FixtureError);
}
