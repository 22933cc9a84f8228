#include <gtest/gtest.h>

#include "nforge/builtins.hpp"
#include "nforge/rack.hpp"

using namespace nforge;

TEST(Rack, ConjugacyClassRacksSatisfyAxioms) {
  for (const std::string& name : builtin_names()) {
    BuiltinFixture f = builtin_fixture(name);
    EXPECT_TRUE(check_rack_axioms(f.X.rack).ok()) << name;
  }
}

TEST(Rack, TranspositionRackTable) {
  ClassRack X = conjugacy_class_rack(4, transposition(4, 1, 2));
  EXPECT_EQ(X.rack.size, 6);
  const Rack& r = X.rack;
  int i12 = r.label_index("(12)"), i13 = r.label_index("(13)");
  int i23 = r.label_index("(23)"), i34 = r.label_index("(34)");
  EXPECT_EQ(r.op(i12, i13), i23);  // (12)(13)(12) = (23)
  EXPECT_EQ(r.op(i12, i34), i34);  // disjoint supports commute
  EXPECT_EQ(r.op(i12, i12), i12);
  // the realizing permutations match the table
  for (int i = 0; i < r.size; ++i)
    for (int j = 0; j < r.size; ++j)
      EXPECT_EQ(X.elems[r.op(i, j)], conjugate(X.elems[i], X.elems[j]));
}

TEST(Rack, FourCycleRack) {
  ClassRack X = conjugacy_class_rack(4, perm_from_cycles(4, "(1234)"));
  EXPECT_EQ(X.rack.size, 6);
  EXPECT_TRUE(check_rack_axioms(X.rack).ok());
  int a = X.rack.label_index("(1234)"), b = X.rack.label_index("(1432)");
  EXPECT_EQ(X.rack.op(a, b), b);  // a rack element commutes with its inverse
}

TEST(Rack, InverseRack) {
  for (const std::string& name : {"O2_4_minus", "O4_4_minus"}) {
    BuiltinFixture f = builtin_fixture(name);
    Rack inv = inverse_rack(f.X.rack);
    EXPECT_TRUE(check_rack_axioms(inv).ok()) << name;
    // i >inv j recovers j from i > j, both ways
    for (int i = 0; i < inv.size; ++i)
      for (int j = 0; j < inv.size; ++j) {
        EXPECT_EQ(f.X.rack.op(i, inv.op(i, j)), j);
        EXPECT_EQ(inv.op(i, f.X.rack.op(i, j)), j);
      }
    // for conjugation racks this is conjugation by the inverse element
    for (int i = 0; i < inv.size; ++i)
      for (int j = 0; j < inv.size; ++j)
        EXPECT_EQ(f.X.elems[inv.op(i, j)],
                  conjugate(f.X.elems[i].inverse(), f.X.elems[j]));
  }
}

TEST(Rack, FaithfulAndIndecomposable) {
  for (const std::string& name : builtin_names()) {
    BuiltinFixture f = builtin_fixture(name);
    EXPECT_TRUE(is_faithful(f.X.rack)) << name;
    EXPECT_TRUE(is_indecomposable(f.X.rack)) << name;
  }
  // trivial rack: every translation is the identity
  Rack t = rack_from_table({"a", "b"}, {{0, 1}, {0, 1}});
  EXPECT_TRUE(check_rack_axioms(t).ok());
  EXPECT_FALSE(is_faithful(t));
  EXPECT_FALSE(is_indecomposable(t));
}

TEST(Rack, AxiomCheckerReportsFailingTriples) {
  // dihedral rack on Z_3 (i > j = 2i - j): a valid non-conjugation example
  Rack dihedral = rack_from_table({"0", "1", "2"},
                                  {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  EXPECT_TRUE(check_rack_axioms(dihedral).ok());
  // a genuinely broken table: swap two entries of a sharp example
  BuiltinFixture f = builtin_fixture("O2_3_minus");
  Rack broken = f.X.rack;
  std::swap(broken.table[0][1], broken.table[0][2]);
  RackReport r2 = check_rack_axioms(broken);
  EXPECT_TRUE(r2.rows_bijective);
  EXPECT_FALSE(r2.self_distributive);
  EXPECT_FALSE(r2.failures.empty());
}

TEST(Rack, NonBijectiveRowRejected) {
  RackReport rep;
  Rack bad;
  bad.size = 2;
  bad.labels = {"a", "b"};
  bad.table = {{0, 0}, {1, 1}};
  rep = check_rack_axioms(bad);
  EXPECT_FALSE(rep.rows_bijective);
  EXPECT_THROW(bad.finalize(), std::invalid_argument);
}
