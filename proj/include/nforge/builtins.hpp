#pragma once

// Named built-in (rack, cocycle) fixtures used by the CLI and the test suite.

#include <stdexcept>
#include <string>
#include <vector>

#include "nforge/cocycle.hpp"
#include "nforge/rack.hpp"

namespace nforge {

struct BuiltinFixture {
  std::string name;
  ClassRack X;
  Cocycle q;
};

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "O2_3_minus", "O2_4_minus", "O2_4_chi",
      "O4_4_minus", "O2_5_minus", "O2_5_chi"};
  return names;
}

inline BuiltinFixture builtin_fixture(const std::string& name) {
  BuiltinFixture f;
  f.name = name;
  if (name == "O2_3_minus") {
    f.X = conjugacy_class_rack(3, transposition(3, 1, 2));
    f.q = constant_cocycle(f.X.rack, GaussRational(-1));
  } else if (name == "O2_4_minus") {
    f.X = conjugacy_class_rack(4, transposition(4, 1, 2));
    f.q = constant_cocycle(f.X.rack, GaussRational(-1));
  } else if (name == "O2_4_chi") {
    f.X = conjugacy_class_rack(4, transposition(4, 1, 2));
    f.q = chi_cocycle(f.X);
  } else if (name == "O4_4_minus") {
    f.X = conjugacy_class_rack(4, perm_from_cycles(4, "(1234)"));
    f.q = constant_cocycle(f.X.rack, GaussRational(-1));
  } else if (name == "O2_5_minus") {
    f.X = conjugacy_class_rack(5, transposition(5, 1, 2));
    f.q = constant_cocycle(f.X.rack, GaussRational(-1));
  } else if (name == "O2_5_chi") {
    f.X = conjugacy_class_rack(5, transposition(5, 1, 2));
    f.q = chi_cocycle(f.X);
  } else {
    throw std::invalid_argument("unknown builtin: " + name);
  }
  return f;
}

// Known top-degree survivor words with an explicit derivation chain whose
// scalar value is nonzero. Letters are rack labels; chains are outermost
// first, so the last listed derivation acts first.
struct SurvivorCertificate {
  std::string fixture;
  std::vector<std::string> word;
  std::vector<std::string> chain;
};

inline SurvivorCertificate survivor_certificate_s4() {
  // degree 12 in (transpositions of 4 letters, chi)
  SurvivorCertificate c;
  c.fixture = "O2_4_chi";
  auto L = [](char letter) -> std::string {
    switch (letter) {
      case 'a': return "(12)";
      case 'b': return "(13)";
      case 'c': return "(14)";
      case 'd': return "(23)";
      case 'e': return "(24)";
      case 'f': return "(34)";
    }
    throw std::logic_error("bad letter");
  };
  for (char ch : std::string("abacabacdedf")) c.word.push_back(L(ch));
  for (char ch : std::string("cbcabdcbfdfe")) c.chain.push_back(L(ch));
  return c;
}

inline SurvivorCertificate survivor_certificate_s5() {
  // degree 40 in (transpositions of 5 letters, chi); evaluation is heavy and
  // sits behind long-running gates
  SurvivorCertificate c;
  c.fixture = "O2_5_chi";
  auto L = [](char letter) -> std::string {
    switch (letter) {
      case 'a': return "(12)";
      case 'b': return "(13)";
      case 'c': return "(14)";
      case 'd': return "(23)";
      case 'e': return "(24)";
      case 'f': return "(34)";
      case 'g': return "(15)";
      case 'h': return "(25)";
      case 'k': return "(35)";
      case 'm': return "(45)";
    }
    throw std::logic_error("bad letter");
  };
  for (char ch : std::string("abadabadgabadabadgabagdabadgcechcechfkfm"))
    c.word.push_back(L(ch));
  for (char ch : std::string("kmfmehfechehgkcbmdc"
                             "emgekgchegkdegkbadcab"))
    c.chain.push_back(L(ch));
  return c;
}

}  // namespace nforge
