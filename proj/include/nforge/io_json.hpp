#pragma once

// JSON readers and writers for the documented file formats — racks, cocycles,
// relation lists, per-command reports — plus the optional on-disk Groebner
// cache keyed by an input hash.
//
//   rack file     {"size": n, "labels": [...], "table": [[...]]}
//   cocycle file  {"rack": <rack>, "values": [["1","-1",...], ...]}
//   scalars       "p/q", "p/qi", "a+b/ci" (canonical string forms), or the
//                 object form {"re": "p/q", "im": "p/q"}
//   parameters    {"poly": [[lambda_exp, gamma_exp, "re", "im"], ...]}

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nforge/cocycle.hpp"
#include "nforge/freealg.hpp"
#include "nforge/nichols.hpp"
#include "nforge/param.hpp"
#include "nforge/quadratic.hpp"
#include "nforge/rack.hpp"
#include "nforge/scalars.hpp"

namespace nforge {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

// Raised when a file does not match the documented shapes. Kept distinct from
// semantic validation failures (failing axioms, bad cocycle values) so callers
// can map shape problems to usage errors and semantic ones to check reports.
struct FixtureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// scalars

inline Json gauss_to_json(const GaussRational& z) {
  return Json{{"re", to_string(z.re)}, {"im", to_string(z.im)}};
}

inline GaussRational gauss_from_json(const Json& j) {
  try {
    if (j.is_string()) return gauss_from_string(j.get<std::string>());
    if (j.is_number_integer()) return GaussRational(j.get<long>());
    if (j.is_object() && j.contains("re") && j.contains("im"))
      return GaussRational(rational_from_string(j.at("re").get<std::string>()),
                           rational_from_string(j.at("im").get<std::string>()));
  } catch (const std::invalid_argument& e) {
    throw FixtureError(std::string("bad scalar: ") + e.what());
  }
  throw FixtureError("scalar must be a string, an integer, or {re, im}");
}

inline Json param_to_json(const ParamScalar& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms)
    terms.push_back(Json::array(
        {e.first, e.second, to_string(c.re), to_string(c.im)}));
  return Json{{"poly", std::move(terms)}};
}

inline ParamScalar param_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("poly") || !j.at("poly").is_array())
    throw FixtureError("parameter scalar must be {poly: [[a, b, re, im], ...]}");
  ParamScalar out;
  for (const Json& t : j.at("poly")) {
    if (!t.is_array() || t.size() != 4)
      throw FixtureError("parameter term must be [a, b, re, im]");
    try {
      out.add_term({t[0].get<int>(), t[1].get<int>()},
                   GaussRational(rational_from_string(t[2].get<std::string>()),
                                 rational_from_string(t[3].get<std::string>())));
    } catch (const std::invalid_argument& e) {
      throw FixtureError(std::string("bad parameter term: ") + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// racks and cocycles

inline Json rack_to_json(const Rack& X) {
  Json table = Json::array();
  for (const auto& row : X.table) table.push_back(row);
  return Json{{"size", X.size}, {"labels", X.labels}, {"table", std::move(table)}};
}

// Loads carrier, labels and table without building the inverse translations,
// so that files failing the rack axioms can still be loaded and reported on.
// Callers wanting an operational rack must run check_rack_axioms and then
// finalize().
inline Rack rack_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("labels") ||
      !j.contains("table"))
    throw FixtureError("rack must be {size, labels, table}");
  Rack X;
  if (!j.at("size").is_number_integer())
    throw FixtureError("rack size must be an integer");
  X.size = j.at("size").get<int>();
  if (X.size <= 0) throw FixtureError("rack size must be positive");
  if (!j.at("labels").is_array() ||
      static_cast<int>(j.at("labels").size()) != X.size)
    throw FixtureError("rack labels must list one string per element");
  for (const Json& s : j.at("labels")) {
    if (!s.is_string()) throw FixtureError("rack labels must be strings");
    X.labels.push_back(s.get<std::string>());
  }
  if (!j.at("table").is_array() ||
      static_cast<int>(j.at("table").size()) != X.size)
    throw FixtureError("rack table must have one row per element");
  for (const Json& row : j.at("table")) {
    if (!row.is_array() || static_cast<int>(row.size()) != X.size)
      throw FixtureError("rack table rows must have one entry per element");
    std::vector<int> r;
    for (const Json& v : row) {
      if (!v.is_number_integer()) throw FixtureError("rack table entries must be integers");
      int t = v.get<int>();
      if (t < 0 || t >= X.size)
        throw FixtureError("rack table entry out of range: " + std::to_string(t));
      r.push_back(t);
    }
    X.table.push_back(std::move(r));
  }
  return X;
}

inline Json cocycle_to_json(const Rack& X, const Cocycle& q) {
  Json values = Json::array();
  for (int i = 0; i < X.size; ++i) {
    Json row = Json::array();
    for (int j = 0; j < X.size; ++j) row.push_back(to_string(q(i, j)));
    values.push_back(std::move(row));
  }
  return Json{{"rack", rack_to_json(X)}, {"values", std::move(values)}};
}

struct CocycleFile {
  Rack rack;  // not finalized; see rack_from_json
  Cocycle q;
};

inline CocycleFile cocycle_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rack") || !j.contains("values"))
    throw FixtureError("cocycle must be {rack, values}");
  CocycleFile out;
  out.rack = rack_from_json(j.at("rack"));
  const Json& values = j.at("values");
  if (!values.is_array() || static_cast<int>(values.size()) != out.rack.size)
    throw FixtureError("cocycle values must have one row per rack element");
  out.q.q.assign(out.rack.size, std::vector<GaussRational>(out.rack.size));
  for (int i = 0; i < out.rack.size; ++i) {
    const Json& row = values[i];
    if (!row.is_array() || static_cast<int>(row.size()) != out.rack.size)
      throw FixtureError("cocycle value rows must have one entry per element");
    for (int k = 0; k < out.rack.size; ++k)
      out.q.q[i][k] = gauss_from_json(row[k]);
  }
  return out;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open file: " + path);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw FixtureError("invalid JSON in file: " + path);
  return j;
}

// ---------------------------------------------------------------------------
// per-command reports

inline Json rack_report_to_json(const RackReport& rep) {
  Json fails = Json::array();
  for (const auto& f : rep.failures) fails.push_back(Json::array({f[0], f[1], f[2]}));
  return Json{{"rows_bijective", rep.rows_bijective},
              {"self_distributive", rep.self_distributive},
              {"ok", rep.ok()},
              {"failures", std::move(fails)}};
}

inline Json cocycle_report_to_json(const CocycleReport& rep) {
  Json fails = Json::array();
  for (const auto& f : rep.failures) fails.push_back(Json::array({f[0], f[1], f[2]}));
  return Json{{"values_nonzero", rep.values_nonzero},
              {"condition_holds", rep.condition_holds},
              {"ok", rep.ok()},
              {"failures", std::move(fails)}};
}

inline Json relations_to_json(const Rack& X, const std::vector<QuadRelation>& rels) {
  Json out = Json::array();
  for (const QuadRelation& rel : rels) {
    Json terms = Json::array();
    for (const auto& [eta, pair] : rel.terms)
      terms.push_back(Json::array(
          {to_string(eta), X.labels[pair.first], X.labels[pair.second]}));
    Json seq = Json::array();
    for (int t : rel.cls.seq) seq.push_back(X.labels[t]);
    // canonical ordered pair (i_2, i_1); both coincide on one-element orbits
    std::string label = "b[" + X.labels[rel.cls.seq[1 % rel.cls.size()]] + "," +
                        X.labels[rel.cls.seq[0]] + "]";
    out.push_back(Json{{"label", std::move(label)},
                       {"class_size", rel.cls.size()},
                       {"class", std::move(seq)},
                       {"terms", std::move(terms)}});
  }
  return out;
}

inline Json hilbert_to_json(const std::vector<mpz_class>& dims,
                            std::size_t gb_size) {
  Json dd = Json::array();
  mpz_class total = 0;
  int top = 0;
  for (std::size_t d = 0; d < dims.size(); ++d) {
    dd.push_back(dims[d].get_str());
    total += dims[d];
    if (dims[d] != 0) top = static_cast<int>(d);
  }
  return Json{{"dims", std::move(dd)},
              {"total", total.get_str()},
              {"top_degree", top},
              {"gb_size", gb_size}};
}

// ---------------------------------------------------------------------------
// Groebner cache: versioned JSON files named by an input hash, so stale or
// foreign entries are never reused. Controlled by NICHOLS_FORGE_CACHE.

inline constexpr int kCacheFormatVersion = 1;

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// The hash covers everything the completion depends on: rack table, cocycle
// values, and the degree ceiling.
inline std::string gb_cache_key(const Rack& X, const Cocycle& q, int max_degree) {
  std::string s = "v" + std::to_string(kCacheFormatVersion) + "|D" +
                  std::to_string(max_degree) + "|n" + std::to_string(X.size);
  for (const auto& row : X.table)
    for (int v : row) s += "," + std::to_string(v);
  s += "|q";
  for (const auto& row : q.q)
    for (const GaussRational& v : row) s += "," + to_string(v);
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(s)));
  return buf;
}

inline Json graded_to_cache_json(const std::string& key, const GradedDims& gd) {
  Json dims = Json::array();
  for (const mpz_class& d : gd.dims) dims.push_back(d.get_str());
  Json gb = Json::array();
  for (const NCPoly& p : gd.gb.elems) {
    Json terms = Json::array();
    for (const auto& [w, c] : p) {
      Json letters = Json::array();
      for (char ch : w) letters.push_back(static_cast<int>(ch));
      terms.push_back(Json::array({std::move(letters), to_string(c)}));
    }
    gb.push_back(std::move(terms));
  }
  return Json{{"format_version", kCacheFormatVersion},
              {"key", key},
              {"nletters", gd.gb.nletters},
              {"max_degree", gd.gb.max_degree},
              {"dims", std::move(dims)},
              {"gb", std::move(gb)}};
}

inline std::optional<GradedDims> graded_from_cache_json(const Json& j,
                                                        const std::string& key) {
  if (!j.is_object() || !j.contains("format_version") || !j.contains("key"))
    return std::nullopt;
  if (j.at("format_version").get<int>() != kCacheFormatVersion) return std::nullopt;
  if (j.at("key").get<std::string>() != key) return std::nullopt;
  GradedDims gd;
  gd.gb.nletters = j.at("nletters").get<int>();
  gd.gb.max_degree = j.at("max_degree").get<int>();
  for (const Json& d : j.at("dims")) gd.dims.emplace_back(d.get<std::string>());
  for (const Json& terms : j.at("gb")) {
    NCPoly p;
    for (const Json& t : terms) {
      Word w;
      for (const Json& letter : t[0])
        w.push_back(static_cast<char>(letter.get<int>()));
      poly_add_term(p, w, gauss_from_string(t[1].get<std::string>()));
    }
    gd.gb.leads.push_back(leading_term(p).first);
    gd.gb.elems.push_back(std::move(p));
  }
  return gd;
}

inline std::optional<GradedDims> gb_cache_load(const std::string& dir,
                                               const std::string& key) {
  std::ifstream in(dir + "/" + key + ".json");
  if (!in) return std::nullopt;
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  try {
    return graded_from_cache_json(j, key);
  } catch (const std::exception&) {
    return std::nullopt;  // corrupt entries are ignored, never trusted
  }
}

inline void gb_cache_store(const std::string& dir, const std::string& key,
                           const GradedDims& gd) {
  std::ofstream out(dir + "/" + key + ".json");
  if (!out) return;  // caching is best-effort; failures never break the run
  out << graded_to_cache_json(key, gd);
}

}  // namespace nforge
