#pragma once

// Free associative algebra machinery over the Gaussian rationals: words,
// sparse polynomials, two-sided Groebner completion truncated at a degree
// bound for homogeneous ideals, normal forms, and Hilbert-series counting of
// normal words via an automaton on leading words.
//
// Monomial order: degree first, then lexicographic with letter 0 smallest.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "nforge/linalg.hpp"
#include "nforge/scalars.hpp"

namespace nforge {

using Word = std::string;  // one byte per letter, values 0..nletters-1

struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using NCPoly = std::map<Word, GaussRational, DeglexLess>;

inline void poly_add_term(NCPoly& p, const Word& w, const GaussRational& c) {
  if (c.is_zero()) return;
  auto it = p.find(w);
  if (it == p.end()) {
    p.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

inline NCPoly poly_scaled(const NCPoly& p, const GaussRational& c) {
  NCPoly out;
  if (c.is_zero()) return out;
  for (const auto& [w, x] : p) out.emplace(w, x * c);
  return out;
}

inline bool poly_is_homogeneous(const NCPoly& p, int* degree = nullptr) {
  if (p.empty()) return true;
  std::size_t d = p.begin()->first.size();
  for (const auto& [w, c] : p)
    if (w.size() != d) return false;
  if (degree) *degree = static_cast<int>(d);
  return true;
}

inline const std::pair<const Word, GaussRational>& leading_term(const NCPoly& p) {
  if (p.empty()) throw std::invalid_argument("leading term of zero");
  return *p.rbegin();
}

struct GroebnerBasis {
  int nletters = 0;
  int max_degree = 0;
  std::vector<NCPoly> elems;  // monic, homogeneous, ascending degree
  std::vector<Word> leads;    // leads[k] = leading word of elems[k]
};

// Deterministic normal form: repeatedly rewrites the largest reducible
// monomial using the lowest-index basis element whose lead occurs in it
// (leftmost occurrence).
inline NCPoly normal_form(const NCPoly& p, const GroebnerBasis& gb) {
  NCPoly out, work = p;
  while (!work.empty()) {
    auto top = *work.rbegin();
    work.erase(std::prev(work.end()));
    const Word& w = top.first;
    int hit = -1;
    std::size_t pos = 0;
    for (std::size_t k = 0; k < gb.leads.size(); ++k) {
      if (gb.leads[k].size() > w.size()) continue;
      std::size_t p2 = w.find(gb.leads[k]);
      if (p2 != Word::npos) {
        hit = static_cast<int>(k);
        pos = p2;
        break;
      }
    }
    if (hit < 0) {
      poly_add_term(out, w, top.second);
      continue;
    }
    const NCPoly& g = gb.elems[hit];
    const Word& lw = gb.leads[hit];
    Word prefix = w.substr(0, pos);
    Word suffix = w.substr(pos + lw.size());
    for (const auto& [t, ct] : g) {
      if (t == lw) continue;
      poly_add_term(work, prefix + t + suffix, -(top.second * ct));
    }
  }
  return out;
}

namespace detail {

struct Obligation {
  int f = -1, g = -1;   // basis indices; g < 0 means "raw generator payload"
  int overlap = 0;      // shared length: suffix of lead(f) == prefix of lead(g)
  int payload = -1;     // index into the raw generator list
};

// S-polynomial of the overlap: f * suffix(lead g) - prefix(lead f) * g.
inline NCPoly build_spoly(const GroebnerBasis& gb, const Obligation& o) {
  const Word& u = gb.leads[o.f];
  const Word& v = gb.leads[o.g];
  Word right = v.substr(o.overlap);
  Word left = u.substr(0, u.size() - o.overlap);
  NCPoly s;
  for (const auto& [w, c] : gb.elems[o.f]) poly_add_term(s, w + right, c);
  for (const auto& [w, c] : gb.elems[o.g]) poly_add_term(s, left + w, -c);
  return s;
}

}  // namespace detail

// Truncated two-sided Groebner completion of a homogeneous ideal, processing
// obligations degree by degree. The result is independent of `threads`: in
// the parallel path, candidate reductions are replayed against the updated
// basis in the same order the serial path would use.
inline GroebnerBasis groebner_complete(int nletters, std::vector<NCPoly> gens,
                                       int max_degree, int threads = 1) {
  if (nletters < 1 || nletters > 250)
    throw std::invalid_argument("unsupported letter count");
  if (threads < 1) throw std::invalid_argument("threads must be positive");
  GroebnerBasis gb;
  gb.nletters = nletters;
  gb.max_degree = max_degree;

  std::map<int, std::vector<detail::Obligation>> queue;  // by total degree
  std::vector<NCPoly> raw;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    int d = 0;
    if (!poly_is_homogeneous(gens[k], &d))
      throw std::invalid_argument("generators must be homogeneous");
    if (gens[k].empty()) continue;
    for (const auto& [w, c] : gens[k])
      for (char ch : w)
        if (static_cast<unsigned char>(ch) >= static_cast<unsigned>(nletters))
          throw std::invalid_argument("generator uses an out-of-range letter");
    if (d > max_degree) continue;
    detail::Obligation o;
    o.payload = static_cast<int>(raw.size());
    raw.push_back(gens[k]);
    queue[d].push_back(o);
  }

  auto enqueue_overlaps = [&](int idx) {
    const Word& u = gb.leads[idx];
    for (std::size_t j = 0; j < gb.leads.size(); ++j) {
      const Word& v = gb.leads[j];
      for (int pass = 0; pass < 2; ++pass) {
        // pass 0: (idx, j); pass 1: (j, idx); skip the duplicate when j == idx
        if (pass == 1 && static_cast<int>(j) == idx) continue;
        const Word& a = pass == 0 ? u : v;
        const Word& b = pass == 0 ? v : u;
        int amax = static_cast<int>(std::min(a.size(), b.size())) - 1;
        for (int k = 1; k <= amax; ++k) {
          if (Word(a.end() - k, a.end()) != Word(b.begin(), b.begin() + k)) continue;
          int deg = static_cast<int>(a.size() + b.size()) - k;
          if (deg > max_degree) continue;
          detail::Obligation o;
          o.f = pass == 0 ? idx : static_cast<int>(j);
          o.g = pass == 0 ? static_cast<int>(j) : idx;
          o.overlap = k;
          queue[deg].push_back(o);
        }
      }
    }
  };

  auto insert_elem = [&](NCPoly r) {
    GaussRational inv = leading_term(r).second.inverse();
    if (inv != GaussRational(1)) r = poly_scaled(r, inv);
    gb.leads.push_back(leading_term(r).first);
    gb.elems.push_back(std::move(r));
    enqueue_overlaps(static_cast<int>(gb.elems.size()) - 1);
  };

  for (int d = 1; d <= max_degree; ++d) {
    auto it = queue.find(d);
    if (it == queue.end()) continue;
    std::vector<detail::Obligation>& cands = it->second;
    // candidates created while processing degree d always land at degree > d
    auto build = [&](const detail::Obligation& o) {
      return o.payload >= 0 ? raw[o.payload] : detail::build_spoly(gb, o);
    };
    std::size_t i = 0;
    while (i < cands.size()) {
      if (threads == 1) {
        NCPoly r = normal_form(build(cands[i]), gb);
        if (!r.empty()) insert_elem(std::move(r));
        ++i;
        continue;
      }
      std::size_t wave = std::min<std::size_t>(cands.size() - i, 64);
      std::vector<NCPoly> results(wave);
      std::size_t basis_size = gb.elems.size();
      {
        std::vector<std::thread> pool;
        std::size_t nt = std::min<std::size_t>(threads, wave);
        for (std::size_t t = 0; t < nt; ++t)
          pool.emplace_back([&, t] {
            for (std::size_t j = t; j < wave; j += nt)
              results[j] = normal_form(build(cands[i + j]), gb);
          });
        for (auto& th : pool) th.join();
      }
      for (std::size_t j = 0; j < wave; ++j) {
        NCPoly r = gb.elems.size() == basis_size
                       ? std::move(results[j])
                       : normal_form(build(cands[i + j]), gb);
        if (!r.empty()) insert_elem(std::move(r));
      }
      i += wave;
    }
    queue.erase(it);
  }

  // Tail interreduction. Leads are pairwise factor-free, and an element's own
  // lead can never divide its (same-degree, smaller) tail words, so reducing
  // against the full basis is safe and one pass yields the reduced basis.
  for (std::size_t k = 0; k < gb.elems.size(); ++k) {
    NCPoly tail = gb.elems[k];
    tail.erase(std::prev(tail.end()));
    NCPoly red = normal_form(tail, gb);
    poly_add_term(red, gb.leads[k], GaussRational(1));
    gb.elems[k] = std::move(red);
  }
  return gb;
}

// Dimensions of the degree-n quotient components for n = 0..max_degree,
// counted as walks avoiding the leading words (Aho-Corasick style automaton;
// leading words are pairwise factor-free).
inline std::vector<mpz_class> hilbert_dims(const GroebnerBasis& gb) {
  struct Node {
    std::map<int, int> child;
    int fail = 0;
    bool lead = false;
  };
  std::vector<Node> trie(1);
  for (const Word& w : gb.leads) {
    int s = 0;
    for (char ch : w) {
      int a = static_cast<unsigned char>(ch);
      auto it = trie[s].child.find(a);
      if (it == trie[s].child.end()) {
        trie.push_back(Node());
        it = trie[s].child.emplace(a, static_cast<int>(trie.size()) - 1).first;
      }
      s = it->second;
    }
    trie[s].lead = true;
  }
  // BFS failure links
  std::vector<int> order;
  for (auto& [a, c] : trie[0].child) order.push_back(c);
  for (std::size_t q = 0; q < order.size(); ++q) {
    int s = order[q];
    for (auto& [a, c] : trie[s].child) order.push_back(c);
  }
  for (int s : order)
    for (auto& [a, c] : trie[s].child) {
      int f = trie[s].fail;
      while (f != 0 && !trie[f].child.count(a)) f = trie[f].fail;
      auto it = trie[f].child.find(a);
      trie[c].fail = (it != trie[f].child.end() && it->second != c) ? it->second : 0;
    }
  auto step = [&](int s, int a) -> int {  // -1 = hits a leading word
    for (;;) {
      auto it = trie[s].child.find(a);
      if (it != trie[s].child.end()) return trie[it->second].lead ? -1 : it->second;
      if (s == 0) return 0;
      s = trie[s].fail;
    }
  };
  std::vector<mpz_class> counts(trie.size(), 0), dims;
  counts[0] = 1;
  dims.push_back(1);
  for (int d = 1; d <= gb.max_degree; ++d) {
    std::vector<mpz_class> next(trie.size(), 0);
    mpz_class total = 0;
    for (std::size_t s = 0; s < trie.size(); ++s) {
      if (counts[s] == 0) continue;
      for (int a = 0; a < gb.nletters; ++a) {
        int t = step(static_cast<int>(s), a);
        if (t >= 0) next[t] += counts[s];
      }
    }
    for (const mpz_class& v : next) total += v;
    dims.push_back(total);
    counts = std::move(next);
  }
  return dims;
}

struct DimensionBound {
  mpz_class total = 0;        // sum of quotient dimensions
  mpz_class bound = 0;        // total * group_order
  int top_degree = 0;         // last degree with a nonzero component
  bool terminated = false;    // some component vanished before max_degree
};

inline DimensionBound dimension_bound(const std::vector<mpz_class>& dims,
                                      const mpz_class& group_order) {
  DimensionBound out;
  for (std::size_t d = 0; d < dims.size(); ++d) {
    out.total += dims[d];
    if (dims[d] != 0) out.top_degree = static_cast<int>(d);
    if (dims[d] == 0) out.terminated = true;
  }
  out.bound = out.total * group_order;
  return out;
}

// Rank of the degree-n component of the two-sided ideal generated by
// homogeneous degree-2 elements, by direct sparse elimination over the span
// of a * gen * b with |a| + |b| = n - 2. Independent of the completion path.
inline long ideal_component_rank(int nletters, const std::vector<NCPoly>& gens,
                                 int degree) {
  for (const NCPoly& g : gens) {
    int d = 0;
    if (!poly_is_homogeneous(g, &d) || (!g.empty() && d != 2))
      throw std::invalid_argument("oracle expects homogeneous degree-2 input");
  }
  if (degree < 2) return 0;
  Echelon<GaussRational> ech;
  long ctx = degree - 2;
  auto encode = [&](const Word& w) {
    long x = 0;
    for (char ch : w) x = x * nletters + static_cast<unsigned char>(ch);
    return x;
  };
  std::vector<Word> contexts{Word()};
  for (long l = 0; l < ctx; ++l) {
    std::vector<Word> next;
    for (const Word& w : contexts)
      for (int a = 0; a < nletters; ++a) next.push_back(w + static_cast<char>(a));
    contexts = std::move(next);
  }
  for (long la = 0; la <= ctx; ++la) {
    for (const Word& c : contexts) {
      Word a(c.begin(), c.begin() + la);
      Word b(c.begin() + la, c.end());
      for (const NCPoly& g : gens) {
        Echelon<GaussRational>::Row v;
        for (const auto& [w, coeff] : g) v[encode(a + w + b)] = coeff;
        ech.insert(std::move(v));
      }
    }
  }
  return ech.rank();
}

}  // namespace nforge
