#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aeroplane/coding.hpp"
#include "aeroplane/families.hpp"
#include "aeroplane/report.hpp"

namespace aeroplane {

struct ExchangeablePair {
  std::string family;
  std::size_t j = 0;
  Word first;
  Word second;
};

inline std::vector<ExchangeablePair> list_exchangeable_pairs(std::size_t max_j) {
  const Word l3{Letter::L3};
  const Word l2r3{Letter::L2, Letter::R3};
  std::vector<ExchangeablePair> out;
  for (std::size_t j = 1; j <= max_j; ++j) {
    out.push_back({"even-block", j, l3 + l2r3.power(2 * j), l3 + l2r3.power(2 * j - 2) + l3.power(4)});
    out.push_back({"odd-block", j, l3 + l2r3.power(2 * j - 1) + l3.power(2) + l2r3,
                   l3 + l2r3.power(2 * j) + l3.power(2)});
  }
  return out;
}

inline Report check_exchangeable_pairs(const std::vector<ExchangeablePair>& pairs) {
  Report report;
  const std::string locus = "exchangeable pair necessary conditions";
  for (const auto& p : pairs) {
    bool ok = p.first.size() == p.second.size() && p.first.count_left() % 2 == 1 &&
              p.second.count_left() % 2 == 1 && admissible(p.first) && admissible(p.second) &&
              word_less(p.first, p.second);
    report.check("pairs/" + p.family + "/j-" + std::to_string(p.j), locus, ok,
                 Json{{"first", p.first.str()}, {"second", p.second.str()}, {"length", p.first.size()}});
  }
  return report;
}

namespace detail {

inline bool defined_less(const Word& v, const Word& w) {
  auto c = compare_words(v, w);
  return c && *c == std::strong_ordering::less;
}

inline bool sandwiched(const Word& lo, const Word& s, const Word& hi) {
  return defined_less(lo, s) && defined_less(s, hi);
}

inline bool only_restricted(const Word& w, bool final_c) {
  if (w.empty()) return !final_c;
  std::size_t body = final_c ? w.size() - 1 : w.size();
  for (std::size_t i = 0; i < body; ++i) {
    if (!is_restricted(w[i])) return false;
  }
  return !final_c || w.back() == Letter::C;
}

}  // namespace detail

/// Evaluates the eight conditions on a split e·a·u, with b the partner of a.
inline Report check_eau_conditions(const Word& e, const Word& a, const Word& b, const Word& u,
                                   const std::vector<ExchangeablePair>& pairs) {
  using detail::defined_less;
  using detail::sandwiched;
  Report report;
  const std::string locus = "conditions for an e a u split";
  const Word eau = e + a + u;
  const Word eb = e + b;
  const Word ebu = eb + u;
  const Word eaebu = e + a + ebu;

  // 1: e starts with L3^(2l+1) L2.
  {
    std::size_t run = 0;
    while (run < e.size() && e[run] == Letter::L3) ++run;
    bool ok = run < e.size() && e[run] == Letter::L2 && run % 2 == 1;
    report.check("cond-1", locus, ok, Json{{"leading_L3", run}});
  }
  // 2: e restricted with an even count of L letters.
  report.check("cond-2", locus, detail::only_restricted(e, false) && e.count_left() % 2 == 0,
               Json{{"left_letters", e.count_left()}});
  // 3: u restricted apart from a final C.
  report.check("cond-3", locus, detail::only_restricted(u, true));
  // 4: no suffix of eau lies in D(eb).
  {
    std::optional<std::size_t> bad;
    for (std::size_t i = 0; i < eau.size() && !bad; ++i) {
      if (eau.matches_at(eb, i)) bad = i;
    }
    Json w = Json::object();
    if (bad) w["suffix_start"] = *bad;
    report.check("cond-4", locus, !bad, w);
  }
  // 5: eau < u < eb, and no longer suffix is sandwiched likewise.
  {
    std::size_t start_u = e.size() + a.size();
    bool ok = sandwiched(eau, u, eb);
    std::vector<std::size_t> longer;
    for (std::size_t i = 1; i < start_u; ++i) {
      if (sandwiched(eau, eau.suffix_from(i), eb)) longer.push_back(i);
    }
    report.check("cond-5", locus, ok && longer.empty(),
                 Json{{"u_sandwiched", ok}, {"longer_sandwiched", longer}});
  }
  // 6: shorter suffixes of u between eaebu and ebu lie between eau and ebu.
  {
    std::vector<std::size_t> bad;
    for (std::size_t i = 1; i < u.size(); ++i) {
      Word s = u.suffix_from(i);
      if (sandwiched(eaebu, s, ebu) && !sandwiched(eau, s, ebu)) bad.push_back(i);
    }
    report.check("cond-6", locus, bad.empty(), Json{{"violations", bad}});
  }
  // 7: every suffix of u between eau and eb is preceded by some first
  // coordinate a1.
  {
    std::vector<std::size_t> bad;
    std::size_t offset = e.size() + a.size();
    for (std::size_t i = 0; i < u.size(); ++i) {
      Word s = u.suffix_from(i);
      if (!sandwiched(eau, s, eb)) continue;
      Word before = eau.prefix(offset + i);
      bool ok = false;
      for (const auto& p : pairs) ok = ok || before.ends_with(p.first);
      if (!ok) bad.push_back(i);
    }
    report.check("cond-7", locus, bad.empty(), Json{{"violations", bad}});
  }
  // 8: e'a' a proper suffix of e with D(eau) between D(e'a'eau) and
  // D(e'b'eau) forces an even count in e'; the implied order is reported
  // separately.
  {
    std::vector<Json> parity_bad;
    std::vector<Json> order_bad;
    std::size_t cases = 0;
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      const auto& p = pairs[pi];
      if (p.first.size() >= e.size() || !e.ends_with(p.first)) continue;
      std::size_t cut = e.size() - p.first.size();
      for (std::size_t i = 1; i <= cut; ++i) {
        Word e_prime = e.slice(i, cut);
        Word lo = e_prime + p.first + eau;
        Word hi = e_prime + p.second + eau;
        bool between = sandwiched(lo, eau, hi) || sandwiched(hi, eau, lo);
        if (!between) continue;
        ++cases;
        Json where{{"pair", pi}, {"start", i}};
        if (e_prime.count_left() % 2 != 0) parity_bad.push_back(where);
        if (!sandwiched(lo, eau, hi)) order_bad.push_back(where);
      }
    }
    report.check("cond-8", locus, parity_bad.empty(), Json{{"cases", cases}, {"violations", parity_bad}});
    report.check("cond-8-order", locus, order_bad.empty(), Json{{"cases", cases}, {"violations", order_bad}});
  }
  return report;
}

struct Decomposition {
  std::size_t position = 0;  // |e|
  std::size_t pair_index = 0;
  Word e, a, b, u;
};

/// Every split word = e·a·u with (a, b) a listed pair that passes all
/// eight conditions.
inline std::vector<Decomposition> find_decompositions(const Word& word, const std::vector<ExchangeablePair>& pairs) {
  std::vector<Decomposition> out;
  if (word.empty() || word.back() != Letter::C) return out;
  for (std::size_t pos = 1; pos < word.size(); ++pos) {
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      const auto& p = pairs[pi];
      if (pos + p.first.size() >= word.size() || !word.matches_at(p.first, pos)) continue;
      Decomposition d{pos, pi, word.prefix(pos), p.first, p.second, word.suffix_from(pos + p.first.size())};
      if (check_eau_conditions(d.e, d.a, d.b, d.u, pairs).passed()) out.push_back(std::move(d));
    }
  }
  return out;
}

struct DecompositionRow {
  std::string label;
  std::size_t length = 0;
  std::size_t count = 0;
  std::vector<std::size_t> positions;
};

/// Pairs long enough to appear anywhere in a word of the given length.
inline std::vector<ExchangeablePair> pairs_for_length(std::size_t length) {
  return list_exchangeable_pairs(std::max<std::size_t>(1, (length + 1) / 4));
}

/// Decomposition counts for v_n u_n, for every n with |v_n u_n| <= max_len.
inline std::vector<DecompositionRow> search_decompositions(std::size_t max_len) {
  std::vector<DecompositionRow> rows;
  for (std::size_t n = 0;; ++n) {
    auto level = build_level(n);
    Word word = level.v + level.u;
    if (word.size() > max_len) break;
    auto found = find_decompositions(word, pairs_for_length(word.size()));
    DecompositionRow row{"v_" + std::to_string(n) + " u_" + std::to_string(n), word.size(), found.size(), {}};
    for (const auto& d : found) row.positions.push_back(d.position);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Report decomposition_report(std::size_t max_len) {
  Report report;
  auto rows = search_decompositions(max_len);
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const auto& r = rows[n];
    report.check("eau/decompositions/n-" + std::to_string(n), "words with many e a u splits", r.count >= n + 1,
                 Json{{"word", r.label}, {"length", r.length}, {"count", r.count}, {"positions", r.positions}});
  }
  return report;
}

/// The basic split, the listed pair families for j <= 3 and the
/// decomposition counts for v_n u_n up to the given level.
inline Report verify_eau(std::size_t max_level) {
  Report report;
  const auto& base = base_words();
  const Word e = Word::parse("L3 L2 R3");
  report.append(check_eau_conditions(e, base.a, base.b, base.u0, pairs_for_length(e.size() + base.a.size() + base.u0.size())),
                "eau/basic-split/");
  report.append(check_exchangeable_pairs(list_exchangeable_pairs(3)), "eau/");
  auto level = build_level(max_level);
  report.append(decomposition_report(level.v.size() + level.u.size()));
  return report;
}

}  // namespace aeroplane
