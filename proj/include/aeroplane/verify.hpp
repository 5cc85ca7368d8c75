#pragma once

#include <algorithm>
#include <cstddef>
#include <string>

#include "aeroplane/coding.hpp"
#include "aeroplane/eau.hpp"
#include "aeroplane/exchange.hpp"
#include "aeroplane/families.hpp"
#include "aeroplane/lamination.hpp"
#include "aeroplane/report.hpp"

namespace aeroplane {

inline Report region_report() {
  Report report;
  auto check = verify_region_table();
  report.check("regions/transitions", "partition and transition table", check.transitions_exact,
               Json{{"consistent_arrangements", check.consistent_arrangements}});
  report.check("regions/unique-arrangement", "partition and transition table", check.consistent_arrangements == 1,
               Json{{"consistent_arrangements", check.consistent_arrangements}});
  return report;
}

inline Report verify_suffixes(std::size_t max_level) {
  Report report;
  for (std::size_t n = 0; n <= max_level; ++n) {
    for (std::size_t k = 0; k <= n; ++k) report.append(verify_suffix_lemma(n, k));
  }
  return report;
}

/// Exchange predicates for the scenarios that stay cheap up to `max_level`.
inline Report verify_exchanges(std::size_t max_level) {
  Report report;
  report.append(verify_predicates(basic_capture_scenario()));
  for (std::size_t k = 0; k <= std::min<std::size_t>(max_level, 2); ++k) {
    report.append(verify_predicates(level_capture_scenario(k)));
  }
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_level, 3); ++n) {
    for (std::size_t k = 0; k <= n; ++k) report.append(verify_predicates(substituted_capture_scenario(k, n)));
  }
  report.append(verify_predicates(mating_scenario(0, 0)));
  return report;
}

inline Report verify_lamination(std::size_t depth) {
  Report report;
  auto lam = pullback_lamination(minor_leaf_of(Angle(3, 7)), depth);
  report.append(check_invariance(lam));
  report.check("lamination/last-layer", "invariant lamination axioms",
               lam.layers.back().size() == (std::size_t{1} << depth),
               Json{{"depth", depth}, {"leaves", lam.layers.back().size()}});
  return report;
}

inline Report verify_all(std::size_t max_level) {
  Report report;
  report.append(region_report());
  report.append(verify_order_chain(max_level));
  report.append(verify_occurrences(max_level));
  report.append(verify_suffixes(max_level));
  report.append(verify_eau(max_level));
  report.append(length_report(max_level));
  for (std::size_t n = 0; n <= max_level; ++n) report.append(capture_report(n));
  for (std::size_t n = 0; n <= max_level; ++n) report.append(mating_report(n));
  report.append(verify_lamination(8));
  report.append(verify_exchanges(max_level));
  return report;
}

}  // namespace aeroplane
