#pragma once

// Reference computations that share no code with the library beyond the
// Letter enum and Word container.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aeroplane/coding.hpp"

namespace oracle {

using aeroplane::Letter;
using aeroplane::Word;

/// Letter of the angle num/den read off the 14ths grid, or nothing when
/// the angle is one of the chord endpoints k/14.
inline std::optional<Letter> letter_of(std::uint64_t num, std::uint64_t den) {
  static constexpr std::array<Letter, 7> by_slot = {Letter::R1, Letter::R2, Letter::R3, Letter::C,
                                                    Letter::L3, Letter::L2, Letter::L1};
  std::uint64_t m = std::min(num, den - num);
  if (m != 0 && 2 * m != den && (14 * m) % den == 0) return std::nullopt;
  std::uint64_t slot = (14 * m) / den;
  return by_slot[std::min<std::uint64_t>(slot, 6)];
}

/// Coarse itinerary of num/den for `depth` doublings, empty if a chord
/// endpoint is hit.
inline std::optional<Word> itinerary(std::uint64_t num, std::uint64_t den, std::size_t depth) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < depth; ++i) {
    auto e = letter_of(num, den);
    if (!e) return std::nullopt;
    out.push_back(*e);
    num = (2 * num) % den;
  }
  return Word(std::move(out));
}

/// Whether k / 2^bits lies in the upper trace of D(w): the itinerary starts
/// with w and the last iterate sits in the half selected by the number of
/// L letters before it.
inline bool in_upper_trace(std::uint64_t k, unsigned bits, const Word& w) {
  const std::uint64_t den = std::uint64_t{1} << bits;
  if (k == 0 || 2 * k >= den) return false;
  std::uint64_t num = k;
  bool flipped = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto e = letter_of(num, den);
    if (!e || aeroplane::coarse(*e) != aeroplane::coarse(w[i])) return false;
    if (i + 1 == w.size()) {
      bool upper = 2 * num < den && num != 0;
      return upper != flipped;
    }
    if (aeroplane::is_left(w[i])) flipped = !flipped;
    num = (2 * num) % den;
  }
  return false;
}

/// Every admissible word over {L3, L2, R3} of length 1..max_len, together
/// with each of them extended by a final C where allowed.
inline std::vector<Word> restricted_words(std::size_t max_len) {
  const std::array<Letter, 3> alphabet = {Letter::L3, Letter::L2, Letter::R3};
  std::vector<Word> out;
  std::vector<Word> frontier;
  for (Letter e : alphabet) frontier.push_back(Word{e});
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      out.push_back(w);
      if (len + 1 <= max_len && aeroplane::transition_allowed(w.back(), Letter::C)) out.push_back(w + Word{Letter::C});
      if (len == max_len) continue;
      for (Letter e : alphabet) {
        if (aeroplane::transition_allowed(w.back(), e)) next.push_back(w + Word{e});
      }
    }
    frontier = std::move(next);
  }
  out.push_back(Word{Letter::C});
  return out;
}

/// Brute-force mating angles at a period: every j/(2^p - 1) of exact period
/// p whose itinerary is `cycle`, conjugated, and kept when inside (lo, hi)
/// with lo = lo_num/lo_den and hi likewise.
inline std::set<std::pair<std::uint64_t, std::uint64_t>> mating_angles(const Word& cycle, std::uint64_t lo_num,
                                                                         std::uint64_t lo_den, std::uint64_t hi_num,
                                                                         std::uint64_t hi_den) {
  const std::size_t p = cycle.size();
  const std::uint64_t den = (std::uint64_t{1} << p) - 1;
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t j = 1; j < den; ++j) {
    auto it = itinerary(j, den, p);
    if (!it || *it != cycle) continue;
    std::uint64_t q = den - j;
    // lo < q/den < hi, cross-multiplied
    if (!(lo_num * den < q * lo_den && q * hi_den < hi_num * den)) continue;
    std::uint64_t x = j;
    std::size_t period = 0;
    do {
      x = (2 * x) % den;
      ++period;
    } while (x != j);
    if (period != p) continue;
    std::uint64_t a = q, b = den;
    while (b != 0) {
      std::uint64_t r = a % b;
      a = b;
      b = r;
    }
    out.insert({q / a, den / a});
  }
  return out;
}

}  // namespace oracle
