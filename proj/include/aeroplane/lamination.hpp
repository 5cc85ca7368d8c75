#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "aeroplane/coding.hpp"
#include "aeroplane/report.hpp"

namespace aeroplane {

struct Lamination {
  Leaf minor;
  std::size_t depth = 0;
  // layers[d] holds the 2^d leaves obtained by d pullbacks of the minor leaf.
  std::vector<std::vector<Leaf>> layers;

  std::vector<Leaf> leaves() const {
    std::vector<Leaf> out;
    for (const auto& layer : layers) out.insert(out.end(), layer.begin(), layer.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

inline Leaf minor_leaf_of(const Angle& p) {
  if (p.denominator() % 2 == 0) throw Error(ErrorKind::UnsupportedAngle, p.str() + " has even denominator");
  if (p == Angle(3, 7) || p == Angle(4, 7)) return Leaf::make(Angle(3, 7), Angle(4, 7));
  throw Error(ErrorKind::UnsupportedAngle, "minor leaf search is only implemented for 3/7");
}

namespace detail {

// Leaves as numerators over a common denominator `scale`.
struct Chord {
  std::uint64_t a;
  std::uint64_t b;  // a <= b

  static Chord make(std::uint64_t x, std::uint64_t y) { return x <= y ? Chord{x, y} : Chord{y, x}; }
  friend bool operator==(const Chord&, const Chord&) = default;
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

inline bool chords_cross(const Chord& p, const Chord& q) {
  if (p.a == q.a || p.a == q.b || p.b == q.a || p.b == q.b) return false;
  bool c_in = p.a < q.a && q.a < p.b;
  bool d_in = p.a < q.b && q.b < p.b;
  return c_in != d_in;
}

inline std::uint64_t chord_length(const Chord& c, std::uint64_t scale) {
  std::uint64_t d = c.b - c.a;
  return std::min(d, scale - d);
}

class Scale {
 public:
  explicit Scale(BigInt scale) : scale_(std::move(scale)) {
    if (scale_ >= (BigInt(1) << 62)) throw Error(ErrorKind::UnsupportedDepth, "lamination depth too large");
  }

  std::uint64_t value() const { return static_cast<std::uint64_t>(scale_); }

  std::uint64_t numerator_of(const Angle& t) const {
    BigInt den = t.denominator();
    if (scale_ % den != 0) throw Error(ErrorKind::UnsupportedDepth, t.str() + " is off the lamination grid");
    return static_cast<std::uint64_t>(t.numerator() * (scale_ / den));
  }

  Chord chord_of(const Leaf& leaf) const { return Chord::make(numerator_of(leaf.first), numerator_of(leaf.second)); }

  Leaf leaf_of(const Chord& c) const {
    return Leaf::make(Angle(BigInt(c.a), scale_), Angle(BigInt(c.b), scale_));
  }

 private:
  BigInt scale_;
};

inline BigInt lamination_scale(const Leaf& minor, std::size_t depth) {
  BigInt den = boost::multiprecision::lcm(minor.first.denominator(), minor.second.denominator());
  return den << depth;
}

// The two ways of joining the four preimage endpoints.
inline std::array<std::array<Chord, 2>, 2> preimage_pairings(const Chord& c, std::uint64_t scale) {
  std::uint64_t half = scale / 2;
  std::uint64_t a1 = c.a / 2, a2 = c.a / 2 + half;
  std::uint64_t b1 = c.b / 2, b2 = c.b / 2 + half;
  return {{{Chord::make(a1, b1), Chord::make(a2, b2)}, {Chord::make(a1, b2), Chord::make(a2, b1)}}};
}

}  // namespace detail

/// Pulls the minor leaf back `depth` times. Each preimage pair is chosen
/// among the two pairings of the four preimage endpoints: pairings that
/// cross an earlier leaf or each other are discarded, then the one with the
/// larger shorter leaf wins.
inline Lamination pullback_lamination(const Leaf& minor, std::size_t depth) {
  detail::Scale scale(detail::lamination_scale(minor, depth));
  const std::uint64_t m = scale.value();
  std::vector<std::vector<detail::Chord>> layers{{scale.chord_of(minor)}};
  std::vector<detail::Chord> existing = layers[0];

  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<detail::Chord> next;
    next.reserve(layers.back().size() * 2);
    for (const auto& c : layers.back()) {
      auto options = detail::preimage_pairings(c, m);
      std::array<bool, 2> valid{};
      std::array<std::uint64_t, 2> score{};
      for (std::size_t i = 0; i < 2; ++i) {
        const auto& [p, q] = options[i];
        bool ok = !detail::chords_cross(p, q);
        for (std::size_t j = 0; ok && j < existing.size(); ++j) {
          ok = !detail::chords_cross(p, existing[j]) && !detail::chords_cross(q, existing[j]);
        }
        valid[i] = ok;
        score[i] = std::min(detail::chord_length(p, m), detail::chord_length(q, m));
      }
      std::size_t pick = 0;
      if (valid[0] && valid[1]) {
        if (score[0] == score[1]) {
          throw Error(ErrorKind::PairingAmbiguity, "both pairings valid with equal length at depth " + std::to_string(d));
        }
        pick = score[0] > score[1] ? 0 : 1;
      } else if (valid[1]) {
        pick = 1;
      } else if (!valid[0]) {
        throw Error(ErrorKind::PairingAmbiguity, "no non-crossing pairing at depth " + std::to_string(d));
      }
      next.push_back(options[pick][0]);
      next.push_back(options[pick][1]);
    }
    existing.insert(existing.end(), next.begin(), next.end());
    layers.push_back(std::move(next));
  }

  Lamination out;
  out.minor = minor;
  out.depth = depth;
  for (const auto& layer : layers) {
    std::vector<Leaf> leaves;
    leaves.reserve(layer.size());
    for (const auto& c : layer) leaves.push_back(scale.leaf_of(c));
    out.layers.push_back(std::move(leaves));
  }
  return out;
}

inline bool leaves_cross(const Leaf& p, const Leaf& q) {
  auto in = [](const Angle& t, const Leaf& l) { return l.first < t && t < l.second; };
  if (p.first == q.first || p.first == q.second || p.second == q.first || p.second == q.second) return false;
  return in(q.first, p) != in(q.second, p);
}

/// Non-crossing plus both invariance bullets, checked to the built depth.
inline Report check_invariance(const Lamination& lam) {
  Report report;
  const std::string locus = "invariant lamination axioms";
  detail::Scale scale(detail::lamination_scale(lam.minor, lam.depth));
  const std::uint64_t m = scale.value();

  std::vector<detail::Chord> all;
  for (const auto& leaf : lam.leaves()) all.push_back(scale.chord_of(leaf));
  std::set<detail::Chord> present(all.begin(), all.end());

  std::size_t crossings = 0;
  Json first_crossing = nullptr;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (detail::chords_cross(all[i], all[j])) {
        if (crossings++ == 0) {
          first_crossing = Json{to_string(scale.leaf_of(all[i])), to_string(scale.leaf_of(all[j]))};
        }
      }
    }
  }
  report.check("lamination/non-crossing", locus, crossings == 0,
               Json{{"leaves", all.size()}, {"crossings", crossings}, {"example", first_crossing}});

  std::size_t forward_missing = 0;
  std::size_t forward_checked = 0;
  std::size_t backward_missing = 0;
  std::size_t backward_checked = 0;
  for (std::size_t d = 0; d < lam.layers.size(); ++d) {
    for (const auto& leaf : lam.layers[d]) {
      auto c = scale.chord_of(leaf);
      // The image of a layer-0 leaf is only reached after two pullbacks.
      if (d >= 1 || lam.depth >= 2) {
        ++forward_checked;
        auto image = detail::Chord::make((2 * c.a) % m, (2 * c.b) % m);
        if (!present.count(image)) ++forward_missing;
      }
      if (d < lam.depth) {
        ++backward_checked;
        bool found = false;
        for (const auto& [p, q] : detail::preimage_pairings(c, m)) {
          found = found || (present.count(p) && present.count(q));
        }
        if (!found) ++backward_missing;
      }
    }
  }
  report.check("lamination/forward", locus, forward_missing == 0,
               Json{{"checked", forward_checked}, {"missing", forward_missing}});
  report.check("lamination/backward", locus, backward_missing == 0,
               Json{{"checked", backward_checked}, {"missing", backward_missing}});
  return report;
}

}  // namespace aeroplane
