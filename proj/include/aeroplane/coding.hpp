#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aeroplane/angle.hpp"
#include "aeroplane/errors.hpp"

namespace aeroplane {

enum class Letter : std::uint8_t { L1, L2, L3, R1, R2, R3, C, UC, BC };

inline constexpr std::array<Letter, 9> kAllLetters = {
    Letter::L1, Letter::L2, Letter::L3, Letter::R1, Letter::R2,
    Letter::R3, Letter::C,  Letter::UC, Letter::BC};

constexpr std::string_view to_string(Letter e) {
  switch (e) {
    case Letter::L1: return "L1";
    case Letter::L2: return "L2";
    case Letter::L3: return "L3";
    case Letter::R1: return "R1";
    case Letter::R2: return "R2";
    case Letter::R3: return "R3";
    case Letter::C: return "C";
    case Letter::UC: return "UC";
    case Letter::BC: return "BC";
  }
  return "?";
}

constexpr bool is_c_class(Letter e) {
  return e == Letter::C || e == Letter::UC || e == Letter::BC;
}

constexpr bool is_left(Letter e) {
  return e == Letter::L1 || e == Letter::L2 || e == Letter::L3;
}

constexpr bool is_restricted(Letter e) {
  return e == Letter::L3 || e == Letter::L2 || e == Letter::R3;
}

constexpr Letter coarse(Letter e) { return is_c_class(e) ? Letter::C : e; }

/// Letters reachable in one doubling step.
inline std::vector<Letter> targets(Letter e) {
  switch (coarse(e)) {
    case Letter::R1:
    case Letter::L1: return {Letter::R1, Letter::R2};
    case Letter::R2:
    case Letter::L2: return {Letter::R3, Letter::C};
    case Letter::R3:
    case Letter::L3: return {Letter::L3, Letter::L2};
    default: return {Letter::L1};
  }
}

inline bool transition_allowed(Letter from, Letter to) {
  auto t = targets(from);
  return std::find(t.begin(), t.end(), coarse(to)) != t.end();
}

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Accepts "L3.L2.R3.L3^5", "L3 L2 R3 C", "L3(L2R3)^2" and the compact
  /// form printed by str() without separators.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter back() const { return letters_.back(); }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  Word prefix(std::size_t n) const {
    n = std::min(n, size());
    return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)));
  }
  Word suffix_from(std::size_t i) const {
    i = std::min(i, size());
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(i), letters_.end()));
  }
  Word slice(std::size_t from, std::size_t to) const { return suffix_from(from).prefix(to - from); }

  bool starts_with(const Word& p) const {
    return p.size() <= size() && std::equal(p.begin(), p.end(), begin());
  }
  bool ends_with(const Word& p) const {
    return p.size() <= size() && std::equal(p.begin(), p.end(), end() - static_cast<std::ptrdiff_t>(p.size()));
  }
  bool matches_at(const Word& p, std::size_t pos) const {
    return pos + p.size() <= size() &&
           std::equal(p.begin(), p.end(), begin() + static_cast<std::ptrdiff_t>(pos));
  }

  /// Start positions of every occurrence of p.
  std::vector<std::size_t> occurrences(const Word& p) const {
    std::vector<std::size_t> out;
    if (p.empty() || p.size() > size()) return out;
    auto it = begin();
    while (true) {
      it = std::search(it, end(), std::boyer_moore_horspool_searcher(p.begin(), p.end()));
      if (it == end()) break;
      out.push_back(static_cast<std::size_t>(it - begin()));
      ++it;
    }
    return out;
  }

  std::size_t count_left() const {
    return static_cast<std::size_t>(std::count_if(begin(), end(), is_left));
  }

  Word power(std::size_t n) const {
    Word out;
    out.letters_.reserve(size() * n);
    for (std::size_t i = 0; i < n; ++i) out.letters_.insert(out.letters_.end(), begin(), end());
    return out;
  }

  Word& operator+=(const Word& other) {
    letters_.insert(letters_.end(), other.begin(), other.end());
    return *this;
  }
  Word& operator+=(Letter e) {
    letters_.push_back(e);
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }
  friend Word operator+(Letter e, const Word& w) { return Word{e} + w; }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ' ';
      out += to_string(letters_[i]);
    }
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

namespace detail {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word run() {
    Word w = sequence();
    skip_separators();
    if (pos_ != text_.size()) fail("unexpected character");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'", pos_);
  }

  void skip_separators() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '.' || text_[pos_] == ',' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }

  Word sequence() {
    Word out;
    while (true) {
      skip_separators();
      if (pos_ >= text_.size() || text_[pos_] == ')') break;
      Word atom_word = atom();
      out += atom_word.power(exponent());
    }
    return out;
  }

  std::size_t exponent() {
    if (pos_ >= text_.size() || text_[pos_] != '^') return 1;
    ++pos_;
    std::size_t start = pos_;
    std::size_t n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (n > 1'000'000) fail("exponent too large");
      ++pos_;
    }
    if (start == pos_) fail("missing exponent");
    return n;
  }

  Word atom() {
    if (text_[pos_] == '(') {
      ++pos_;
      Word inner = sequence();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("unbalanced parenthesis");
      ++pos_;
      return inner;
    }
    auto rest = text_.substr(pos_);
    auto take = [&](std::string_view token, Letter e) -> std::optional<Word> {
      if (rest.substr(0, token.size()) == token) {
        pos_ += token.size();
        return Word{e};
      }
      return std::nullopt;
    };
    for (Letter e : {Letter::UC, Letter::BC, Letter::L1, Letter::L2, Letter::L3, Letter::R1, Letter::R2,
                     Letter::R3, Letter::C}) {
      if (auto w = take(to_string(e), e)) return *w;
    }
    fail("unknown letter");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Word Word::parse(std::string_view text) { return detail::WordParser(text).run(); }

inline bool admissible(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!transition_allowed(w[i], w[i + 1])) return false;
  }
  return true;
}

/// Index of the first inadmissible transition (its source letter), if any.
inline std::optional<std::size_t> first_violation(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!transition_allowed(w[i], w[i + 1])) return i;
  }
  return std::nullopt;
}

/// Open arc (lo, hi) of the circle, lo < hi, not wrapping through 0.
struct Arc {
  Rational lo;
  Rational hi;
  bool lo_closed = false;
  bool hi_closed = false;

  bool contains(const Rational& t) const {
    return (lo_closed ? lo <= t : lo < t) && (hi_closed ? t <= hi : t < hi);
  }
  bool within(const Arc& outer) const { return outer.lo <= lo && hi <= outer.hi; }
  Rational length() const { return hi - lo; }
  Arc conjugate() const { return Arc{Rational(1) - hi, Rational(1) - lo, hi_closed, lo_closed}; }

  friend bool operator==(const Arc& a, const Arc& b) { return a.lo == b.lo && a.hi == b.hi; }
};

inline std::string to_string(const Arc& a) {
  return std::string(a.lo_closed ? "[" : "(") + to_string(a.lo) + ", " + to_string(a.hi) +
         (a.hi_closed ? "]" : ")");
}

// Upper-semicircle slots of width 1/14; slot 6 is the upper half of D(L1).
inline std::size_t slot_of(Letter e) {
  switch (coarse(e)) {
    case Letter::R1: return 0;
    case Letter::R2: return 1;
    case Letter::R3: return 2;
    case Letter::C: return 3;
    case Letter::L3: return 4;
    case Letter::L2: return 5;
    default: return 6;
  }
}

inline constexpr std::array<Letter, 7> kSlotLabels = {Letter::R1, Letter::R2, Letter::R3, Letter::C,
                                                      Letter::L3, Letter::L2, Letter::L1};

/// Upper trace of a region. D(R1) and D(L1) contain 0 and 1/2, so their
/// upper traces end at those points.
inline Arc region_upper_arc(Letter e) {
  if (e == Letter::BC) throw Error(ErrorKind::UnsupportedAlphabet, "BC has no upper trace");
  std::size_t s = slot_of(e);
  return Arc{Rational(static_cast<long>(s), 14), Rational(static_cast<long>(s + 1), 14)};
}

/// The arcs of a region as a list of open intervals inside [0, 1].
inline std::vector<Arc> region_arcs(Letter e) {
  switch (coarse(e)) {
    case Letter::R1: return {Arc{0, Rational(1, 14), true, false}, Arc{Rational(13, 14), 1}};
    case Letter::L1: return {Arc{Rational(3, 7), Rational(4, 7)}};
    default: break;
  }
  Arc upper = region_upper_arc(coarse(e));
  if (e == Letter::UC) return {upper};
  if (e == Letter::BC) return {upper.conjugate()};
  return {upper, upper.conjugate()};
}

inline bool is_boundary(const Angle& theta) {
  Rational x = theta.value() * 14;
  if (boost::multiprecision::denominator(x) != 1) return false;
  auto k = boost::multiprecision::numerator(x);
  return k != 0 && k != 7;
}

inline Letter region_of(const Angle& theta, bool refine_c = true) {
  if (is_boundary(theta)) throw Error(ErrorKind::BoundaryAngle, theta.str() + " is a chord endpoint");
  bool upper = theta.value() <= Rational(1, 2);
  Rational t = upper ? theta.value() : Rational(1) - theta.value();
  auto slot = static_cast<std::size_t>(detail::floor_of(t * 14));
  Letter e = kSlotLabels[std::min<std::size_t>(slot, 6)];
  if (e == Letter::C && refine_c) return upper ? Letter::UC : Letter::BC;
  return e;
}

inline Word itinerary(const Angle& theta, std::size_t depth, bool refine_c = false) {
  Word out;
  Angle t = theta;
  for (std::size_t k = 0; k < depth; ++k) {
    if (is_boundary(t)) {
      throw Error(ErrorKind::BoundaryAngle, "iterate " + std::to_string(k) + " = " + t.str() + " is a chord endpoint", k);
    }
    out += region_of(t, refine_c);
    t = double_angle(t);
  }
  return out;
}

struct RegionTableCheck {
  bool transitions_exact = false;
  std::size_t consistent_arrangements = 0;
};

namespace detail {

// Slots whose interiors meet the doubled image of slot s (as a region,
// i.e. both conjugate arcs).
inline std::vector<std::size_t> doubled_slots(std::size_t s) {
  std::vector<std::size_t> out;
  auto add = [&](long num) {
    // num/14 is an endpoint of the doubled arc; map a representative
    // interior point num/14 + 1/28 back to an upper slot.
    Rational t = detail::frac(Rational(2 * num + 1, 28));
    if (t > Rational(1, 2)) t = Rational(1) - t;
    auto slot = std::min<std::size_t>(static_cast<std::size_t>(detail::floor_of(t * 14)), 6);
    if (std::find(out.begin(), out.end(), slot) == out.end()) out.push_back(slot);
  };
  // Upper arc (s/14, (s+1)/14) doubles to (2s/14, (2s+2)/14); slot 6 also
  // covers (7/14, 8/14) which doubles to (0, 2/14).
  long lo = 2 * static_cast<long>(s);
  for (long k = lo; k < lo + 2; ++k) add(k);
  if (s == 6) {
    add(14);
    add(15);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Checks the region arrangement against the transition table, and that it
/// is the only labelling of the seven slots that does so.
inline RegionTableCheck verify_region_table() {
  RegionTableCheck out;
  std::array<std::vector<std::size_t>, 7> covered;
  for (std::size_t s = 0; s < 7; ++s) covered[s] = detail::doubled_slots(s);

  auto consistent = [&](const std::array<Letter, 7>& labels) {
    for (std::size_t s = 0; s < 7; ++s) {
      std::vector<Letter> image;
      for (auto t : covered[s]) image.push_back(labels[t]);
      auto want = targets(labels[s]);
      std::sort(image.begin(), image.end());
      std::sort(want.begin(), want.end());
      if (image != want) return false;
    }
    return true;
  };

  out.transitions_exact = consistent(kSlotLabels);
  std::array<Letter, 7> labels = kSlotLabels;
  std::sort(labels.begin(), labels.end());
  do {
    if (consistent(labels)) ++out.consistent_arrangements;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

/// Arc of the word e·w given the arc of w, for a restricted letter e.
inline Arc lift_arc(Letter e, const Arc& arc) {
  if (is_left(e)) return Arc{(Rational(1) - arc.hi) / 2, (Rational(1) - arc.lo) / 2};
  return Arc{arc.lo / 2, arc.hi / 2};
}

inline void require_restricted(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool ok = is_restricted(w[i]) || (w[i] == Letter::C && i + 1 == w.size());
    if (!ok) {
      throw Error(ErrorKind::UnsupportedAlphabet,
                  std::string(to_string(w[i])) + " at position " + std::to_string(i) + " in " + w.str(), i);
    }
  }
  if (auto bad = first_violation(w)) {
    throw Error(ErrorKind::InadmissibleWord, w.str() + " breaks the transition table at " + std::to_string(*bad), *bad);
  }
}

/// Upper arcs of every suffix: result[i] is the arc of w[i:].
inline std::vector<Arc> suffix_arcs(const Word& w) {
  require_restricted(w);
  std::vector<Arc> out(w.size());
  if (w.empty()) return out;
  out.back() = region_upper_arc(w.back());
  for (std::size_t i = w.size() - 1; i-- > 0;) out[i] = lift_arc(w[i], out[i + 1]);
  return out;
}

inline Arc upper_arc(const Word& w) {
  if (w.empty()) throw Error(ErrorKind::InadmissibleWord, "empty word");
  require_restricted(w);
  Arc arc = region_upper_arc(w.back());
  for (std::size_t i = w.size() - 1; i-- > 0;) arc = lift_arc(w[i], arc);
  return arc;
}

/// Order of two restricted words by position of their regions: less means
/// to the right (smaller upper angle). Empty when one is a proper prefix of
/// the other.
inline std::optional<std::strong_ordering> compare_words(const Word& v, const Word& w) {
  std::size_t n = std::min(v.size(), w.size());
  std::size_t i = 0;
  bool flipped = false;
  while (i < n && v[i] == w[i]) {
    if (is_left(v[i])) flipped = !flipped;
    ++i;
  }
  if (i == n) {
    if (v.size() == w.size()) return std::strong_ordering::equal;
    return std::nullopt;
  }
  bool less = slot_of(v[i]) < slot_of(w[i]);
  if (flipped) less = !less;
  return less ? std::strong_ordering::less : std::strong_ordering::greater;
}

/// v < w iff D(v) lies to the right of D(w).
inline bool word_less(const Word& v, const Word& w) {
  require_restricted(v);
  require_restricted(w);
  auto c = compare_words(v, w);
  if (!c) throw Error(ErrorKind::PrefixRelated, v.str() + " and " + w.str() + " are prefix related");
  return *c == std::strong_ordering::less;
}

/// True iff lower < s < upper with every comparison defined.
inline bool strictly_between(const Word& lower, const Word& s, const Word& upper) {
  auto a = compare_words(lower, s);
  auto b = compare_words(s, upper);
  return a && b && *a == std::strong_ordering::less && *b == std::strong_ordering::less;
}

struct PrecriticalPoint {
  Word word;
  std::size_t preperiod() const { return word.size() - 1; }
};

inline PrecriticalPoint point_from_word(const Word& w) {
  if (w.empty() || !is_c_class(w.back())) {
    throw Error(ErrorKind::MissingFinalC, "'" + w.str() + "' does not end in C");
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (is_c_class(w[i])) throw Error(ErrorKind::InadmissibleWord, "C-class letter before the end of " + w.str(), i);
  }
  if (auto bad = first_violation(w)) {
    throw Error(ErrorKind::InadmissibleWord, w.str() + " breaks the transition table at " + std::to_string(*bad), *bad);
  }
  return PrecriticalPoint{w};
}

inline Word full_itinerary(const PrecriticalPoint& p, std::size_t depth) {
  Word out = p.word.prefix(depth);
  static const std::array<Letter, 3> cycle = {Letter::L1, Letter::R2, Letter::C};
  for (std::size_t i = 0; out.size() < depth; ++i) out += cycle[i % 3];
  return out;
}

inline bool point_in_region(const PrecriticalPoint& p, const Word& e) {
  return full_itinerary(p, std::max(e.size(), p.word.size())).starts_with(e);
}

/// Chord joining two angles. first <= second.
struct Leaf {
  Angle first;
  Angle second;

  static Leaf make(const Angle& a, const Angle& b) { return a <= b ? Leaf{a, b} : Leaf{b, a}; }

  bool degenerate() const { return first == second; }
  bool vertical() const { return second == conjugate(first); }
  // For vertical leaves, the endpoint on the closed upper semicircle.
  const Angle& upper() const { return first.value() <= Rational(1, 2) ? first : second; }
  const Angle& lower() const { return first.value() <= Rational(1, 2) ? second : first; }

  friend bool operator==(const Leaf&, const Leaf&) = default;
  friend auto operator<=>(const Leaf&, const Leaf&) = default;
};

inline std::string to_string(const Leaf& leaf) {
  return "{" + leaf.first.str() + ", " + leaf.second.str() + "}";
}

/// The vertical leaf coded by the periodic itinerary w w w ...
inline Leaf periodic_leaf(const Word& w) {
  if (w.empty()) throw Error(ErrorKind::InadmissibleCycle, "empty cycle");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (is_c_class(w[i])) throw Error(ErrorKind::UnsupportedAlphabet, "C-class letter in periodic word", i);
  }
  if (!admissible(w) || !transition_allowed(w.back(), w[0])) {
    throw Error(ErrorKind::InadmissibleCycle, w.str() + " is not cyclically admissible");
  }
  // theta = A theta + B for the composed inverse branches.
  Rational a = 1;
  Rational b = 0;
  for (auto it = w.end(); it != w.begin();) {
    --it;
    if (is_left(*it)) {
      a = -a / 2;
      b = (Rational(1) - b) / 2;
    } else {
      a = a / 2;
      b = b / 2;
    }
  }
  Angle upper(b / (Rational(1) - a));
  return Leaf::make(upper, conjugate(upper));
}

}  // namespace aeroplane

template <>
struct std::hash<aeroplane::Word> {
  std::size_t operator()(const aeroplane::Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : w) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
    return h;
  }
};
