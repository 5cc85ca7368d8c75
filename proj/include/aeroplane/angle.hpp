#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "aeroplane/errors.hpp"

namespace aeroplane {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline Rational frac(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt rem = num % den;
  if (rem < 0) rem += den;
  return Rational(rem, den);
}

inline BigInt floor_of(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

inline BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::Parse, "empty integer");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw Error(ErrorKind::Parse, "bad integer '" + std::string(text) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw Error(ErrorKind::Parse, "bad integer '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text));
}

}  // namespace detail

inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(text));
  BigInt num = detail::parse_integer(text.substr(0, slash));
  BigInt den = detail::parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

inline std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const Rational& r) {
  using Wide = boost::multiprecision::cpp_bin_float_50;
  Wide num(boost::multiprecision::numerator(r));
  Wide den(boost::multiprecision::denominator(r));
  return static_cast<double>(num / den);
}

/// A point of the circle R/Z, stored as an exact rational in [0, 1).
class Angle {
 public:
  Angle() = default;
  Angle(BigInt num, BigInt den) {
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator");
    value_ = detail::frac(Rational(std::move(num), std::move(den)));
  }
  explicit Angle(const Rational& r) : value_(detail::frac(r)) {}

  static Angle parse(std::string_view text) { return Angle(parse_rational(text)); }

  const Rational& value() const noexcept { return value_; }
  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  std::string str() const { return to_string(value_); }
  double to_double() const { return aeroplane::to_double(value_); }

  friend bool operator==(const Angle& a, const Angle& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

inline Angle double_angle(const Angle& theta) { return Angle(theta.value() * 2); }

inline Angle conjugate(const Angle& theta) { return Angle(Rational(1) - theta.value()); }

struct OrbitType {
  std::size_t preperiod = 0;
  std::size_t period = 0;

  friend bool operator==(const OrbitType&, const OrbitType&) = default;
};

/// Preperiod and period of an angle under doubling.
inline OrbitType orbit_type(const Angle& theta) {
  BigInt den = theta.denominator();
  OrbitType out;
  while ((den & 1) == 0) {
    den >>= 1;
    ++out.preperiod;
  }
  if (den == 1) {
    out.period = 1;
    return out;
  }
  BigInt power = 2 % den;
  out.period = 1;
  while (power != 1) {
    power = (power * 2) % den;
    ++out.period;
  }
  return out;
}

}  // namespace aeroplane
