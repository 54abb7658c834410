#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace timescore {

/// Exact arbitrary-precision rational. Every award, total and indicator is
/// carried in this type; decimals appear only when rendering.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

/// "n" for integers, "n/d" otherwise (always in lowest terms).
inline std::string to_exact_string(const Rational& r) {
  return r.str();
}

inline BigInt floor_of(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

inline BigInt ceil_of(const Rational& r) { return -floor_of(-r); }

/// Fixed-point rendering with round-half-away-from-zero.
inline std::string to_fixed(const Rational& r, int decimals, bool decimal_comma = false) {
  BigInt scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  const bool negative = r < 0;
  const Rational scaled = (negative ? -r : r) * scale;
  const BigInt num = boost::multiprecision::numerator(scaled);
  const BigInt den = boost::multiprecision::denominator(scaled);
  const BigInt rounded = (2 * num + den) / (2 * den);

  std::string digits = rounded.str();
  if (decimals > 0) {
    if (digits.size() <= static_cast<std::size_t>(decimals)) {
      digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(decimals), 1,
                  decimal_comma ? ',' : '.');
  }
  if (negative && rounded != 0) digits.insert(0, 1, '-');
  return digits;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace detail {

inline std::optional<BigInt> parse_digits(std::string_view s) {
  if (s.empty()) return std::nullopt;
  BigInt v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace detail

/// Accepts "3", "-1", "7/3", "0.25". Returns nullopt on anything else.
inline std::optional<Rational> parse_rational(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::optional<Rational> out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = detail::parse_digits(s.substr(0, slash));
    auto den = detail::parse_digits(s.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    out = Rational(*num, *den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = detail::parse_digits(s.substr(0, dot));
    auto frac_text = s.substr(dot + 1);
    auto frac = detail::parse_digits(frac_text);
    if (!whole || !frac) return std::nullopt;
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac_text.size(); ++i) scale *= 10;
    out = Rational(*whole) + Rational(*frac, scale);
  } else {
    auto whole = detail::parse_digits(s);
    if (!whole) return std::nullopt;
    out = Rational(*whole);
  }
  if (negative) *out = -*out;
  return out;
}

}  // namespace timescore
