#ifndef OLSON_RATIONAL_HPP
#define OLSON_RATIONAL_HPP

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "olson/error.hpp"

namespace olson {

/// Exact rational on 64-bit numerator/denominator. Intermediate products are
/// formed in 128 bits and the result is reduced; anything that still does
/// not fit throws RationalOverflow instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// Accepts "k", "k/n" and finite decimals such as "-0.375".
  static Rational parse(std::string_view text) {
    auto fail = [&] {
      throw Error(ErrorCode::ParseError, "bad rational literal '" + std::string(text) + "'");
    };
    if (text.empty()) fail();
    auto parse_int = [&](std::string_view s) {
      std::int64_t v = 0;
      if (s.empty()) fail();
      const char* first = s.data();
      if (*first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) fail();
      return v;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      std::int64_t d = parse_int(text.substr(slash + 1));
      if (d == 0) fail();
      return Rational(parse_int(text.substr(0, slash)), d);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string_view whole = text.substr(0, dot);
      std::string_view frac = text.substr(dot + 1);
      bool negative = !whole.empty() && whole.front() == '-';
      if (negative) whole.remove_prefix(1);
      if (frac.empty() || frac.size() > 18) fail();
      for (char c : frac)
        if (c < '0' || c > '9') fail();
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      Rational r = Rational(whole.empty() ? 0 : parse_int(whole)) + Rational(parse_int(frac), scale);
      return negative ? -r : r;
    }
    return Rational(parse_int(text));
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(ErrorCode::RationalOverflow, "division by zero");
    return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  Rational operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational from_wide(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    constexpr __int128 lim = INT64_MAX;
    if (n > lim || n < -lim || d > lim) throw Error(ErrorCode::RationalOverflow, "result exceeds 64 bits");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  void assign(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error(ErrorCode::RationalOverflow, "zero denominator");
    *this = from_wide(n, d);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

}  // namespace olson

#endif  // OLSON_RATIONAL_HPP
