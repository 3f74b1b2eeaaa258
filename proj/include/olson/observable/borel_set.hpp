#ifndef OLSON_OBSERVABLE_BOREL_SET_HPP
#define OLSON_OBSERVABLE_BOREL_SET_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "olson/rational.hpp"

namespace olson {

/// Interval endpoint; an empty value means ±∞ (never closed).
struct Endpoint {
  std::optional<Rational> value;
  bool closed = false;

  static Endpoint infinite() { return {}; }
  static Endpoint at(Rational v, bool closed) { return {v, closed}; }
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Interval {
  Endpoint lo;
  Endpoint hi;

  bool contains(const Rational& t) const {
    if (lo.value && (t < *lo.value || (t == *lo.value && !lo.closed))) return false;
    if (hi.value && (t > *hi.value || (t == *hi.value && !hi.closed))) return false;
    return true;
  }

  bool empty() const {
    if (!lo.value || !hi.value) return false;
    if (*lo.value > *hi.value) return true;
    return *lo.value == *hi.value && !(lo.closed && hi.closed);
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A finite union of rational intervals, kept sorted, disjoint and with
/// touching pieces merged. This is the part of the Borel σ-algebra on which
/// observables with finite rational spectra are evaluated.
class BorelSet {
 public:
  BorelSet() = default;

  static BorelSet empty() { return {}; }
  static BorelSet reals() { return from({Interval{Endpoint::infinite(), Endpoint::infinite()}}); }
  static BorelSet point(const Rational& t) { return from({Interval{Endpoint::at(t, true), Endpoint::at(t, true)}}); }
  static BorelSet interval(const Rational& lo, bool lo_closed, const Rational& hi, bool hi_closed) {
    return from({Interval{Endpoint::at(lo, lo_closed), Endpoint::at(hi, hi_closed)}});
  }
  /// (−∞, t) or (−∞, t].
  static BorelSet below(const Rational& t, bool closed) {
    return from({Interval{Endpoint::infinite(), Endpoint::at(t, closed)}});
  }
  /// (t, ∞) or [t, ∞).
  static BorelSet above(const Rational& t, bool closed) {
    return from({Interval{Endpoint::at(t, closed), Endpoint::infinite()}});
  }
  static BorelSet points(const std::vector<Rational>& ts) {
    std::vector<Interval> pieces;
    for (const auto& t : ts) pieces.push_back({Endpoint::at(t, true), Endpoint::at(t, true)});
    return from(std::move(pieces));
  }
  static BorelSet from(std::vector<Interval> pieces) {
    BorelSet s;
    s.pieces_ = normalize(std::move(pieces));
    return s;
  }

  const std::vector<Interval>& pieces() const noexcept { return pieces_; }
  bool is_empty() const noexcept { return pieces_.empty(); }

  bool contains(const Rational& t) const {
    return std::any_of(pieces_.begin(), pieces_.end(), [&](const Interval& i) { return i.contains(t); });
  }

  BorelSet unite(const BorelSet& other) const {
    std::vector<Interval> all = pieces_;
    all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
    return from(std::move(all));
  }

  BorelSet complement() const {
    std::vector<Interval> gaps;
    Endpoint cursor = Endpoint::infinite();  // lower end of the next gap
    bool cursor_is_minus_infinity = true;
    for (const auto& p : pieces_) {
      if (p.lo.value) {
        Interval gap{cursor_is_minus_infinity ? Endpoint::infinite() : cursor, Endpoint::at(*p.lo.value, !p.lo.closed)};
        if (!gap.empty()) gaps.push_back(gap);
      }
      if (!p.hi.value) return from(std::move(gaps));
      cursor = Endpoint::at(*p.hi.value, !p.hi.closed);
      cursor_is_minus_infinity = false;
    }
    gaps.push_back({cursor_is_minus_infinity ? Endpoint::infinite() : cursor, Endpoint::infinite()});
    return from(std::move(gaps));
  }

  BorelSet intersect(const BorelSet& other) const { return complement().unite(other.complement()).complement(); }

  std::string str() const {
    if (pieces_.empty()) return "{}";
    std::string out;
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
      const auto& p = pieces_[k];
      if (k) out += " U ";
      out += p.lo.value ? (p.lo.closed ? "[" : "(") + p.lo.value->str() : "(-inf";
      out += ", ";
      out += p.hi.value ? p.hi.value->str() + (p.hi.closed ? "]" : ")") : "inf)";
    }
    return out;
  }

  friend bool operator==(const BorelSet&, const BorelSet&) = default;

 private:
  // −∞ first, then by value, closed before open at the same value.
  static bool lower_less(const Endpoint& a, const Endpoint& b) {
    if (!a.value) return b.value.has_value();
    if (!b.value) return false;
    if (*a.value != *b.value) return *a.value < *b.value;
    return a.closed && !b.closed;
  }

  // Open before closed at the same value, +∞ last.
  static bool upper_less(const Endpoint& a, const Endpoint& b) {
    if (!a.value) return false;
    if (!b.value) return true;
    if (*a.value != *b.value) return *a.value < *b.value;
    return !a.closed && b.closed;
  }

  static std::vector<Interval> normalize(std::vector<Interval> pieces) {
    std::erase_if(pieces, [](const Interval& i) { return i.empty(); });
    std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) { return lower_less(a.lo, b.lo); });
    std::vector<Interval> out;
    for (auto& p : pieces) {
      if (!out.empty()) {
        Interval& last = out.back();
        bool touches = !last.hi.value || !p.lo.value || *p.lo.value < *last.hi.value ||
                       (*p.lo.value == *last.hi.value && (last.hi.closed || p.lo.closed));
        if (touches) {
          if (upper_less(last.hi, p.hi)) last.hi = p.hi;
          continue;
        }
      }
      out.push_back(p);
    }
    return out;
  }

  std::vector<Interval> pieces_;
};

}  // namespace olson

#endif  // OLSON_OBSERVABLE_BOREL_SET_HPP
