#ifndef OLSON_OBSERVABLE_PIECEWISE_MAP_HPP
#define OLSON_OBSERVABLE_PIECEWISE_MAP_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "olson/error.hpp"
#include "olson/observable/borel_set.hpp"
#include "olson/rational.hpp"

namespace olson {

/// t -> slope * t + intercept on a rational interval.
struct AffinePiece {
  Interval domain;
  Rational slope;
  Rational intercept;
};

/// Real map made of finitely many rational-affine pieces. When pieces
/// overlap the first one listed wins.
class PiecewiseMap {
 public:
  PiecewiseMap() = default;
  explicit PiecewiseMap(std::vector<AffinePiece> pieces, std::string name = "f")
      : pieces_(std::move(pieces)), name_(std::move(name)) {}

  static PiecewiseMap affine(Rational slope, Rational intercept, std::string name = "affine") {
    return PiecewiseMap({{whole_line(), slope, intercept}}, std::move(name));
  }
  static PiecewiseMap identity() { return affine(1, 0, "id"); }
  static PiecewiseMap constant(Rational c) { return affine(0, c, "const"); }
  /// t -> 1 - t, the negation map on [0, 1].
  static PiecewiseMap reflection() { return affine(-1, 1, "1-t"); }
  /// min{t, 1 - t}.
  static PiecewiseMap min_with_reflection() {
    return PiecewiseMap({{below_half(true), 1, 0}, {above_half(false), -1, 1}}, "min(t,1-t)");
  }
  /// max{t, 1 - t}.
  static PiecewiseMap max_with_reflection() {
    return PiecewiseMap({{below_half(true), -1, 1}, {above_half(false), 1, 0}}, "max(t,1-t)");
  }
  /// max{1, 1 - t}, which is constant 1 on [0, 1].
  static PiecewiseMap max_one_reflection() {
    return PiecewiseMap({{Interval{Endpoint::infinite(), Endpoint::at(0, true)}, -1, 1},
                         {Interval{Endpoint::at(0, false), Endpoint::infinite()}, 0, 1}},
                        "max(1,1-t)");
  }

  /// Linear interpolation through (nodes[i], values[i]); nodes strictly
  /// increasing. Defined on [nodes.front(), nodes.back()].
  static PiecewiseMap interpolating(const std::vector<Rational>& nodes, const std::vector<Rational>& values,
                                    std::string name = "interp") {
    if (nodes.size() != values.size() || nodes.empty())
      throw Error(ErrorCode::MapUndefinedOnSpectrum, "interpolation needs matching non-empty node/value lists");
    std::vector<AffinePiece> pieces;
    if (nodes.size() == 1) {
      pieces.push_back({Interval{Endpoint::at(nodes[0], true), Endpoint::at(nodes[0], true)}, 0, values[0]});
    }
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      if (!(nodes[i] < nodes[i + 1])) throw Error(ErrorCode::NonIncreasingPoints, "interpolation nodes must increase");
      Rational slope = (values[i + 1] - values[i]) / (nodes[i + 1] - nodes[i]);
      pieces.push_back({Interval{Endpoint::at(nodes[i], true), Endpoint::at(nodes[i + 1], true)}, slope,
                        values[i] - slope * nodes[i]});
    }
    return PiecewiseMap(std::move(pieces), std::move(name));
  }

  std::optional<Rational> apply(const Rational& t) const {
    for (const auto& p : pieces_)
      if (p.domain.contains(t)) return p.slope * t + p.intercept;
    return std::nullopt;
  }

  const std::vector<AffinePiece>& pieces() const noexcept { return pieces_; }
  const std::string& name() const noexcept { return name_; }

 private:
  static Interval whole_line() { return {Endpoint::infinite(), Endpoint::infinite()}; }
  static Interval below_half(bool closed) { return {Endpoint::infinite(), Endpoint::at(Rational(1, 2), closed)}; }
  static Interval above_half(bool closed) { return {Endpoint::at(Rational(1, 2), closed), Endpoint::infinite()}; }

  std::vector<AffinePiece> pieces_;
  std::string name_ = "f";
};

}  // namespace olson

#endif  // OLSON_OBSERVABLE_PIECEWISE_MAP_HPP
