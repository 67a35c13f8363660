/* Copyright (C) 2026 the expsum authors.
 * This program is licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "expsum/rational.hpp"

namespace expsum {

/// A lower-convex piecewise-linear graph with exact rational vertices.
/// Every polygon produced here starts at (0, 0); slopes between
/// consecutive vertices are strictly increasing.
class Polygon {
 public:
  Polygon() = default;
  explicit Polygon(std::vector<std::pair<Rat, Rat>> vertices);

  const std::vector<std::pair<Rat, Rat>>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }

  Rat width() const;

  /// Value of the piecewise-linear function at x (must lie in [0, width]).
  Rat value_at(const Rat& x) const;

  /// Both coordinates multiplied by c > 0.
  Polygon scaled(const Rat& c) const;

  /// Slope -> horizontal length, ascending.
  std::map<Rat, Rat> slope_multiset() const;

  /// Total horizontal length on which the slope is exactly s.
  Rat slope_run_length(const Rat& s) const;

  bool operator==(const Polygon& o) const { return vertices_ == o.vertices_; }
  bool operator!=(const Polygon& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::vector<std::pair<Rat, Rat>> vertices_;
};

/// Greatest lower convex minorant of {(i, y_i)}; points with no height
/// (+infinity, i.e. y absent) are skipped and never become vertices.
/// y_0 must be present. x-coordinates are 0..n-1.
Polygon lower_hull(const std::vector<std::optional<Rat>>& heights);

/// The combinatorial lower-bound polygon of the family with `ell` poles of
/// the given orders: slopes 0 and 1 each with multiplicity ell-1, plus
/// i/d_j for 1 <= i <= d_j - 1, each of horizontal length 1.
/// Width d = sum(orders) + ell - 2, endpoints (0,0) and (d, d/2).
Polygon hodge_polygon(int ell, const std::vector<int>& orders);

/// True iff P(x) >= Q(x) everywhere (checked at all vertex abscissae of
/// both polygons; sufficient by convexity). Widths must agree.
bool lies_above(const Polygon& P, const Polygon& Q);

/// max over vertex abscissae of P(x) - Q(x); requires lies_above(P, Q).
Rat max_gap(const Polygon& P, const Polygon& Q);

}  // namespace expsum
