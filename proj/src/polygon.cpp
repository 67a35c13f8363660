/* Copyright (C) 2026 the expsum authors.
 * This program is licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */
#include "expsum/polygon.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace expsum {

Polygon::Polygon(std::vector<std::pair<Rat, Rat>> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("Polygon: no vertices");
  for (size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (vertices_[i].first >= vertices_[i + 1].first)
      throw std::invalid_argument("Polygon: x must be strictly increasing");
  }
  for (size_t i = 0; i + 2 < vertices_.size(); ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[i + 1];
    const auto& c = vertices_[i + 2];
    // convexity: slope(a,b) < slope(b,c)
    if ((b.second - a.second) * (c.first - b.first) >=
        (c.second - b.second) * (b.first - a.first))
      throw std::invalid_argument("Polygon: slopes must be strictly increasing");
  }
}

Rat Polygon::width() const {
  if (vertices_.empty()) return Rat(0);
  return vertices_.back().first - vertices_.front().first;
}

Rat Polygon::value_at(const Rat& x) const {
  if (vertices_.empty()) throw std::logic_error("Polygon::value_at: empty");
  if (x < vertices_.front().first || x > vertices_.back().first)
    throw std::invalid_argument("Polygon::value_at: x outside domain");
  for (size_t i = 0; i + 1 < vertices_.size(); ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[i + 1];
    if (x <= b.first) {
      Rat t = (x - a.first) / (b.first - a.first);
      return a.second + t * (b.second - a.second);
    }
  }
  return vertices_.back().second;
}

Polygon Polygon::scaled(const Rat& c) const {
  if (c <= 0) throw std::invalid_argument("Polygon::scaled: factor must be positive");
  std::vector<std::pair<Rat, Rat>> vs;
  vs.reserve(vertices_.size());
  for (const auto& [x, y] : vertices_) vs.emplace_back(x * c, y * c);
  return Polygon(std::move(vs));
}

std::map<Rat, Rat> Polygon::slope_multiset() const {
  std::map<Rat, Rat> m;
  for (size_t i = 0; i + 1 < vertices_.size(); ++i) {
    Rat dx = vertices_[i + 1].first - vertices_[i].first;
    Rat s = (vertices_[i + 1].second - vertices_[i].second) / dx;
    m[s] += dx;
  }
  return m;
}

Rat Polygon::slope_run_length(const Rat& s) const {
  auto m = slope_multiset();
  auto it = m.find(s);
  return it == m.end() ? Rat(0) : it->second;
}

std::string Polygon::str() const {
  std::ostringstream os;
  for (const auto& [x, y] : vertices_) os << "(" << x.get_str() << "," << y.get_str() << ")";
  return os.str();
}

Polygon lower_hull(const std::vector<std::optional<Rat>>& heights) {
  if (heights.empty()) throw std::invalid_argument("lower_hull: empty input");
  if (!heights[0]) throw std::invalid_argument("lower_hull: y_0 must be finite");
  std::vector<std::pair<Rat, Rat>> hull;
  for (size_t i = 0; i < heights.size(); ++i) {
    if (!heights[i]) continue;
    std::pair<Rat, Rat> pt{Rat(static_cast<long>(i)), *heights[i]};
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // pop b while slope(a,b) >= slope(b,pt); collinear points are not vertices
      if ((b.second - a.second) * (pt.first - b.first) >=
          (pt.second - b.second) * (b.first - a.first))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(std::move(pt));
  }
  return Polygon(std::move(hull));
}

Polygon hodge_polygon(int ell, const std::vector<int>& orders) {
  if (ell < 1 || static_cast<size_t>(ell) != orders.size())
    throw std::invalid_argument("hodge_polygon: ell must match the number of orders");
  long sum = 0;
  for (int dj : orders) {
    if (dj < 1) throw std::invalid_argument("hodge_polygon: orders must be positive");
    sum += dj;
  }
  long d = sum + ell - 2;
  if (d < 1) throw std::invalid_argument("hodge_polygon: width must be at least 1");
  std::vector<Rat> slopes;
  for (int k = 0; k < ell - 1; ++k) {
    slopes.emplace_back(0);
    slopes.emplace_back(1);
  }
  for (int dj : orders)
    for (int i = 1; i < dj; ++i) slopes.emplace_back(Rat(i, dj));
  std::sort(slopes.begin(), slopes.end());
  if (static_cast<long>(slopes.size()) != d)
    throw std::logic_error("hodge_polygon: slope count mismatch");

  std::vector<std::pair<Rat, Rat>> vs;
  vs.emplace_back(Rat(0), Rat(0));
  Rat y(0);
  for (long i = 0; i < d; ++i) {
    y += slopes[static_cast<size_t>(i)];
    if (i + 1 < d && slopes[static_cast<size_t>(i)] == slopes[static_cast<size_t>(i + 1)])
      continue;
    vs.emplace_back(Rat(i + 1), y);
  }
  return Polygon(std::move(vs));
}

namespace {
std::set<Rat> joint_abscissae(const Polygon& P, const Polygon& Q) {
  std::set<Rat> xs;
  for (const auto& [x, y] : P.vertices()) xs.insert(x);
  for (const auto& [x, y] : Q.vertices()) xs.insert(x);
  return xs;
}
}  // namespace

bool lies_above(const Polygon& P, const Polygon& Q) {
  if (P.width() != Q.width()) throw std::invalid_argument("lies_above: width mismatch");
  for (const auto& x : joint_abscissae(P, Q))
    if (P.value_at(x) < Q.value_at(x)) return false;
  return true;
}

Rat max_gap(const Polygon& P, const Polygon& Q) {
  if (P.width() != Q.width()) throw std::invalid_argument("max_gap: width mismatch");
  Rat best(0);
  bool any = false;
  for (const auto& x : joint_abscissae(P, Q)) {
    Rat g = P.value_at(x) - Q.value_at(x);
    if (g < 0) throw std::invalid_argument("max_gap: P does not lie above Q");
    if (!any || g > best) {
      best = g;
      any = true;
    }
  }
  return best;
}

}  // namespace expsum
