/* Copyright (C) 2026 the expsum authors.
 * This program is licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */
#include <random>

#include "doctest.h"
#include "expsum/polygon.hpp"

using namespace expsum;

namespace {
std::vector<std::optional<Rat>> H(std::initializer_list<long> hs) {
  std::vector<std::optional<Rat>> v;
  for (long h : hs) v.emplace_back(Rat(h));
  return v;
}
}  // namespace

TEST_CASE("lower hull basics") {
  Polygon a = lower_hull(H({0, 1, 1}));
  CHECK(a.vertices() == std::vector<std::pair<Rat, Rat>>{{0, 0}, {2, 1}});

  Polygon b = lower_hull(H({0, 0, 1}));
  CHECK(b.vertices() == std::vector<std::pair<Rat, Rat>>{{0, 0}, {1, 0}, {2, 1}});

  // infinite heights are skipped and never become vertices
  std::vector<std::optional<Rat>> h{Rat(0), std::nullopt, Rat(1)};
  Polygon c = lower_hull(h);
  CHECK(c.vertices() == std::vector<std::pair<Rat, Rat>>{{0, 0}, {2, 1}});

  CHECK_THROWS_AS(lower_hull({}), std::invalid_argument);
}

TEST_CASE("lower hull is idempotent") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(0, 40);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<std::optional<Rat>> h;
    h.emplace_back(Rat(0));
    for (int i = 0; i < 8; ++i) h.emplace_back(Rat(num(rng), 7));
    Polygon p = lower_hull(h);
    std::vector<std::optional<Rat>> hh(h.size());
    for (size_t i = 0; i < h.size(); ++i) {
      Rat x(static_cast<long>(i));
      if (x <= p.width()) hh[i] = p.value_at(x);
    }
    CHECK(lower_hull(hh) == p);
  }
}

TEST_CASE("hodge polygon slope lists") {
  Polygon a = hodge_polygon(1, {3});
  CHECK(a.vertices() == std::vector<std::pair<Rat, Rat>>{{0, 0}, {1, Rat(1, 3)}, {2, 1}});

  Polygon b = hodge_polygon(2, {2, 2});
  CHECK(b.vertices() == std::vector<std::pair<Rat, Rat>>{{0, 0}, {1, 0}, {3, 1}, {4, 2}});

  Polygon c = hodge_polygon(2, {1, 1});
  CHECK(c.vertices() == std::vector<std::pair<Rat, Rat>>{{0, 0}, {1, 0}, {2, 1}});

  CHECK_THROWS_AS(hodge_polygon(1, {1}), std::invalid_argument);  // width 0
  CHECK_THROWS_AS(hodge_polygon(2, {2}), std::invalid_argument);
}

TEST_CASE("hodge polygon endpoints and symmetry") {
  for (auto& [ell, orders] : std::vector<std::pair<int, std::vector<int>>>{
           {1, {2}}, {1, {5}}, {2, {2, 2}}, {2, {3, 1}}, {3, {2, 3, 1}}, {3, {1, 1, 1}}}) {
    Polygon hp = hodge_polygon(ell, orders);
    long sum = 0;
    for (int dj : orders) sum += dj;
    long d = sum + ell - 2;
    CHECK(hp.vertices().front() == std::pair<Rat, Rat>{0, 0});
    CHECK(hp.vertices().back() == std::pair<Rat, Rat>{Rat(d), Rat(d, 2)});
    // slope multiset invariant under s -> 1-s
    auto ms = hp.slope_multiset();
    for (const auto& [s, len] : ms) {
      auto it = ms.find(1 - s);
      REQUIRE(it != ms.end());
      CHECK(it->second == len);
    }
  }
}

TEST_CASE("slope run lengths") {
  CHECK(hodge_polygon(2, {1, 1}).slope_run_length(Rat(0)) == 1);
  CHECK(hodge_polygon(1, {3}).slope_run_length(Rat(0)) == 0);
  CHECK(hodge_polygon(2, {2, 2}).slope_run_length(Rat(1, 2)) == 2);
  CHECK(hodge_polygon(2, {2, 2}).slope_run_length(Rat(1, 3)) == 0);
}

TEST_CASE("lies_above and max_gap") {
  Polygon p = lower_hull(H({0, 1, 1}));
  Polygon q = lower_hull(H({0, 0, 1}));
  CHECK(lies_above(p, p));
  CHECK(lies_above(p, q));
  CHECK(!lies_above(q, p));
  CHECK(max_gap(p, q) == Rat(1, 2));
  CHECK(max_gap(p, p) == 0);
  CHECK_THROWS_AS(lies_above(p, hodge_polygon(1, {4})), std::invalid_argument);
}

TEST_CASE("lies_above is a partial order") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> num(0, 30);
  auto rand_poly = [&] {
    std::vector<std::optional<Rat>> h;
    h.emplace_back(Rat(0));
    for (int i = 0; i < 6; ++i) h.emplace_back(Rat(num(rng), 5));
    return lower_hull(h);
  };
  for (int rep = 0; rep < 60; ++rep) {
    Polygon a = rand_poly(), b = rand_poly(), c = rand_poly();
    CHECK(lies_above(a, a));
    if (lies_above(a, b) && lies_above(b, a)) CHECK(a == b);
    if (lies_above(a, b) && lies_above(b, c)) CHECK(lies_above(a, c));
  }
}

TEST_CASE("comparison handles rational abscissae from shrinking") {
  // width-4 polygon shrunk by 1/2 has vertices at half-integers
  Polygon big = lower_hull(H({0, 1, 1, 2, 4}));
  Polygon small = big.scaled(Rat(1, 2));
  CHECK(small.width() == 2);
  CHECK(small.value_at(Rat(1, 2)) == Rat(1, 4));
  Polygon hp = hodge_polygon(1, {3});
  CHECK(lies_above(small, hp));
}
