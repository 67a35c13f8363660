/* Copyright (C) 2026 the expsum authors.
 * This program is licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */
#include "doctest.h"
#include "expsum/lfun.hpp"

using namespace expsum;

namespace {

RationalFunction f_x2() { return RationalFunction({2}, {Rat(0)}, {{Rat(0), Rat(1)}}); }
RationalFunction f_x3_plus_x() {
  return RationalFunction({3}, {Rat(0)}, {{Rat(1), Rat(0), Rat(1)}});
}
RationalFunction f_x_plus_inv() {
  return RationalFunction({1, 1}, {Rat(0), Rat(0)}, {{Rat(1)}, {Rat(1)}});
}

}  // namespace

TEST_CASE("exponential sums over F_3") {
  // f = x^2: x=0 -> 1, x=1 -> zeta, x=2 -> zeta  =>  1 + 2 zeta
  ReducedFunction f = reduce_mod_p(f_x2(), 3);
  CycloElt want = CycloElt(3, Rat(1)) + CycloElt::zeta_power(3, 1) * Rat(2);
  CHECK(exp_sum(f, 1) == want);

  // f = x + 1/x: x=1 -> zeta^2, x=2 -> zeta^1 => zeta + zeta^2 = -1
  ReducedFunction g = reduce_mod_p(f_x_plus_inv(), 3);
  CHECK(exp_sum(g, 1) == CycloElt(3, Rat(-1)));
}

TEST_CASE("complete additive character sum vanishes") {
  // f = x is not admissible as input (degree too small), but the raw
  // character sum it stands for must vanish: sum over F_{p^m} of
  // zeta^{Tr(x)} = 0.
  for (auto [p, m] : std::vector<std::pair<long, int>>{{3, 1}, {3, 2}, {5, 1}}) {
    auto F = make_field(p, m);
    CycloElt s(p);
    for (const auto& x : enumerate_field(F))
      s += CycloElt::zeta_power(p, trace_to_prime(x));
    CHECK(s.is_zero());
  }
}

TEST_CASE("L-function of x^2 at p=3") {
  ReducedFunction f = reduce_mod_p(f_x2(), 3);
  LPolynomial L = l_function(f);
  CHECK(L.degree() == 1);
  CycloElt c1 = CycloElt(3, Rat(1)) + CycloElt::zeta_power(3, 1) * Rat(2);
  CHECK(L.coeff(1) == c1);

  Polygon np = np_of_l(L);
  CHECK(np.vertices() == std::vector<std::pair<Rat, Rat>>{{0, 0}, {1, Rat(1, 2)}});
  CHECK(np == hodge_polygon(1, {2}));
}

TEST_CASE("L-function of x + 1/x at p=3") {
  ReducedFunction f = reduce_mod_p(f_x_plus_inv(), 3);
  LPolynomial L = l_function(f);
  CHECK(L.degree() == 2);
  CHECK(L.coeff(1) == CycloElt(3, Rat(-1)));
  // independent oracle for c_2: c_2 = (S_1^2 + S_2)/2 with S_2 enumerated
  CycloElt S1 = exp_sum(f, 1);
  CycloElt S2 = exp_sum(f, 2);
  CycloElt c2 = (S1 * S1 + S2) * Rat(1, 2);
  CHECK(L.coeff(2) == c2);
}

TEST_CASE("NP endpoints, slope symmetry, and the lower bound polygon") {
  for (auto& [f, orders, ps] : std::vector<std::tuple<RationalFunction, std::vector<int>,
                                                      std::vector<long>>>{
           {f_x3_plus_x(), {3}, {5, 7, 11}},
           {f_x_plus_inv(), {1, 1}, {3, 5, 7}},
       }) {
    int ell = static_cast<int>(orders.size());
    Polygon hp = hodge_polygon(ell, orders);
    for (long p : ps) {
      ReducedFunction r = reduce_mod_p(f, p);
      LPolynomial L = l_function(r);
      Polygon np = np_of_l(L);
      CHECK(np.vertices().front() == std::pair<Rat, Rat>{0, 0});
      CHECK(np.vertices().back() ==
            std::pair<Rat, Rat>{Rat(r.degree()), Rat(r.degree(), 2)});
      CHECK(lies_above(np, hp));
      auto ms = np.slope_multiset();
      for (const auto& [s, len] : ms) {
        auto it = ms.find(1 - s);
        REQUIRE(it != ms.end());
        CHECK(it->second == len);
      }
      // slope-0 and slope-1 runs have length exactly ell - 1
      CHECK(np.slope_run_length(Rat(0)) == ell - 1);
      CHECK(np.slope_run_length(Rat(1)) == ell - 1);
    }
  }
}

TEST_CASE("point counts of y^3 - y = x^2") {
  ReducedFunction f = reduce_mod_p(f_x2(), 3);
  CHECK(count_points(f, 1) == 4);   // 3 affine points over x=0, one at infinity
  CHECK(count_points(f, 2) == 16);  // brute force over F_9
}

TEST_CASE("zeta numerator of y^3 - y = x^2") {
  ReducedFunction f = reduce_mod_p(f_x2(), 3);
  ZetaNumerator P = zeta_numerator(f);
  CHECK(P.degree() == 2);  // (p-1) d = 2
  CHECK(P.coeffs() == std::vector<Int>{1, 0, 3});

  Polygon np = scaled_np(P);
  CHECK(np == hodge_polygon(1, {2}));
}

TEST_CASE("zeta numerator degree and P(0)") {
  ReducedFunction f = reduce_mod_p(f_x_plus_inv(), 3);
  ZetaNumerator P = zeta_numerator(f);
  CHECK(P.degree() == 4);
  CHECK(P.coeffs()[0] == 1);
}

TEST_CASE("character twist product equals the zeta numerator") {
  // p=3, f=x^2: (1+(1+2z)T)(1+(1+2z^2)T) = 1 + 3T^2
  CHECK(character_twist_product(reduce_mod_p(f_x2(), 3)));
  // p=5, f=x^3+x
  CHECK(character_twist_product(reduce_mod_p(f_x3_plus_x(), 5)));
  // p=2 edge: the product over the single twist c=1
  RationalFunction g({3}, {Rat(0)}, {{Rat(1), Rat(1), Rat(1)}});
  CHECK(character_twist_product(reduce_mod_p(g, 2)));
}

TEST_CASE("np heights halve with a = 2") {
  RationalFunction f = f_x3_plus_x();
  ReducedFunction r1 = reduce_mod_p(f, 5, 1);
  ReducedFunction r2 = reduce_mod_p(f, 5, 2);
  LPolynomial L1 = l_function(r1);
  LPolynomial L2 = l_function(r2);
  Polygon np2 = np_of_l(L2);
  // ord_q convention: endpoints still (d, d/2)
  CHECK(np2.vertices().back() == std::pair<Rat, Rat>{Rat(2), Rat(1)});
  CHECK(lies_above(np2, hodge_polygon(1, {3})));
  (void)L1;
}

TEST_CASE("coincidence with the lower bound exactly when p = 1 mod lcm") {
  RationalFunction f = f_x3_plus_x();
  Polygon hp = hodge_polygon(1, {3});
  CHECK(np_of_l(l_function(reduce_mod_p(f, 7))) == hp);    // 7 = 1 mod 3
  CHECK(np_of_l(l_function(reduce_mod_p(f, 13))) == hp);   // 13 = 1 mod 3
  CHECK(np_of_l(l_function(reduce_mod_p(f, 5))) != hp);    // 5 = 2 mod 3
  CHECK(np_of_l(l_function(reduce_mod_p(f, 11))) != hp);   // 11 = 2 mod 3
}
