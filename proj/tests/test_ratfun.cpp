/* Copyright (C) 2026 the expsum authors.
 * This program is licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */
#include <random>

#include "doctest.h"
#include "expsum/ratfun.hpp"

using namespace expsum;

namespace {

RationalFunction make_x3_plus_x() {
  // f = x^3 + x
  return RationalFunction({3}, {Rat(0)}, {{Rat(1), Rat(0), Rat(1)}});
}

RationalFunction make_x_plus_1_over_x() {
  // f = x + 1/x
  return RationalFunction({1, 1}, {Rat(0), Rat(0)}, {{Rat(1)}, {Rat(1)}});
}

}  // namespace

TEST_CASE("validation") {
  RationalFunction f = make_x3_plus_x();
  CHECK(f.degree() == 2);  // 3 + 1 - 2

  RationalFunction g = make_x_plus_1_over_x();
  CHECK(g.degree() == 2);  // 1 + 1 + 2 - 2

  // zero leading coefficient
  CHECK_THROWS_AS(RationalFunction({3}, {Rat(0)}, {{Rat(1), Rat(0), Rat(0)}}),
                  std::invalid_argument);
  // single pole of too-small order: f = x has degree 0
  CHECK_THROWS_AS(RationalFunction({1}, {Rat(0)}, {{Rat(1)}}), std::invalid_argument);
  // duplicate poles
  CHECK_THROWS_AS(RationalFunction({1, 1, 1}, {Rat(0), Rat(2), Rat(2)},
                                   {{Rat(1)}, {Rat(1)}, {Rat(1)}}),
                  std::invalid_argument);
}

TEST_CASE("good and bad primes") {
  RationalFunction f = make_x3_plus_x();
  CHECK_THROWS_AS(reduce_mod_p(f, 3), BadPrimeError);  // 3 | d_1
  try {
    reduce_mod_p(f, 3);
  } catch (const BadPrimeError& e) {
    CHECK(e.reason() == BadPrimeReason::DividesPoleOrder);
  }
  ReducedFunction r = reduce_mod_p(f, 5);
  CHECK(r.field()->p() == 5);
  CHECK(r.degree() == 2);

  // poles 0 and 5 collide mod 5
  RationalFunction g({1, 1, 1}, {Rat(0), Rat(0), Rat(5)}, {{Rat(1)}, {Rat(1)}, {Rat(1)}});
  CHECK_THROWS_AS(reduce_mod_p(g, 5), BadPrimeError);
  try {
    reduce_mod_p(g, 5);
  } catch (const BadPrimeError& e) {
    CHECK(e.reason() == BadPrimeReason::PolesCollideModP);
  }
  CHECK_NOTHROW(reduce_mod_p(g, 7));

  // leading coefficient 5/1 is not a 5-unit; coefficient 1/5 is not 5-integral
  RationalFunction h({2}, {Rat(0)}, {{Rat(0), Rat(5)}});
  CHECK_THROWS_AS(reduce_mod_p(h, 5), BadPrimeError);
  RationalFunction h2({2}, {Rat(0)}, {{Rat(1, 5), Rat(1)}});
  CHECK_THROWS_AS(reduce_mod_p(h2, 5), BadPrimeError);
}

TEST_CASE("evaluation") {
  // f = x + 1/x over F_3 at x = 2: 2 + 2^{-1} = 2 + 2 = 1
  ReducedFunction f = reduce_mod_p(make_x_plus_1_over_x(), 3);
  auto F3 = f.field();
  CHECK(evaluate(f, F3->from_int(2)) == F3->from_int(1));
  CHECK_THROWS_AS(evaluate(f, F3->from_int(0)), std::domain_error);

  // f = x^2 over F_3 at x = 2 is 1
  RationalFunction sq({2}, {Rat(0)}, {{Rat(0), Rat(1)}});
  ReducedFunction fsq = reduce_mod_p(sq, 3);
  CHECK(evaluate(fsq, F3->from_int(2)) == F3->from_int(1));
}

TEST_CASE("evaluation commutes with embedding") {
  RationalFunction f({2, 2}, {Rat(0), Rat(0)}, {{Rat(3), Rat(1)}, {Rat(-1), Rat(2)}});
  ReducedFunction r = reduce_mod_p(f, 7);
  auto F7 = r.field();
  auto F49 = make_field(7, 2);
  ReducedFunction rext = r.lifted_to(F49);
  for (long c = 1; c < 7; ++c) {
    FieldElt x = F7->from_int(c);
    CHECK(embed(evaluate(r, x), F49) == evaluate(rext, embed(x, F49)));
  }
}

TEST_CASE("reduction commutes with evaluation at lifted points") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> coef(-10, 10);
  for (int rep = 0; rep < 10; ++rep) {
    long a1 = coef(rng), a2 = coef(rng), a3 = 2 * coef(rng) + 1;
    RationalFunction f({3}, {Rat(0)}, {{Rat(a1), Rat(a2), Rat(a3)}});
    for (long p : {5L, 7L, 11L}) {
      ReducedFunction r = [&]() {
        try {
          return reduce_mod_p(f, p);
        } catch (const BadPrimeError&) {
          return reduce_mod_p(make_x3_plus_x(), p);
        }
      }();
      auto F = r.field();
      // integral data: exact evaluation over Q followed by reduction mod p
      // agrees with evaluation of the reduction
      bool skipped = false;
      try {
        reduce_mod_p(f, p);
      } catch (const BadPrimeError&) {
        skipped = true;  // r fell back to x^3 + x; skip the comparison
      }
      if (skipped) continue;
      for (long c = 0; c < p; ++c) {
        Int exact(Rat(Rat(a1) * c + Rat(a2) * c * c + Rat(a3) * c * c * c).get_num());
        Int red = exact % p;
        if (red < 0) red += p;
        CHECK(evaluate(r, F->from_int(c)) == F->from_int(red.get_si()));
      }
    }
  }
}
