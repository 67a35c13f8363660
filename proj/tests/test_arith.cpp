/* Copyright (C) 2026 the expsum authors.
 * This program is licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */
#include <random>

#include "doctest.h"
#include "expsum/cyclo.hpp"

using namespace expsum;

namespace {

CycloElt random_elt(long p, std::mt19937_64& rng, bool integral = false) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  CycloElt x(p);
  for (long i = 0; i < p - 1; ++i) {
    Rat c = integral ? Rat(num(rng)) : Rat(num(rng), den(rng));
    x += CycloElt::zeta_power(p, i) * c;
  }
  return x;
}

}  // namespace

TEST_CASE("cyclotomic multiplication reduces by the minimal polynomial") {
  // zeta_3 * zeta_3 = zeta_3^2 = -1 - zeta_3
  CycloElt z = CycloElt::zeta_power(3, 1);
  CycloElt got = z * z;
  CycloElt want = CycloElt(3, Rat(-1)) - z;
  CHECK(got == want);

  // (1+2z)(1+2z^2) = 3 over p = 3
  CycloElt a = CycloElt(3, Rat(1)) + z * Rat(2);
  CycloElt b = CycloElt(3, Rat(1)) + CycloElt::zeta_power(3, 2) * Rat(2);
  CHECK(a * b == CycloElt(3, Rat(3)));

  // multiplicative identity
  std::mt19937_64 rng(7);
  for (long p : {2L, 5L, 7L}) {
    CycloElt x = random_elt(p, rng);
    CHECK(x * CycloElt(p, Rat(1)) == x);
  }
}

TEST_CASE("mismatched primes are rejected") {
  CycloElt a(3, Rat(1)), b(5, Rat(1));
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("norm to Q") {
  // N(zeta_p - 1) = +-p, and exactly Phi_p(1) = p up to sign
  for (long p : {3L, 5L, 7L, 11L}) {
    CycloElt pi = CycloElt::zeta_power(p, 1) - CycloElt(p, Rat(1));
    Rat n = pi.norm_to_Q();
    CHECK(abs(n) == p);
  }
  // p = 3: N(1 + 2 zeta) = 3
  CycloElt a = CycloElt(3, Rat(1)) + CycloElt::zeta_power(3, 1) * Rat(2);
  CHECK(a.norm_to_Q() == 3);
  // norm of a rational constant c is c^{p-1}
  CHECK(CycloElt(5, Rat(-2)).norm_to_Q() == 16);
  CHECK(CycloElt(7, Rat(1, 2)).norm_to_Q() == Rat(1, 64));
}

TEST_CASE("norm is multiplicative") {
  std::mt19937_64 rng(11);
  for (long p : {3L, 5L, 7L}) {
    for (int rep = 0; rep < 20; ++rep) {
      CycloElt x = random_elt(p, rng);
      CycloElt y = random_elt(p, rng);
      CHECK((x * y).norm_to_Q() == x.norm_to_Q() * y.norm_to_Q());
    }
  }
}

TEST_CASE("pi-adic valuation") {
  // uniformizer
  for (long p : {3L, 5L, 13L}) {
    CycloElt pi = CycloElt::zeta_power(p, 1) - CycloElt(p, Rat(1));
    CHECK(pi.pi_valuation() == OrdValue(Rat(1, p - 1)));
  }
  // ord(p) = 1
  CHECK(CycloElt(5, Rat(5)).pi_valuation() == OrdValue(Rat(1)));
  // p = 3: ord(1 + 2 zeta) = 1/2
  CycloElt a = CycloElt(3, Rat(1)) + CycloElt::zeta_power(3, 1) * Rat(2);
  CHECK(a.pi_valuation() == OrdValue(Rat(1, 2)));
  // zero element
  CHECK(CycloElt(3).pi_valuation().is_infinity());
  // non-integral coordinates still work through the norm
  CHECK(CycloElt(3, Rat(1, 3)).pi_valuation() == OrdValue(Rat(-1)));
}

TEST_CASE("valuation is additive and ultrametric") {
  std::mt19937_64 rng(13);
  for (long p : {3L, 5L, 7L}) {
    for (int rep = 0; rep < 20; ++rep) {
      CycloElt x = random_elt(p, rng);
      CycloElt y = random_elt(p, rng);
      if (x.is_zero() || y.is_zero()) continue;
      OrdValue vx = x.pi_valuation();
      OrdValue vy = y.pi_valuation();
      CHECK((x * y).pi_valuation() == vx + vy);
      CycloElt s = x + y;
      OrdValue vmin = OrdValue::min(vx, vy);
      CHECK(s.pi_valuation() >= vmin);
      if (!(vx == vy)) CHECK(s.pi_valuation() == vmin);
    }
  }
}

TEST_CASE("integral elements have nonnegative valuation") {
  std::mt19937_64 rng(17);
  for (long p : {3L, 5L}) {
    for (int rep = 0; rep < 20; ++rep) {
      CycloElt x = random_elt(p, rng, /*integral=*/true);
      if (x.is_zero()) continue;
      CHECK(x.is_integral());
      CHECK(x.pi_valuation() >= OrdValue(Rat(0)));
    }
  }
}

TEST_CASE("p = 2 degenerates to Q with zeta = -1") {
  CycloElt z = CycloElt::zeta_power(2, 1);
  CHECK(z == CycloElt(2, Rat(-1)));
  CHECK(z.pi_valuation() == OrdValue(Rat(0)));
  CHECK((z - CycloElt(2, Rat(-1))).is_zero());
}
