/* Copyright (C) 2026 the expsum authors.
 * This program is licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */
#include "expsum/rational.hpp"

namespace expsum {

long padic_val(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("padic_val: zero argument");
  Int m = n;
  long v = 0;
  Int q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    m = q;
    ++v;
  }
  return v;
}

long padic_val(const Rat& x, const Int& p) {
  if (x == 0) throw std::invalid_argument("padic_val: zero argument");
  return padic_val(Int(x.get_num()), p) - padic_val(Int(x.get_den()), p);
}

bool is_p_integral(const Rat& x, const Int& p) {
  return x == 0 || padic_val(Int(x.get_den()), p) == 0;
}

bool is_p_unit(const Rat& x, const Int& p) { return x != 0 && padic_val(x, p) == 0; }

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

}  // namespace expsum
