/* Copyright (C) 2026 the expsum authors.
 * This program is licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <vector>

#include "expsum/rational.hpp"

namespace expsum {

/// An exact element of Q(zeta_p), written over the power basis
/// {1, zeta, ..., zeta^{p-2}} modulo the p-th cyclotomic polynomial.
/// All arithmetic is exact; reductions are eager so representations
/// are canonical and equality is coefficient-wise.
class CycloElt {
 public:
  /// Zero element of Q(zeta_p).
  explicit CycloElt(long p);

  /// A rational constant in Q(zeta_p).
  CycloElt(long p, const Rat& c);

  /// zeta_p^k (k may be any integer; reduced mod p and mod Phi_p).
  static CycloElt zeta_power(long p, long k);

  long prime() const { return p_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;

  /// The constant coefficient; only meaningful together with is_rational().
  const Rat& rational_part() const { return coeffs_[0]; }

  CycloElt operator+(const CycloElt& o) const;
  CycloElt operator-(const CycloElt& o) const;
  CycloElt operator-() const;
  CycloElt operator*(const CycloElt& o) const;
  CycloElt operator*(const Rat& c) const;
  CycloElt& operator+=(const CycloElt& o);
  CycloElt& operator-=(const CycloElt& o);
  CycloElt& operator*=(const CycloElt& o);
  bool operator==(const CycloElt& o) const;
  bool operator!=(const CycloElt& o) const { return !(*this == o); }

  /// Galois conjugate zeta -> zeta^k, gcd(k, p) = 1.
  CycloElt conjugate(long k) const;

  /// Field norm down to Q: the product of all Galois conjugates.
  Rat norm_to_Q() const;

  /// The valuation extending ord_p (ord(p) = 1) to Q(zeta_p).
  /// Computed through the norm; exact. Returns +infinity for 0.
  OrdValue pi_valuation() const;

  /// True if the element lies in Z[zeta_p] (all coordinates integral).
  bool is_integral() const;

  std::string str() const;

 private:
  long p_;
  std::vector<Rat> coeffs_;  // length p-1

  void check_same_field(const CycloElt& o) const;
};

inline CycloElt operator*(const Rat& c, const CycloElt& x) { return x * c; }

}  // namespace expsum
