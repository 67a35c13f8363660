/* Copyright (C) 2026 the expsum authors.
 * This program is licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <vector>

#include "expsum/cyclo.hpp"
#include "expsum/rational.hpp"

namespace expsum {

/// Guaranteed absolute precision N (the element is known mod p^N) together
/// with a known valuation lower bound v, both in ord_p units.
struct PrecisionCert {
  long N = 0;
  Rat v = Rat(0);
};

/// An element of Z_p[zeta_p] known modulo p^N, over the power basis
/// {1, zeta, ..., zeta^{p-2}}. All elements handled here are integral;
/// ring operations keep the minimum of the operand precisions.
class PadicCyclo {
 public:
  PadicCyclo(long p, long prec);  // zero

  static PadicCyclo from_int(long p, long prec, const Int& c);
  static PadicCyclo zeta(long p, long prec);
  /// Reduction of an integral exact element.
  static PadicCyclo from_cyclo(const CycloElt& x, long prec);

  long p() const { return p_; }
  long precision() const { return prec_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const Int& modulus() const { return mod_; }

  bool is_zero() const;  // zero residue at this precision

  PadicCyclo operator+(const PadicCyclo& o) const;
  PadicCyclo operator-(const PadicCyclo& o) const;
  PadicCyclo operator*(const PadicCyclo& o) const;
  PadicCyclo operator-() const;
  PadicCyclo& operator+=(const PadicCyclo& o) { return *this = *this + o; }
  PadicCyclo& operator*=(const PadicCyclo& o) { return *this = *this * o; }
  PadicCyclo scaled(const Int& c) const;
  /// Multiplication by a p-integral rational (denominator inverted mod p^N).
  PadicCyclo scaled(const Rat& c) const;

  /// Galois conjugate zeta -> zeta^k.
  PadicCyclo conjugate(long k) const;

  /// Inverse of a unit, through the product of conjugates and an integer
  /// inversion; throws std::domain_error if the element is not a unit.
  PadicCyclo unit_inverse() const;

  /// Exact division by p^i; every coordinate must be divisible.
  /// Precision drops by i.
  PadicCyclo divided_by_p_power(long i) const;

  PadicCyclo reduced_to(long prec) const;

  /// Symmetric lift to an exact element (coordinates in (-p^N/2, p^N/2]).
  CycloElt lift() const;

  /// ord_p of the residue. certified is true when the value is below the
  /// precision cap and hence equals the valuation of the true element.
  struct CertifiedOrd {
    OrdValue ord;     // exact when certified; otherwise >= the cap
    bool certified;
  };
  CertifiedOrd certified_ord() const;

  /// True if this and o agree at the joint precision.
  bool agrees_with(const PadicCyclo& o) const;

  std::string str() const;

 private:
  long p_;
  long prec_;
  Int mod_;  // p^prec
  std::vector<Int> coeffs_;

  void reduce();
};

/// The root gamma of the p-adic logarithm of the Artin-Hasse series with
/// ord_p(gamma) = 1/(p-1), on the branch where the series evaluated at
/// gamma is the distinguished zeta_p. Verified internally:
///   - certified ord 1/(p-1),
///   - series evaluation reproduces zeta_p at the requested precision.
PadicCyclo solve_gamma(long p, long prec);

/// Coefficients of the Artin-Hasse exponential exp(sum x^{p^i}/p^i) up to
/// degree M, exact p-integral rationals.
std::vector<Rat> artin_hasse_coeffs(long p, long M);

/// lambda_m for m = 0..M at absolute precision prec: the coefficients of
/// the gamma-twisted Artin-Hasse expansion; lambda_m = ah_m * gamma^m, and
/// ord(lambda_m) >= m/(p-1) is asserted on each returned value.
/// Cached per (p, M, prec); thread-safe.
std::vector<PadicCyclo> lambda_coeffs(long p, long M, long prec);

/// Teichmuller lift of a residue mod p: the unique root of x^p = x
/// congruent to c, to absolute precision prec.
PadicCyclo teichmuller(long c, long p, long prec);

}  // namespace expsum
