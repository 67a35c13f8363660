/* Copyright (C) 2026 the expsum authors.
 * This program is licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expsum/finite_field.hpp"
#include "expsum/rational.hpp"

namespace expsum {

/// A one-variable rational function in partial-fraction form:
///   f = sum_i a_{1,i} x^i  +  sum_{j>=2} sum_i a_{j,i} (x - P_j)^{-i},
/// with pole P_1 = infinity and finite poles rational and pairwise
/// distinct (P_2 = 0 is the conventional normalization, not required).
/// The leading coefficient at every pole is nonzero and the constant
/// term vanishes.
class RationalFunction {
 public:
  /// Validates and constructs; throws std::invalid_argument naming the
  /// violated constraint. poles[0] is ignored (infinity);
  /// coeffs[j][i-1] is a_{j+1,i}.
  RationalFunction(std::vector<int> pole_orders, std::vector<Rat> poles,
                   std::vector<std::vector<Rat>> coeffs);

  int ell() const { return static_cast<int>(pole_orders_.size()); }
  const std::vector<int>& pole_orders() const { return pole_orders_; }
  /// Finite poles only: entry j-2 is P_j (j = 2..ell). P_1 = infinity is implicit.
  const std::vector<Rat>& finite_poles() const { return finite_poles_; }
  const std::vector<std::vector<Rat>>& coeffs() const { return coeffs_; }
  const Rat& coeff(int j, int i) const;  // a_{j,i}, 1-based

  /// d = sum of pole orders + ell - 2; the degree of the L-function.
  long degree() const;

  std::string str() const;

 private:
  std::vector<int> pole_orders_;
  std::vector<Rat> finite_poles_;  // P_2, ..., P_ell (P_2 = 0 if present)
  std::vector<std::vector<Rat>> coeffs_;
};

/// Why a prime cannot be used with a given function.
enum class BadPrimeReason {
  DividesPoleOrder,
  NonIntegralCoefficient,
  LeadingCoefficientNotUnit,
  NonIntegralPole,
  PolesCollideModP,
};

std::string to_string(BadPrimeReason r);

/// Thrown by reduce_mod_p when p violates a goodness condition.
class BadPrimeError : public std::runtime_error {
 public:
  BadPrimeError(BadPrimeReason reason, const std::string& what)
      : std::runtime_error(what), reason_(reason) {}
  BadPrimeReason reason() const { return reason_; }

 private:
  BadPrimeReason reason_;
};

/// The reduction of a RationalFunction to F_{p^a}: poles and coefficients
/// as field elements (the infinite pole stays implicit).
class ReducedFunction {
 public:
  ReducedFunction(FieldPtr field, std::vector<int> pole_orders,
                  std::vector<FieldElt> finite_poles, std::vector<std::vector<FieldElt>> coeffs);

  const FieldPtr& field() const { return field_; }
  int ell() const { return static_cast<int>(pole_orders_.size()); }
  const std::vector<int>& pole_orders() const { return pole_orders_; }
  const std::vector<FieldElt>& finite_poles() const { return finite_poles_; }
  const std::vector<std::vector<FieldElt>>& coeffs() const { return coeffs_; }
  long degree() const;

  /// The same function with data pushed into an extension field.
  ReducedFunction lifted_to(const FieldPtr& ext) const;

  /// Scales every coefficient by the integer c (the twist c*f).
  ReducedFunction scaled(long c) const;

 private:
  FieldPtr field_;
  std::vector<int> pole_orders_;
  std::vector<FieldElt> finite_poles_;
  std::vector<std::vector<FieldElt>> coeffs_;
};

/// Reduction of f into F_{p^a}; throws BadPrimeError when p divides a pole
/// order, a coefficient is not p-integral, a leading coefficient is not a
/// p-unit, or poles collide mod p.
ReducedFunction reduce_mod_p(const RationalFunction& f, long p, int a = 1);

/// Evaluate at a non-pole point of the data's field (or any extension the
/// data was lifted to). Throws std::domain_error at a pole.
FieldElt evaluate(const ReducedFunction& f, const FieldElt& x);

}  // namespace expsum
