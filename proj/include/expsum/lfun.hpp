/* Copyright (C) 2026 the expsum authors.
 * This program is licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <vector>

#include "expsum/cyclo.hpp"
#include "expsum/polygon.hpp"
#include "expsum/ratfun.hpp"

namespace expsum {

/// The L-function of an exponential sum: a degree-d polynomial over
/// Z[zeta_p] with constant term 1, carried together with (p, a).
class LPolynomial {
 public:
  LPolynomial(long p, int a, std::vector<CycloElt> coeffs);

  long p() const { return p_; }
  int a() const { return a_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<CycloElt>& coeffs() const { return coeffs_; }
  const CycloElt& coeff(size_t m) const { return coeffs_.at(m); }

  LPolynomial operator*(const LPolynomial& o) const;

 private:
  long p_;
  int a_;
  std::vector<CycloElt> coeffs_;  // c_0 = 1, ..., c_d
};

/// Numerator P(T) of the zeta function of the degree-p cover y^p - y = f:
/// Z(T) = P(T) / ((1-T)(1-qT)), deg P = (p-1) d, P(0) = 1.
class ZetaNumerator {
 public:
  ZetaNumerator(long p, int a, std::vector<Int> coeffs);

  long p() const { return p_; }
  int a() const { return a_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

 private:
  long p_;
  int a_;
  std::vector<Int> coeffs_;
};

/// S_k = sum over non-pole x in F_{q^k} of zeta_p^{Tr(f(x))}, exact.
CycloElt exp_sum(const ReducedFunction& f, int k, long budget = 10000000L);

/// The full L-function from S_1..S_{d+1}; asserts the degree cutoff
/// (coefficient d+1 vanishes) and integrality of all coefficients.
LPolynomial l_function(const ReducedFunction& f, long budget = 10000000L);

/// Newton polygon of L: lower hull of (m, ord(c_m)) with ord normalized
/// so that ord(q) = 1 (heights divided by a).
Polygon np_of_l(const LPolynomial& L);

/// Number of points of the projective curve y^p - y = f over F_{q^k}:
/// p per affine non-pole x with Tr(f(x)) = 0, plus one point per pole.
Int count_points(const ReducedFunction& f, int k, long budget = 10000000L);

/// Zeta numerator from the point counts N_1 .. N_{(p-1)d}; asserts
/// integrality, P(0) = 1 and the functional-equation symmetry.
ZetaNumerator zeta_numerator(const ReducedFunction& f, long budget = 10000000L);

/// Newton polygon of the zeta numerator (ord_q-normalized) shrunk by
/// 1/(p-1) in both directions; compare against the same Hodge polygon
/// that bounds NP of L.
Polygon scaled_np(const ZetaNumerator& Z);

/// Exact identity P(T) = prod_{c in F_p^*} L(c f, T).
bool character_twist_product(const ReducedFunction& f, long budget = 10000000L);

}  // namespace expsum
