/* Copyright (C) 2026 the expsum authors.
 * This program is licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */
#include "expsum/cyclo.hpp"

#include <sstream>

namespace expsum {

CycloElt::CycloElt(long p) : p_(p), coeffs_(static_cast<size_t>(p - 1)) {
  if (p < 2 || !is_prime(Int(p))) throw std::invalid_argument("CycloElt: p must be prime");
}

CycloElt::CycloElt(long p, const Rat& c) : CycloElt(p) { coeffs_[0] = c; }

CycloElt CycloElt::zeta_power(long p, long k) {
  CycloElt z(p);
  long e = ((k % p) + p) % p;
  if (e == p - 1) {
    // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
    for (auto& c : z.coeffs_) c = -1;
  } else {
    z.coeffs_[static_cast<size_t>(e)] = 1;
  }
  return z;
}

bool CycloElt::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloElt::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

void CycloElt::check_same_field(const CycloElt& o) const {
  if (p_ != o.p_) throw std::invalid_argument("CycloElt: mismatched primes");
}

CycloElt CycloElt::operator+(const CycloElt& o) const {
  CycloElt r = *this;
  r += o;
  return r;
}

CycloElt& CycloElt::operator+=(const CycloElt& o) {
  check_same_field(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloElt CycloElt::operator-(const CycloElt& o) const {
  CycloElt r = *this;
  r -= o;
  return r;
}

CycloElt& CycloElt::operator-=(const CycloElt& o) {
  check_same_field(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloElt CycloElt::operator-() const {
  CycloElt r(p_);
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
  return r;
}

CycloElt CycloElt::operator*(const CycloElt& o) const {
  check_same_field(o);
  const size_t n = coeffs_.size();  // p-1
  // Raw product by exponent, exponents reduced mod p (zeta^p = 1),
  // then zeta^{p-1} folded into the power basis.
  std::vector<Rat> raw(static_cast<size_t>(p_));
  for (size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (o.coeffs_[j] == 0) continue;
      raw[(i + j) % static_cast<size_t>(p_)] += coeffs_[i] * o.coeffs_[j];
    }
  }
  CycloElt r(p_);
  for (size_t e = 0; e < n; ++e) r.coeffs_[e] = raw[e];
  const Rat& top = raw[n];
  if (top != 0)
    for (auto& c : r.coeffs_) c -= top;
  return r;
}

CycloElt& CycloElt::operator*=(const CycloElt& o) {
  *this = *this * o;
  return *this;
}

CycloElt CycloElt::operator*(const Rat& c) const {
  CycloElt r(p_);
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] * c;
  return r;
}

bool CycloElt::operator==(const CycloElt& o) const {
  return p_ == o.p_ && coeffs_ == o.coeffs_;
}

CycloElt CycloElt::conjugate(long k) const {
  long e0 = ((k % p_) + p_) % p_;
  if (e0 == 0) throw std::invalid_argument("CycloElt::conjugate: k divisible by p");
  std::vector<Rat> raw(static_cast<size_t>(p_));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    raw[(i * static_cast<size_t>(e0)) % static_cast<size_t>(p_)] += coeffs_[i];
  }
  CycloElt r(p_);
  for (size_t e = 0; e + 1 < static_cast<size_t>(p_); ++e) r.coeffs_[e] = raw[e];
  const Rat& top = raw[static_cast<size_t>(p_ - 1)];
  if (top != 0)
    for (auto& c : r.coeffs_) c -= top;
  return r;
}

Rat CycloElt::norm_to_Q() const {
  if (is_zero()) return Rat(0);
  CycloElt prod(p_, Rat(1));
  for (long k = 1; k < p_; ++k) prod *= conjugate(k);
  if (!prod.is_rational())
    throw std::logic_error("CycloElt::norm_to_Q: Galois product not rational");
  return prod.rational_part();
}

OrdValue CycloElt::pi_valuation() const {
  if (is_zero()) return OrdValue::infinity();
  // Q(zeta_p)/Q is totally ramified at p of degree p-1 with trivial
  // residue extension, so ord_p(x) = v_p(N(x)) / (p-1).
  Rat n = norm_to_Q();
  return OrdValue(Rat(padic_val(n, Int(p_)), p_ - 1));
}

bool CycloElt::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

std::string CycloElt::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << coeffs_[i].get_str();
    if (i >= 1) os << "*z^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace expsum
