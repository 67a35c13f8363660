/* Copyright (C) 2026 the expsum authors.
 * This program is licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace expsum {

using Int = mpz_class;
using Rat = mpq_class;

/// p-adic valuation of a nonzero integer.
long padic_val(const Int& n, const Int& p);

/// p-adic valuation of a nonzero rational (v(num) - v(den)).
long padic_val(const Rat& x, const Int& p);

/// True if the denominator of x is coprime to p.
bool is_p_integral(const Rat& x, const Int& p);

/// True if x is a p-adic unit (valuation exactly 0).
bool is_p_unit(const Rat& x, const Int& p);

bool is_prime(const Int& n);

/// A rational number or +infinity; the value of a discrete valuation.
/// Infinity is reserved for the zero element.
class OrdValue {
 public:
  OrdValue() : inf_(true) {}  // +infinity
  explicit OrdValue(Rat v) : value_(std::move(v)), inf_(false) {}
  static OrdValue infinity() { return OrdValue(); }

  bool is_infinity() const { return inf_; }
  const Rat& value() const {
    if (inf_) throw std::logic_error("OrdValue: +infinity has no finite value");
    return value_;
  }

  OrdValue operator+(const OrdValue& o) const {
    if (inf_ || o.inf_) return infinity();
    return OrdValue(value_ + o.value_);
  }
  bool operator==(const OrdValue& o) const {
    if (inf_ || o.inf_) return inf_ == o.inf_;
    return value_ == o.value_;
  }
  bool operator<(const OrdValue& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return value_ < o.value_;
  }
  bool operator<=(const OrdValue& o) const { return *this < o || *this == o; }
  bool operator>=(const OrdValue& o) const { return !(*this < o); }
  bool operator>(const OrdValue& o) const { return o < *this; }

  static OrdValue min(const OrdValue& a, const OrdValue& b) { return a < b ? a : b; }

  std::string str() const { return inf_ ? "inf" : value_.get_str(); }

 private:
  Rat value_;
  bool inf_;
};

}  // namespace expsum
