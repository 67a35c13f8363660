/* Copyright (C) 2026 the expsum authors.
 * This program is licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "expsum/rational.hpp"

namespace expsum {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// An element of F_{p^m}: a coefficient vector of length m over F_p in the
/// power basis of the field's generator (the class of x).
class FieldElt {
 public:
  FieldElt() = default;
  FieldElt(FieldPtr field, std::vector<long> coeffs);

  const FieldPtr& field() const { return field_; }
  const std::vector<long>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool operator==(const FieldElt& o) const;
  bool operator!=(const FieldElt& o) const { return !(*this == o); }

  FieldElt operator+(const FieldElt& o) const;
  FieldElt operator-(const FieldElt& o) const;
  FieldElt operator-() const;
  FieldElt operator*(const FieldElt& o) const;
  FieldElt inverse() const;
  FieldElt pow(long e) const;  // e >= 0

  /// Frobenius x -> x^p.
  FieldElt frobenius() const;

  std::string str() const;

 private:
  FieldPtr field_;
  std::vector<long> coeffs_;
};

/// F_{p^m} with a deterministic modulus. Fields are constructed through
/// make_field and cached per (p, m); moduli of composite-degree fields are
/// chosen primitive and norm-compatible with all divisor fields, so that
/// generator-power embeddings commute along towers.
class FiniteField : public std::enable_shared_from_this<FiniteField> {
 public:
  long p() const { return p_; }
  int m() const { return m_; }
  /// Monic modulus, coefficient i of x^i, degree m.
  const std::vector<long>& modulus() const { return modulus_; }
  Int order() const;  // p^m

  FieldElt zero() const;
  FieldElt one() const;
  FieldElt generator() const;  // the class of x
  FieldElt from_int(long c) const;
  /// Element with the given little-endian base-p digit index in [0, p^m).
  FieldElt element_from_index(long idx) const;

  static FieldPtr make(long p, int m);

 private:
  friend class FieldElt;
  friend FieldElt embed(const FieldElt&, const FieldPtr&);
  friend long trace_to_prime(const FieldElt&);

  FiniteField(long p, int m, std::vector<long> modulus);

  long p_;
  int m_;
  std::vector<long> modulus_;

  /// Traces of the power-basis vectors; trace is F_p-linear so this turns
  /// trace_to_prime into a dot product.
  const std::vector<long>& basis_traces() const;

  // cached generator images for embeddings from smaller degrees
  mutable std::mutex embed_mutex_;
  mutable std::unordered_map<int, std::vector<long>> embed_images_;
  mutable std::vector<long> basis_traces_;
};

/// Deterministic field construction; throws if p is not prime or m < 1.
FieldPtr make_field(long p, int m);

/// Ring-homomorphic embedding of x into the target field; the source degree
/// must divide the target degree (same p). Tower-consistent: embedding
/// through an intermediate field equals the direct embedding.
FieldElt embed(const FieldElt& x, const FieldPtr& target);

/// Absolute trace down to F_p, as a residue in [0, p).
long trace_to_prime(const FieldElt& x);

/// All p^m elements in deterministic index order. Throws std::length_error
/// if p^m exceeds the budget.
std::vector<FieldElt> enumerate_field(const FieldPtr& field, long budget = 10000000L);

}  // namespace expsum
