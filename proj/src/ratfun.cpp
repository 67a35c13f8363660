/* Copyright (C) 2026 the expsum authors.
 * This program is licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */
#include "expsum/ratfun.hpp"

#include <sstream>

namespace expsum {

RationalFunction::RationalFunction(std::vector<int> pole_orders, std::vector<Rat> poles,
                                   std::vector<std::vector<Rat>> coeffs)
    : pole_orders_(std::move(pole_orders)), coeffs_(std::move(coeffs)) {
  const int ell = static_cast<int>(pole_orders_.size());
  if (ell < 1) throw std::invalid_argument("RationalFunction: need at least one pole");
  for (int dj : pole_orders_)
    if (dj < 1) throw std::invalid_argument("RationalFunction: pole orders must be positive");
  if (poles.size() != static_cast<size_t>(ell))
    throw std::invalid_argument("RationalFunction: pole list length mismatch");
  if (coeffs_.size() != static_cast<size_t>(ell))
    throw std::invalid_argument("RationalFunction: coefficient table length mismatch");
  for (int j = 1; j < ell; ++j)
    for (int k = j + 1; k < ell; ++k)
      if (poles[static_cast<size_t>(j)] == poles[static_cast<size_t>(k)])
        throw std::invalid_argument("RationalFunction: duplicate poles");
  for (int j = 0; j < ell; ++j) {
    if (coeffs_[static_cast<size_t>(j)].size() != static_cast<size_t>(pole_orders_[static_cast<size_t>(j)]))
      throw std::invalid_argument("RationalFunction: coefficient row length must equal pole order");
    if (coeffs_[static_cast<size_t>(j)].back() == 0)
      throw std::invalid_argument("RationalFunction: leading coefficient is zero");
  }
  if (ell == 1 && degree() < 2)
    throw std::invalid_argument("RationalFunction: a single pole needs degree >= 2");
  finite_poles_.assign(poles.begin() + 1, poles.end());
}

const Rat& RationalFunction::coeff(int j, int i) const {
  return coeffs_.at(static_cast<size_t>(j - 1)).at(static_cast<size_t>(i - 1));
}

long RationalFunction::degree() const {
  long s = 0;
  for (int dj : pole_orders_) s += dj;
  return s + ell() - 2;
}

std::string RationalFunction::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = pole_orders_[0]; i >= 1; --i) {
    const Rat& a = coeff(1, i);
    if (a == 0) continue;
    if (!first) os << " + ";
    os << a.get_str() << "*x^" << i;
    first = false;
  }
  for (int j = 2; j <= ell(); ++j) {
    for (int i = 1; i <= pole_orders_[static_cast<size_t>(j - 1)]; ++i) {
      const Rat& a = coeff(j, i);
      if (a == 0) continue;
      if (!first) os << " + ";
      os << a.get_str() << "*(x-" << finite_poles_[static_cast<size_t>(j - 2)].get_str() << ")^-"
         << i;
      first = false;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string to_string(BadPrimeReason r) {
  switch (r) {
    case BadPrimeReason::DividesPoleOrder:
      return "p divides a pole order";
    case BadPrimeReason::NonIntegralCoefficient:
      return "a coefficient is not p-integral";
    case BadPrimeReason::LeadingCoefficientNotUnit:
      return "a leading coefficient is not a p-unit";
    case BadPrimeReason::NonIntegralPole:
      return "a pole is not p-integral";
    case BadPrimeReason::PolesCollideModP:
      return "poles collide mod p";
  }
  return "unknown";
}

ReducedFunction::ReducedFunction(FieldPtr field, std::vector<int> pole_orders,
                                 std::vector<FieldElt> finite_poles,
                                 std::vector<std::vector<FieldElt>> coeffs)
    : field_(std::move(field)),
      pole_orders_(std::move(pole_orders)),
      finite_poles_(std::move(finite_poles)),
      coeffs_(std::move(coeffs)) {}

long ReducedFunction::degree() const {
  long s = 0;
  for (int dj : pole_orders_) s += dj;
  return s + ell() - 2;
}

ReducedFunction ReducedFunction::lifted_to(const FieldPtr& ext) const {
  std::vector<FieldElt> poles;
  poles.reserve(finite_poles_.size());
  for (const auto& P : finite_poles_) poles.push_back(embed(P, ext));
  std::vector<std::vector<FieldElt>> cs(coeffs_.size());
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    cs[j].reserve(coeffs_[j].size());
    for (const auto& a : coeffs_[j]) cs[j].push_back(embed(a, ext));
  }
  return ReducedFunction(ext, pole_orders_, std::move(poles), std::move(cs));
}

ReducedFunction ReducedFunction::scaled(long c) const {
  FieldElt cf = field_->from_int(c);
  std::vector<std::vector<FieldElt>> cs(coeffs_.size());
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    cs[j].reserve(coeffs_[j].size());
    for (const auto& a : coeffs_[j]) cs[j].push_back(a * cf);
  }
  return ReducedFunction(field_, pole_orders_, finite_poles_, std::move(cs));
}

namespace {
// residue of a p-integral rational mod p, in [0, p)
long reduce_rat(const Rat& x, long p) {
  Int num = x.get_num(), den = x.get_den();
  Int pp(p);
  Int n = num % pp;
  if (n < 0) n += pp;
  Int d = den % pp;
  Int dinv;
  if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pp.get_mpz_t()) == 0)
    throw std::logic_error("reduce_rat: denominator not invertible");
  Int r = (n * dinv) % pp;
  return r.get_si();
}
}  // namespace

ReducedFunction reduce_mod_p(const RationalFunction& f, long p, int a) {
  if (!is_prime(Int(p))) throw std::invalid_argument("reduce_mod_p: p must be prime");
  if (a < 1) throw std::invalid_argument("reduce_mod_p: a must be >= 1");
  const Int P(p);
  for (int dj : f.pole_orders())
    if (dj % p == 0)
      throw BadPrimeError(BadPrimeReason::DividesPoleOrder,
                          "bad prime " + std::to_string(p) + ": " +
                              to_string(BadPrimeReason::DividesPoleOrder));
  for (int j = 1; j <= f.ell(); ++j) {
    int dj = f.pole_orders()[static_cast<size_t>(j - 1)];
    for (int i = 1; i <= dj; ++i) {
      const Rat& c = f.coeff(j, i);
      if (!is_p_integral(c, P))
        throw BadPrimeError(BadPrimeReason::NonIntegralCoefficient,
                            "bad prime " + std::to_string(p) + ": " +
                                to_string(BadPrimeReason::NonIntegralCoefficient));
    }
    if (!is_p_unit(f.coeff(j, dj), P))
      throw BadPrimeError(BadPrimeReason::LeadingCoefficientNotUnit,
                          "bad prime " + std::to_string(p) + ": " +
                              to_string(BadPrimeReason::LeadingCoefficientNotUnit));
  }
  for (const Rat& pole : f.finite_poles())
    if (!is_p_integral(pole, P))
      throw BadPrimeError(BadPrimeReason::NonIntegralPole,
                          "bad prime " + std::to_string(p) + ": " +
                              to_string(BadPrimeReason::NonIntegralPole));
  // distinctness mod p (infinity never collides)
  for (size_t j = 0; j < f.finite_poles().size(); ++j)
    for (size_t k = j + 1; k < f.finite_poles().size(); ++k)
      if (reduce_rat(f.finite_poles()[j], p) == reduce_rat(f.finite_poles()[k], p))
        throw BadPrimeError(BadPrimeReason::PolesCollideModP,
                            "bad prime " + std::to_string(p) + ": " +
                                to_string(BadPrimeReason::PolesCollideModP));

  FieldPtr F = make_field(p, a);
  std::vector<FieldElt> poles;
  poles.reserve(f.finite_poles().size());
  for (const Rat& pole : f.finite_poles()) poles.push_back(F->from_int(reduce_rat(pole, p)));
  std::vector<std::vector<FieldElt>> cs(static_cast<size_t>(f.ell()));
  for (int j = 1; j <= f.ell(); ++j) {
    int dj = f.pole_orders()[static_cast<size_t>(j - 1)];
    for (int i = 1; i <= dj; ++i)
      cs[static_cast<size_t>(j - 1)].push_back(F->from_int(reduce_rat(f.coeff(j, i), p)));
  }
  return ReducedFunction(F, f.pole_orders(), std::move(poles), std::move(cs));
}

FieldElt evaluate(const ReducedFunction& f, const FieldElt& x) {
  if (f.field() != x.field())
    throw std::invalid_argument("evaluate: lift the function to the point's field first");
  const FieldPtr& F = x.field();
  // polynomial part at the infinite pole, Horner
  FieldElt acc = F->zero();
  const auto& poly = f.coeffs()[0];
  for (size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  acc = acc * x;  // vanishing constant term: sum starts at x^1
  // principal parts
  for (int j = 2; j <= f.ell(); ++j) {
    const FieldElt& P = f.finite_poles()[static_cast<size_t>(j - 2)];
    FieldElt diff = x - P;
    if (diff.is_zero()) throw std::domain_error("evaluate: x is a pole");
    FieldElt inv = diff.inverse();
    FieldElt part = F->zero();
    const auto& row = f.coeffs()[static_cast<size_t>(j - 1)];
    for (size_t i = row.size(); i-- > 0;) part = (part + row[i]) * inv;
    acc = acc + part;
  }
  return acc;
}

}  // namespace expsum
