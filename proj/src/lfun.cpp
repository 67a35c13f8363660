/* Copyright (C) 2026 the expsum authors.
 * This program is licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */
#include "expsum/lfun.hpp"

#include <algorithm>

namespace expsum {

LPolynomial::LPolynomial(long p, int a, std::vector<CycloElt> coeffs)
    : p_(p), a_(a), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("LPolynomial: empty");
  if (!(coeffs_[0] == CycloElt(p_, Rat(1))))
    throw std::invalid_argument("LPolynomial: constant term must be 1");
}

LPolynomial LPolynomial::operator*(const LPolynomial& o) const {
  if (p_ != o.p_ || a_ != o.a_) throw std::invalid_argument("LPolynomial: context mismatch");
  std::vector<CycloElt> prod(coeffs_.size() + o.coeffs_.size() - 1, CycloElt(p_));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  return LPolynomial(p_, a_, std::move(prod));
}

ZetaNumerator::ZetaNumerator(long p, int a, std::vector<Int> coeffs)
    : p_(p), a_(a), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_[0] != 1)
    throw std::invalid_argument("ZetaNumerator: P(0) must be 1");
}

namespace {

// trace histogram of f over the non-pole points of F_{q^k}
std::vector<Int> trace_counts(const ReducedFunction& f, int k, long budget) {
  const FieldPtr& base = f.field();
  const long p = base->p();
  FieldPtr ext = (k == 1) ? base : make_field(p, base->m() * k);
  Int sz = ext->order();
  if (sz > budget) throw std::length_error("exp_sum: enumeration budget exceeded");
  ReducedFunction g = (k == 1) ? f : f.lifted_to(ext);

  const std::vector<FieldElt>& poles = g.finite_poles();

  std::vector<Int> counts(static_cast<size_t>(p), Int(0));
  const long total = sz.get_si();
  for (long i = 0; i < total; ++i) {
    FieldElt x = ext->element_from_index(i);
    bool pole = false;
    for (const auto& P : poles)
      if (x == P) {
        pole = true;
        break;
      }
    if (pole) continue;
    long t = trace_to_prime(evaluate(g, x));
    counts[static_cast<size_t>(t)] += 1;
  }
  return counts;
}

}  // namespace

CycloElt exp_sum(const ReducedFunction& f, int k, long budget) {
  const long p = f.field()->p();
  auto counts = trace_counts(f, k, budget);
  CycloElt s(p);
  for (long t = 0; t < p; ++t) {
    if (counts[static_cast<size_t>(t)] == 0) continue;
    s += CycloElt::zeta_power(p, t) * Rat(counts[static_cast<size_t>(t)]);
  }
  return s;
}

LPolynomial l_function(const ReducedFunction& f, long budget) {
  const long p = f.field()->p();
  const int a = f.field()->m();
  const long d = f.degree();
  std::vector<CycloElt> S;
  S.reserve(static_cast<size_t>(d + 1));
  for (int k = 1; k <= d + 1; ++k) S.push_back(exp_sum(f, k, budget));

  // L = exp(sum S_k T^k / k):  m c_m = sum_{k=1}^{m} S_k c_{m-k}
  std::vector<CycloElt> c;
  c.push_back(CycloElt(p, Rat(1)));
  for (long m = 1; m <= d + 1; ++m) {
    CycloElt acc(p);
    for (long k = 1; k <= m; ++k) acc += S[static_cast<size_t>(k - 1)] * c[static_cast<size_t>(m - k)];
    c.push_back(acc * Rat(1, m));
  }
  if (!c[static_cast<size_t>(d + 1)].is_zero())
    throw std::logic_error("l_function: coefficient beyond the degree bound is nonzero");
  c.pop_back();
  for (const auto& cm : c)
    if (!cm.is_integral())
      throw std::logic_error("l_function: non-integral coefficient");
  return LPolynomial(p, a, std::move(c));
}

Polygon np_of_l(const LPolynomial& L) {
  std::vector<std::optional<Rat>> heights;
  heights.reserve(static_cast<size_t>(L.degree()) + 1);
  for (const auto& cm : L.coeffs()) {
    OrdValue v = cm.pi_valuation();
    if (v.is_infinity())
      heights.push_back(std::nullopt);
    else
      heights.push_back(v.value() / L.a());
  }
  return lower_hull(heights);
}

Int count_points(const ReducedFunction& f, int k, long budget) {
  auto counts = trace_counts(f, k, budget);
  // p points above each x with zero trace; each of the ell totally
  // ramified pole places contributes exactly one point (poles live in the
  // base field, hence are rational over every extension)
  return counts[0] * f.field()->p() + f.ell();
}

ZetaNumerator zeta_numerator(const ReducedFunction& f, long budget) {
  const long p = f.field()->p();
  const int a = f.field()->m();
  const Int q = f.field()->order();
  const long D = (p - 1) * f.degree();
  std::vector<Int> N;
  for (int k = 1; k <= D; ++k) N.push_back(count_points(f, k, budget));

  // Z = exp(sum N_k T^k / k); z_m = (1/m) sum N_k z_{m-k}
  std::vector<Rat> z{Rat(1)};
  for (long m = 1; m <= D; ++m) {
    Rat acc(0);
    for (long k = 1; k <= m; ++k) acc += Rat(N[static_cast<size_t>(k - 1)]) * z[static_cast<size_t>(m - k)];
    z.push_back(acc / m);
  }
  // P = Z * (1-T)(1-qT) = Z * (1 - (1+q)T + qT^2)
  std::vector<Rat> P(static_cast<size_t>(D + 1), Rat(0));
  for (long m = 0; m <= D; ++m) {
    Rat v = z[static_cast<size_t>(m)];
    if (m >= 1) v -= Rat(q + 1) * z[static_cast<size_t>(m - 1)];
    if (m >= 2) v += Rat(q) * z[static_cast<size_t>(m - 2)];
    P[static_cast<size_t>(m)] = v;
  }
  std::vector<Int> coeffs;
  coeffs.reserve(P.size());
  for (const Rat& v : P) {
    if (v.get_den() != 1) throw std::logic_error("zeta_numerator: non-integral coefficient");
    coeffs.emplace_back(v.get_num());
  }
  // functional equation: P_{D-m} = q^{g-m} P_m with g = D/2
  if (D % 2 != 0) throw std::logic_error("zeta_numerator: odd degree");
  const long g = D / 2;
  for (long m = 0; m <= g; ++m) {
    Int qpow(1);
    for (long i = 0; i < g - m; ++i) qpow *= q;
    if (coeffs[static_cast<size_t>(D - m)] != qpow * coeffs[static_cast<size_t>(m)])
      throw std::logic_error("zeta_numerator: functional equation violated");
  }
  return ZetaNumerator(p, a, std::move(coeffs));
}

Polygon scaled_np(const ZetaNumerator& Z) {
  const Int p(Z.p());
  std::vector<std::optional<Rat>> heights;
  for (const Int& c : Z.coeffs()) {
    if (c == 0)
      heights.push_back(std::nullopt);
    else
      heights.push_back(Rat(padic_val(c, p), Z.a()));
  }
  Polygon np = lower_hull(heights);
  return np.scaled(Rat(1, Z.p() - 1));
}

bool character_twist_product(const ReducedFunction& f, long budget) {
  const long p = f.field()->p();
  LPolynomial prod = l_function(f, budget);
  for (long c = 2; c < p; ++c) prod = prod * l_function(f.scaled(c), budget);
  ZetaNumerator P = zeta_numerator(f, budget);
  if (prod.degree() != P.degree()) return false;
  for (size_t m = 0; m < P.coeffs().size(); ++m) {
    CycloElt want(p, Rat(P.coeffs()[m]));
    if (!(prod.coeff(m) == want)) return false;
  }
  return true;
}

}  // namespace expsum
