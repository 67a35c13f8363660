/* Copyright (C) 2026 the expsum authors.
 * This program is licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */
#include "expsum/finite_field.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace expsum {

namespace {

// --- dense polynomial arithmetic over F_p (little-endian coefficients) ---

using Poly = std::vector<long>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(const Poly& a, const Poly& f, long p) {
  Poly r = a;
  trim(r);
  const size_t n = f.size() - 1;  // deg f, f monic
  while (r.size() > n) {
    long c = r.back();
    size_t shift = r.size() - 1 - n;
    if (c != 0) {
      for (size_t i = 0; i <= n; ++i) {
        long& ri = r[shift + i];
        ri = (ri - c * f[i]) % p;
        if (ri < 0) ri += p;
      }
    }
    r.pop_back();
    trim(r);
  }
  return r;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, long p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(prod, f, p);
}

Poly poly_powmod(Poly base, Int e, const Poly& f, long p) {
  Poly result{1};
  base = poly_mod(base, f, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, long p) {
  trim(a);
  trim(b);
  auto inv_mod_p = [p](long x) {
    long t = 0, newt = 1, r = p, newr = ((x % p) + p) % p;
    while (newr != 0) {
      long q = r / newr;
      std::swap(t -= q * newt, newt);
      std::swap(r -= q * newr, newr);
    }
    return ((t % p) + p) % p;
  };
  while (!b.empty()) {
    // a mod b with b made monic
    long lc = b.back();
    if (lc != 1) {
      long ilc = inv_mod_p(lc);
      for (auto& c : b) c = c * ilc % p;
    }
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible(const Poly& f, long p) {
  const long n = static_cast<long>(f.size()) - 1;
  Poly x{0, 1};
  // x^{p^n} == x mod f
  Poly xp = x;
  for (long i = 0; i < n; ++i) xp = poly_powmod(xp, Int(p), f, p);
  Poly diff = xp;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] - 1) % p;
  if (diff[1] < 0) diff[1] += p;
  trim(diff);
  if (!diff.empty()) return false;
  // gcd(x^{p^{n/t}} - x, f) == 1 for every prime t | n
  for (long t : prime_divisors(n)) {
    Poly y = x;
    for (long i = 0; i < n / t; ++i) y = poly_powmod(y, Int(p), f, p);
    Poly d = y;
    d.resize(std::max<size_t>(d.size(), 2), 0);
    d[1] = (d[1] - 1) % p;
    if (d[1] < 0) d[1] += p;
    Poly g = poly_gcd(f, d, p);
    if (g.size() != 1) return false;
  }
  return true;
}

Int int_pow(long p, int m) {
  Int r(1);
  for (int i = 0; i < m; ++i) r *= p;
  return r;
}

// registry of constructed fields
std::mutex g_registry_mutex;
std::map<std::pair<long, int>, FieldPtr>& registry() {
  static std::map<std::pair<long, int>, FieldPtr> r;
  return r;
}

// Deterministic modulus for (p, n). For n == 1 it is x. For n >= 2 it is the
// first monic irreducible (in base-p counter order on the non-leading
// coefficients) whose root g is primitive and satisfies
// modulus_m(g^{(p^n-1)/(p^m-1)}) = 0 for every divisor 2 <= m < n.
// The last condition makes generator-power embeddings commute along towers.
Poly choose_modulus(long p, int n, const std::map<int, Poly>& divisor_moduli) {
  if (n == 1) return Poly{0, 1};
  Int order = int_pow(p, n) - 1;
  if (!order.fits_slong_p())
    throw std::length_error("make_field: field too large for modulus search");
  long ord = order.get_si();
  std::vector<long> ord_primes = prime_divisors(ord);

  Int count = int_pow(p, n);
  long total = count.get_si();
  for (long idx = 0; idx < total; ++idx) {
    Poly f(static_cast<size_t>(n) + 1, 0);
    long t = idx;
    for (int i = 0; i < n; ++i) {
      f[static_cast<size_t>(i)] = t % p;
      t /= p;
    }
    f[static_cast<size_t>(n)] = 1;
    if (f[0] == 0) continue;  // divisible by x
    if (!is_irreducible(f, p)) continue;
    Poly x{0, 1};
    // primitivity of the class of x
    bool primitive = true;
    for (long r : ord_primes) {
      Poly e = poly_powmod(x, Int(ord / r), f, p);
      if (e.size() == 1 && e[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    // norm-compatibility with every proper divisor field of degree >= 2
    bool compatible = true;
    for (const auto& [m, fm] : divisor_moduli) {
      if (m < 2 || m >= n || n % m != 0) continue;
      long e = ord / (int_pow(p, m).get_si() - 1);
      Poly h = poly_powmod(x, Int(e), f, p);
      // evaluate fm at h modulo f
      Poly acc{fm.back() % p};
      for (int i = m - 1; i >= 0; --i) {
        acc = poly_mulmod(acc, h, f, p);
        if (fm[static_cast<size_t>(i)] != 0) {
          if (acc.empty()) acc.resize(1, 0);
          acc[0] = (acc[0] + fm[static_cast<size_t>(i)]) % p;
          trim(acc);
        }
      }
      if (!acc.empty()) {
        compatible = false;
        break;
      }
    }
    if (!compatible) continue;
    return f;
  }
  throw std::logic_error("make_field: no compatible primitive modulus found");
}

}  // namespace

FiniteField::FiniteField(long p, int m, std::vector<long> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {}

Int FiniteField::order() const { return int_pow(p_, m_); }

FieldPtr FiniteField::make(long p, int m) {
  if (m < 1) throw std::invalid_argument("make_field: m must be >= 1");
  if (p < 2 || !is_prime(Int(p))) throw std::invalid_argument("make_field: p must be prime");
  std::lock_guard<std::mutex> lock(g_registry_mutex);
  auto key = std::make_pair(p, m);
  auto it = registry().find(key);
  if (it != registry().end()) return it->second;

  // construct divisor fields bottom-up so modulus choice is reproducible
  std::map<int, Poly> divisor_moduli;
  for (int k = 1; k < m; ++k) {
    if (m % k != 0) continue;
    auto dkey = std::make_pair(p, k);
    auto dit = registry().find(dkey);
    if (dit == registry().end()) {
      Poly fk = choose_modulus(p, k, divisor_moduli);
      FieldPtr fld(new FiniteField(p, k, fk));
      registry()[dkey] = fld;
      divisor_moduli[k] = fk;
    } else {
      divisor_moduli[k] = dit->second->modulus();
    }
  }
  Poly f = choose_modulus(p, m, divisor_moduli);
  FieldPtr fld(new FiniteField(p, m, f));
  registry()[key] = fld;
  return fld;
}

FieldPtr make_field(long p, int m) { return FiniteField::make(p, m); }

FieldElt FiniteField::zero() const {
  return FieldElt(shared_from_this(), std::vector<long>(static_cast<size_t>(m_), 0));
}

FieldElt FiniteField::one() const { return from_int(1); }

FieldElt FiniteField::generator() const {
  std::vector<long> c(static_cast<size_t>(m_), 0);
  if (m_ == 1) {
    // the class of x is 0 in the degree-1 field (modulus x)
    return FieldElt(shared_from_this(), std::move(c));
  }
  c[1] = 1;
  return FieldElt(shared_from_this(), std::move(c));
}

FieldElt FiniteField::from_int(long c) const {
  std::vector<long> v(static_cast<size_t>(m_), 0);
  v[0] = ((c % p_) + p_) % p_;
  return FieldElt(shared_from_this(), std::move(v));
}

FieldElt FiniteField::element_from_index(long idx) const {
  if (idx < 0) throw std::invalid_argument("element_from_index: negative index");
  std::vector<long> v(static_cast<size_t>(m_), 0);
  for (int i = 0; i < m_; ++i) {
    v[static_cast<size_t>(i)] = idx % p_;
    idx /= p_;
  }
  if (idx != 0) throw std::invalid_argument("element_from_index: index out of range");
  return FieldElt(shared_from_this(), std::move(v));
}

FieldElt::FieldElt(FieldPtr field, std::vector<long> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("FieldElt: null field");
  if (coeffs_.size() != static_cast<size_t>(field_->m()))
    throw std::invalid_argument("FieldElt: coefficient length mismatch");
  for (auto& c : coeffs_) c = ((c % field_->p()) + field_->p()) % field_->p();
}

bool FieldElt::is_zero() const {
  for (long c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool FieldElt::operator==(const FieldElt& o) const {
  return field_ == o.field_ && coeffs_ == o.coeffs_;
}

FieldElt FieldElt::operator+(const FieldElt& o) const {
  if (field_ != o.field_) throw std::invalid_argument("FieldElt: field mismatch");
  std::vector<long> c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = (coeffs_[i] + o.coeffs_[i]) % field_->p();
  return FieldElt(field_, std::move(c));
}

FieldElt FieldElt::operator-(const FieldElt& o) const {
  if (field_ != o.field_) throw std::invalid_argument("FieldElt: field mismatch");
  std::vector<long> c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = ((coeffs_[i] - o.coeffs_[i]) % field_->p() + field_->p()) % field_->p();
  return FieldElt(field_, std::move(c));
}

FieldElt FieldElt::operator-() const {
  std::vector<long> c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = (field_->p() - coeffs_[i]) % field_->p();
  return FieldElt(field_, std::move(c));
}

FieldElt FieldElt::operator*(const FieldElt& o) const {
  if (field_ != o.field_) throw std::invalid_argument("FieldElt: field mismatch");
  Poly prod = poly_mulmod(coeffs_, o.coeffs_, field_->modulus(), field_->p());
  prod.resize(coeffs_.size(), 0);
  return FieldElt(field_, std::move(prod));
}

FieldElt FieldElt::pow(long e) const {
  if (e < 0) throw std::invalid_argument("FieldElt::pow: negative exponent");
  Poly r = poly_powmod(coeffs_, Int(e), field_->modulus(), field_->p());
  r.resize(coeffs_.size(), 0);
  return FieldElt(field_, std::move(r));
}

FieldElt FieldElt::inverse() const {
  if (is_zero()) throw std::domain_error("FieldElt::inverse: zero element");
  // extended Euclid in F_p[x]: s*a + t*f = 1
  const long p = field_->p();
  auto inv_mod_p = [p](long x) {
    long t = 0, newt = 1, r = p, newr = ((x % p) + p) % p;
    while (newr != 0) {
      long q = r / newr;
      std::swap(t -= q * newt, newt);
      std::swap(r -= q * newr, newr);
    }
    return ((t % p) + p) % p;
  };
  Poly r0 = field_->modulus(), r1 = coeffs_;
  Poly s0{}, s1{1};
  trim(r1);
  while (!r1.empty()) {
    // divide r0 by r1
    long ilc = inv_mod_p(r1.back());
    Poly q(r0.size() > r1.size() - 1 ? r0.size() - r1.size() + 1 : 1, 0);
    Poly rem = r0;
    trim(rem);
    while (rem.size() >= r1.size()) {
      long c = rem.back() * ilc % p;
      size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i) {
        long& ri = rem[shift + i];
        ri = (ri - c * r1[i]) % p;
        if (ri < 0) ri += p;
      }
      trim(rem);
    }
    // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
    Poly qs(q.size() + (s1.empty() ? 0 : s1.size() - 1) + 1, 0);
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) qs[i + j] = (qs[i + j] + q[i] * s1[j]) % p;
    }
    Poly snew(std::max(s0.size(), qs.size()), 0);
    for (size_t i = 0; i < snew.size(); ++i) {
      long v = (i < s0.size() ? s0[i] : 0) - (i < qs.size() ? qs[i] : 0);
      snew[i] = ((v % p) + p) % p;
    }
    trim(snew);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snew);
  }
  // r0 is the gcd (a nonzero constant since the modulus is irreducible)
  if (r0.size() != 1) throw std::logic_error("FieldElt::inverse: gcd not constant");
  long scale = inv_mod_p(r0[0]);
  for (auto& c : s0) c = c * scale % p;
  s0.resize(coeffs_.size(), 0);
  return FieldElt(field_, std::move(s0));
}

FieldElt FieldElt::frobenius() const {
  Poly r = poly_powmod(coeffs_, Int(field_->p()), field_->modulus(), field_->p());
  r.resize(coeffs_.size(), 0);
  return FieldElt(field_, std::move(r));
}

std::string FieldElt::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ",";
    os << coeffs_[i];
  }
  os << "]";
  return os.str();
}

FieldElt embed(const FieldElt& x, const FieldPtr& target) {
  const FieldPtr& src = x.field();
  if (src == target) return x;
  if (src->p() != target->p()) throw std::invalid_argument("embed: different characteristics");
  if (target->m() % src->m() != 0)
    throw std::invalid_argument("embed: source degree does not divide target degree");
  if (src->m() == 1) {
    std::vector<long> c(static_cast<size_t>(target->m()), 0);
    c[0] = x.coeffs()[0];
    return FieldElt(target, std::move(c));
  }
  Poly img;
  {
    std::lock_guard<std::mutex> lock(target->embed_mutex_);
    auto it = target->embed_images_.find(src->m());
    if (it != target->embed_images_.end()) {
      img = it->second;
    } else {
      long e = (target->order().get_si() - 1) / (src->order().get_si() - 1);
      Poly g{0, 1};
      img = poly_powmod(g, Int(e), target->modulus(), target->p());
      target->embed_images_.emplace(src->m(), img);
    }
  }
  // evaluate the source coefficient polynomial at the generator image
  Poly acc;
  const auto& cs = x.coeffs();
  for (size_t i = cs.size(); i-- > 0;) {
    acc = poly_mulmod(acc, img, target->modulus(), target->p());
    if (cs[i] != 0) {
      if (acc.empty()) acc.resize(1, 0);
      acc[0] = (acc[0] + cs[i]) % target->p();
    }
  }
  acc.resize(static_cast<size_t>(target->m()), 0);
  return FieldElt(target, std::move(acc));
}

const std::vector<long>& FiniteField::basis_traces() const {
  std::lock_guard<std::mutex> lock(embed_mutex_);
  if (basis_traces_.empty()) {
    std::vector<long> t(static_cast<size_t>(m_), 0);
    for (int j = 0; j < m_; ++j) {
      std::vector<long> c(static_cast<size_t>(m_), 0);
      c[static_cast<size_t>(j)] = 1;
      FieldElt e(shared_from_this(), std::move(c));
      FieldElt acc = e;
      FieldElt pw = e;
      for (int i = 1; i < m_; ++i) {
        pw = pw.frobenius();
        acc = acc + pw;
      }
      for (size_t i = 1; i < acc.coeffs().size(); ++i)
        if (acc.coeffs()[i] != 0)
          throw std::logic_error("basis_traces: trace not in prime field");
      t[static_cast<size_t>(j)] = acc.coeffs()[0];
    }
    basis_traces_ = std::move(t);
  }
  return basis_traces_;
}

long trace_to_prime(const FieldElt& x) {
  const auto& t = x.field()->basis_traces();
  long p = x.field()->p();
  long s = 0;
  for (size_t j = 0; j < t.size(); ++j) s = (s + t[j] * x.coeffs()[j]) % p;
  return s;
}

std::vector<FieldElt> enumerate_field(const FieldPtr& field, long budget) {
  Int n = field->order();
  if (n > budget) throw std::length_error("enumerate_field: enumeration budget exceeded");
  long total = n.get_si();
  std::vector<FieldElt> out;
  out.reserve(static_cast<size_t>(total));
  for (long i = 0; i < total; ++i) out.push_back(field->element_from_index(i));
  return out;
}

}  // namespace expsum
