/* Copyright (C) 2026 the expsum authors.
 * This program is licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */
#include "expsum/padic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace expsum {

namespace {
Int pow_int(long p, long e) {
  Int r(1);
  for (long i = 0; i < e; ++i) r *= p;
  return r;
}
}  // namespace

PadicCyclo::PadicCyclo(long p, long prec)
    : p_(p), prec_(prec), mod_(pow_int(p, prec)), coeffs_(static_cast<size_t>(p - 1)) {
  if (prec < 1) throw std::invalid_argument("PadicCyclo: precision must be >= 1");
  if (p < 2 || !is_prime(Int(p))) throw std::invalid_argument("PadicCyclo: p must be prime");
}

void PadicCyclo::reduce() {
  for (auto& c : coeffs_) {
    c %= mod_;
    if (c < 0) c += mod_;
  }
}

PadicCyclo PadicCyclo::from_int(long p, long prec, const Int& c) {
  PadicCyclo x(p, prec);
  x.coeffs_[0] = c;
  x.reduce();
  return x;
}

PadicCyclo PadicCyclo::zeta(long p, long prec) {
  PadicCyclo x(p, prec);
  if (p == 2) {
    x.coeffs_[0] = -1;
  } else {
    x.coeffs_[1] = 1;
  }
  x.reduce();
  return x;
}

PadicCyclo PadicCyclo::from_cyclo(const CycloElt& e, long prec) {
  if (!e.is_integral()) throw std::invalid_argument("PadicCyclo::from_cyclo: non-integral");
  PadicCyclo x(e.prime(), prec);
  for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] = Int(e.coeffs()[i].get_num());
  x.reduce();
  return x;
}

bool PadicCyclo::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

PadicCyclo PadicCyclo::operator+(const PadicCyclo& o) const {
  if (p_ != o.p_) throw std::invalid_argument("PadicCyclo: prime mismatch");
  PadicCyclo r(p_, std::min(prec_, o.prec_));
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  r.reduce();
  return r;
}

PadicCyclo PadicCyclo::operator-(const PadicCyclo& o) const {
  if (p_ != o.p_) throw std::invalid_argument("PadicCyclo: prime mismatch");
  PadicCyclo r(p_, std::min(prec_, o.prec_));
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  r.reduce();
  return r;
}

PadicCyclo PadicCyclo::operator-() const {
  PadicCyclo r(p_, prec_);
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
  r.reduce();
  return r;
}

PadicCyclo PadicCyclo::operator*(const PadicCyclo& o) const {
  if (p_ != o.p_) throw std::invalid_argument("PadicCyclo: prime mismatch");
  const size_t n = coeffs_.size();
  PadicCyclo r(p_, std::min(prec_, o.prec_));
  std::vector<Int> raw(static_cast<size_t>(p_));
  for (size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (o.coeffs_[j] == 0) continue;
      raw[(i + j) % static_cast<size_t>(p_)] += coeffs_[i] * o.coeffs_[j];
    }
  }
  for (size_t e = 0; e < n; ++e) r.coeffs_[e] = raw[e];
  if (raw[n] != 0)
    for (auto& c : r.coeffs_) c -= raw[n];
  r.reduce();
  return r;
}

PadicCyclo PadicCyclo::scaled(const Int& c) const {
  PadicCyclo r(p_, prec_);
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] * c;
  r.reduce();
  return r;
}

PadicCyclo PadicCyclo::scaled(const Rat& c) const {
  Int den(c.get_den());
  Int dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mod_.get_mpz_t()) == 0)
    throw std::domain_error("PadicCyclo::scaled: denominator not invertible");
  return scaled(Int(c.get_num()) * dinv % mod_);
}

PadicCyclo PadicCyclo::conjugate(long k) const {
  long e0 = ((k % p_) + p_) % p_;
  if (e0 == 0) throw std::invalid_argument("PadicCyclo::conjugate: k divisible by p");
  std::vector<Int> raw(static_cast<size_t>(p_));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    raw[(i * static_cast<size_t>(e0)) % static_cast<size_t>(p_)] += coeffs_[i];
  PadicCyclo r(p_, prec_);
  for (size_t e = 0; e + 1 < static_cast<size_t>(p_); ++e) r.coeffs_[e] = raw[e];
  if (raw[static_cast<size_t>(p_ - 1)] != 0)
    for (auto& c : r.coeffs_) c -= raw[static_cast<size_t>(p_ - 1)];
  r.reduce();
  return r;
}

PadicCyclo PadicCyclo::unit_inverse() const {
  // x * prod_{k>=2} sigma_k(x) = N(x), a rational integer; for a unit x
  // the norm is invertible mod p^N.
  PadicCyclo cof = PadicCyclo::from_int(p_, prec_, Int(1));
  for (long k = 2; k < p_; ++k) cof *= conjugate(k);
  PadicCyclo norm = *this * cof;
  for (size_t i = 1; i < norm.coeffs_.size(); ++i)
    if (norm.coeffs_[i] != 0) throw std::logic_error("unit_inverse: norm not rational");
  Int n = norm.coeffs_[0];
  Int ninv;
  if (mpz_invert(ninv.get_mpz_t(), n.get_mpz_t(), mod_.get_mpz_t()) == 0)
    throw std::domain_error("unit_inverse: not a unit");
  return cof.scaled(ninv);
}

PadicCyclo PadicCyclo::divided_by_p_power(long i) const {
  if (i == 0) return *this;
  if (i < 0 || i >= prec_) throw std::invalid_argument("divided_by_p_power: bad exponent");
  Int pi = pow_int(p_, i);
  PadicCyclo r(p_, prec_ - i);
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] % pi != 0)
      throw std::domain_error("divided_by_p_power: coordinate not divisible");
    r.coeffs_[j] = coeffs_[j] / pi;
  }
  r.reduce();
  return r;
}

PadicCyclo PadicCyclo::reduced_to(long prec) const {
  if (prec > prec_) throw std::invalid_argument("reduced_to: cannot raise precision");
  PadicCyclo r(p_, prec);
  r.coeffs_ = coeffs_;
  r.reduce();
  return r;
}

CycloElt PadicCyclo::lift() const {
  CycloElt e(p_);
  Int half = mod_ / 2;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    Int c = coeffs_[i];
    if (c > half) c -= mod_;
    e += CycloElt::zeta_power(p_, static_cast<long>(i)) * Rat(c);
  }
  return e;
}

PadicCyclo::CertifiedOrd PadicCyclo::certified_ord() const {
  if (is_zero()) return {OrdValue(Rat(prec_)), false};
  OrdValue v = lift().pi_valuation();
  if (v < OrdValue(Rat(prec_))) return {v, true};
  return {OrdValue(Rat(prec_)), false};
}

bool PadicCyclo::agrees_with(const PadicCyclo& o) const {
  PadicCyclo d = *this - o;
  return d.is_zero();
}

std::string PadicCyclo::str() const {
  std::ostringstream os;
  os << "(mod " << p_ << "^" << prec_ << ") [";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ",";
    os << coeffs_[i].get_str();
  }
  os << "]";
  return os.str();
}

namespace {

// log of the Artin-Hasse series truncated so the first omitted term has
// ord above the working precision, evaluated at x with ord(x) = 1/(p-1)
PadicCyclo log_ah_eval(const PadicCyclo& x, long nterms) {
  PadicCyclo acc = x;
  for (long i = 1; i <= nterms; ++i) {
    // x^{p^i}/p^i
    PadicCyclo pw = x;
    for (long j = 0; j < i; ++j) {
      PadicCyclo q = pw;
      for (long e = 1; e < x.p(); ++e) q *= pw;  // pw^p
      pw = q;
    }
    acc += pw.divided_by_p_power(i);
  }
  return acc;
}

// derivative of the truncated log: 1 + x^{p-1} + x^{p^2-1} + ...
PadicCyclo log_ah_deriv(const PadicCyclo& x, long nterms) {
  PadicCyclo acc = PadicCyclo::from_int(x.p(), x.precision(), Int(1));
  PadicCyclo pw = PadicCyclo::from_int(x.p(), x.precision(), Int(1));
  // maintain pw = x^{p^i - 1} iteratively: x^{p^{i+1}-1} = (x^{p^i-1})^p * x^{p-1}
  PadicCyclo xp1 = PadicCyclo::from_int(x.p(), x.precision(), Int(1));
  for (long e = 0; e < x.p() - 1; ++e) xp1 *= x;  // x^{p-1}
  for (long i = 1; i <= nterms; ++i) {
    PadicCyclo q = pw;
    for (long e = 1; e < x.p(); ++e) q *= pw;
    pw = q * xp1;
    acc += pw;
  }
  return acc;
}

long series_length(long p, long target) {
  // smallest I with p^{I+1}/(p-1) - (I+1) >= target, so that terms beyond
  // index I contribute nothing at the working precision
  long I = 0;
  Int pw(p);
  for (;;) {
    // term i = I+1 has ord p^{I+1}/(p-1) - (I+1)
    Int num = pw * p;  // p^{I+2}? careful below
    (void)num;
    Rat ord = Rat(pw * p, p - 1) - Rat(I + 1);
    if (ord >= target) return I;
    ++I;
    pw *= p;
    if (I > 64) throw std::logic_error("series_length: runaway");
  }
}

}  // namespace

PadicCyclo solve_gamma(long p, long prec) {
  if (prec < 2) throw std::invalid_argument("solve_gamma: precision must be >= 2");
  long nterms = series_length(p, prec + 2);
  long work = prec + nterms + 4;
  long nterms_w = series_length(p, work + 2);

  PadicCyclo x = PadicCyclo::zeta(p, work) - PadicCyclo::from_int(p, work, Int(1));
  // Newton iteration on the truncated logarithm; the derivative is a unit
  for (int it = 0; it < 200; ++it) {
    PadicCyclo fx = log_ah_eval(x, nterms_w);
    if (fx.is_zero()) break;
    PadicCyclo step = fx * log_ah_deriv(x, nterms_w).unit_inverse();
    PadicCyclo xn = (x.precision() <= step.precision())
                        ? x - step.reduced_to(x.precision())
                        : x.reduced_to(step.precision()) - step;
    if (xn.agrees_with(x.reduced_to(xn.precision())) &&
        log_ah_eval(xn, nterms_w).reduced_to(prec).is_zero())
      break;
    x = xn;
    if (it == 199) throw std::logic_error("solve_gamma: Newton iteration did not converge");
  }
  PadicCyclo gamma = x.reduced_to(prec);

  auto ord = gamma.certified_ord();
  if (!ord.certified || !(ord.ord == OrdValue(Rat(1, p - 1))))
    throw std::logic_error("solve_gamma: wrong valuation");
  // branch check: the Artin-Hasse series at gamma is the distinguished zeta
  long M = prec * (p - 1) + 1;
  auto ah = artin_hasse_coeffs(p, M);
  PadicCyclo e = PadicCyclo::from_int(p, prec, Int(0));
  PadicCyclo gpow = PadicCyclo::from_int(p, prec, Int(1));
  for (long m = 0; m <= M; ++m) {
    e += gpow.scaled(ah[static_cast<size_t>(m)]);
    gpow *= gamma;
  }
  if (!e.agrees_with(PadicCyclo::zeta(p, prec)))
    throw std::logic_error("solve_gamma: branch normalization failed");
  return gamma;
}

std::vector<Rat> artin_hasse_coeffs(long p, long M) {
  // n a_n = sum over powers p^i <= n of a_{n - p^i}
  std::vector<Rat> a(static_cast<size_t>(M) + 1);
  a[0] = 1;
  for (long n = 1; n <= M; ++n) {
    Rat s(0);
    Int pw(1);
    while (pw <= n) {
      s += a[static_cast<size_t>(n - pw.get_si())];
      pw *= p;
    }
    a[static_cast<size_t>(n)] = s / n;
    if (padic_val(Int(a[static_cast<size_t>(n)].get_den()), Int(p)) != 0 &&
        a[static_cast<size_t>(n)] != 0)
      throw std::logic_error("artin_hasse_coeffs: coefficient not p-integral");
  }
  return a;
}

namespace {
std::mutex g_lambda_mutex;
std::map<std::tuple<long, long, long>, std::vector<PadicCyclo>> g_lambda_cache;
}  // namespace

std::vector<PadicCyclo> lambda_coeffs(long p, long M, long prec) {
  std::lock_guard<std::mutex> lock(g_lambda_mutex);
  auto key = std::make_tuple(p, M, prec);
  auto it = g_lambda_cache.find(key);
  if (it != g_lambda_cache.end()) return it->second;

  PadicCyclo gamma = solve_gamma(p, prec + 1);
  auto ah = artin_hasse_coeffs(p, M);
  std::vector<PadicCyclo> lam;
  lam.reserve(static_cast<size_t>(M) + 1);
  PadicCyclo gpow = PadicCyclo::from_int(p, prec + 1, Int(1));
  for (long m = 0; m <= M; ++m) {
    PadicCyclo l = gpow.scaled(ah[static_cast<size_t>(m)]).reduced_to(prec);
    auto ord = l.certified_ord();
    if (ord.certified && ord.ord < OrdValue(Rat(m, p - 1)))
      throw std::logic_error("lambda_coeffs: valuation certificate violated");
    lam.push_back(std::move(l));
    gpow *= gamma;
  }
  g_lambda_cache.emplace(key, lam);
  return lam;
}

PadicCyclo teichmuller(long c, long p, long prec) {
  Int mod = pow_int(p, prec);
  Int x(((c % p) + p) % p);
  for (long i = 0; i < prec; ++i) {
    Int y(1);
    Int base = x;
    for (long e = 0; e < p; ++e) y = y * base % mod;  // x^p
    // actually compute x^p by fast exponentiation
    x = y;
  }
  PadicCyclo r = PadicCyclo::from_int(p, prec, x);
  return r;
}

}  // namespace expsum
