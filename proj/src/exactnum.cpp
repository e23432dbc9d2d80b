/*
   Copyright 2026 The wreathlitt Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "wreathlitt/exactnum.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace wreathlitt {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw std::domain_error("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

long euler_phi(long m) {
    if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
    long result = m;
    long rest = m;
    for (long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        result -= result / p;
    }
    if (rest > 1) result -= result / rest;
    return result;
}

namespace {

template <class T>
void trim(std::vector<T>& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Quotient of num by a monic divisor; the division is assumed exact.
IntPoly exact_div_monic(IntPoly num, const IntPoly& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) return {};
    IntPoly quot(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
        const BigInt c = num[i];
        quot[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
    }
    trim(num);
    if (!num.empty()) throw std::logic_error("cyclotomic_polynomial: inexact division");
    return quot;
}

// Remainder of p modulo a monic integer polynomial.
void reduce_monic(RatPoly& p, const IntPoly& modulus) {
    const std::size_t d = modulus.size() - 1;
    for (std::size_t i = p.size(); i-- > d;) {
        if (sgn(p[i]) == 0) continue;
        const Rational c = p[i];
        for (std::size_t k = 0; k <= d; ++k) p[i - d + k] -= c * modulus[k];
    }
    p.resize(d);
}

struct RatDivMod {
    RatPoly quot;
    RatPoly rem;
};

RatDivMod divmod(RatPoly num, const RatPoly& den) {
    const std::size_t dd = den.size() - 1;
    RatDivMod out;
    if (num.size() < den.size()) {
        out.rem = std::move(num);
        return out;
    }
    out.quot.assign(num.size() - dd, Rational(0));
    for (std::size_t i = num.size(); i-- > dd;) {
        if (sgn(num[i]) == 0) continue;
        const Rational c = num[i] / den.back();
        out.quot[i - dd] = c;
        for (std::size_t k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
    }
    num.resize(dd);
    trim(num);
    trim(out.quot);
    out.rem = std::move(num);
    return out;
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace

const IntPoly& cyclotomic_polynomial(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    static std::mutex mutex;
    static std::map<long, std::unique_ptr<IntPoly>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) return *it->second;
    }
    IntPoly poly(static_cast<std::size_t>(m) + 1, BigInt(0));
    poly[0] = -1;
    poly[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d == 0) poly = exact_div_monic(std::move(poly), cyclotomic_polynomial(d));
    }
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.try_emplace(m, std::make_unique<IntPoly>(std::move(poly)));
    return *it->second;
}

CycloScalar cyclo_reduce(const RatPoly& p, long m) {
    if (m < 1) throw std::invalid_argument("cyclo_reduce: m must be positive");
    // x^m = 1 first, then reduce by Phi_m.
    RatPoly folded(static_cast<std::size_t>(m), Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) folded[i % m] += p[i];
    reduce_monic(folded, cyclotomic_polynomial(m));
    CycloScalar out;
    out.order_ = m;
    out.coeffs_ = std::move(folded);
    return out;
}

CycloScalar::CycloScalar(const Rational& q, long m) : order_(m), coeffs_(euler_phi(m), Rational(0)) {
    coeffs_[0] = q;
}

CycloScalar CycloScalar::zeta_power(long k, long m) {
    if (m < 1) throw std::invalid_argument("zeta_power: m must be positive");
    long e = k % m;
    if (e < 0) e += m;
    RatPoly p(static_cast<std::size_t>(e) + 1, Rational(0));
    p[e] = 1;
    return cyclo_reduce(p, m);
}

bool CycloScalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (sgn(c) != 0) return false;
    return true;
}

bool CycloScalar::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return false;
    return true;
}

std::optional<Rational> CycloScalar::to_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

Rational CycloScalar::as_rational() const {
    if (!is_rational()) throw NotRational("value " + to_string(*this) + " is not rational");
    return coeffs_[0];
}

CycloScalar CycloScalar::promoted(long m) const {
    if (m == order_) return *this;
    if (order_ == 1) return CycloScalar(coeffs_[0], m);
    if (m % order_ == 0) {
        // zeta_k = zeta_m^(m/k)
        const long stride = m / order_;
        RatPoly p(static_cast<std::size_t>(m), Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * stride] = coeffs_[i];
        return cyclo_reduce(p, m);
    }
    throw OrderMismatch("cannot embed Q(zeta_" + std::to_string(order_) + ") in Q(zeta_" + std::to_string(m) + ")");
}

namespace {

long common_order(const CycloScalar& a, const CycloScalar& b) {
    if (a.order() == b.order()) return a.order();
    if (a.order() == 1) return b.order();
    if (b.order() == 1) return a.order();
    throw OrderMismatch("mixed cyclotomic orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
}

}  // namespace

CycloScalar& CycloScalar::operator+=(const CycloScalar& rhs) {
    const long m = common_order(*this, rhs);
    if (order_ != m) *this = promoted(m);
    if (rhs.order_ == m) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    } else {
        coeffs_[0] += rhs.coeffs_[0];
    }
    return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& rhs) { return *this += -rhs; }

CycloScalar& CycloScalar::operator*=(const CycloScalar& rhs) {
    const long m = common_order(*this, rhs);
    if (rhs.order_ == 1 || order_ == 1) {
        const bool rhs_scalar = rhs.order_ == 1;
        const Rational s = rhs_scalar ? rhs.coeffs_[0] : coeffs_[0];
        if (!rhs_scalar) coeffs_ = rhs.coeffs_;
        order_ = m;
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    *this = cyclo_reduce(mul(coeffs_, rhs.coeffs_), m);
    return *this;
}

CycloScalar CycloScalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
    if (order_ == 1) return CycloScalar(1 / coeffs_[0]);
    // Extended Euclid: track s with s*a = r (mod Phi_m).
    const IntPoly& phi = cyclotomic_polynomial(order_);
    RatPoly r0(phi.begin(), phi.end());
    RatPoly r1 = coeffs_;
    trim(r1);
    RatPoly s0;
    RatPoly s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant since Phi_m is irreducible.
    const Rational c = r1.at(0);
    for (auto& x : s1) x /= c;
    return cyclo_reduce(s1, order_);
}

CycloScalar& CycloScalar::operator/=(const CycloScalar& rhs) { return *this *= rhs.inverse(); }

CycloScalar CycloScalar::operator-() const {
    CycloScalar out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycloScalar CycloScalar::conj() const {
    if (order_ <= 2) return *this;
    RatPoly p(static_cast<std::size_t>(order_), Rational(0));
    p[0] = coeffs_[0];
    for (std::size_t i = 1; i < coeffs_.size(); ++i) p[order_ - i] = coeffs_[i];
    return cyclo_reduce(p, order_);
}

std::complex<double> CycloScalar::to_complex() const {
    std::complex<double> acc = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        const double angle = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(order_);
        acc += coeffs_[i].get_d() * std::polar(1.0, angle);
    }
    return acc;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    if (a.order_ == 1) return b.is_rational() && b.coeffs_[0] == a.coeffs_[0];
    if (b.order_ == 1) return a.is_rational() && a.coeffs_[0] == b.coeffs_[0];
    throw OrderMismatch("comparing cyclotomic orders " + std::to_string(a.order_) + " and " + std::to_string(b.order_));
}

std::string to_string(const CycloScalar& a) {
    if (a.is_rational()) return to_string(a.coeffs()[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const Rational& c = a.coeffs()[i];
        if (sgn(c) == 0) continue;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        const Rational mag = abs(c);
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "z" << a.order();
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

}  // namespace wreathlitt
