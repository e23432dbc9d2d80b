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

#ifndef WREATHLITT_EXACTNUM_HPP
#define WREATHLITT_EXACTNUM_HPP

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wreathlitt {

using BigInt = mpz_class;
// mpq_class keeps lowest terms with a positive denominator after every
// arithmetic operation; only construction from a raw pair needs
// canonicalize(), which make_rational does.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Dense polynomials, coefficient i multiplies x^i.
using IntPoly = std::vector<BigInt>;
using RatPoly = std::vector<Rational>;

class NotRational : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

class OrderMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

long euler_phi(long m);

// Phi_m(x). Cached per m; safe to call concurrently.
const IntPoly& cyclotomic_polynomial(long m);

/// Element of Q(zeta_m), stored in the power basis of Q[x]/(Phi_m(x)).
///
/// A default-constructed value is the rational 0 of order 1. Binary
/// operations between different orders promote an operand of order 1
/// (a plain rational); any other mix throws OrderMismatch.
class CycloScalar {
   public:
    CycloScalar() : order_(1), coeffs_(1) {}
    CycloScalar(const Rational& q, long m = 1);
    CycloScalar(long q) : CycloScalar(Rational(q)) {}

    // zeta_m^k for any integer k.
    static CycloScalar zeta_power(long k, long m);

    long order() const noexcept { return order_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    std::optional<Rational> to_rational() const;
    // Throws NotRational when a zeta-component is nonzero.
    Rational as_rational() const;

    CycloScalar promoted(long m) const;
    CycloScalar conj() const;
    CycloScalar inverse() const;
    std::complex<double> to_complex() const;

    CycloScalar& operator+=(const CycloScalar& rhs);
    CycloScalar& operator-=(const CycloScalar& rhs);
    CycloScalar& operator*=(const CycloScalar& rhs);
    CycloScalar& operator/=(const CycloScalar& rhs);

    friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
    friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
    friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
    friend CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }
    CycloScalar operator-() const;

    friend bool operator==(const CycloScalar& a, const CycloScalar& b);

   private:
    friend CycloScalar cyclo_reduce(const RatPoly& p, long m);

    long order_;
    std::vector<Rational> coeffs_;  // length euler_phi(order_)
};

CycloScalar cyclo_reduce(const RatPoly& p, long m);
inline CycloScalar cyclo_conjugate(const CycloScalar& a) { return a.conj(); }
inline std::optional<Rational> cyclo_to_rational(const CycloScalar& a) { return a.to_rational(); }

inline bool is_zero(const CycloScalar& a) { return a.is_zero(); }
std::string to_string(const CycloScalar& a);

// Complex conjugation, identity on Q.
inline Rational conj(const Rational& q) { return q; }
inline CycloScalar conj(const CycloScalar& a) { return a.conj(); }

}  // namespace wreathlitt

#endif  // WREATHLITT_EXACTNUM_HPP
