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

#ifndef WREATHLITT_SYMFUNC_HPP
#define WREATHLITT_SYMFUNC_HPP

#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "wreathlitt/exactnum.hpp"
#include "wreathlitt/partitions.hpp"

namespace wreathlitt {

enum class Basis { PowerSum, Homogeneous, Schur };

// Truncation marker for finitely supported series.
inline constexpr int kExact = std::numeric_limits<int>::max();

class TruncationTooShort : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class DegreeOutOfRange : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
};

char basis_letter(Basis b);
Basis parse_basis(const std::string& letter);

/// Degree-truncated symmetric series in a single alphabet.
///
/// Terms are kept sparse: zero coefficients are never stored, and terms
/// above the truncation are dropped on insertion. S is Rational or
/// CycloScalar.
template <class S>
class SymSeries {
   public:
    using Scalar = S;
    using Terms = std::map<Partition, S>;

    explicit SymSeries(Basis basis = Basis::PowerSum, int truncation = kExact)
        : basis_(basis), truncation_(truncation) {
        if (truncation < 0) throw std::invalid_argument("truncation must be non-negative");
    }

    // c * b_lambda
    static SymSeries monomial(Basis basis, const Partition& lambda, const S& c = S(1), int truncation = kExact) {
        SymSeries out(basis, truncation);
        out.add_term(lambda, c);
        return out;
    }

    Basis basis() const noexcept { return basis_; }
    int truncation() const noexcept { return truncation_; }
    bool is_exact() const noexcept { return truncation_ == kExact; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    S coefficient(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? S(0) : it->second;
    }
    S constant_term() const { return coefficient(Partition()); }
    // Smallest degree carrying a nonzero term; kExact when zero.
    int min_degree() const;
    int max_degree() const;

    void add_term(const Partition& lambda, const S& c);
    SymSeries truncated(int degree) const;
    SymSeries with_truncation(int degree) const;

    SymSeries& operator+=(const SymSeries& rhs);
    SymSeries& operator-=(const SymSeries& rhs);
    SymSeries& operator*=(const S& c);
    SymSeries operator-() const;

    friend SymSeries operator+(SymSeries a, const SymSeries& b) { return a += b; }
    friend SymSeries operator-(SymSeries a, const SymSeries& b) { return a -= b; }
    friend SymSeries operator*(SymSeries a, const S& c) { return a *= c; }
    friend SymSeries operator*(const S& c, SymSeries a) { return a *= c; }

    // Same basis, truncation and terms.
    friend bool operator==(const SymSeries& a, const SymSeries& b) {
        return a.basis_ == b.basis_ && a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
    }

   private:
    Basis basis_;
    int truncation_;
    Terms terms_;
};

template <class S>
SymSeries<S> power_sum(const Partition& lambda, int truncation = kExact) {
    return SymSeries<S>::monomial(Basis::PowerSum, lambda, S(1), truncation);
}
template <class S>
SymSeries<S> complete(const Partition& lambda, int truncation = kExact) {
    return SymSeries<S>::monomial(Basis::Homogeneous, lambda, S(1), truncation);
}
template <class S>
SymSeries<S> schur(const Partition& lambda, int truncation = kExact) {
    return SymSeries<S>::monomial(Basis::Schur, lambda, S(1), truncation);
}

// Change of basis, routed through PowerSum.
template <class S>
SymSeries<S> convert(const SymSeries<S>& f, Basis target);

// Product; the result is in PowerSum (Homogeneous when both factors are).
// Truncation is the minimum of the two.
template <class S>
SymSeries<S> operator*(const SymSeries<S>& a, const SymSeries<S>& b);

// Hall pairing <p_lambda, p_mu> = z_lambda delta.
template <class S>
S hall_pair(const SymSeries<S>& f, const SymSeries<S>& g);

// f[g] to degree `degree` (kExact means min of what f and g support).
// Scalars of g are fixed by p_n; only the alphabet is stretched.
template <class S>
SymSeries<S> plethysm(const SymSeries<S>& f, const SymSeries<S>& g, int degree);

// p_n[g] in PowerSum: every p_r in g becomes p_{nr}.
template <class S>
SymSeries<S> stretch(const SymSeries<S>& g, int n);

template <class S>
S coefficient_of_schur(const SymSeries<S>& f, const Partition& lambda);

// 1 + h_1 + ... + h_D
SymSeries<Rational> omega_truncated(int degree);
// sum_{k<=D} zeta_m^{jk} h_k
SymSeries<CycloScalar> omega_zeta(int zeta_power, int m, int degree);

// {"basis":"p","truncation":D,"terms":[{"partition":[...],"coeff":"num/den"}]}.
// Exact series write "truncation":null. Cyclotomic coefficients are written
// as {"order":m,"coeffs":["a0","a1",...]}.
template <class S>
std::string to_json(const SymSeries<S>& f);
SymSeries<Rational> rational_series_from_json(const std::string& text);

template <class S>
std::string to_string(const SymSeries<S>& f);

// Expansion of a single basis element in PowerSum, memoized. Exposed for
// callers that build series at the p-level.
const std::map<Partition, Rational>& power_sum_expansion(Basis basis, const Partition& lambda);

}  // namespace wreathlitt

#endif  // WREATHLITT_SYMFUNC_HPP
