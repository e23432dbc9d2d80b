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

#ifndef WREATHLITT_WREATH_HPP
#define WREATHLITT_WREATH_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "wreathlitt/exactnum.hpp"
#include "wreathlitt/partitions.hpp"
#include "wreathlitt/symfunc.hpp"

namespace wreathlitt {

/// A function rho: mu_m -> Par, stored by exponent: part(j) = rho(zeta_m^j).
///
/// Labels conjugacy classes (cycle type with cycle products) and irreducible
/// representations of the wreath product mu_m^n x| S_n with n = size().
class WreathLabel {
   public:
    explicit WreathLabel(int order = 1);
    WreathLabel(int order, std::vector<Partition> parts);

    int order() const noexcept { return order_; }
    int size() const noexcept { return size_; }
    const Partition& part(int j) const { return parts_.at(static_cast<std::size_t>(j)); }
    const std::vector<Partition>& parts() const noexcept { return parts_; }
    int total_length() const;

    // Coordinatewise union of parts.
    WreathLabel merged(const WreathLabel& other) const;

    // enumerate_phi order: descending sizes (compared as a tuple), then
    // descending partitions. Distinct orders compare by order first.
    friend std::strong_ordering operator<=>(const WreathLabel& a, const WreathLabel& b);
    friend bool operator==(const WreathLabel& a, const WreathLabel& b) {
        return a.order_ == b.order_ && a.parts_ == b.parts_;
    }

   private:
    int order_;
    std::vector<Partition> parts_;
    int size_ = 0;
};

// "0:2,1;1:1" with empty parts omitted; the empty label prints as "".
std::string to_string(const WreathLabel& rho);
WreathLabel parse_wreath_label(const std::string& text, int m);

// rho(1) = (n): labels the trivial representation.
WreathLabel trivial_label(int n, int m);
// rho(1) = (1^n): labels the identity class.
WreathLabel identity_label(int n, int m);

std::vector<WreathLabel> enumerate_phi(int n, int m);

BigInt Z_of(const WreathLabel& rho);
BigInt class_size(const WreathLabel& rho);
BigInt group_order(int n, int m);
// dim W_rho = n!/prod_j |rho_j|! * prod_j f^{rho_j}
BigInt irrep_dimension(const WreathLabel& rho);

// det(1 - t*gamma) for gamma in the class rho; coefficient i multiplies t^i.
std::vector<CycloScalar> char_poly(const WreathLabel& rho);
// p_r of the eigenvalues of any element of the class rho.
CycloScalar power_trace(const WreathLabel& rho, int r);
// s_lambda at the eigenvalues; 0 when l(lambda) > |rho|.
CycloScalar schur_at_eigenvalues(const Partition& lambda, const WreathLabel& rho);

// sum_lambda p_lambda p_lambda(Xi_rho)/z_lambda to degree D, in PowerSum.
SymSeries<CycloScalar> g_series(const WreathLabel& rho, int degree);
// prod_{j,l} p_l[Omega(X; zeta^j)]^{m_l(rho_j)} to degree D, in PowerSum.
SymSeries<CycloScalar> g_series_product(const WreathLabel& rho, int degree);

/// Element of tensor_j Lambda(X_{zeta^j}) in the P_rho basis.
class WreathSeries {
   public:
    using Terms = std::map<WreathLabel, CycloScalar>;

    explicit WreathSeries(int order = 1, int truncation = kExact);

    int order() const noexcept { return order_; }
    int truncation() const noexcept { return truncation_; }
    const Terms& terms() const noexcept { return terms_; }
    CycloScalar coefficient(const WreathLabel& rho) const;
    void add_term(const WreathLabel& rho, const CycloScalar& c);

    WreathSeries& operator+=(const WreathSeries& rhs);
    WreathSeries& operator*=(const CycloScalar& c);
    friend WreathSeries operator+(WreathSeries a, const WreathSeries& b) { return a += b; }
    friend WreathSeries operator*(WreathSeries a, const CycloScalar& c) { return a *= c; }
    friend bool operator==(const WreathSeries& a, const WreathSeries& b) {
        return a.order_ == b.order_ && a.terms_ == b.terms_;
    }

   private:
    int order_;
    int truncation_;
    Terms terms_;
};

WreathSeries operator*(const WreathSeries& a, const WreathSeries& b);

std::string to_string(const WreathSeries& f);

// prod_j s_{rho(zeta^j)}(phi_j), phi_j = (1/m) sum_a zeta^{ja} X_{zeta^a}.
WreathSeries S_in_P(const WreathLabel& rho);
// chi_rho(sigma) = Z_sigma * [P_sigma] S_rho.
CycloScalar wreath_character(const WreathLabel& rho, const WreathLabel& sigma);

// Throws OrderMismatch when the orders differ.
CycloScalar wreath_pair(const WreathSeries& f, const WreathSeries& g);
WreathSeries bar(const WreathSeries& f);

}  // namespace wreathlitt

#endif  // WREATHLITT_WREATH_HPP
