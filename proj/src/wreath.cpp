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

#include "wreathlitt/wreath.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace wreathlitt {

WreathLabel::WreathLabel(int order) : order_(order), parts_(static_cast<std::size_t>(order)) {
    if (order < 1) throw std::invalid_argument("wreath label order must be positive");
}

WreathLabel::WreathLabel(int order, std::vector<Partition> parts) : order_(order), parts_(std::move(parts)) {
    if (order < 1) throw std::invalid_argument("wreath label order must be positive");
    if (parts_.size() > static_cast<std::size_t>(order))
        throw std::invalid_argument("wreath label has more than m coordinates");
    parts_.resize(static_cast<std::size_t>(order));
    for (const auto& p : parts_) size_ += p.size();
}

int WreathLabel::total_length() const {
    int total = 0;
    for (const auto& p : parts_) total += p.length();
    return total;
}

WreathLabel WreathLabel::merged(const WreathLabel& other) const {
    if (order_ != other.order_) throw OrderMismatch("merging wreath labels of different orders");
    std::vector<Partition> parts(parts_.size());
    for (std::size_t j = 0; j < parts_.size(); ++j) parts[j] = parts_[j].merged(other.parts_[j]);
    return WreathLabel(order_, std::move(parts));
}

std::strong_ordering operator<=>(const WreathLabel& a, const WreathLabel& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    for (std::size_t j = 0; j < a.parts_.size(); ++j)
        if (auto c = b.parts_[j].size() <=> a.parts_[j].size(); c != 0) return c;
    for (std::size_t j = 0; j < a.parts_.size(); ++j)
        if (auto c = b.parts_[j] <=> a.parts_[j]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string to_string(const WreathLabel& rho) {
    std::string out;
    for (int j = 0; j < rho.order(); ++j) {
        if (rho.part(j).empty()) continue;
        if (!out.empty()) out += ';';
        out += std::to_string(j) + ":" + to_string(rho.part(j));
    }
    return out;
}

WreathLabel parse_wreath_label(const std::string& text, int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    std::vector<Partition> parts(static_cast<std::size_t>(m));
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("wreath label item '" + item + "' lacks 'j:' prefix");
        int j = 0;
        try {
            std::size_t used = 0;
            j = std::stoi(item.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad exponent in wreath label item '" + item + "'");
        }
        if (j < 0 || j >= m)
            throw std::invalid_argument("exponent " + std::to_string(j) + " out of range 0.." + std::to_string(m - 1));
        if (seen[j]) throw std::invalid_argument("exponent " + std::to_string(j) + " repeated in wreath label");
        seen[j] = true;
        parts[j] = parse_partition(item.substr(colon + 1));
    }
    return WreathLabel(m, std::move(parts));
}

WreathLabel trivial_label(int n, int m) {
    std::vector<Partition> parts(static_cast<std::size_t>(m));
    if (n > 0) parts[0] = Partition{n};
    return WreathLabel(m, std::move(parts));
}

WreathLabel identity_label(int n, int m) {
    std::vector<Partition> parts(static_cast<std::size_t>(m));
    parts[0] = Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
    return WreathLabel(m, std::move(parts));
}

std::vector<WreathLabel> enumerate_phi(int n, int m) {
    if (n < 0 || m < 1) throw std::invalid_argument("enumerate_phi: need n >= 0 and m >= 1");
    std::vector<WreathLabel> out;
    std::vector<int> sizes(static_cast<std::size_t>(m), 0);
    std::vector<Partition> chosen(static_cast<std::size_t>(m));

    std::function<void(int)> fill_parts = [&](int j) {
        if (j == m) {
            out.emplace_back(m, chosen);
            return;
        }
        for (const auto& p : partitions_of(sizes[j])) {
            chosen[j] = p;
            fill_parts(j + 1);
        }
    };
    // Compositions in descending lexicographic order.
    std::function<void(int, int)> compose = [&](int j, int remaining) {
        if (j == m - 1) {
            sizes[j] = remaining;
            fill_parts(0);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            sizes[j] = k;
            compose(j + 1, remaining - k);
        }
    };
    compose(0, n);
    return out;
}

BigInt Z_of(const WreathLabel& rho) {
    BigInt out = 1;
    for (const auto& p : rho.parts()) {
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(rho.order()), static_cast<unsigned long>(p.length()));
        out *= z_of(p) * power;
    }
    return out;
}

BigInt group_order(int n, int m) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
    return power * factorial(n);
}

BigInt class_size(const WreathLabel& rho) {
    const BigInt order = group_order(rho.size(), rho.order());
    const BigInt z = Z_of(rho);
    if (order % z != 0)
        throw std::logic_error("class_size: centralizer order " + z.get_str() + " does not divide " + order.get_str());
    return order / z;
}

BigInt irrep_dimension(const WreathLabel& rho) {
    BigInt out = factorial(rho.size());
    for (const auto& p : rho.parts()) out = out / factorial(p.size()) * specht_dimension(p);
    return out;
}

std::vector<CycloScalar> char_poly(const WreathLabel& rho) {
    const int m = rho.order();
    std::vector<CycloScalar> poly{CycloScalar(Rational(1), m)};
    for (int j = 0; j < m; ++j) {
        const CycloScalar zeta = CycloScalar::zeta_power(j, m);
        for (int ell : rho.part(j).parts()) {
            // multiply by (1 - zeta^j t^ell)
            std::vector<CycloScalar> next(poly.size() + static_cast<std::size_t>(ell), CycloScalar(Rational(0), m));
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i] += poly[i];
                next[i + ell] -= zeta * poly[i];
            }
            poly = std::move(next);
        }
    }
    return poly;
}

CycloScalar power_trace(const WreathLabel& rho, int r) {
    if (r < 1) throw std::invalid_argument("power_trace: r must be positive");
    const int m = rho.order();
    // An ell-cycle with cycle product zeta has the ell-th roots of zeta as
    // eigenvalues; their r-th power sum is ell*zeta^{r/ell} when ell | r.
    RatPoly acc(static_cast<std::size_t>(m), Rational(0));
    for (int j = 0; j < m; ++j) {
        const Partition& p = rho.part(j);
        for (int i = 0; i < p.length();) {
            const int ell = p[i];
            int mult = 0;
            while (i < p.length() && p[i] == ell) ++mult, ++i;
            if (r % ell != 0) continue;
            const long exponent = (static_cast<long>(j) * (r / ell)) % m;
            acc[static_cast<std::size_t>(exponent)] += ell * mult;
        }
    }
    return cyclo_reduce(acc, m);
}

namespace {

class PowerTraces {
   public:
    explicit PowerTraces(const WreathLabel& rho) : rho_(rho) {}
    const CycloScalar& operator()(int r) {
        auto it = cache_.find(r);
        if (it == cache_.end()) it = cache_.emplace(r, power_trace(rho_, r)).first;
        return it->second;
    }
    CycloScalar product(const Partition& mu) {
        CycloScalar acc(Rational(1), rho_.order());
        for (int part : mu.parts()) acc *= (*this)(part);
        return acc;
    }

   private:
    const WreathLabel& rho_;
    std::map<int, CycloScalar> cache_;
};

}  // namespace

CycloScalar schur_at_eigenvalues(const Partition& lambda, const WreathLabel& rho) {
    const int m = rho.order();
    if (lambda.length() > rho.size()) return CycloScalar(Rational(0), m);
    PowerTraces traces(rho);
    CycloScalar acc(Rational(0), m);
    for (const auto& [mu, c] : power_sum_expansion(Basis::Schur, lambda)) acc += CycloScalar(c) * traces.product(mu);
    return acc;
}

SymSeries<CycloScalar> g_series(const WreathLabel& rho, int degree) {
    if (degree < 0) throw std::invalid_argument("g_series: degree must be non-negative");
    PowerTraces traces(rho);
    SymSeries<CycloScalar> out(Basis::PowerSum, degree);
    for (const auto& lambda : partitions_up_to(degree))
        out.add_term(lambda, traces.product(lambda) * CycloScalar(Rational(1) / Rational(z_of(lambda))));
    return out;
}

SymSeries<CycloScalar> g_series_product(const WreathLabel& rho, int degree) {
    if (degree < 0) throw std::invalid_argument("g_series_product: degree must be non-negative");
    const int m = rho.order();
    SymSeries<CycloScalar> out =
        SymSeries<CycloScalar>::monomial(Basis::PowerSum, Partition(), CycloScalar(Rational(1), m), degree);
    for (int j = 0; j < m; ++j) {
        const Partition& p = rho.part(j);
        if (p.empty()) continue;
        const SymSeries<CycloScalar> omega = omega_zeta(j, m, degree);
        for (int ell : p.parts()) {
            // prod_i (1 - zeta^j x_i^ell)^{-1} = p_ell[Omega(X; zeta^j)]
            out = out * plethysm(power_sum<CycloScalar>(Partition{ell}), omega, degree);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// WreathSeries

WreathSeries::WreathSeries(int order, int truncation) : order_(order), truncation_(truncation) {
    if (order < 1) throw std::invalid_argument("wreath series order must be positive");
}

CycloScalar WreathSeries::coefficient(const WreathLabel& rho) const {
    auto it = terms_.find(rho);
    return it == terms_.end() ? CycloScalar(Rational(0), order_) : it->second;
}

void WreathSeries::add_term(const WreathLabel& rho, const CycloScalar& c) {
    if (rho.order() != order_) throw OrderMismatch("wreath label order differs from series order");
    if (rho.size() > truncation_ || c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(rho, c.promoted(order_));
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

WreathSeries& WreathSeries::operator+=(const WreathSeries& rhs) {
    if (rhs.order_ != order_) throw OrderMismatch("adding wreath series of different orders");
    truncation_ = std::min(truncation_, rhs.truncation_);
    std::erase_if(terms_, [this](const auto& kv) { return kv.first.size() > truncation_; });
    for (const auto& [rho, c] : rhs.terms_) add_term(rho, c);
    return *this;
}

WreathSeries& WreathSeries::operator*=(const CycloScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [rho, v] : terms_) v *= c;
    return *this;
}

WreathSeries operator*(const WreathSeries& a, const WreathSeries& b) {
    if (a.order() != b.order()) throw OrderMismatch("multiplying wreath series of different orders");
    WreathSeries out(a.order(), std::min(a.truncation(), b.truncation()));
    for (const auto& [ra, ca] : a.terms())
        for (const auto& [rb, cb] : b.terms()) {
            if (ra.size() + rb.size() > out.truncation()) continue;
            out.add_term(ra.merged(rb), ca * cb);
        }
    return out;
}

std::string to_string(const WreathSeries& f) {
    if (f.terms().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [rho, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(c) << ")*P[" << to_string(rho) << "]";
    }
    return os.str();
}

namespace {

// p_k(phi_j) = (1/m) sum_a zeta^{ja} p_k(X_{zeta^a})
WreathSeries phi_power(int k, int j, int m) {
    WreathSeries out(m);
    const CycloScalar inv_m(Rational(1, static_cast<unsigned long>(m)));
    for (int a = 0; a < m; ++a) {
        std::vector<Partition> parts(static_cast<std::size_t>(m));
        parts[a] = Partition{k};
        out.add_term(WreathLabel(m, std::move(parts)), CycloScalar::zeta_power(static_cast<long>(j) * a, m) * inv_m);
    }
    return out;
}

}  // namespace

WreathSeries S_in_P(const WreathLabel& rho) {
    const int m = rho.order();
    WreathSeries result(m);
    result.add_term(WreathLabel(m), CycloScalar(Rational(1), m));
    for (int j = 0; j < m; ++j) {
        const Partition& lambda = rho.part(j);
        if (lambda.empty()) continue;
        std::map<int, WreathSeries> phis;
        WreathSeries factor(m);
        for (const auto& [nu, c] : power_sum_expansion(Basis::Schur, lambda)) {
            WreathSeries term(m);
            term.add_term(WreathLabel(m), CycloScalar(c));
            for (int part : nu.parts()) {
                auto it = phis.find(part);
                if (it == phis.end()) it = phis.emplace(part, phi_power(part, j, m)).first;
                term = term * it->second;
            }
            factor += term;
        }
        result = result * factor;
    }
    return result;
}

CycloScalar wreath_character(const WreathLabel& rho, const WreathLabel& sigma) {
    return S_in_P(rho).coefficient(sigma) * CycloScalar(Rational(Z_of(sigma)));
}

CycloScalar wreath_pair(const WreathSeries& f, const WreathSeries& g) {
    if (f.order() != g.order())
        throw OrderMismatch("wreath_pair: orders " + std::to_string(f.order()) + " and " + std::to_string(g.order()));
    const int truncation = std::min(f.truncation(), g.truncation());
    CycloScalar acc(Rational(0), f.order());
    for (const auto& [rho, c] : f.terms()) {
        if (rho.size() > truncation) continue;
        auto it = g.terms().find(rho);
        if (it == g.terms().end()) continue;
        acc += CycloScalar(Rational(Z_of(rho))) * c * it->second;
    }
    return acc;
}

WreathSeries bar(const WreathSeries& f) {
    WreathSeries out(f.order(), f.truncation());
    for (const auto& [rho, c] : f.terms()) out.add_term(rho, c.conj());
    return out;
}

}  // namespace wreathlitt
