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

#include "wreathlitt/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <memory>
#include <shared_mutex>
#include <sstream>

#include <json.hpp>

namespace wreathlitt {

char basis_letter(Basis b) {
    switch (b) {
        case Basis::PowerSum:
            return 'p';
        case Basis::Homogeneous:
            return 'h';
        case Basis::Schur:
            return 's';
    }
    return '?';
}

Basis parse_basis(const std::string& letter) {
    if (letter == "p") return Basis::PowerSum;
    if (letter == "h") return Basis::Homogeneous;
    if (letter == "s") return Basis::Schur;
    throw std::invalid_argument("unknown basis '" + letter + "'");
}

namespace {

using RationalTerms = std::map<Partition, Rational>;

void accumulate(RationalTerms& into, const Partition& key, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = into.try_emplace(key, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) into.erase(it);
}

RationalTerms multiply_merge(const RationalTerms& a, const RationalTerms& b) {
    RationalTerms out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) accumulate(out, ka.merged(kb), ca * cb);
    return out;
}

// Memo for per-partition change-of-basis data. Entries are never erased,
// so references stay valid once published.
class ExpansionCache {
   public:
    template <class Compute>
    const RationalTerms& get(Basis basis, const Partition& key, Compute&& compute) {
        const auto id = std::make_pair(static_cast<int>(basis), key);
        {
            std::shared_lock lock(mutex_);
            if (auto it = entries_.find(id); it != entries_.end()) return *it->second;
        }
        auto value = std::make_unique<const RationalTerms>(compute());
        std::unique_lock lock(mutex_);
        auto [it, inserted] = entries_.try_emplace(id, std::move(value));
        return *it->second;
    }

   private:
    std::shared_mutex mutex_;
    std::map<std::pair<int, Partition>, std::unique_ptr<const RationalTerms>> entries_;
};

ExpansionCache& to_p_cache() {
    static ExpansionCache cache;
    return cache;
}

ExpansionCache& from_p_cache() {
    static ExpansionCache cache;
    return cache;
}

// h_k = sum_{nu |- k} p_nu / z_nu
RationalTerms complete_in_p(int k) {
    RationalTerms out;
    for (const auto& nu : partitions_of(k)) out.emplace(nu, Rational(1) / Rational(z_of(nu)));
    return out;
}

// Expansion of p_mu in `target`.
const RationalTerms& from_power_sum(Basis target, const Partition& mu);

// p_k in the h basis by Newton: p_k = k h_k - sum_{i<k} h_{k-i} p_i.
RationalTerms power_in_h(int k) {
    RationalTerms out;
    accumulate(out, Partition{k}, Rational(k));
    for (int i = 1; i < k; ++i) {
        const RationalTerms& pi = from_power_sum(Basis::Homogeneous, Partition{i});
        for (const auto& [key, c] : pi) accumulate(out, key.merged(Partition{k - i}), -c);
    }
    return out;
}

const RationalTerms& from_power_sum(Basis target, const Partition& mu) {
    return from_p_cache().get(target, mu, [&]() -> RationalTerms {
        switch (target) {
            case Basis::PowerSum:
                return {{mu, Rational(1)}};
            case Basis::Schur: {
                // p_mu = sum_lambda chi^lambda(mu) s_lambda
                RationalTerms out;
                const CharacterTable& table = character_table(mu.size());
                const std::size_t col = table.index_of(mu);
                for (std::size_t row = 0; row < table.partitions().size(); ++row)
                    accumulate(out, table.partitions()[row], Rational(static_cast<long>(table.value(row, col))));
                return out;
            }
            case Basis::Homogeneous: {
                if (mu.empty()) return {{mu, Rational(1)}};
                if (mu.length() == 1) return power_in_h(mu[0]);
                RationalTerms acc{{Partition(), Rational(1)}};
                for (int part : mu.parts()) acc = multiply_merge(acc, from_power_sum(Basis::Homogeneous, Partition{part}));
                return acc;
            }
        }
        throw std::logic_error("unreachable basis");
    });
}

template <class S>
void add_scaled(std::map<Partition, S>& into, const RationalTerms& src, const S& scale, int truncation) {
    for (const auto& [key, c] : src) {
        if (key.size() > truncation) continue;
        S term = scale * S(c);
        auto [it, inserted] = into.try_emplace(key, term);
        if (inserted) {
            if (is_zero(it->second)) into.erase(it);
            continue;
        }
        it->second += term;
        if (is_zero(it->second)) into.erase(it);
    }
}

}  // namespace

const std::map<Partition, Rational>& power_sum_expansion(Basis basis, const Partition& lambda) {
    return to_p_cache().get(basis, lambda, [&]() -> RationalTerms {
        switch (basis) {
            case Basis::PowerSum:
                return {{lambda, Rational(1)}};
            case Basis::Homogeneous: {
                RationalTerms acc{{Partition(), Rational(1)}};
                for (int part : lambda.parts()) acc = multiply_merge(acc, complete_in_p(part));
                return acc;
            }
            case Basis::Schur: {
                // s_lambda = sum_mu chi^lambda(mu) p_mu / z_mu
                RationalTerms out;
                const CharacterTable& table = character_table(lambda.size());
                const std::size_t row = table.index_of(lambda);
                for (std::size_t col = 0; col < table.partitions().size(); ++col) {
                    const Partition& mu = table.partitions()[col];
                    accumulate(out, mu, Rational(static_cast<long>(table.value(row, col))) / Rational(z_of(mu)));
                }
                return out;
            }
        }
        throw std::logic_error("unreachable basis");
    });
}

// ---------------------------------------------------------------------------
// SymSeries members

template <class S>
int SymSeries<S>::min_degree() const {
    int best = kExact;
    for (const auto& [key, c] : terms_) best = std::min(best, key.size());
    return best;
}

template <class S>
int SymSeries<S>::max_degree() const {
    int best = -1;
    for (const auto& [key, c] : terms_) best = std::max(best, key.size());
    return best;
}

template <class S>
void SymSeries<S>::add_term(const Partition& lambda, const S& c) {
    if (lambda.size() > truncation_ || wreathlitt::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (inserted) return;
    it->second += c;
    if (wreathlitt::is_zero(it->second)) terms_.erase(it);
}

template <class S>
SymSeries<S> SymSeries<S>::truncated(int degree) const {
    SymSeries out(basis_, std::min(degree, truncation_));
    for (const auto& [key, c] : terms_)
        if (key.size() <= out.truncation_) out.terms_.emplace(key, c);
    return out;
}

template <class S>
SymSeries<S> SymSeries<S>::with_truncation(int degree) const {
    SymSeries out(basis_, degree);
    for (const auto& [key, c] : terms_)
        if (key.size() <= degree) out.terms_.emplace(key, c);
    return out;
}

template <class S>
SymSeries<S>& SymSeries<S>::operator+=(const SymSeries& rhs) {
    const SymSeries converted = rhs.basis_ == basis_ ? rhs : convert(rhs, basis_);
    truncation_ = std::min(truncation_, converted.truncation_);
    std::erase_if(terms_, [this](const auto& kv) { return kv.first.size() > truncation_; });
    for (const auto& [key, c] : converted.terms_) add_term(key, c);
    return *this;
}

template <class S>
SymSeries<S>& SymSeries<S>::operator-=(const SymSeries& rhs) {
    return *this += -rhs;
}

template <class S>
SymSeries<S>& SymSeries<S>::operator*=(const S& c) {
    if (wreathlitt::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_) v *= c;
    return *this;
}

template <class S>
SymSeries<S> SymSeries<S>::operator-() const {
    SymSeries out = *this;
    for (auto& [key, v] : out.terms_) v = -v;
    return out;
}

// ---------------------------------------------------------------------------
// Free operations

template <class S>
SymSeries<S> convert(const SymSeries<S>& f, Basis target) {
    if (f.basis() == target) return f;
    SymSeries<S> in_p(Basis::PowerSum, f.truncation());
    if (f.basis() == Basis::PowerSum) {
        in_p = f;
    } else {
        std::map<Partition, S> terms;
        for (const auto& [key, c] : f.terms()) add_scaled(terms, power_sum_expansion(f.basis(), key), c, f.truncation());
        for (const auto& [key, c] : terms) in_p.add_term(key, c);
    }
    if (target == Basis::PowerSum) return in_p;
    std::map<Partition, S> terms;
    for (const auto& [key, c] : in_p.terms()) add_scaled(terms, from_power_sum(target, key), c, f.truncation());
    SymSeries<S> out(target, f.truncation());
    for (const auto& [key, c] : terms) out.add_term(key, c);
    return out;
}

template <class S>
SymSeries<S> operator*(const SymSeries<S>& a, const SymSeries<S>& b) {
    const bool both_h = a.basis() == Basis::Homogeneous && b.basis() == Basis::Homogeneous;
    const Basis basis = both_h ? Basis::Homogeneous : Basis::PowerSum;
    const SymSeries<S> lhs = convert(a, basis);
    const SymSeries<S> rhs = convert(b, basis);
    const int truncation = std::min(a.truncation(), b.truncation());
    std::map<Partition, S> terms;
    for (const auto& [ka, ca] : lhs.terms()) {
        if (ka.size() > truncation) continue;
        for (const auto& [kb, cb] : rhs.terms()) {
            if (ka.size() + kb.size() > truncation) continue;
            S term = ca * cb;
            auto [it, inserted] = terms.try_emplace(ka.merged(kb), term);
            if (!inserted) it->second += term;
        }
    }
    SymSeries<S> out(basis, truncation);
    for (const auto& [key, c] : terms) out.add_term(key, c);
    return out;
}

template <class S>
S hall_pair(const SymSeries<S>& f, const SymSeries<S>& g) {
    const SymSeries<S> fp = convert(f, Basis::PowerSum);
    const SymSeries<S> gp = convert(g, Basis::PowerSum);
    const int truncation = std::min(f.truncation(), g.truncation());
    const auto& small = fp.terms().size() <= gp.terms().size() ? fp : gp;
    const auto& large = &small == &fp ? gp : fp;
    S acc(0);
    for (const auto& [key, c] : small.terms()) {
        if (key.size() > truncation) continue;
        auto it = large.terms().find(key);
        if (it == large.terms().end()) continue;
        acc += S(Rational(z_of(key))) * c * it->second;
    }
    return acc;
}

template <class S>
SymSeries<S> stretch(const SymSeries<S>& g, int n) {
    if (n < 1) throw std::invalid_argument("stretch: n must be positive");
    const SymSeries<S> gp = convert(g, Basis::PowerSum);
    const int truncation = gp.is_exact() ? kExact : n * (gp.truncation() + 1) - 1;
    SymSeries<S> out(Basis::PowerSum, truncation);
    for (const auto& [key, c] : gp.terms()) out.add_term(key.stretched(n), c);
    return out;
}

template <class S>
SymSeries<S> plethysm(const SymSeries<S>& f, const SymSeries<S>& g, int degree) {
    const SymSeries<S> fp = convert(f, Basis::PowerSum);
    const SymSeries<S> gp = convert(g, Basis::PowerSum);
    const bool has_constant = !is_zero(gp.constant_term());
    const int g_min = gp.min_degree();  // kExact when g == 0

    // Largest degree at which f[g] is fully determined.
    int supported = gp.truncation();
    if (!f.is_exact()) {
        if (has_constant)
            throw TruncationTooShort("plethysm: g has a constant term, so f must be finitely supported");
        if (g_min != kExact) {
            const long bound = static_cast<long>(f.truncation() + 1) * g_min - 1;
            supported = static_cast<int>(std::min<long>(supported, bound));
        }
    }
    if (degree == kExact) degree = supported;
    if (degree > supported)
        throw TruncationTooShort("plethysm: requested degree " + std::to_string(degree) +
                                 " exceeds supported degree " + std::to_string(supported));

    std::map<int, SymSeries<S>> stretched;
    auto stretched_by = [&](int n) -> const SymSeries<S>& {
        auto it = stretched.find(n);
        if (it == stretched.end()) it = stretched.emplace(n, stretch(gp, n).truncated(degree)).first;
        return it->second;
    };

    // p_nu[g] built part by part; memo keyed by the partition prefix.
    std::map<Partition, SymSeries<S>> products;
    products.emplace(Partition(), SymSeries<S>::monomial(Basis::PowerSum, Partition(), S(1), degree));
    std::function<const SymSeries<S>&(const Partition&)> product_of = [&](const Partition& nu) -> const SymSeries<S>& {
        if (auto it = products.find(nu); it != products.end()) return it->second;
        std::vector<int> prefix(nu.parts().begin(), nu.parts().end() - 1);
        const SymSeries<S>& head = product_of(Partition(std::move(prefix)));
        SymSeries<S> value = head * stretched_by(nu.parts().back());
        return products.emplace(nu, std::move(value)).first->second;
    };

    SymSeries<S> out(Basis::PowerSum, degree);
    for (const auto& [nu, c] : fp.terms()) {
        // Each part of nu contributes at least g_min to the degree.
        if (!has_constant && g_min != kExact && static_cast<long>(nu.length()) * g_min > degree) continue;
        if (!has_constant && g_min == kExact && !nu.empty()) continue;
        for (const auto& [key, v] : product_of(nu).terms()) out.add_term(key, c * v);
    }
    return out;
}

template <class S>
S coefficient_of_schur(const SymSeries<S>& f, const Partition& lambda) {
    if (lambda.size() > f.truncation())
        throw DegreeOutOfRange("coefficient_of_schur: |lambda| = " + std::to_string(lambda.size()) +
                               " exceeds truncation " + std::to_string(f.truncation()));
    if (f.basis() == Basis::Schur) return f.coefficient(lambda);
    return hall_pair(f, schur<S>(lambda));
}

SymSeries<Rational> omega_truncated(int degree) {
    if (degree < 0) throw std::invalid_argument("omega_truncated: degree must be non-negative");
    SymSeries<Rational> out(Basis::Homogeneous, degree);
    for (int k = 0; k <= degree; ++k) out.add_term(k == 0 ? Partition() : Partition{k}, Rational(1));
    return out;
}

SymSeries<CycloScalar> omega_zeta(int zeta_power, int m, int degree) {
    if (m < 1 || zeta_power < 0 || zeta_power >= m)
        throw std::invalid_argument("omega_zeta: need 0 <= j < m");
    if (degree < 0) throw std::invalid_argument("omega_zeta: degree must be non-negative");
    SymSeries<CycloScalar> out(Basis::Homogeneous, degree);
    for (int k = 0; k <= degree; ++k)
        out.add_term(k == 0 ? Partition() : Partition{k},
                     CycloScalar::zeta_power(static_cast<long>(zeta_power) * k, m));
    return out;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

nlohmann::json scalar_json(const Rational& q) { return to_string(q); }

nlohmann::json scalar_json(const CycloScalar& a) {
    if (a.is_rational()) return to_string(a.coeffs()[0]);
    nlohmann::json j;
    j["order"] = a.order();
    auto& cs = j["coeffs"] = nlohmann::json::array();
    for (const auto& c : a.coeffs()) cs.push_back(to_string(c));
    return j;
}

}  // namespace

template <class S>
std::string to_json(const SymSeries<S>& f) {
    nlohmann::ordered_json j;
    j["basis"] = std::string(1, basis_letter(f.basis()));
    if (f.is_exact()) j["truncation"] = nullptr;
    else j["truncation"] = f.truncation();
    std::vector<Partition> keys;
    for (const auto& [key, c] : f.terms()) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), graded_revlex_less);
    auto& terms = j["terms"] = nlohmann::ordered_json::array();
    for (const auto& key : keys) {
        nlohmann::ordered_json t;
        t["partition"] = key.parts();
        t["coeff"] = scalar_json(f.terms().at(key));
        terms.push_back(std::move(t));
    }
    return j.dump();
}

SymSeries<Rational> rational_series_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const Basis basis = parse_basis(j.at("basis").get<std::string>());
    const int truncation = j.at("truncation").is_null() ? kExact : j.at("truncation").get<int>();
    SymSeries<Rational> out(basis, truncation);
    for (const auto& t : j.at("terms"))
        out.add_term(Partition(t.at("partition").get<std::vector<int>>()),
                     parse_rational(t.at("coeff").get<std::string>()));
    return out;
}

template <class S>
std::string to_string(const SymSeries<S>& f) {
    if (f.is_zero()) return "0";
    std::vector<Partition> keys;
    for (const auto& [key, c] : f.terms()) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), graded_revlex_less);
    std::ostringstream os;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i) os << " + ";
        os << "(" << to_string(f.terms().at(keys[i])) << ")*" << basis_letter(f.basis()) << "[" << to_string(keys[i])
           << "]";
    }
    if (!f.is_exact()) os << " + O(" << f.truncation() + 1 << ")";
    return os.str();
}

#define WREATHLITT_INSTANTIATE(S)                                                              \
    template class SymSeries<S>;                                                               \
    template SymSeries<S> convert(const SymSeries<S>&, Basis);                                 \
    template SymSeries<S> operator*(const SymSeries<S>&, const SymSeries<S>&);                 \
    template S hall_pair(const SymSeries<S>&, const SymSeries<S>&);                            \
    template SymSeries<S> plethysm(const SymSeries<S>&, const SymSeries<S>&, int);             \
    template SymSeries<S> stretch(const SymSeries<S>&, int);                                   \
    template S coefficient_of_schur(const SymSeries<S>&, const Partition&);                    \
    template std::string to_json(const SymSeries<S>&);                                        \
    template std::string to_string(const SymSeries<S>&);

WREATHLITT_INSTANTIATE(Rational)
WREATHLITT_INSTANTIATE(CycloScalar)

#undef WREATHLITT_INSTANTIATE

}  // namespace wreathlitt
