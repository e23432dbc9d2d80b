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

#include "wreathlitt/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include <json.hpp>

#include "wreathlitt/parallel.hpp"

namespace wreathlitt {

void CheckResult::fail(Counterexample c) {
    if (passed) counterexample = std::move(c);
    passed = false;
}

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["scope"] = scope;
    j["passed"] = passed();
    auto& arr = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        cj["cases"] = c.cases;
        cj["seconds"] = c.seconds;
        if (c.counterexample) {
            const auto& ce = *c.counterexample;
            cj["counterexample"] = {{"rho", ce.rho},
                                    {"lambda", ce.lambda},
                                    {"expected", ce.expected},
                                    {"actual", ce.actual},
                                    {"detail", ce.detail}};
        }
        arr.push_back(std::move(cj));
    }
    return j.dump(1) + "\n";
}

namespace {

template <class Fn>
CheckResult timed(const std::string& name, Fn&& body) {
    CheckResult result;
    result.name = name;
    const auto start = std::chrono::steady_clock::now();
    body(result);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

void absorb(CheckResult& into, const CheckResult& part) {
    into.cases += part.cases;
    if (!part.passed && part.counterexample) into.fail(*part.counterexample);
    else if (!part.passed) into.passed = false;
}

WreathLabel single_label(int m, int j, int k) {
    std::vector<Partition> parts(static_cast<std::size_t>(m));
    parts[j] = Partition{k};
    return WreathLabel(m, std::move(parts));
}

CycloScalar inverse_of(const BigInt& z) { return CycloScalar(Rational(1) / Rational(z)); }

// ---------------------------------------------------------------------------
// Series in an X-side wreath alphabet family and a Y side, the Y side being
// a single alphabet (Partition keys, p-basis) or another family (WreathLabel).

int y_degree(const Partition& p) { return p.size(); }
int y_degree(const WreathLabel& r) { return r.size(); }
Partition empty_key(int, const Partition*) { return Partition(); }
WreathLabel empty_key(int m, const WreathLabel*) { return WreathLabel(m); }

template <class YKey>
struct BiSeries {
    int m;
    int dx;
    int dy;
    std::map<std::pair<WreathLabel, YKey>, CycloScalar> terms;

    void add(const WreathLabel& x, const YKey& y, const CycloScalar& c) {
        if (x.size() > dx || y_degree(y) > dy || c.is_zero()) return;
        auto [it, inserted] = terms.try_emplace({x, y}, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
};

template <class YKey>
BiSeries<YKey> multiply(const BiSeries<YKey>& a, const BiSeries<YKey>& b) {
    BiSeries<YKey> out{a.m, std::min(a.dx, b.dx), std::min(a.dy, b.dy), {}};
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            if (ka.first.size() + kb.first.size() > out.dx) continue;
            if (y_degree(ka.second) + y_degree(kb.second) > out.dy) continue;
            out.add(ka.first.merged(kb.first), ka.second.merged(kb.second), ca * cb);
        }
    return out;
}

// Omega(A) = sum_nu p_nu[A]/z_nu where p_k[A] has X-degree exactly k.
template <class YKey>
BiSeries<YKey> plethystic_exponential(int m, int dx, int dy, const std::function<BiSeries<YKey>(int)>& power_of) {
    std::map<int, BiSeries<YKey>> powers;
    std::map<Partition, BiSeries<YKey>> products;
    BiSeries<YKey> one{m, dx, dy, {}};
    one.add(WreathLabel(m), empty_key(m, static_cast<const YKey*>(nullptr)), CycloScalar(Rational(1), m));
    products.emplace(Partition(), one);
    std::function<const BiSeries<YKey>&(const Partition&)> product_of = [&](const Partition& nu) -> const BiSeries<YKey>& {
        if (auto it = products.find(nu); it != products.end()) return it->second;
        const int last = nu.parts().back();
        std::vector<int> prefix(nu.parts().begin(), nu.parts().end() - 1);
        const BiSeries<YKey>& head = product_of(Partition(std::move(prefix)));
        auto pit = powers.find(last);
        if (pit == powers.end()) pit = powers.emplace(last, power_of(last)).first;
        return products.emplace(nu, multiply(head, pit->second)).first->second;
    };
    BiSeries<YKey> out{m, dx, dy, {}};
    for (const auto& nu : partitions_up_to(dx)) {
        const CycloScalar scale = inverse_of(z_of(nu));
        for (const auto& [key, c] : product_of(nu).terms) out.add(key.first, key.second, c * scale);
    }
    return out;
}

// Omega((1/m) sum_zeta X_zeta Omega(Y; zeta)), Y side in the p basis.
BiSeries<Partition> plethystic_kernel(int m, int dx, int dy) {
    std::vector<SymSeries<CycloScalar>> omegas;
    for (int j = 0; j < m; ++j) omegas.push_back(omega_zeta(j, m, dy));
    const CycloScalar inv_m(Rational(1) / Rational(m));
    return plethystic_exponential<Partition>(m, dx, dy, [&](int k) {
        BiSeries<Partition> pk{m, dx, dy, {}};
        for (int j = 0; j < m; ++j) {
            const SymSeries<CycloScalar> y_side = plethysm(power_sum<CycloScalar>(Partition{k}), omegas[j], dy);
            for (const auto& [mu, c] : y_side.terms()) pk.add(single_label(m, j, k), mu, c * inv_m);
        }
        return pk;
    });
}

// Omega((1/m) sum_zeta X_zeta Y_zeta)
BiSeries<WreathLabel> reproducing_kernel(int m, int degree) {
    const CycloScalar inv_m(Rational(1) / Rational(m));
    return plethystic_exponential<WreathLabel>(m, degree, degree, [&](int k) {
        BiSeries<WreathLabel> pk{m, degree, degree, {}};
        for (int j = 0; j < m; ++j) pk.add(single_label(m, j, k), single_label(m, j, k), inv_m);
        return pk;
    });
}

void check_restriction_against_kernel(CheckResult& result, const BiSeries<Partition>& kernel, const Partition& lambda,
                                      int m, int n) {
    const WreathSeries expected = restriction_frobenius(lambda, n, m);
    const auto& s_lambda = power_sum_expansion(Basis::Schur, lambda);
    for (const auto& rho : enumerate_phi(n, m)) {
        CycloScalar actual(Rational(0), m);
        for (const auto& [mu, c] : s_lambda) {
            auto it = kernel.terms.find({rho, mu});
            if (it != kernel.terms.end()) actual += it->second * CycloScalar(Rational(z_of(mu)) * c);
        }
        ++result.cases;
        const CycloScalar want = expected.coefficient(rho);
        if (!(actual == want))
            result.fail({to_string(rho), to_string(lambda), to_string(want), to_string(actual),
                         "coefficient of P_rho in <kernel, s_lambda>, m=" + std::to_string(m)});
    }
}

// ---------------------------------------------------------------------------
// Exact oracle data for one (m, n, D) scope.

struct OracleScope {
    int m;
    int n;
    std::vector<WreathLabel> labels;
    std::vector<BigInt> centralizers;
    std::vector<WreathSeries> irreducibles;  // S_rho in the P basis

    OracleScope(int m_, int n_) : m(m_), n(n_), labels(enumerate_phi(n_, m_)) {
        for (const auto& sigma : labels) centralizers.push_back(Z_of(sigma));
        for (const auto& rho : labels) irreducibles.push_back(S_in_P(rho));
    }

    CycloScalar character(std::size_t rho, std::size_t sigma) const {
        return irreducibles[rho].coefficient(labels[sigma]) * CycloScalar(Rational(centralizers[sigma]));
    }

    std::vector<CycloScalar> schur_values(const Partition& lambda) const {
        std::vector<CycloScalar> out;
        for (const auto& sigma : labels) out.push_back(schur_at_eigenvalues(lambda, sigma));
        return out;
    }

    WreathSeries frobenius(const std::vector<CycloScalar>& values) const {
        WreathSeries out(m);
        for (std::size_t s = 0; s < labels.size(); ++s) out.add_term(labels[s], values[s] * inverse_of(centralizers[s]));
        return out;
    }

    // Path B: sum_sigma conj(chi_rho(sigma)) s_lambda(Xi_sigma) / Z_sigma.
    CycloScalar character_average(std::size_t rho, const std::vector<CycloScalar>& values,
                                  const FaultInjection& fault) const {
        CycloScalar acc(Rational(0), m);
        const std::size_t identity = static_cast<std::size_t>(
            std::find(labels.begin(), labels.end(), identity_label(n, m)) - labels.begin());
        for (std::size_t s = 0; s < labels.size(); ++s) {
            CycloScalar chi = character(rho, s);
            if (fault.flip_character && rho == 0 && s == identity) chi = -chi;
            acc += chi.conj() * values[s] * inverse_of(centralizers[s]);
        }
        return acc;
    }
};

Multiplicity project_to_multiplicity(const CycloScalar& value, const std::string& context) {
    const auto q = value.to_rational();
    if (!q) throw InternalInconsistency(context + ": value " + to_string(value) + " is not rational");
    return to_multiplicity(*q, context);
}

// ---------------------------------------------------------------------------
// Brute force over explicit monomial matrices.

class MonomialGroup {
   public:
    MonomialGroup(int m, int n, int max_power) : m_(m), n_(n) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::vector<std::complex<double>> roots;
        for (int a = 0; a < m; ++a) roots.push_back(std::polar(1.0, 2 * std::numbers::pi * a / m));
        do {
            std::vector<int> exps(static_cast<std::size_t>(n), 0);
            while (true) {
                elements_.push_back(make_element(perm, exps, roots, max_power));
                int pos = 0;
                while (pos < n && ++exps[pos] == m) exps[pos++] = 0;
                if (pos == n) break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::size_t order() const { return elements_.size(); }

    // (1/|G|) sum_g conj(chi(g)) s_lambda(g); chi from the P-expansion of S_rho.
    std::complex<double> multiplicity(const WreathSeries& irreducible, const Partition& lambda) const {
        std::map<WreathLabel, std::complex<double>> chi;
        std::complex<double> acc = 0;
        const auto& s_lambda = power_sum_expansion(Basis::Schur, lambda);
        for (const auto& g : elements_) {
            auto it = chi.find(g.cls);
            if (it == chi.end()) {
                const CycloScalar exact = irreducible.coefficient(g.cls) * CycloScalar(Rational(Z_of(g.cls)));
                it = chi.emplace(g.cls, exact.to_complex()).first;
            }
            std::complex<double> schur_value = 0;
            for (const auto& [mu, c] : s_lambda) {
                std::complex<double> prod = c.get_d();
                for (int part : mu.parts()) prod *= g.traces.at(static_cast<std::size_t>(part));
                schur_value += prod;
            }
            acc += std::conj(it->second) * schur_value;
        }
        return acc / static_cast<double>(elements_.size());
    }

   private:
    struct Element {
        WreathLabel cls;
        std::vector<std::complex<double>> traces;  // traces[r] = Tr(gamma^r)
    };
    using Matrix = std::vector<std::complex<double>>;

    Matrix multiply(const Matrix& a, const Matrix& b) const {
        Matrix out(a.size(), 0);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k)
                for (int j = 0; j < n_; ++j) out[i * n_ + j] += a[i * n_ + k] * b[k * n_ + j];
        return out;
    }

    Element make_element(const std::vector<int>& perm, const std::vector<int>& exps,
                         const std::vector<std::complex<double>>& roots, int max_power) const {
        // gamma e_i = zeta^{a_i} e_{perm(i)}
        Matrix gamma(static_cast<std::size_t>(n_ * n_), 0);
        for (int i = 0; i < n_; ++i) gamma[perm[i] * n_ + i] = roots[exps[i]];
        Element e{WreathLabel(m_), std::vector<std::complex<double>>(static_cast<std::size_t>(max_power) + 1, 0)};
        Matrix power = gamma;
        for (int r = 1; r <= max_power; ++r) {
            std::complex<double> tr = 0;
            for (int i = 0; i < n_; ++i) tr += power[i * n_ + i];
            e.traces[r] = tr;
            if (r < max_power) power = multiply(power, gamma);
        }
        // Class from cycle lengths and cycle products.
        std::vector<std::vector<int>> cycles(static_cast<std::size_t>(m_));
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        for (int i = 0; i < n_; ++i) {
            if (seen[i]) continue;
            int len = 0;
            int product = 0;
            for (int k = i; !seen[k]; k = perm[k]) {
                seen[k] = true;
                ++len;
                product = (product + exps[k]) % m_;
            }
            cycles[product].push_back(len);
        }
        std::vector<Partition> parts;
        for (auto& c : cycles) parts.emplace_back(std::move(c));
        e.cls = WreathLabel(m_, std::move(parts));
        return e;
    }

    int m_;
    int n_;
    std::vector<Element> elements_;
};

NumericCheck compare_numeric(std::complex<double> numeric, Multiplicity exact) {
    NumericCheck out;
    out.numeric = numeric;
    out.exact = exact;
    out.error = std::abs(numeric - static_cast<double>(exact));
    out.passed = out.error < kNumericTolerance && std::llround(numeric.real()) == exact;
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

WreathSeries restriction_frobenius(const Partition& lambda, int n, int m) {
    if (lambda.length() > n)
        throw HypothesisViolation("restriction_frobenius: l(lambda) = " + std::to_string(lambda.length()) +
                                  " exceeds n = " + std::to_string(n));
    WreathSeries out(m);
    for (const auto& rho : enumerate_phi(n, m)) out.add_term(rho, schur_at_eigenvalues(lambda, rho) * inverse_of(Z_of(rho)));
    return out;
}

Multiplicity oracle_pairing_coefficient(const BranchingQuery& q) {
    q.validate();
    const WreathSeries f = restriction_frobenius(q.lambda, q.rho.size(), q.m());
    return project_to_multiplicity(wreath_pair(f, bar(S_in_P(q.rho))),
                                   "pairing oracle d[" + to_string(q.rho) + "; " + to_string(q.lambda) + "]");
}

Multiplicity oracle_character_average(const BranchingQuery& q) {
    q.validate();
    const int m = q.m();
    const WreathSeries irreducible = S_in_P(q.rho);
    CycloScalar acc(Rational(0), m);
    for (const auto& sigma : enumerate_phi(q.rho.size(), m)) {
        const BigInt z = Z_of(sigma);
        const CycloScalar chi = irreducible.coefficient(sigma) * CycloScalar(Rational(z));
        acc += chi.conj() * schur_at_eigenvalues(q.lambda, sigma) * inverse_of(z);
    }
    return project_to_multiplicity(acc, "character oracle d[" + to_string(q.rho) + "; " + to_string(q.lambda) + "]");
}

NumericCheck numeric_matrix_check(const BranchingQuery& q) {
    q.validate();
    if (q.m() > 4 || q.rho.size() > 3) throw std::invalid_argument("numeric_matrix_check: requires m <= 4 and n <= 3");
    const MonomialGroup group(q.m(), q.rho.size(), std::max(1, q.lambda.size()));
    return compare_numeric(group.multiplicity(S_in_P(q.rho), q.lambda), branching_coefficient(q));
}

CheckResult kernel_identity_check(int m, int dx, int dy) {
    return timed("kernel_identity", [&](CheckResult& result) {
        BiSeries<Partition> lhs{m, dx, dy, {}};
        for (int n = 0; n <= dx; ++n)
            for (const auto& rho : enumerate_phi(n, m)) {
                const CycloScalar scale = inverse_of(Z_of(rho));
                const SymSeries<CycloScalar> g = g_series(rho, dy);
                for (const auto& [mu, c] : g.terms()) lhs.add(rho, mu, c * scale);
            }
        const BiSeries<Partition> rhs = plethystic_kernel(m, dx, dy);
        for (int n = 0; n <= dx; ++n)
            for (const auto& rho : enumerate_phi(n, m))
                for (const auto& mu : partitions_up_to(dy)) {
                    ++result.cases;
                    auto li = lhs.terms.find({rho, mu});
                    auto ri = rhs.terms.find({rho, mu});
                    const CycloScalar l = li == lhs.terms.end() ? CycloScalar(Rational(0), m) : li->second;
                    const CycloScalar r = ri == rhs.terms.end() ? CycloScalar(Rational(0), m) : ri->second;
                    if (!(l == r))
                        result.fail({to_string(rho), to_string(mu), to_string(l), to_string(r),
                                     "coefficient of P_rho(X) p_mu(Y), m=" + std::to_string(m)});
                }
    });
}

CheckResult restriction_formula_check(const Partition& lambda, int m, int n) {
    if (lambda.length() > n)
        throw HypothesisViolation("restriction_formula_check: l(lambda) exceeds n");
    return timed("restriction_formula", [&](CheckResult& result) {
        check_restriction_against_kernel(result, plethystic_kernel(m, n, lambda.size()), lambda, m, n);
    });
}

CheckResult alphabet_transform_check(int m, int degree) {
    return timed("alphabet_transform", [&](CheckResult& result) {
        const CycloScalar inv_m(Rational(1) / Rational(m));
        std::vector<SymSeries<CycloScalar>> omegas;
        for (int a = 0; a < m; ++a) omegas.push_back(omega_zeta(a, m, degree));
        for (int j = 1; j <= m; ++j) {
            SymSeries<CycloScalar> lhs(Basis::Homogeneous, degree);
            for (int a = 0; a < m; ++a)
                lhs += omegas[a] * (CycloScalar::zeta_power(static_cast<long>(j) * a, m) * inv_m);
            SymSeries<CycloScalar> rhs(Basis::Homogeneous, degree);
            for (int k = 1; k * m - j <= degree; ++k) {
                const int d = k * m - j;
                rhs.add_term(d == 0 ? Partition() : Partition{d}, CycloScalar(Rational(1), m));
            }
            for (int d = 0; d <= degree; ++d) {
                const Partition key = d == 0 ? Partition() : Partition{d};
                ++result.cases;
                if (!(lhs.coefficient(key) == rhs.coefficient(key)))
                    result.fail({"j=" + std::to_string(j), "h[" + to_string(key) + "]", to_string(rhs.coefficient(key)),
                                 to_string(lhs.coefficient(key)), "m=" + std::to_string(m)});
            }
        }
    });
}

CheckResult reproducing_kernel_check(int m, int degree) {
    return timed("reproducing_kernel", [&](CheckResult& result) {
        const BiSeries<WreathLabel> kernel = reproducing_kernel(m, degree);
        // Y-side slices of the kernel, keyed by X label.
        std::map<WreathLabel, WreathSeries> slices;
        for (const auto& [key, c] : kernel.terms) {
            auto it = slices.try_emplace(key.first, WreathSeries(m)).first;
            it->second.add_term(key.second, c);
        }
        for (int n = 0; n <= degree; ++n)
            for (const auto& rho : enumerate_phi(n, m)) {
                ++result.cases;
                // (K, P_rho(X)) = Z_rho * [P_rho(X)] K
                WreathSeries actual(m);
                if (auto it = slices.find(rho); it != slices.end())
                    actual = it->second * CycloScalar(Rational(Z_of(rho)));
                WreathSeries expected(m);
                expected.add_term(rho, CycloScalar(Rational(1), m));
                if (!(actual == expected))
                    result.fail({to_string(rho), "", to_string(expected), to_string(actual),
                                 "(kernel, P_rho(X)) in Y, m=" + std::to_string(m)});
            }
    });
}

CheckResult substitution_lemma_check(int m, int n, int degree) {
    return timed("substitution_lemma", [&](CheckResult& result) {
        for (const auto& rho : enumerate_phi(n, m)) {
            const SymSeries<CycloScalar> g = g_series(rho, degree);
            for (const auto& lambda : partitions_up_to(degree)) {
                ++result.cases;
                const CycloScalar paired = hall_pair(g, schur<CycloScalar>(lambda));
                const CycloScalar direct = schur_at_eigenvalues(lambda, rho);
                if (!(paired == direct))
                    result.fail({to_string(rho), to_string(lambda), to_string(direct), to_string(paired),
                                 "<g_rho, s_lambda> vs s_lambda(Xi_rho), m=" + std::to_string(m)});
            }
        }
    });
}

CheckResult g_series_dual_check(int m, int n, int degree) {
    return timed("g_series_dual", [&](CheckResult& result) {
        for (const auto& rho : enumerate_phi(n, m)) {
            ++result.cases;
            const SymSeries<CycloScalar> from_traces = g_series(rho, degree);
            const SymSeries<CycloScalar> from_product = g_series_product(rho, degree);
            if (from_traces.terms() != from_product.terms())
                result.fail({to_string(rho), "", to_string(from_product), to_string(from_traces),
                             "g_rho from power traces vs product formula, degree " + std::to_string(degree)});
        }
    });
}

VerificationReport verify_branching(int m, int n, int max_degree, int jobs, FaultInjection fault) {
    if (m < 1 || n < 0 || max_degree < 0) throw std::invalid_argument("verify: need m >= 1, n >= 0, max degree >= 0");
    VerificationReport report;
    report.scope = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " max_degree=" + std::to_string(max_degree);
    warm_character_tables(std::max(n, max_degree));

    const OracleScope scope(m, n);
    const std::vector<Partition> lambdas = partitions_up_to(max_degree, n);
    const std::size_t rows = scope.labels.size();
    const std::size_t cols = lambdas.size();

    // Per-lambda data shared by both exact oracle paths.
    std::vector<std::vector<CycloScalar>> schur_values(cols);
    std::vector<WreathSeries> frobenius(cols);
    parallel_for(cols, jobs, [&](std::size_t c) {
        schur_values[c] = scope.schur_values(lambdas[c]);
        frobenius[c] = scope.frobenius(schur_values[c]);
    });

    struct Cell {
        std::optional<Multiplicity> main, pairing, average;
        std::string error;
    };
    std::vector<Cell> cells(rows * cols);
    const auto start = std::chrono::steady_clock::now();
    parallel_for(rows, jobs, [&](std::size_t r) {
        const WreathLabel& rho = scope.labels[r];
        const SymSeries<Rational> g = G_series(rho, max_degree);
        const WreathSeries conj_irreducible = bar(scope.irreducibles[r]);
        for (std::size_t c = 0; c < cols; ++c) {
            Cell& cell = cells[r * cols + c];
            const std::string ctx = "d[" + to_string(rho) + "; " + to_string(lambdas[c]) + "]";
            try {
                cell.main = to_multiplicity(hall_pair(g, schur<Rational>(lambdas[c])), "main " + ctx);
                cell.pairing = project_to_multiplicity(wreath_pair(frobenius[c], conj_irreducible), "pairing " + ctx);
                cell.average =
                    project_to_multiplicity(scope.character_average(r, schur_values[c], fault), "average " + ctx);
            } catch (const InternalInconsistency& e) {
                cell.error = e.what();
            }
        }
    });
    const double triple_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    CheckResult triple;
    triple.name = "triple_agreement";
    triple.seconds = triple_seconds;
    auto opt_text = [](const std::optional<Multiplicity>& v) { return v ? std::to_string(*v) : std::string("n/a"); };
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const Cell& cell = cells[r * cols + c];
            ++triple.cases;
            const std::string rho = to_string(scope.labels[r]);
            const std::string lambda = to_string(lambdas[c]);
            if (!cell.error.empty()) {
                triple.fail({rho, lambda, opt_text(cell.main), "non-integral", cell.error});
            } else if (*cell.main != *cell.pairing || *cell.main != *cell.average) {
                triple.fail({rho, lambda, std::to_string(*cell.main),
                             "pairing=" + std::to_string(*cell.pairing) + " average=" + std::to_string(*cell.average),
                             "main path vs oracle paths A and B"});
            }
        }
    report.checks.push_back(triple);

    report.checks.push_back(timed("dimension_sum", [&](CheckResult& result) {
        const WreathLabel identity = identity_label(n, m);
        for (std::size_t c = 0; c < cols; ++c) {
            ++result.cases;
            BigInt total = 0;
            bool complete = true;
            for (std::size_t r = 0; r < rows; ++r) {
                const Cell& cell = cells[r * cols + c];
                if (!cell.main) {
                    complete = false;
                    break;
                }
                total += BigInt(static_cast<long>(*cell.main)) * irrep_dimension(scope.labels[r]);
            }
            const Rational expected = schur_at_eigenvalues(lambdas[c], identity).as_rational();
            if (!complete || Rational(total) != expected)
                result.fail({"*", to_string(lambdas[c]), to_string(expected), complete ? to_string(total) : "n/a",
                             "sum_rho d[rho; lambda] dim W_rho vs s_lambda(1^n)"});
        }
    }));

    if (m <= 4 && n <= 3) {
        report.checks.push_back(timed("numeric_matrix", [&](CheckResult& result) {
            const MonomialGroup group(m, n, std::max(1, max_degree));
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c) {
                    ++result.cases;
                    const Cell& cell = cells[r * cols + c];
                    const std::complex<double> numeric = group.multiplicity(scope.irreducibles[r], lambdas[c]);
                    const NumericCheck check = compare_numeric(numeric, cell.main.value_or(-1));
                    if (!check.passed)
                        result.fail({to_string(scope.labels[r]), to_string(lambdas[c]), opt_text(cell.main),
                                     std::to_string(numeric.real()) + (numeric.imag() >= 0 ? "+" : "") +
                                         std::to_string(numeric.imag()) + "i",
                                     "numeric brute force over " + std::to_string(group.order()) + " matrices"});
                }
        }));
    }
    return report;
}

VerificationReport verify_identities(int m, int dx, int dy, int jobs) {
    if (m < 1 || dx < 0 || dy < 0) throw std::invalid_argument("identities: need m >= 1 and non-negative bounds");
    VerificationReport report;
    report.scope = "m=" + std::to_string(m) + " dx=" + std::to_string(dx) + " dy=" + std::to_string(dy);
    warm_character_tables(std::max(dx, dy) * std::max(1, std::max(dx, dy)));

    std::vector<CheckResult> results(6);
    parallel_for(results.size(), jobs, [&](std::size_t i) {
        switch (i) {
            case 0:
                results[i] = kernel_identity_check(m, dx, dy);
                break;
            case 1:
                results[i] = timed("restriction_formula", [&](CheckResult& result) {
                    const BiSeries<Partition> kernel = plethystic_kernel(m, dx, dy);
                    for (int n = 0; n <= dx; ++n)
                        for (const auto& lambda : partitions_up_to(dy, n))
                            check_restriction_against_kernel(result, kernel, lambda, m, n);
                });
                break;
            case 2:
                results[i] = alphabet_transform_check(m, dy);
                break;
            case 3:
                results[i] = reproducing_kernel_check(m, dx);
                break;
            case 4:
                results[i] = timed("substitution_lemma", [&](CheckResult& result) {
                    for (int n = 0; n <= dx; ++n) absorb(result, substitution_lemma_check(m, n, dy));
                });
                break;
            case 5:
                results[i] = timed("g_series_dual", [&](CheckResult& result) {
                    for (int n = 0; n <= dx; ++n) absorb(result, g_series_dual_check(m, n, dy));
                });
                break;
        }
    });
    report.checks = std::move(results);
    return report;
}

}  // namespace wreathlitt
