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

// Brute-force references shared by the tests. Nothing here goes through
// character tables or the power-sum machinery.

#ifndef WREATHLITT_TESTS_SUPPORT_HPP
#define WREATHLITT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "wreathlitt/branching.hpp"
#include "wreathlitt/symfunc.hpp"
#include "wreathlitt/wreath.hpp"

namespace support {

using namespace wreathlitt;

// s_lambda(x_1..x_k) as a sum over semistandard tableaux.
inline Rational schur_by_tableaux(const Partition& lambda, const std::vector<Rational>& x) {
    const int k = static_cast<int>(x.size());
    if (lambda.length() > k) return 0;
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
    std::vector<std::vector<int>> t(static_cast<std::size_t>(lambda.length()));
    for (int r = 0; r < lambda.length(); ++r) t[r].assign(static_cast<std::size_t>(lambda[r]), 0);
    Rational total = 0;
    std::function<void(std::size_t, Rational)> fill = [&](std::size_t idx, Rational weight) {
        if (idx == cells.size()) {
            total += weight;
            return;
        }
        const auto [r, c] = cells[idx];
        int lo = 0;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v < k; ++v) {
            t[r][c] = v;
            fill(idx + 1, weight * x[v]);
        }
    };
    fill(0, Rational(1));
    return total;
}

// Evaluates a p-basis series at x_1..x_k by p_r = sum_i x_i^r.
inline Rational evaluate_power_sums(const SymSeries<Rational>& f, const std::vector<Rational>& x) {
    const SymSeries<Rational> fp = convert(f, Basis::PowerSum);
    Rational total = 0;
    for (const auto& [mu, c] : fp.terms()) {
        Rational term = c;
        for (int r : mu.parts()) {
            Rational pr = 0;
            for (const auto& xi : x) {
                Rational power = 1;
                for (int e = 0; e < r; ++e) power *= xi;
                pr += power;
            }
            term *= pr;
        }
        total += term;
    }
    return total;
}

// dim of the GL_n irreducible V^lambda: prod (n + content)/hook.
inline BigInt hook_content_dimension(const Partition& lambda, int n) {
    const Partition conj = lambda.conjugate();
    Rational d = 1;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[r]; ++c) {
            const int hook = (lambda[r] - c - 1) + (conj[c] - r - 1) + 1;
            d *= make_rational(n + c - r, hook);
        }
    return d.get_num();
}

// One monomial matrix: gamma e_i = zeta^{exps[i]} e_{perm[i]}.
struct MonomialElement {
    std::vector<int> perm;
    std::vector<int> exps;
};

inline std::vector<MonomialElement> monomial_group(int m, int n) {
    std::vector<MonomialElement> out;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        while (true) {
            out.push_back({perm, exps});
            int pos = 0;
            while (pos < n && ++exps[pos] == m) exps[pos++] = 0;
            if (pos == n) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Conjugacy class by cycle lengths and cycle products.
inline WreathLabel class_of(const MonomialElement& g, int m) {
    const int n = static_cast<int>(g.perm.size());
    std::vector<std::vector<int>> cycles(static_cast<std::size_t>(m));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, prod = 0;
        for (int k = i; !seen[k]; k = g.perm[k]) {
            seen[k] = true;
            ++len;
            prod = (prod + g.exps[k]) % m;
        }
        cycles[prod].push_back(len);
    }
    std::vector<Partition> parts;
    for (auto& c : cycles) parts.emplace_back(std::move(c));
    return WreathLabel(m, std::move(parts));
}

// Trace of g on Sym^k(C^n): sum over degree-k monomials fixed up to scalar.
inline CycloScalar trace_on_symmetric_power(const MonomialElement& g, int m, int k) {
    const int n = static_cast<int>(g.perm.size());
    CycloScalar total(Rational(0), m);
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            a[i] = left;
            bool fixed = true;
            long exponent = 0;
            for (int j = 0; j < n; ++j) {
                if (a[g.perm[j]] != a[j]) fixed = false;
                exponent += static_cast<long>(a[j]) * g.exps[j];
            }
            if (fixed) total += CycloScalar::zeta_power(exponent, m);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            a[i] = v;
            rec(i + 1, left - v);
        }
    };
    if (n == 0) return k == 0 ? CycloScalar(Rational(1), m) : total;
    rec(0, k);
    return total;
}

// Trace of g on Lambda^k(C^n): fixed k-subsets with the permutation sign.
inline CycloScalar trace_on_exterior_power(const MonomialElement& g, int m, int k) {
    const int n = static_cast<int>(g.perm.size());
    CycloScalar total(Rational(0), m);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) subset.push_back(i);
        bool fixed = true;
        for (int i : subset)
            if (!(mask >> g.perm[i] & 1u)) fixed = false;
        if (!fixed) continue;
        // sign of perm restricted to subset (as positions in sorted order)
        std::vector<int> image;
        long exponent = 0;
        for (int i : subset) {
            image.push_back(static_cast<int>(std::find(subset.begin(), subset.end(), g.perm[i]) - subset.begin()));
            exponent += g.exps[i];
        }
        int inversions = 0;
        for (std::size_t i = 0; i < image.size(); ++i)
            for (std::size_t j = i + 1; j < image.size(); ++j)
                if (image[i] > image[j]) ++inversions;
        const CycloScalar z = CycloScalar::zeta_power(exponent, m);
        total += inversions % 2 ? -z : z;
    }
    return total;
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    return make_rational(num(rng), den(rng));
}

inline CycloScalar random_cyclo(std::mt19937& rng, int m) {
    RatPoly p(static_cast<std::size_t>(m));
    for (auto& c : p) c = random_rational(rng);
    return cyclo_reduce(p, m);
}

inline SymSeries<Rational> random_series(std::mt19937& rng, Basis basis, int max_degree, int truncation, bool constant) {
    SymSeries<Rational> f(basis, truncation);
    for (const auto& lambda : partitions_up_to(max_degree)) {
        if (lambda.empty() && !constant) continue;
        if (rng() % 3 == 0) continue;
        f.add_term(lambda, random_rational(rng));
    }
    return f;
}

}  // namespace support

#endif  // WREATHLITT_TESTS_SUPPORT_HPP
