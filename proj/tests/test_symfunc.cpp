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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wreathlitt/symfunc.hpp"

using namespace wreathlitt;
using Q = SymSeries<Rational>;

namespace {

Q p_terms(std::initializer_list<std::pair<Partition, Rational>> terms, int truncation = kExact) {
    Q f(Basis::PowerSum, truncation);
    for (const auto& [mu, c] : terms) f.add_term(mu, c);
    return f;
}

Rational half(long n) { return make_rational(n, 2); }

// All monomials of degree k in x (with multiplicity one each).
std::vector<Rational> degree_monomials(const std::vector<Rational>& x, int k) {
    std::vector<Rational> out;
    std::function<void(std::size_t, int, Rational)> rec = [&](std::size_t start, int left, Rational v) {
        if (left == 0) {
            out.push_back(v);
            return;
        }
        for (std::size_t i = start; i < x.size(); ++i) rec(i, left - 1, v * x[i]);
    };
    rec(0, k, Rational(1));
    return out;
}

}  // namespace

TEST_CASE("basis conversions") {
    CHECK(convert(complete<Rational>(Partition{2}), Basis::PowerSum) ==
          p_terms({{Partition{2}, half(1)}, {Partition{1, 1}, half(1)}}));
    CHECK(convert(schur<Rational>(Partition{1, 1}), Basis::PowerSum) ==
          p_terms({{Partition{1, 1}, half(1)}, {Partition{2}, half(-1)}}));
    CHECK(convert(power_sum<Rational>(Partition{1}), Basis::Schur) == schur<Rational>(Partition{1}));
}

TEST_CASE("round trips through every basis up to degree 8") {
    const Basis bases[] = {Basis::PowerSum, Basis::Homogeneous, Basis::Schur};
    for (int d = 0; d <= 8; ++d)
        for (const auto& la : partitions_of(d))
            for (Basis from : bases)
                for (Basis to : bases) {
                    const Q f = Q::monomial(from, la);
                    CHECK(convert(convert(f, to), from) == f);
                }
}

TEST_CASE("Hall inner product") {
    CHECK(hall_pair(power_sum<Rational>(Partition{2}), power_sum<Rational>(Partition{2})) == 2);
    CHECK(hall_pair(power_sum<Rational>(Partition{1, 1}), power_sum<Rational>(Partition{2})) == 0);
    CHECK(hall_pair(schur<Rational>(Partition{2, 1}), schur<Rational>(Partition{2, 1})) == 1);
    CHECK(hall_pair(schur<Rational>(Partition{2, 1}), schur<Rational>(Partition{3})) == 0);
    for (int d = 0; d <= 7; ++d)
        for (const auto& a : partitions_of(d))
            for (const auto& b : partitions_of(d))
                CHECK(hall_pair(schur<Rational>(a), schur<Rational>(b)) == (a == b ? 1 : 0));
    // <h_lambda, m_mu> duality is not exposed; check <h_lambda, s_mu> = Kostka >= 0 instead.
    for (int d = 0; d <= 6; ++d)
        for (const auto& a : partitions_of(d))
            for (const auto& b : partitions_of(d)) {
                const Rational k = hall_pair(complete<Rational>(a), schur<Rational>(b));
                CHECK(k >= 0);
                CHECK(k.get_den() == 1);
                if (a == b) CHECK(k == 1);
            }
}

TEST_CASE("Schur functions agree with semistandard tableaux") {
    std::mt19937 rng(11);
    for (int d = 0; d <= 6; ++d)
        for (const auto& la : partitions_of(d))
            for (int vars = 1; vars <= 4; ++vars) {
                std::vector<Rational> x;
                for (int i = 0; i < vars; ++i) x.push_back(support::random_rational(rng));
                CHECK(support::evaluate_power_sums(schur<Rational>(la), x) == support::schur_by_tableaux(la, x));
            }
}

TEST_CASE("products") {
    // Pieri: s_1 * s_{2,1} = s_{3,1} + s_{2,2} + s_{2,1,1}
    const Q prod = convert(schur<Rational>(Partition{1}) * schur<Rational>(Partition{2, 1}), Basis::Schur);
    Q expected(Basis::Schur);
    for (const Partition& p : {Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1}}) expected.add_term(p, 1);
    CHECK(prod == expected);
    // truncation is the minimum
    const Q a = omega_truncated(5), b = omega_truncated(3);
    CHECK((a * b).truncation() == 3);
}

TEST_CASE("plethysm examples") {
    CHECK(plethysm(power_sum<Rational>(Partition{2}), power_sum<Rational>(Partition{3}), kExact) ==
          power_sum<Rational>(Partition{6}));
    for (int n = 1; n <= 4; ++n) {
        Q one_plus_h1(Basis::Homogeneous);
        one_plus_h1.add_term(Partition(), 1);
        one_plus_h1.add_term(Partition{1}, 1);
        Q expected(Basis::PowerSum);
        expected.add_term(Partition(), 1);
        expected.add_term(Partition{n}, 1);
        CHECK(plethysm(power_sum<Rational>(Partition{n}), one_plus_h1, kExact) == expected);
    }
    Q h2h2 = convert(plethysm(complete<Rational>(Partition{2}), complete<Rational>(Partition{2}), kExact), Basis::Schur);
    Q expected(Basis::Schur);
    expected.add_term(Partition{4}, 1);
    expected.add_term(Partition{2, 2}, 1);
    CHECK(h2h2 == expected);
}

TEST_CASE("plethysm s_lambda[h_k] against monomial substitution") {
    std::mt19937 rng(5);
    for (int k = 1; k <= 3; ++k)
        for (int d = 0; d <= 3; ++d)
            for (const auto& la : partitions_of(d)) {
                if (d * k > 8) continue;
                const Q f = plethysm(schur<Rational>(la), convert(complete<Rational>(Partition{k}), Basis::PowerSum), kExact);
                for (int trial = 0; trial < 3; ++trial) {
                    std::vector<Rational> x;
                    for (int i = 0; i < 3; ++i) x.push_back(support::random_rational(rng));
                    CHECK(support::evaluate_power_sums(f, x) ==
                          support::schur_by_tableaux(la, degree_monomials(x, k)));
                }
            }
}

TEST_CASE("plethysm laws up to degree 6") {
    std::mt19937 rng(3);
    const int D = 6;
    for (int trial = 0; trial < 12; ++trial) {
        const Q f = support::random_series(rng, Basis::PowerSum, 3, kExact, true);
        const Q g = support::random_series(rng, Basis::Schur, 3, kExact, true);
        const Q h = support::random_series(rng, Basis::Homogeneous, 2, kExact, false);
        // (f + g)[h] = f[h] + g[h], (f g)[h] = f[h] g[h]
        CHECK(plethysm(f + g, h, D) == (plethysm(f, h, D) + plethysm(g, h, D)).with_truncation(D));
        CHECK(plethysm(f * g, h, D) == (plethysm(f, h, D) * plethysm(g, h, D)).with_truncation(D));
        // f[p_1] = f and p_1[h] = h
        CHECK(plethysm(f, power_sum<Rational>(Partition{1}), D) == convert(f, Basis::PowerSum).with_truncation(D));
        CHECK(plethysm(power_sum<Rational>(Partition{1}), h, D) == convert(h, Basis::PowerSum).with_truncation(D));
        // associativity f[g[h]] = (f[g])[h] with g without constant term
        const Q g0 = support::random_series(rng, Basis::PowerSum, 2, kExact, false);
        CHECK(plethysm(f, plethysm(g0, h, D), D) == plethysm(plethysm(f, g0, D), h, D));
    }
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; a * b <= 6; ++b) {
            CHECK(plethysm(power_sum<Rational>(Partition{a}), power_sum<Rational>(Partition{b}), D) ==
                  power_sum<Rational>(Partition{a * b}, D));
            // p_a[p_b[h]] = p_{ab}[h]
            const Q h = support::random_series(rng, Basis::Schur, 3, kExact, false);
            CHECK(plethysm(power_sum<Rational>(Partition{a}), plethysm(power_sum<Rational>(Partition{b}), h, D), D) ==
                  plethysm(power_sum<Rational>(Partition{a * b}), h, D));
        }
}

TEST_CASE("plethysm fixes cyclotomic scalars") {
    // p_2[zeta_4 p_1] = zeta_4 p_2, not zeta_4^2 p_2
    const CycloScalar i = CycloScalar::zeta_power(1, 4);
    const auto g = SymSeries<CycloScalar>::monomial(Basis::PowerSum, Partition{1}, i);
    const auto expected = SymSeries<CycloScalar>::monomial(Basis::PowerSum, Partition{2}, i);
    CHECK(plethysm(power_sum<CycloScalar>(Partition{2}), g, kExact) == expected);
}

TEST_CASE("constant term precondition") {
    Q one_plus_p1(Basis::PowerSum, 4);
    one_plus_p1.add_term(Partition(), 1);
    one_plus_p1.add_term(Partition{1}, 1);
    CHECK_THROWS(plethysm(omega_truncated(4), one_plus_p1, 4));
    CHECK_NOTHROW(plethysm(schur<Rational>(Partition{2}), one_plus_p1, 4));
}

TEST_CASE("truncated Omega") {
    CHECK(omega_truncated(0) == Q::monomial(Basis::Homogeneous, Partition(), 1, 0));
    Q o3(Basis::Homogeneous, 3);
    for (const Partition& p : {Partition(), Partition{1}, Partition{2}, Partition{3}}) o3.add_term(p, 1);
    CHECK(omega_truncated(3) == o3);
    CHECK(convert(omega_truncated(2), Basis::PowerSum) ==
          p_terms({{Partition(), 1}, {Partition{1}, 1}, {Partition{1, 1}, half(1)}, {Partition{2}, half(1)}}, 2));

    for (int D = 0; D <= 5; ++D) {
        const auto z0 = omega_zeta(0, 3, D);
        const Q omega = omega_truncated(D);
        for (const auto& [mu, c] : omega.terms()) CHECK(z0.coefficient(mu) == CycloScalar(c));
        CHECK(z0.terms().size() == omega.terms().size());
    }
    const auto alt = omega_zeta(1, 2, 3);
    for (int k = 0; k <= 3; ++k)
        CHECK(alt.coefficient(k ? Partition{k} : Partition()) == CycloScalar(Rational(k % 2 ? -1 : 1)));
    const auto four = omega_zeta(1, 4, 2);
    CHECK(four.coefficient(Partition()) == CycloScalar(1));
    CHECK(four.coefficient(Partition{1}) == CycloScalar::zeta_power(1, 4));
    CHECK(four.coefficient(Partition{2}) == CycloScalar(-1));
}

TEST_CASE("Schur coefficients") {
    CHECK(coefficient_of_schur(schur<Rational>(Partition{2, 1}), Partition{2, 1}) == 1);
    CHECK(coefficient_of_schur(complete<Rational>(Partition{2}), Partition{1, 1}) == 0);
    CHECK(coefficient_of_schur(power_sum<Rational>(Partition{1, 1}), Partition{2}) == 1);
}

TEST_CASE("truncation bookkeeping") {
    Q f(Basis::PowerSum, 2);
    f.add_term(Partition{3}, 1);
    CHECK(f.is_zero());
    CHECK_THROWS(Q(Basis::PowerSum, -1));
    const Q g = omega_truncated(4);
    CHECK(g.truncated(2) == omega_truncated(2));
    CHECK(g.min_degree() == 0);
    CHECK(g.max_degree() == 4);
}

TEST_CASE("JSON round trip") {
    std::mt19937 rng(9);
    for (Basis b : {Basis::PowerSum, Basis::Homogeneous, Basis::Schur})
        for (int t : {3, 5, kExact}) {
            const Q f = support::random_series(rng, b, 3, t, true);
            CHECK(rational_series_from_json(to_json(f)) == f);
        }
    const std::string text = to_json(Q::monomial(Basis::Schur, Partition{2, 1}, make_rational(-3, 4), 4));
    CHECK(text.find("\"basis\":\"s\"") != std::string::npos);
    CHECK(text.find("\"-3/4\"") != std::string::npos);
}
