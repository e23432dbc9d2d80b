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

// Acceptance run: one PASS/FAIL line per criterion.
//   usage: acceptance <path to wreathlitt binary>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include <sys/wait.h>

#include "support.hpp"
#include "wreathlitt/oracle.hpp"

using namespace wreathlitt;

namespace {

struct Outcome {
    bool passed = true;
    long cases = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what) {
        ++cases;
        if (!ok && passed) first_failure = what;
        passed = passed && ok;
    }
};

const std::vector<std::pair<int, int>> kMainScope = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 1}, {2, 2},
                                                     {2, 3}, {3, 1}, {3, 2}, {4, 1}, {4, 2}};

std::string cell(const WreathLabel& rho, const Partition& la) {
    return "m=" + std::to_string(rho.order()) + " rho=" + to_string(rho) + " lambda=(" + to_string(la) + ")";
}

Outcome main_theorem() {
    Outcome out;
    for (const auto& [m, n] : kMainScope)
        for (const auto& rho : enumerate_phi(n, m))
            for (const auto& la : partitions_up_to(n + 2, n)) {
                const BranchingQuery q{rho, la};
                try {
                    const Multiplicity d = branching_coefficient(q);
                    const Multiplicity a = oracle_pairing_coefficient(q);
                    const Multiplicity b = oracle_character_average(q);
                    out.check(d == a && d == b, cell(rho, la) + ": main " + std::to_string(d) + ", pairing " +
                                                    std::to_string(a) + ", average " + std::to_string(b));
                } catch (const std::exception& e) {
                    out.check(false, cell(rho, la) + ": " + e.what());
                }
            }
    return out;
}

Outcome littlewood() {
    Outcome out;
    for (int n = 2; n <= 5; ++n)
        for (const auto& mu : partitions_of(n)) {
            const Multiplicity want = (mu == Partition{n} || mu == Partition{n - 1, 1}) ? 1 : 0;
            const Multiplicity got = littlewood_coefficient(mu, Partition{1}, n);
            out.check(got == want, "V^(1), n=" + std::to_string(n) + ", mu=(" + to_string(mu) + "): " +
                                       std::to_string(got));
        }
    for (int n = 2; n <= 4; ++n) {
        const Partition column(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (const auto& mu : partitions_of(n)) {
            const Multiplicity want = mu == column ? 1 : 0;
            const Multiplicity got = littlewood_coefficient(mu, column, n);
            out.check(got == want, "V^(1^n), n=" + std::to_string(n) + ", mu=(" + to_string(mu) + "): " +
                                       std::to_string(got));
        }
    }
    return out;
}

Outcome dimension_sums() {
    Outcome out;
    for (const auto& [m, n] : kMainScope) {
        const BranchingTable t = branching_table(m, n, n + 2, 0);
        for (std::size_t c = 0; c < t.partitions.size(); ++c) {
            BigInt total = 0;
            for (std::size_t r = 0; r < t.labels.size(); ++r)
                total += BigInt(static_cast<long>(t.at(r, c))) * irrep_dimension(t.labels[r]);
            const BigInt want = support::hook_content_dimension(t.partitions[c], n);
            const Rational at_identity = schur_at_eigenvalues(t.partitions[c], identity_label(n, m)).as_rational();
            out.check(total == want && Rational(want) == at_identity,
                      "m=" + std::to_string(m) + " n=" + std::to_string(n) + " lambda=(" + to_string(t.partitions[c]) +
                          "): " + to_string(total) + " vs " + to_string(want));
        }
    }
    return out;
}

void absorb(Outcome& out, const CheckResult& r, const std::string& where) {
    out.cases += static_cast<long>(r.cases) - 1;
    std::string what = r.name + " " + where;
    if (r.counterexample)
        what += ": rho=" + r.counterexample->rho + " lambda=" + r.counterexample->lambda + " expected " +
                r.counterexample->expected + " got " + r.counterexample->actual;
    out.check(r.passed && r.cases > 0, what);
}

Outcome identity_suite() {
    Outcome out;
    for (int m = 1; m <= 3; ++m) {
        const std::string at = "m=" + std::to_string(m);
        absorb(out, kernel_identity_check(m, 3, 4), at);
        for (int n = 1; n <= 3; ++n) {
            for (const auto& la : partitions_up_to(3, n))
                absorb(out, restriction_formula_check(la, m, n), at + " n=" + std::to_string(n) + " (" + to_string(la) + ")");
            absorb(out, substitution_lemma_check(m, n, 4), at + " n=" + std::to_string(n));
            absorb(out, g_series_dual_check(m, n, 5), at + " n=" + std::to_string(n));
        }
        absorb(out, reproducing_kernel_check(m, 3), at);
    }
    for (int m = 1; m <= 6; ++m) absorb(out, alphabet_transform_check(m, 12), "m=" + std::to_string(m));
    return out;
}

Outcome numeric_brute_force() {
    Outcome out;
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 3; ++n)
            for (const auto& rho : enumerate_phi(n, m))
                for (const auto& la : partitions_up_to(4, n)) {
                    const NumericCheck c = numeric_matrix_check({rho, la});
                    std::ostringstream what;
                    what << cell(rho, la) << ": numeric " << c.numeric << " exact " << c.exact << " error " << c.error;
                    out.check(c.passed, what.str());
                }
    return out;
}

Outcome kernel_properties() {
    Outcome out;
    const Basis bases[] = {Basis::PowerSum, Basis::Homogeneous, Basis::Schur};
    for (int d = 0; d <= 8; ++d)
        for (const auto& la : partitions_of(d))
            for (Basis from : bases)
                for (Basis to : bases) {
                    const auto f = SymSeries<Rational>::monomial(from, la);
                    out.check(convert(convert(f, to), from) == f,
                              std::string("round trip ") + basis_letter(from) + "->" + basis_letter(to) + " (" +
                                  to_string(la) + ")");
                }
    for (int d = 0; d <= 7; ++d)
        for (const auto& a : partitions_of(d))
            for (const auto& b : partitions_of(d))
                out.check(hall_pair(schur<Rational>(a), schur<Rational>(b)) == (a == b ? 1 : 0),
                          "<s_" + to_string(a) + ", s_" + to_string(b) + ">");

    std::mt19937 rng(2026);
    const int D = 6;
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = support::random_series(rng, Basis::Schur, 3, kExact, true);
        const auto g = support::random_series(rng, Basis::PowerSum, 3, kExact, true);
        const auto h = support::random_series(rng, Basis::Homogeneous, 3, kExact, false);
        out.check(plethysm(f + g, h, D) == (plethysm(f, h, D) + plethysm(g, h, D)).with_truncation(D),
                  "additivity trial " + std::to_string(trial));
        out.check(plethysm(f * g, h, D) == plethysm(f, h, D) * plethysm(g, h, D),
                  "multiplicativity trial " + std::to_string(trial));
    }
    for (int a = 1; a <= D; ++a)
        for (int b = 1; a * b <= D; ++b) {
            const auto pa = power_sum<Rational>(Partition{a});
            const auto pb = power_sum<Rational>(Partition{b});
            out.check(plethysm(pa, pb, D) == power_sum<Rational>(Partition{a * b}, D),
                      "p_" + std::to_string(a) + "[p_" + std::to_string(b) + "]");
            const auto h = support::random_series(rng, Basis::Schur, 3, kExact, false);
            out.check(plethysm(pa, plethysm(pb, h, D), D) == plethysm(power_sum<Rational>(Partition{a * b}), h, D),
                      "p_" + std::to_string(a) + "[p_" + std::to_string(b) + "[h]]");
        }

    for (int n = 0; n <= 7; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& a : parts)
            for (const auto& b : parts) {
                Rational row = 0;
                for (const auto& mu : parts)
                    row += Rational(sym_character(a, mu) * sym_character(b, mu)) / Rational(z_of(mu));
                out.check(row == (a == b ? 1 : 0), "S_" + std::to_string(n) + " rows " + to_string(a) + "/" + to_string(b));
            }
    }
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) {
            const auto labels = enumerate_phi(n, m);
            for (const auto& rho : labels)
                for (const auto& gamma : labels) {
                    CycloScalar row(Rational(0), m);
                    for (const auto& sigma : labels)
                        row += wreath_character(rho, sigma) * wreath_character(gamma, sigma).conj() /
                               CycloScalar(Rational(Z_of(sigma)));
                    out.check(row == CycloScalar(Rational(rho == gamma ? 1 : 0), m),
                              "wreath m=" + std::to_string(m) + " rows " + to_string(rho) + "/" + to_string(gamma));
                }
        }
    return out;
}

std::pair<int, std::string> run(const std::string& command) {
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {-1, ""};
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

Outcome determinism(const std::string& cli) {
    Outcome out;
    const char* scopes[] = {"--m 3 --n 3 --max-deg 5", "--m 2 --n 4 --max-deg 6", "--m 4 --n 2 --max-deg 4"};
    for (const char* scope : scopes)
        for (const char* format : {"json", "csv", "pretty"}) {
            const std::string base = cli + " table " + scope + " --format " + format;
            const auto [code1, serial] = run(base + " --jobs 1");
            const auto [code8, parallel] = run(base + " --jobs 8");
            const auto [code8b, again] = run(base + " --jobs 8");
            out.check(code1 == 0 && code8 == 0 && code8b == 0 && !serial.empty() && serial == parallel &&
                          parallel == again,
                      std::string(scope) + " " + format);
        }
    return out;
}

template <class Fn>
bool report(int number, const std::string& name, Fn&& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.check(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d [PRIMARY] %-34s %s  (%ld cases, %.2fs)%s%s\n", number, name.c_str(),
                out.passed ? "PASS" : "FAIL", out.cases, seconds, out.passed ? "" : "  first failure: ",
                out.first_failure.c_str());
    std::fflush(stdout);
    return out.passed;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path to wreathlitt binary>\n";
        return 1;
    }
    const std::string cli = argv[1];
    bool ok = true;
    ok &= report(1, "main theorem triple agreement", main_theorem);
    ok &= report(2, "Littlewood classical decompositions", littlewood);
    ok &= report(3, "dimension sums", dimension_sums);
    ok &= report(4, "identity suite", identity_suite);
    ok &= report(5, "numeric matrix brute force", numeric_brute_force);
    ok &= report(6, "symmetric-function kernel", kernel_properties);
    ok &= report(7, "table determinism across --jobs", [&] { return determinism(cli); });
    return ok ? 0 : 1;
}
