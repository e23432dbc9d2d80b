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

#ifndef WREATHLITT_ORACLE_HPP
#define WREATHLITT_ORACLE_HPP

// Independent routes to the branching coefficients and truncated checks of
// the generating-function identities behind the plethystic formula.
//
//   path A: pairing of the restriction's Frobenius characteristic with the
//           conjugated irreducible characteristic, in the wreath ring;
//   path B: the class-function inner product, summed class by class;
//   path C: floating-point brute force over explicit monomial matrices.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "wreathlitt/branching.hpp"
#include "wreathlitt/wreath.hpp"

namespace wreathlitt {

struct Counterexample {
    std::string rho;
    std::string lambda;
    std::string expected;
    std::string actual;
    std::string detail;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    double seconds = 0;
    std::optional<Counterexample> counterexample;

    // Records a failure; only the first counterexample is kept.
    void fail(Counterexample c);
};

struct VerificationReport {
    std::string scope;  // e.g. "m=2 n=3 max_degree=4"
    std::vector<CheckResult> checks;

    bool passed() const;
    std::string to_json() const;
};

// Test hook for the verification harness: negates chi_rho(identity class)
// for the first label of Phi_n inside path B.
struct FaultInjection {
    bool flip_character = false;
};

// sum_{rho in Phi_n} s_lambda(Xi_rho)/Z_rho P_rho. Requires l(lambda) <= n.
WreathSeries restriction_frobenius(const Partition& lambda, int n, int m);

Multiplicity oracle_pairing_coefficient(const BranchingQuery& q);
Multiplicity oracle_character_average(const BranchingQuery& q);

struct NumericCheck {
    bool passed = false;
    std::complex<double> numeric;
    Multiplicity exact = 0;
    double error = 0;
};

inline constexpr double kNumericTolerance = 1e-9;

// Averages over all m^n n! monomial matrices; m <= 4, n <= 3.
NumericCheck numeric_matrix_check(const BranchingQuery& q);

CheckResult kernel_identity_check(int m, int dx, int dy);
CheckResult restriction_formula_check(const Partition& lambda, int m, int n);
CheckResult alphabet_transform_check(int m, int degree);
CheckResult reproducing_kernel_check(int m, int degree);
CheckResult substitution_lemma_check(int m, int n, int degree);
CheckResult g_series_dual_check(int m, int n, int degree);

// Triple agreement, integrality, dimension sums and (for m <= 4, n <= 3)
// numeric brute force over all rho in Phi_n and l(lambda) <= n, |lambda| <= D.
VerificationReport verify_branching(int m, int n, int max_degree, int jobs = 1, FaultInjection fault = {});

// The identity checks above with X-side bound dx and Y-side bound dy.
VerificationReport verify_identities(int m, int dx, int dy, int jobs = 1);

}  // namespace wreathlitt

#endif  // WREATHLITT_ORACLE_HPP
