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

#ifndef WREATHLITT_BRANCHING_HPP
#define WREATHLITT_BRANCHING_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wreathlitt/symfunc.hpp"
#include "wreathlitt/wreath.hpp"

namespace wreathlitt {

class HypothesisViolation : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// A branching coefficient that is not a non-negative integer; always a bug.
class InternalInconsistency : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

using Multiplicity = std::int64_t;

struct BranchingQuery {
    WreathLabel rho;
    Partition lambda;

    int m() const { return rho.order(); }
    // Throws HypothesisViolation unless l(lambda) <= |rho|.
    void validate() const;
};

/// prod_{0<=j<m} s_{rho(zeta^j)}[A_j], A_j = sum_{k>=0} h_{km+j}, to degree D.
/// Result is in PowerSum with rational coefficients.
SymSeries<Rational> G_series(const WreathLabel& rho, int degree);

// The plethysm argument A_j truncated at `degree`, in the h basis.
SymSeries<Rational> residue_class_alphabet(int j, int m, int degree);

// Converts an exact rational multiplicity, throwing InternalInconsistency
// when it is negative or has a denominator.
Multiplicity to_multiplicity(const Rational& value, const std::string& context);

Multiplicity branching_coefficient(const BranchingQuery& q);
Multiplicity littlewood_coefficient(const Partition& mu, const Partition& lambda, int n);

struct BranchingTable {
    int m = 1;
    int n = 0;
    int max_degree = 0;
    std::vector<WreathLabel> labels;    // enumerate_phi order
    std::vector<Partition> partitions;  // graded_revlex order, l <= n
    std::vector<Multiplicity> cells;    // row-major: labels x partitions

    Multiplicity at(std::size_t label_index, std::size_t partition_index) const {
        return cells[label_index * partitions.size() + partition_index];
    }
};

// jobs <= 0 uses the available hardware parallelism.
BranchingTable branching_table(int m, int n, int max_degree, int jobs = 1);

std::string table_to_json(const BranchingTable& table);
std::string table_to_csv(const BranchingTable& table);
std::string table_to_pretty(const BranchingTable& table);
BranchingTable table_from_json(const std::string& text);

}  // namespace wreathlitt

#endif  // WREATHLITT_BRANCHING_HPP
