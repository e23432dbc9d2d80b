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

#ifndef WREATHLITT_PARTITIONS_HPP
#define WREATHLITT_PARTITIONS_HPP

#include <compare>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wreathlitt/exactnum.hpp"

namespace wreathlitt {

class SizeMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Integer partition: weakly decreasing positive parts. The empty
/// partition is the unique partition of 0.
class Partition {
   public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    // Sorts and drops zero parts; throws on negative parts.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    // m_r
    int multiplicity(int r) const;

    // Union of parts (the multiset merge), used for products p_a p_b = p_{a u b}.
    Partition merged(const Partition& other) const;
    // Every part multiplied by k.
    Partition stretched(int k) const;
    Partition conjugate() const;

    // Lexicographic on parts.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

   private:
    std::vector<int> parts_;
    int size_ = 0;
};

// "3,1,1"; empty partition prints as "".
std::string to_string(const Partition& p);
// Accepts "3,1,1", "[3,1,1]", "[]" or "".
Partition parse_partition(const std::string& text);

// Graded order: smaller size first, then lexicographically descending.
bool graded_revlex_less(const Partition& a, const Partition& b);

// All partitions of n, lexicographically descending: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);
// Partitions with size <= max_size and at most max_length parts, graded_revlex order.
std::vector<Partition> partitions_up_to(int max_size, int max_length = -1);
std::uint64_t partition_count(int n);

BigInt z_of(const Partition& lambda);
BigInt specht_dimension(const Partition& lambda);
BigInt factorial(int n);

/// Character table of S_n, rows indexed by lambda and columns by mu, both
/// in partitions_of(n) order.
class CharacterTable {
   public:
    CharacterTable(int n, std::vector<Partition> partitions, std::vector<std::int64_t> values);

    int n() const noexcept { return n_; }
    const std::vector<Partition>& partitions() const noexcept { return partitions_; }
    std::size_t index_of(const Partition& p) const;
    std::int64_t value(std::size_t lambda_index, std::size_t mu_index) const {
        return values_[lambda_index * partitions_.size() + mu_index];
    }
    std::int64_t value(const Partition& lambda, const Partition& mu) const {
        return value(index_of(lambda), index_of(mu));
    }
    const std::vector<std::int64_t>& values() const noexcept { return values_; }

   private:
    int n_;
    std::vector<Partition> partitions_;
    std::vector<std::int64_t> values_;
};

// Murnaghan-Nakayama evaluation of the table for S_n, using tables for
// smaller sizes. Does not touch the process-wide cache.
CharacterTable compute_character_table(int n);

// Memoized per n. Concurrent first calls may both compute; the first to
// publish wins and every caller sees the same table.
const CharacterTable& character_table(int n);
void warm_character_tables(int max_n);

// chi^lambda(mu). Throws SizeMismatch when |lambda| != |mu|.
std::int64_t sym_character(const Partition& lambda, const Partition& mu);

// Persisted cache: one JSON file per n under dir ("chartable_<n>.json").
// An unset directory disables persistence. Files that fail to parse or do
// not match the expected shape are ignored and recomputed.
void set_character_cache_dir(std::optional<std::filesystem::path> dir);
std::optional<std::filesystem::path> character_cache_dir();
std::string character_table_to_json(const CharacterTable& table);
std::optional<CharacterTable> character_table_from_json(const std::string& text, int n);

}  // namespace wreathlitt

#endif  // WREATHLITT_PARTITIONS_HPP
