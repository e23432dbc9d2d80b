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

#include "wreathlitt/partitions.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include <json.hpp>

namespace wreathlitt {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
    for (int p : parts)
        if (p < 0) throw std::invalid_argument("partition parts must be non-negative");
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    parts_ = std::move(parts);
    for (int p : parts_) size_ += p;
}

int Partition::multiplicity(int r) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), r));
}

Partition Partition::merged(const Partition& other) const {
    Partition out;
    out.parts_.resize(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), out.parts_.begin(),
               std::greater<>());
    out.size_ = size_ + other.size_;
    return out;
}

Partition Partition::stretched(int k) const {
    Partition out = *this;
    for (int& p : out.parts_) p *= k;
    out.size_ *= k;
    return out;
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.assign(static_cast<std::size_t>(parts_.front()), 0);
        for (int p : parts_)
            for (int c = 0; c < p; ++c) ++cols[static_cast<std::size_t>(c)];
    }
    return Partition(std::move(cols));
}

std::string to_string(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

Partition parse_partition(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (c != ' ' && c != '\t') text += c;
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') throw std::invalid_argument("unbalanced brackets in partition '" + raw + "'");
        text = text.substr(1, text.size() - 2);
    }
    std::vector<int> parts;
    if (text.empty()) return Partition();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
            throw std::invalid_argument("bad partition part '" + item + "' in '" + raw + "'");
        const int v = std::stoi(item);
        if (v <= 0) throw std::invalid_argument("partition parts must be positive in '" + raw + "'");
        parts.push_back(v);
    }
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
        throw std::invalid_argument("partition parts must be weakly decreasing in '" + raw + "'");
    return Partition(std::move(parts));
}

bool graded_revlex_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_size, int max_length) {
    std::vector<Partition> out;
    for (int k = 0; k <= max_size; ++k)
        for (auto& p : partitions_of(k))
            if (max_length < 0 || p.length() <= max_length) out.push_back(std::move(p));
    return out;
}

std::uint64_t partition_count(int n) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    counts[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int k = part; k <= n; ++k) counts[k] += counts[k - part];
    return counts[n];
}

BigInt factorial(int n) {
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

BigInt z_of(const Partition& lambda) {
    BigInt out = 1;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const auto mult = static_cast<unsigned long>(j - i);
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), mult);
        out *= factorial(static_cast<int>(mult)) * power;
        i = j;
    }
    return out;
}

BigInt specht_dimension(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    BigInt hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j) + (conj[j] - i) - 1;
    return factorial(lambda.size()) / hooks;
}

CharacterTable::CharacterTable(int n, std::vector<Partition> partitions, std::vector<std::int64_t> values)
    : n_(n), partitions_(std::move(partitions)), values_(std::move(values)) {
    if (values_.size() != partitions_.size() * partitions_.size())
        throw std::invalid_argument("character table shape mismatch");
}

std::size_t CharacterTable::index_of(const Partition& p) const {
    // partitions_ is lexicographically descending.
    auto it = std::lower_bound(partitions_.begin(), partitions_.end(), p, std::greater<>());
    if (it == partitions_.end() || *it != p)
        throw SizeMismatch("partition (" + to_string(p) + ") is not a partition of " + std::to_string(n_));
    return static_cast<std::size_t>(it - partitions_.begin());
}

namespace {

// Beta-set of lambda with exactly len beads: lambda_i + (len - 1 - i).
std::vector<int> beta_set(const Partition& lambda, int len) {
    std::vector<int> beads(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beads[i] = (i < lambda.length() ? lambda[i] : 0) + (len - 1 - i);
    return beads;
}

Partition from_beta_set(std::vector<int> beads) {
    std::sort(beads.begin(), beads.end(), std::greater<>());
    const int len = static_cast<int>(beads.size());
    std::vector<int> parts(beads.size());
    for (int i = 0; i < len; ++i) parts[i] = beads[i] - (len - 1 - i);
    return Partition(std::move(parts));
}

}  // namespace

CharacterTable compute_character_table(int n) {
    if (n < 0) throw std::invalid_argument("character table: n must be non-negative");
    std::vector<Partition> parts = partitions_of(n);
    const std::size_t count = parts.size();
    std::vector<std::int64_t> values(count * count, 0);
    if (n == 0) {
        values[0] = 1;
        return CharacterTable(0, std::move(parts), std::move(values));
    }
    for (std::size_t mi = 0; mi < count; ++mi) {
        const Partition& mu = parts[mi];
        // Remove the largest cycle first; the remainder indexes a smaller table.
        const int k = mu[0];
        const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
        const CharacterTable& smaller = character_table(n - k);
        const std::size_t rest_index = smaller.index_of(rest);
        for (std::size_t li = 0; li < count; ++li) {
            const Partition& lambda = parts[li];
            const int len = lambda.length();
            std::vector<int> beads = beta_set(lambda, len);
            std::int64_t acc = 0;
            for (int b = 0; b < len; ++b) {
                const int target = beads[b] - k;
                if (target < 0 || std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
                // Rim-hook height = beads strictly between target and beads[b].
                int between = 0;
                for (int c : beads)
                    if (c > target && c < beads[b]) ++between;
                std::vector<int> moved = beads;
                moved[b] = target;
                const Partition removed = from_beta_set(std::move(moved));
                const std::int64_t v = smaller.value(smaller.index_of(removed), rest_index);
                acc += (between % 2 == 0) ? v : -v;
            }
            values[li * count + mi] = acc;
        }
    }
    return CharacterTable(n, std::move(parts), std::move(values));
}

namespace {

struct TableCache {
    std::mutex mutex;
    std::map<int, std::unique_ptr<const CharacterTable>> tables;
    std::optional<std::filesystem::path> dir;
};

TableCache& table_cache() {
    static TableCache cache;
    return cache;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, int n) {
    return dir / ("chartable_" + std::to_string(n) + ".json");
}

// Row orthogonality, sum_mu (n!/z_mu) chi^a(mu) chi^b(mu) = n! delta_ab,
// and the identity column equal to the hook length dimensions.
bool is_consistent(const CharacterTable& table) {
    const auto& parts = table.partitions();
    const BigInt order = factorial(table.n());
    const std::size_t identity = parts.size() - 1;
    for (std::size_t a = 0; a < parts.size(); ++a)
        if (BigInt(static_cast<long>(table.value(a, identity))) != specht_dimension(parts[a])) return false;
    std::vector<BigInt> class_sizes;
    for (const auto& mu : parts) class_sizes.push_back(order / z_of(mu));
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a; b < parts.size(); ++b) {
            BigInt acc = 0;
            for (std::size_t k = 0; k < parts.size(); ++k)
                acc += class_sizes[k] * BigInt(static_cast<long>(table.value(a, k))) *
                       BigInt(static_cast<long>(table.value(b, k)));
            if (acc != (a == b ? order : BigInt(0))) return false;
        }
    return true;
}

std::optional<CharacterTable> load_cached(const std::filesystem::path& dir, int n) {
    std::ifstream in(cache_file(dir, n));
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    return character_table_from_json(ss.str(), n);
}

void store_cached(const std::filesystem::path& dir, const CharacterTable& table) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto target = cache_file(dir, table.n());
    // Write-then-rename keeps concurrent readers from seeing a partial file.
    auto tmp = target;
    tmp += ".tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(&table));
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << character_table_to_json(table);
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

const CharacterTable& character_table(int n) {
    TableCache& cache = table_cache();
    std::optional<std::filesystem::path> dir;
    {
        std::lock_guard lock(cache.mutex);
        if (auto it = cache.tables.find(n); it != cache.tables.end()) return *it->second;
        dir = cache.dir;
    }
    std::optional<CharacterTable> table;
    if (dir) table = load_cached(*dir, n);
    const bool from_disk = table.has_value();
    if (!table) table = compute_character_table(n);
    if (dir && !from_disk) store_cached(*dir, *table);
    std::lock_guard lock(cache.mutex);
    auto [it, inserted] = cache.tables.try_emplace(n, std::make_unique<const CharacterTable>(std::move(*table)));
    return *it->second;
}

void warm_character_tables(int max_n) {
    for (int n = 0; n <= max_n; ++n) character_table(n);
}

std::int64_t sym_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw SizeMismatch("sym_character: |lambda| = " + std::to_string(lambda.size()) +
                           " but |mu| = " + std::to_string(mu.size()));
    return character_table(lambda.size()).value(lambda, mu);
}

void set_character_cache_dir(std::optional<std::filesystem::path> dir) {
    TableCache& cache = table_cache();
    std::lock_guard lock(cache.mutex);
    cache.dir = std::move(dir);
    // Tables already in memory are exact regardless of where they came from.
}

std::optional<std::filesystem::path> character_cache_dir() {
    TableCache& cache = table_cache();
    std::lock_guard lock(cache.mutex);
    return cache.dir;
}

std::string character_table_to_json(const CharacterTable& table) {
    nlohmann::json j;
    j["n"] = table.n();
    auto& parts = j["partitions"] = nlohmann::json::array();
    for (const auto& p : table.partitions()) parts.push_back(p.parts());
    const std::size_t count = table.partitions().size();
    auto& rows = j["values"] = nlohmann::json::array();
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<std::int64_t> row(table.values().begin() + static_cast<std::ptrdiff_t>(i * count),
                                      table.values().begin() + static_cast<std::ptrdiff_t>((i + 1) * count));
        rows.push_back(std::move(row));
    }
    return j.dump();
}

std::optional<CharacterTable> character_table_from_json(const std::string& text, int n) {
    try {
        const auto j = nlohmann::json::parse(text);
        if (j.at("n").get<int>() != n) return std::nullopt;
        std::vector<Partition> parts;
        for (const auto& p : j.at("partitions")) parts.emplace_back(p.get<std::vector<int>>());
        if (parts != partitions_of(n)) return std::nullopt;
        std::vector<std::int64_t> values;
        for (const auto& row : j.at("values")) {
            auto r = row.get<std::vector<std::int64_t>>();
            if (r.size() != parts.size()) return std::nullopt;
            values.insert(values.end(), r.begin(), r.end());
        }
        if (values.size() != parts.size() * parts.size()) return std::nullopt;
        CharacterTable table(n, std::move(parts), std::move(values));
        if (!is_consistent(table)) return std::nullopt;
        return table;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace wreathlitt
