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

#include "wreathlitt/branching.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "wreathlitt/parallel.hpp"

namespace wreathlitt {

void BranchingQuery::validate() const {
    if (lambda.length() > rho.size())
        throw HypothesisViolation("hypothesis l(lambda) <= |rho| violated: l(lambda) = " +
                                  std::to_string(lambda.length()) + " > |rho| = " + std::to_string(rho.size()));
}

SymSeries<Rational> residue_class_alphabet(int j, int m, int degree) {
    if (m < 1 || j < 0 || j >= m) throw std::invalid_argument("residue_class_alphabet: need 0 <= j < m");
    SymSeries<Rational> out(Basis::Homogeneous, degree);
    for (int k = j; k <= degree; k += m) out.add_term(k == 0 ? Partition() : Partition{k}, Rational(1));
    return out;
}

SymSeries<Rational> G_series(const WreathLabel& rho, int degree) {
    if (degree < 0) throw std::invalid_argument("G_series: degree must be non-negative");
    const int m = rho.order();
    SymSeries<Rational> product = SymSeries<Rational>::monomial(Basis::PowerSum, Partition(), Rational(1), degree);
    // Ascending j; factors with j != 0 have no constant term and raise the
    // minimum degree, so the running product stays small.
    for (int j = 0; j < m; ++j) {
        const Partition& mu = rho.part(j);
        if (mu.empty()) continue;
        const SymSeries<Rational> alphabet = convert(residue_class_alphabet(j, m, degree), Basis::PowerSum);
        product = product * plethysm(schur<Rational>(mu), alphabet, degree);
        if (product.is_zero()) break;
    }
    return product;
}

Multiplicity to_multiplicity(const Rational& value, const std::string& context) {
    if (value.get_den() != 1 || sgn(value) < 0 || !value.get_num().fits_slong_p())
        throw InternalInconsistency(context + ": multiplicity " + to_string(value) +
                                    " is not a non-negative integer");
    return value.get_num().get_si();
}

Multiplicity branching_coefficient(const BranchingQuery& q) {
    q.validate();
    const SymSeries<Rational> g = G_series(q.rho, q.lambda.size());
    return to_multiplicity(hall_pair(g, schur<Rational>(q.lambda)),
                           "d[" + to_string(q.rho) + "; " + to_string(q.lambda) + "]");
}

Multiplicity littlewood_coefficient(const Partition& mu, const Partition& lambda, int n) {
    if (mu.size() != n)
        throw HypothesisViolation("littlewood_coefficient: |mu| = " + std::to_string(mu.size()) +
                                  " differs from n = " + std::to_string(n));
    return branching_coefficient({WreathLabel(1, {mu}), lambda});
}

BranchingTable branching_table(int m, int n, int max_degree, int jobs) {
    if (m < 1) throw std::invalid_argument("branching_table: m must be positive");
    if (n < 1) throw std::invalid_argument("branching_table: n must be positive");
    if (max_degree < 0) throw std::invalid_argument("branching_table: max degree must be non-negative");
    BranchingTable table;
    table.m = m;
    table.n = n;
    table.max_degree = max_degree;
    table.labels = enumerate_phi(n, m);
    table.partitions = partitions_up_to(max_degree, n);
    table.cells.assign(table.labels.size() * table.partitions.size(), 0);

    warm_character_tables(std::max(n, max_degree));
    parallel_for(table.labels.size(), jobs, [&](std::size_t row) {
        const WreathLabel& rho = table.labels[row];
        const SymSeries<Rational> g = G_series(rho, max_degree);
        for (std::size_t col = 0; col < table.partitions.size(); ++col) {
            const Partition& lambda = table.partitions[col];
            table.cells[row * table.partitions.size() + col] = to_multiplicity(
                hall_pair(g, schur<Rational>(lambda)), "d[" + to_string(rho) + "; " + to_string(lambda) + "]");
        }
    });
    return table;
}

std::string table_to_json(const BranchingTable& table) {
    nlohmann::ordered_json j;
    j["m"] = table.m;
    j["n"] = table.n;
    j["max_degree"] = table.max_degree;
    auto& cells = j["cells"] = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < table.labels.size(); ++r)
        for (std::size_t c = 0; c < table.partitions.size(); ++c) {
            nlohmann::ordered_json cell;
            cell["rho"] = to_string(table.labels[r]);
            cell["lambda"] = to_string(table.partitions[c]);
            cell["d"] = table.at(r, c);
            cells.push_back(std::move(cell));
        }
    return j.dump(1) + "\n";
}

BranchingTable table_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    BranchingTable table;
    table.m = j.at("m").get<int>();
    table.n = j.at("n").get<int>();
    table.max_degree = j.at("max_degree").get<int>();
    std::map<WreathLabel, std::size_t> label_index;
    std::vector<std::pair<WreathLabel, Partition>> keys;
    std::vector<Multiplicity> values;
    for (const auto& cell : j.at("cells")) {
        WreathLabel rho = parse_wreath_label(cell.at("rho").get<std::string>(), table.m);
        Partition lambda = parse_partition(cell.at("lambda").get<std::string>());
        if (label_index.try_emplace(rho, table.labels.size()).second) table.labels.push_back(rho);
        if (std::find(table.partitions.begin(), table.partitions.end(), lambda) == table.partitions.end())
            table.partitions.push_back(lambda);
        keys.emplace_back(std::move(rho), std::move(lambda));
        values.push_back(cell.at("d").get<Multiplicity>());
    }
    table.cells.assign(table.labels.size() * table.partitions.size(), 0);
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const std::size_t r = label_index.at(keys[i].first);
        const auto c = static_cast<std::size_t>(
            std::find(table.partitions.begin(), table.partitions.end(), keys[i].second) - table.partitions.begin());
        table.cells[r * table.partitions.size() + c] = values[i];
    }
    return table;
}

std::string table_to_csv(const BranchingTable& table) {
    std::ostringstream os;
    os << "rho,lambda,d\n";
    for (std::size_t r = 0; r < table.labels.size(); ++r)
        for (std::size_t c = 0; c < table.partitions.size(); ++c)
            os << '"' << to_string(table.labels[r]) << "\",\"" << to_string(table.partitions[c]) << "\","
               << table.at(r, c) << '\n';
    return os.str();
}

std::string table_to_pretty(const BranchingTable& table) {
    auto label_text = [](const WreathLabel& rho) {
        const std::string s = to_string(rho);
        return s.empty() ? std::string("-") : s;
    };
    std::vector<std::string> headers;
    for (const auto& p : table.partitions) headers.push_back("(" + to_string(p) + ")");
    std::size_t first_width = 3;
    for (const auto& rho : table.labels) first_width = std::max(first_width, label_text(rho).size());

    std::ostringstream os;
    os << "m=" << table.m << " n=" << table.n << " max_degree=" << table.max_degree << '\n';
    os << std::left << std::setw(static_cast<int>(first_width)) << "rho";
    for (const auto& h : headers) os << "  " << std::right << std::setw(static_cast<int>(std::max<std::size_t>(h.size(), 1))) << h;
    os << '\n';
    for (std::size_t r = 0; r < table.labels.size(); ++r) {
        os << std::left << std::setw(static_cast<int>(first_width)) << label_text(table.labels[r]);
        for (std::size_t c = 0; c < table.partitions.size(); ++c)
            os << "  " << std::right << std::setw(static_cast<int>(headers[c].size())) << table.at(r, c);
        os << '\n';
    }
    return os.str();
}

}  // namespace wreathlitt
