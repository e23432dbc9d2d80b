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

// wreathlitt: branching coefficients from GL_n to mu_m wr S_n.
//
//   wreathlitt coeff --m 2 --rho "0:1" --lambda "2"
//   wreathlitt table --m 2 --n 2 --max-deg 2 --format csv
//   wreathlitt verify --m 2 --n 3 --max-deg 4
//   wreathlitt identities --m 3 --dx 3 --dy 4
//
// Exit codes: 0 success, 1 usage or parse error, 2 verification mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wreathlitt/branching.hpp"
#include "wreathlitt/oracle.hpp"

namespace {

using namespace wreathlitt;

constexpr int kUsage = 1;
constexpr int kMismatch = 2;

struct Options {
    int m = 1;
    int n = 1;
    int max_degree = 0;
    int dx = 3;
    int dy = 4;
    std::string rho;
    std::string lambda;
    std::string format = "json";
    int jobs = 0;
    std::string cache_dir;
    std::string dump;
    bool inject_fault = false;
};

void configure_cache(const Options& opt) {
    if (const char* env = std::getenv("WREATHLITT_CACHE_DIR"); env && *env)
        set_character_cache_dir(std::filesystem::path(env));
    else if (!opt.cache_dir.empty())
        set_character_cache_dir(std::filesystem::path(opt.cache_dir));
}

void write_dump(const Options& opt) {
    if (opt.dump.empty()) return;
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& rho : enumerate_phi(opt.n, opt.m)) {
        nlohmann::ordered_json entry;
        entry["rho"] = to_string(rho);
        entry["G"] = nlohmann::ordered_json::parse(to_json(G_series(rho, opt.max_degree)));
        out.push_back(std::move(entry));
    }
    std::ofstream file(opt.dump);
    if (!file) throw std::runtime_error("cannot write dump file " + opt.dump);
    file << out.dump(1) << '\n';
}

int report_outcome(const VerificationReport& report) {
    std::cout << report.to_json();
    if (report.passed()) return 0;
    for (const auto& check : report.checks)
        if (!check.passed && check.counterexample) {
            const auto& c = *check.counterexample;
            std::cerr << "mismatch in " << check.name << ": rho=" << c.rho << " lambda=" << c.lambda
                      << " expected=" << c.expected << " actual=" << c.actual << " (" << c.detail << ")\n";
            break;
        }
    return kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Branching coefficients from GL_n to the wreath product mu_m wr S_n"};
    app.require_subcommand(1);
    Options opt;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--m", opt.m, "order of the cyclic group mu_m")->check(CLI::PositiveNumber);
        sub->add_option("--jobs", opt.jobs, "worker threads (default: all cores)");
        sub->add_option("--cache-dir", opt.cache_dir, "character table cache (WREATHLITT_CACHE_DIR overrides)");
    };

    auto* coeff = app.add_subcommand("coeff", "print one branching coefficient d[rho; lambda]");
    common(coeff);
    coeff->add_option("--rho", opt.rho, "wreath label, e.g. \"0:2,1;1:1\"")->required();
    coeff->add_option("--lambda", opt.lambda, "partition, e.g. \"2,1\"")->required();

    auto* table = app.add_subcommand("table", "all d[rho; lambda] with |rho| = n, |lambda| <= max-deg");
    common(table);
    table->add_option("--n", opt.n)->required()->check(CLI::PositiveNumber);
    table->add_option("--max-deg", opt.max_degree)->required()->check(CLI::NonNegativeNumber);
    table->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv", "pretty"}));

    auto* verify = app.add_subcommand("verify", "cross-check the main formula against the oracles");
    common(verify);
    verify->add_option("--n", opt.n)->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--max-deg", opt.max_degree)->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--dump", opt.dump, "write every G_rho as SymSeries JSON to this file");
    verify->add_flag("--inject-fault", opt.inject_fault)->group("");

    auto* identities = app.add_subcommand("identities", "truncated checks of the generating-function identities");
    common(identities);
    identities->add_option("--dx", opt.dx, "X-side degree bound")->check(CLI::NonNegativeNumber);
    identities->add_option("--dy", opt.dy, "Y-side degree bound")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        configure_cache(opt);
        if (*coeff) {
            const BranchingQuery q{parse_wreath_label(opt.rho, opt.m), parse_partition(opt.lambda)};
            std::cout << branching_coefficient(q) << '\n';
        } else if (*table) {
            const BranchingTable t = branching_table(opt.m, opt.n, opt.max_degree, opt.jobs);
            if (opt.format == "csv") std::cout << table_to_csv(t);
            else if (opt.format == "pretty") std::cout << table_to_pretty(t);
            else std::cout << table_to_json(t);
        } else if (*verify) {
            write_dump(opt);
            FaultInjection fault;
            fault.flip_character = opt.inject_fault;
            return report_outcome(verify_branching(opt.m, opt.n, opt.max_degree, opt.jobs, fault));
        } else if (*identities) {
            return report_outcome(verify_identities(opt.m, opt.dx, opt.dy, opt.jobs));
        }
    } catch (const InternalInconsistency& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return 0;
}
