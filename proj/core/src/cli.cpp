// Copyright 2026 The quditconv developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quditconv/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "quditconv/encoder.hpp"
#include "quditconv/errors.hpp"
#include "quditconv/report.hpp"
#include "quditconv/search.hpp"
#include "quditconv/verify.hpp"

namespace qconv {

namespace {

void env_override(const char* name, uint64_t& target) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') {
        return;
    }
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(raw, &end, 10);
    if (end != nullptr && *end == '\0') {
        target = parsed;
    }
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return in.good() || in.eof();
}

// Empty path means stdout.
bool emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return bool(std::cout);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        return false;
    }
    out << text;
    out.flush();
    return bool(out);
}

int cmd_analyze(const std::string& encoder_path, const AnalysisBudgets& budgets,
                const std::string& out_path) {
    std::string text;
    if (!read_file(encoder_path, text)) {
        std::cerr << "error: cannot read '" << encoder_path << "'\n";
        return kExitIo;
    }
    Classification result;
    std::string doc;
    try {
        SymplecticEncoder encoder = deserialize(text);
        StateDiagram diagram(std::move(encoder));
        result = classify(diagram, budgets);
        doc = classification_report(diagram, result);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!emit(out_path, doc)) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, const std::vector<uint32_t>& primes,
               uint64_t trials, uint64_t seed) {
    SuiteResult result;
    try {
        result = run_suite(suite, primes, trials, seed);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cout << suite_report(result, primes, trials, seed);
    return result.passed() ? kExitOk : kExitNoWitness;
}

int cmd_search(const SearchConfig& config, const std::string& out_path) {
    SearchResult result;
    std::string doc;
    try {
        result = run_search(config);
        doc = search_report(config, result);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!emit(out_path, doc)) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return kExitIo;
    }
    return result.witnesses.empty() ? kExitNoWitness : kExitOk;
}

std::vector<uint32_t> parse_prime_list(const std::string& csv) {
    std::vector<uint32_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used, 10);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) {
            throw ValidationError("bad prime list entry '" + item + "'");
        }
        out.push_back(static_cast<uint32_t>(v));
    }
    if (out.empty()) {
        throw ValidationError("empty prime list");
    }
    return out;
}

}  // namespace

AnalysisBudgets budgets_from_env(AnalysisBudgets base) {
    uint64_t max_len = base.max_len;
    env_override("QUDITCONV_MAX_LEN", max_len);
    base.max_len = static_cast<size_t>(max_len);
    env_override("QUDITCONV_REPETITION_BUDGET", base.repetition_budget);
    env_override("QUDITCONV_ENUM_BUDGET", base.enum_budget);
    return base;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Qudit convolutional encoder analysis toolkit"};
    app.require_subcommand(1);

    // analyze
    std::string encoder_path;
    uint64_t opt_max_len = 0;
    std::string analyze_out;
    CLI::App* analyze = app.add_subcommand("analyze", "Classify one encoder file");
    analyze->add_option("--encoder", encoder_path, "Encoder description file")
        ->required();
    analyze->add_option("--max-len", opt_max_len, "Standard-path length bound");
    analyze->add_option("--out", analyze_out, "Report path (default stdout)");

    // verify
    std::string suite;
    std::string prime_csv = "2,3,5";
    uint64_t trials = 1000;
    uint64_t verify_seed = 20260801;
    CLI::App* verify = app.add_subcommand("verify", "Run a property suite");
    verify->add_option("--suite", suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--p", prime_csv, "Comma-separated prime list");
    verify->add_option("--trials", trials, "Trials per prime");
    verify->add_option("--seed", verify_seed, "Master seed");

    // search
    SearchConfig config;
    uint32_t s_p = 0;
    uint64_t s_m = 0;
    uint64_t s_n = 0;
    uint64_t s_k = 0;
    bool exhaustive = false;
    uint64_t samples = 0;
    uint64_t search_seed = 0;
    uint32_t gates = 20;
    std::string target = "recursive-noncatastrophic";
    uint64_t workers = 1;
    uint64_t search_max_len = 0;
    std::string search_out;
    CLI::App* search = app.add_subcommand("search", "Scan an encoder space");
    search->add_option("--p", s_p, "Prime modulus")->required();
    search->add_option("--m", s_m, "Memory qudits")->required();
    search->add_option("--n", s_n, "Physical qudits per frame")->required();
    search->add_option("--k", s_k, "Logical qudits per frame")->required();
    search->add_flag("--exhaustive", exhaustive, "Enumerate the whole group");
    search->add_option("--samples", samples, "Number of sampled encoders");
    search->add_option("--seed", search_seed, "Sampling seed");
    search->add_option("--gates", gates, "Gates per sampled encoder");
    search->add_option("--target", target, "Witness predicate")
        ->check(CLI::IsMember(
            {"recursive-noncatastrophic", "catastrophic", "recursive"}));
    search->add_option("--workers", workers, "Worker thread count");
    search->add_option("--max-len", search_max_len, "Standard-path length bound");
    search->add_option("--out", search_out, "Report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (analyze->parsed()) {
        AnalysisBudgets budgets = budgets_from_env();
        if (opt_max_len > 0) {
            budgets.max_len = static_cast<size_t>(opt_max_len);
        }
        return cmd_analyze(encoder_path, budgets, analyze_out);
    }

    if (verify->parsed()) {
        std::vector<uint32_t> primes;
        try {
            primes = parse_prime_list(prime_csv);
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        return cmd_verify(suite, primes, trials, verify_seed);
    }

    // search
    try {
        config.params = CodeParams(s_p, s_m, s_n, s_k);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (exhaustive == (samples > 0)) {
        std::cerr << "error: choose exactly one of --exhaustive or --samples N\n";
        return kExitUsage;
    }
    config.mode = exhaustive ? SearchMode::exhaustive : SearchMode::sampled;
    config.sample_count = samples;
    config.seed = search_seed;
    config.gate_count = gates;
    if (target == "catastrophic") {
        config.target = SearchTarget::catastrophic;
    } else if (target == "recursive") {
        config.target = SearchTarget::recursive;
    } else {
        config.target = SearchTarget::recursive_noncatastrophic;
    }
    config.worker_count = workers;
    config.budgets = budgets_from_env();
    if (search_max_len > 0) {
        config.budgets.max_len = static_cast<size_t>(search_max_len);
    }
    return cmd_search(config, search_out);
}

}  // namespace qconv
