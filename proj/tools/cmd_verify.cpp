#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "meb/verify.hpp"

namespace {

struct VerifyOpts {
    std::uint64_t seed = 42;
    int threads = 1;
    std::string lut;
};

void run(const VerifyOpts& opts) {
    std::vector<meb::SuiteResult> results = meb::run_all_suites(opts.seed, opts.threads);
    if (!opts.lut.empty()) results.push_back(meb::lut_column_sum_suite(opts.lut));

    char line[128];
    std::snprintf(line, sizeof(line), "%-24s %6s  %s\n", "suite", "cases", "result");
    std::cout << line;
    std::size_t failures = 0;
    for (const auto& r : results) {
        std::snprintf(line, sizeof(line), "%-24s %6zu  %s\n", r.name.c_str(), r.cases,
                      r.passed ? "pass" : "fail");
        std::cout << line;
        if (!r.passed) {
            ++failures;
            std::cout << "  " << r.detail << "\n";
        }
    }
    if (failures == 0) {
        std::cout << "all suites passed\n";
    } else {
        std::cout << failures << " suite" << (failures == 1 ? "" : "s") << " failed\n";
        throw ExitFailure{1};
    }
}

}  // namespace

void register_verify(CLI::App& app) {
    auto opts = std::make_shared<VerifyOpts>();
    CLI::App* cmd = app.add_subcommand(
        "verify", "Run the randomized invariant suites and report pass/fail");
    cmd->add_option("--seed", opts->seed, "Base seed for randomized instances");
    cmd->add_option("--threads", opts->threads, "Worker threads for applying operators");
    cmd->add_option("--lut", opts->lut, "Also check column sums of this operator file");
    cmd->callback([opts] { run(*opts); });
}
