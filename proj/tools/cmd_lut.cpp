#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "meb/booster.hpp"
#include "meb/errors.hpp"
#include "meb/lut_io.hpp"

namespace {

struct BuildOpts {
    std::string out;
    std::size_t t_in = 0;
    std::size_t t_out = 0;
    double alpha = 16.0;
    double w1 = 0.4;
    double w2 = 0.05;
    std::string role = "fused";
};

void run_build(const BuildOpts& opts) {
    const meb::MagnifyParams params(opts.alpha, opts.w1, opts.w2);
    meb::OperatorMatrix op = [&] {
        if (opts.role == "magnify") {
            if (opts.t_out != opts.t_in) {
                throw meb::ValidationError("a magnify operator needs t-out == t-in");
            }
            return meb::magnification_operator(opts.t_in, params);
        }
        if (opts.role == "interpolate") {
            return meb::interpolation_operator(opts.t_in, opts.t_out);
        }
        return meb::fused_operator(opts.t_in, opts.t_out, params);
    }();
    meb::write_lut(op, opts.out);
    std::cout << "wrote " << opts.role << " operator " << op.t_in << "x" << op.t_out
              << " to " << opts.out << "\n";
}

void run_dump(const std::string& file) {
    const meb::OperatorMatrix op = meb::read_lut(file);
    char buf[64];
    std::cout << "role: " << meb::to_string(op.role) << "\n";
    std::cout << "t_in: " << op.t_in << "\n";
    std::cout << "t_out: " << op.t_out << "\n";
    std::snprintf(buf, sizeof(buf), "alpha: %.17g\n", op.alpha);
    std::cout << buf;
    std::snprintf(buf, sizeof(buf), "w1: %.17g\n", op.w1);
    std::cout << buf;
    std::snprintf(buf, sizeof(buf), "w2: %.17g\n", op.w2);
    std::cout << buf;
    std::cout << "column sums:\n";
    for (std::size_t c = 0; c < op.t_out; ++c) {
        double sum = 0.0;
        for (std::size_t r = 0; r < op.t_in; ++r) sum += op.matrix(r, c);
        std::snprintf(buf, sizeof(buf), "%.9f\n", sum);
        std::cout << buf;
    }
}

}  // namespace

void register_lut(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand("lut", "Build or inspect operator files");
    cmd->require_subcommand(1);

    auto build_opts = std::make_shared<BuildOpts>();
    CLI::App* build = cmd->add_subcommand("build", "Precompute an operator and save it");
    build->add_option("--out", build_opts->out, "Destination file")->required();
    build->add_option("--t-in", build_opts->t_in, "Input frame count")->required();
    build->add_option("--t-out", build_opts->t_out, "Output frame count")->required();
    build->add_option("--alpha", build_opts->alpha, "Magnification factor");
    build->add_option("--w1", build_opts->w1, "Fast smoother weight");
    build->add_option("--w2", build_opts->w2, "Slow smoother weight");
    build->add_option("--role", build_opts->role, "Operator kind")
        ->check(CLI::IsMember({"fused", "magnify", "interpolate"}));
    build->callback([build_opts] { run_build(*build_opts); });

    auto dump_file = std::make_shared<std::string>();
    CLI::App* dump = cmd->add_subcommand("dump", "Print an operator file's header and column sums");
    dump->add_option("--file", *dump_file, "Operator file to read")->required();
    dump->callback([dump_file] { run_dump(*dump_file); });
}
