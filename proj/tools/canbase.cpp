#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "canbase/canbase.hpp"

namespace {

unsigned default_workers() {
    if (const char* env = std::getenv("CANBASE_WORKERS")) {
        const long value = std::strtol(env, nullptr, 10);
        if (value > 0) return static_cast<unsigned>(value);
    }
    return 1;
}

struct cli_options {
    std::string dimvec;
    std::string emit;
    std::string format = "json";
    std::string out;
    unsigned workers = default_workers();
    std::uint64_t max_summands = canbase::default_max_summands;
};

void add_common_options(CLI::App* cmd, cli_options& opts) {
    cmd->add_option("--dimvec", opts.dimvec, "dimension vector, e.g. 1,2,1")->required();
    cmd->add_option("--emit", opts.emit, "comma-separated artifacts to emit");
    cmd->add_option("--format", opts.format, "json, pretty or latex")
        ->check(CLI::IsMember({"json", "pretty", "latex"}));
    cmd->add_option("--workers", opts.workers, "worker threads for the Weyl sums");
    cmd->add_option("--max-summands", opts.max_summands, "cap on Weyl summands per entry");
    cmd->add_option("--out", opts.out, "write the report to a file instead of stdout");
}

canbase::run_config make_config(const cli_options& opts, canbase::command_kind command) {
    canbase::run_config cfg;
    cfg.dimvec = canbase::dim_vector::parse(opts.dimvec);
    cfg.command = command;
    if (!opts.emit.empty()) cfg.emit = canbase::parse_emit(opts.emit);
    if (opts.format == "pretty")
        cfg.format = canbase::output_format::pretty;
    else if (opts.format == "latex")
        cfg.format = canbase::output_format::latex;
    else
        cfg.format = canbase::output_format::json;
    cfg.workers = opts.workers;
    cfg.max_summands = opts.max_summands;
    return cfg;
}

int deliver(const canbase::run_report& report, const std::string& out_path) {
    for (const auto& note : report.diagnostics) std::cerr << note << "\n";
    if (out_path.empty()) {
        std::cout << report.output;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open " << out_path << "\n";
            return 1;
        }
        out << report.output;
    }
    return report.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical bases and Hecke multiplicities for equioriented type A quivers"};
    app.require_subcommand(1);

    cli_options canbase_opts;
    CLI::App* canbase_cmd =
        app.add_subcommand("canbase", "compute Psi, L, D and the canonical-basis factors P, Q");
    add_common_options(canbase_cmd, canbase_opts);

    cli_options hecke_opts;
    CLI::App* hecke_cmd = app.add_subcommand(
        "hecke", "standard-module multiplicities and simple-module dimensions");
    add_common_options(hecke_cmd, hecke_opts);

    bool list_fixtures = false;
    CLI::App* selftest_cmd = app.add_subcommand("selftest", "verify the built-in reference fixtures");
    selftest_cmd->add_flag("--list", list_fixtures, "list fixture names without running them");

    CLI11_PARSE(app, argc, argv);

    try {
        if (canbase_cmd->parsed())
            return deliver(canbase::run_canbase(make_config(canbase_opts, canbase::command_kind::canbase)),
                           canbase_opts.out);
        if (hecke_cmd->parsed())
            return deliver(canbase::run_hecke(make_config(hecke_opts, canbase::command_kind::hecke)),
                           hecke_opts.out);
        return deliver(canbase::run_selftest(list_fixtures), "");
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
}
