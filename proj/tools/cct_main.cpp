// Command-line front end: validate facet files, compute Betti tables on both
// sides of the comparison map, and run the identity verification suites.
#include "cct/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

std::vector<std::string> split_checks(const std::string& list) {
    std::vector<std::string> out;
    std::istringstream in(list);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cochain-level comparison of simplicial and Hochschild "
                 "brace algebras"};
    app.require_subcommand(1);

    cct::RunConfig cfg;
    std::string field_token = "z101";
    std::string checks_list;
    bool full_complex = false;

    auto add_common = [&](CLI::App* cmd, bool with_verify_flags) {
        cmd->add_option("input", cfg.input_path, "facet file")->required();
        cmd->add_option("--field", field_token, "coefficient field: q or z<p>");
        cmd->add_option("--max-degree", cfg.max_degree, "top cohomological degree");
        cmd->add_flag("--full-complex", full_complex,
                      "use the full (non-normalized) chain basis");
        if (with_verify_flags) {
            cmd->add_option("--seed", cfg.seed, "random seed");
            cmd->add_option("--trials", cfg.trials, "trials per check");
            cmd->add_option("--max-args", cfg.max_args, "max brace arguments");
            cmd->add_option("--checks", checks_list,
                            "comma-separated subset of: bdga-simplicial,"
                            "bdga-hochschild,cct-chain,cct-cup,cct-brace");
            cmd->add_option("--dump", cfg.dump_path,
                            "write discrepancy cochains here on failure");
        }
    };

    add_common(app.add_subcommand("validate", "parse and report simplex counts"), false);
    add_common(app.add_subcommand("betti", "simplicial Betti table"), false);
    add_common(app.add_subcommand("hh-betti", "Hochschild Betti table"), false);
    add_common(app.add_subcommand("verify", "run identity check suites"), true);
    add_common(app.add_subcommand("compare", "both Betti tables + CCT verdict"), false);

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.field = cct::FieldSpec::parse(field_token);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    cfg.normalized = !full_complex;
    if (!checks_list.empty()) cfg.checks = split_checks(checks_list);

    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "validate") cfg.command = cct::RunConfig::Command::validate;
    else if (name == "betti") cfg.command = cct::RunConfig::Command::betti;
    else if (name == "hh-betti") cfg.command = cct::RunConfig::Command::hh_betti;
    else if (name == "verify") cfg.command = cct::RunConfig::Command::verify;
    else cfg.command = cct::RunConfig::Command::compare;

    const cct::RunResult result = cct::run(cfg);
    std::cout << result.out;
    std::cerr << result.err;
    return result.status;
}
