#include "cct/cli.hpp"

#include "cct/cohomology.hpp"
#include "cct/comparison.hpp"
#include "cct/relations.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cct {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct DumpSink {
    std::string text;

    void record(const std::string& check, const std::optional<Cochain>& disc) {
        if (!disc.has_value()) return;
        text += "# CHECK " + check + "\n" + disc->dump();
    }
};

int run_verify(const RunConfig& cfg, const SimplicialComplex& K, const Field& F,
               std::ostream& out) {
    const int relation_cap = std::min(cfg.max_degree, 2);
    bool all_pass = true;
    DumpSink dump;
    for (const std::string& check : RunConfig::all_checks()) {
        if (std::find(cfg.checks.begin(), cfg.checks.end(), check) == cfg.checks.end())
            continue;
        std::optional<Cochain> failure;
        CheckReport report;
        if (check == "bdga-simplicial") {
            report = verify_bdga(K, F, Side::simplicial, relation_cap, cfg.max_args,
                                 cfg.seed, cfg.trials, check, &failure);
        } else if (check == "bdga-hochschild") {
            report = verify_bdga(K, F, Side::hochschild, relation_cap, cfg.max_args,
                                 cfg.seed, cfg.trials, check, &failure);
        } else if (check == "cct-chain") {
            report = verify_chain_map(K, F, cfg.max_degree, cfg.seed, cfg.trials, &failure);
        } else if (check == "cct-cup") {
            report = verify_cup_map(K, F, cfg.max_degree, cfg.seed, cfg.trials, &failure);
        } else if (check == "cct-brace") {
            report = verify_brace_map(K, F, relation_cap, cfg.seed, cfg.trials,
                                      cfg.max_args, BraceSign::standard, &failure);
        } else {
            continue;
        }
        out << report.render() << "\n";
        if (!report.pass) {
            all_pass = false;
            dump.record(check, failure);
        }
    }
    if (!all_pass && !cfg.dump_path.empty()) {
        std::ofstream dump_out(cfg.dump_path, std::ios::binary);
        dump_out << dump.text;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

std::vector<std::string> RunConfig::all_checks() {
    return {"bdga-simplicial", "bdga-hochschild", "cct-chain", "cct-cup", "cct-brace"};
}

RunResult run(const RunConfig& cfg) {
    RunResult result;
    std::ostringstream out;
    try {
        const auto known = RunConfig::all_checks();
        for (const std::string& check : cfg.checks)
            if (std::find(known.begin(), known.end(), check) == known.end())
                throw std::invalid_argument("unknown check '" + check + "'");
        const std::string text = read_file(cfg.input_path);
        const SimplicialComplex K = SimplicialComplex::parse_facets(text);
        const Field F(cfg.field);

        switch (cfg.command) {
            case RunConfig::Command::validate: {
                const auto counts = K.counts_by_dimension();
                for (std::size_t d = 0; d < counts.size(); ++d)
                    out << "DIM " << d << " count=" << counts[d] << "\n";
                out << "VALIDATE OK total=" << K.size() << " dim=" << K.dimension()
                    << "\n";
                break;
            }
            case RunConfig::Command::betti:
            case RunConfig::Command::hh_betti: {
                const Side side = cfg.command == RunConfig::Command::betti
                                      ? Side::simplicial
                                      : Side::hochschild;
                out << betti(K, F, side, cfg.max_degree, cfg.normalized).render()
                    << "\n";
                break;
            }
            case RunConfig::Command::verify:
                result.status = run_verify(cfg, K, F, out);
                break;
            case RunConfig::Command::compare: {
                BettiTable s = betti(K, F, Side::simplicial, cfg.max_degree,
                                     cfg.normalized);
                BettiTable h = betti(K, F, Side::hochschild, cfg.max_degree,
                                     cfg.normalized);
                out << s.render() << "\n" << h.render() << "\n";
                const bool match = s.values == h.values;
                out << (match ? "CCT PASS" : "CCT FAIL") << "\n";
                if (!match) result.status = 1;
                break;
            }
        }
    } catch (const std::exception& e) {
        result.status = 2;
        result.err = std::string(e.what()) + "\n";
    }
    result.out = out.str();
    return result;
}

}  // namespace cct
