#pragma once

#include "cct/field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cct {

/// One resolved CLI invocation. Identical configs produce byte-identical
/// standard output.
struct RunConfig {
    enum class Command { validate, betti, hh_betti, verify, compare };

    Command command = Command::validate;
    std::string input_path;
    FieldSpec field = FieldSpec::prime(101);
    std::uint64_t seed = 0;
    int trials = 50;
    int max_degree = 3;
    int max_args = 2;
    bool normalized = true;
    std::vector<std::string> checks = all_checks();
    std::string dump_path;  // empty = no dump

    static std::vector<std::string> all_checks();
};

struct RunResult {
    int status = 0;  // 0 ok, 1 failed checks, 2 parse/usage errors
    std::string out;
    std::string err;
};

RunResult run(const RunConfig& config);

}  // namespace cct
