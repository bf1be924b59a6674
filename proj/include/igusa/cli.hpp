// Command implementations behind the command-line tool, exposed as library
// functions so they can be exercised directly by tests.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "igusa/lie_ring.hpp"

namespace igusa::cli {

enum class OutputFormat { Plain, Latex, Json };

struct JobConfig {
    std::string command;            // compute | series | check | oracle
    std::string spec;               // catalog string, composition, or JSON file path
    OutputFormat format = OutputFormat::Plain;
    int degree = 8;                 // series cutoff (<= 64)
    std::vector<std::int64_t> primes;
    std::uint64_t budget = 0;       // 0 = default / IGUSA_BUDGET
    int threads = 1;
    std::string check_kind = "funeq";  // funeq | genigusa | dwrho | match
    std::string out_file;           // empty = stdout
};

struct CommandResult {
    int exit_code = 0;
    std::string output;  // printed to stdout (or --out) on success paths
    std::string error;   // printed to stderr
};

// Exit codes: 0 success / all pass, 1 a verification failed, 2 parse error,
// 3 resource guard, 4 ramified spec, 5 oracle budget exceeded (partial table).
CommandResult run_command(const JobConfig& cfg);

// Spec <-> JSON round-trip used by the CLI and its tests.
std::string spec_to_json(const zeta::LieRingSpec& spec);
zeta::LieRingSpec spec_from_json(const std::string& text);

// Resolves a --spec argument: inline JSON, a .json file path, or the factor
// grammar.
zeta::LieRingSpec resolve_spec(const std::string& arg);

std::uint64_t default_budget();  // honors IGUSA_BUDGET

}  // namespace igusa::cli
