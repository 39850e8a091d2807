#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dring/problem.hpp"

namespace dring {

enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 1,
    kExitResourceError = 2,
    kExitInconsistent = 3,
};

struct CommandOptions {
    std::string command;         // solve | kernel | simplicity | stable | nilpotent | exp | verify
    std::size_t order = 10;
    std::size_t degree = 3;
    std::string method = "both";  // exp | ode | both
    bool ln = false;
    unsigned bound = 20;
    unsigned probe_degree = 2;
    std::size_t cap = 50;
    std::optional<std::string> elem;
    std::optional<std::string> solution_text;
    bool timing = false;
};

/// Runs one command and returns the report as a JSON document with sorted
/// keys. Throws InputError, ResourceError or InconsistencyError.
std::string run_command(const CommandOptions& opts, const ProblemFile& problem, std::string_view input_text);

struct CliOutcome {
    int exit_code = kExitOk;
    std::string output;
};

/// Whole command line (without the program name): parses flags, reads the
/// input files and maps failures to exit codes with a one-line JSON error.
CliOutcome run_cli(const std::vector<std::string>& args);

/// FNV-1a 64-bit digest, hex encoded.
std::string input_digest(std::string_view text);

}  // namespace dring
