#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace mubforge {

/** One parsed command invocation. */
struct RunConfig {
    std::string command;  // field-info | operators | classes | mubs | verify | decompose
    long p = 0;
    int n = 1;
    std::string basis = "polynomial";  // decompose: which digit basis
    std::optional<std::string> klass;  // classes: restrict output to one class id
    std::optional<long> q;             // operators: single operator index
    std::optional<long> r;             // operators: phase-operator family index
    std::string format = "text";       // text | json
    long max_matrix_d = 32;            // bound for the matrix-building commands
};

// Executes one command, writing the document to out and diagnostics to err.
// Identical configs produce byte-identical documents. Returns the exit status:
// 0 success, 1 verification violations found, 2 invalid input.
// Matrix-building commands (everything but field-info) enforce d <= max_matrix_d;
// field-info reaches up to the library's field bound of 1024.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// argv front-end: parses flags into a RunConfig, honors MUBFORGE_MAX_D, opens
// --out when given, and dispatches to run().
int cli_main(int argc, const char* const* argv);

}  // namespace mubforge
