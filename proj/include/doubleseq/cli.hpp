// cli.hpp — command-line front end (exposed as a function so tests can drive
// it directly).

#pragma once

namespace doubleseq {

/// Runs the CLI. Exit codes: 0 verified/pass, 1 violated/fail,
/// 2 undetermined/inconclusive, 64 usage error.
int cli_main(int argc, const char* const* argv);

}  // namespace doubleseq
