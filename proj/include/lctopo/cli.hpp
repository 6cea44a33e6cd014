#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "lctopo/core.hpp"

namespace lctopo {

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInputError = 2;

// Runs one subcommand. `args` excludes the program name. JSON lines go to
// `out`, human-readable summaries and diagnostics to `err`.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// DOT digraph of the covering relation of the specialization preorder. An
// edge x -> y means x < y with nothing strictly between; mutually specializing
// points are chained with dir=both.
std::string export_dot(const Topology& space);

}  // namespace lctopo
