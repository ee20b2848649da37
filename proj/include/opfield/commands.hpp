#ifndef OPFIELD_COMMANDS_HPP
#define OPFIELD_COMMANDS_HPP

#include <string>
#include <vector>

namespace opfield {

/// Outcome of one CLI invocation. Exit codes: 0 success, 1 malformed
/// input, 2 the input is well-formed but the mathematics says no (failed
/// residue check, violated constraint, unreachable fixed point, ...).
struct CommandResult {
  int exit_code = 0;
  std::string text;  // human-readable report
  std::string json;  // stable JSON document
};

/// Dispatches a full command line (without the program name):
///   validate|decompose|endos|triangularize [--input F | --preset N]
///   classify1 <a> <b> <c> [--prime p]
///   expand <S> <g> [--input F | --preset N]
///   growth (--free k | --fix-powers | --relation u=v ...) --radius r [--bound b]
/// plus --json to emit the JSON document on stdout.
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace opfield

#endif
