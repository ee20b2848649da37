#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "opfield/commands.hpp"
#include "opfield/presets.hpp"

namespace {

void usage() {
  std::cout <<
      "opfield -- constructive algebra of fields with operators\n"
      "\n"
      "usage: opfield <command> [args] [--input FILE | --preset NAME] [--json]\n"
      "\n"
      "commands:\n"
      "  validate                 check the declared algebra (unit, laws)\n"
      "  decompose                split into local blocks, residue report\n"
      "  endos                    associated endomorphisms per block\n"
      "  classify1 <a> <b> <c>    classify one operator from its constants\n"
      "  triangularize            triangular operator basis and product rules\n"
      "  expand <S> <g>           expand S(g x); S like '2 F1.F2 - s1^-1'\n"
      "  growth                   word counts: --free K | --fix-powers |\n"
      "                           --relation u=v, with --radius R [--bound B]\n"
      "\n"
      "presets: nderiv:<n>  dsigma  single:<a>,<b>,<c>  trunc3  sqrt2\n"
      "         (append @<p> for coefficients mod p, e.g. dsigma@5)\n"
      "\n"
      "exit codes: 0 ok, 1 malformed input, 2 mathematical failure\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
    usage();
    return args.empty() ? 1 : 0;
  }
  bool json = false;
  for (const auto& a : args)
    if (a == "--json") json = true;
  opfield::CommandResult r = opfield::run_cli(args);
  std::cout << (json ? r.json : r.text);
  return r.exit_code;
}
