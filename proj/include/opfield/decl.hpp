#ifndef OPFIELD_DECL_HPP
#define OPFIELD_DECL_HPP

#include <optional>
#include <string>
#include <vector>

#include "opfield/operator_system.hpp"

namespace opfield {

/// Parsed declaration of an operator system. Line-oriented grammar:
///
///   field (Q | F <prime>)
///   dim <n>
///   ops id <name>...            # one name per coordinate, first is "id"
///   sparse                      # optional: missing mul entries default to 0
///   unit <scalar>{dim}          # optional: solved for when omitted
///   mul <i> <j> = <scalar>{dim} # i <= j; every pair unless sparse
///   invertible <name>
///
/// Scalars are "n" or "n/d"; comments start with '#'.
struct SystemDecl {
  struct MulEntry {
    int i, j;
    std::vector<Scalar> value;
    int line;  // for duplicate/missing diagnostics
  };

  Field field;
  int dim = 0;
  std::vector<std::string> ops;
  std::optional<std::vector<Scalar>> unit;
  std::vector<MulEntry> muls;
  std::vector<std::string> invertible;
  bool sparse = false;

  bool operator==(const SystemDecl& o) const;
};

/// Parses a declaration; syntax errors carry line and column.
SystemDecl parse_declaration(const std::string& text);

/// Canonical text form; parse(serialize(d)) == d.
std::string serialize_declaration(const SystemDecl& d);

/// Builds the validated algebra and operator system from a declaration.
OperatorSystem system_from_decl(const SystemDecl& d);

}  // namespace opfield

#endif
