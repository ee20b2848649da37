#ifndef OPFIELD_PRESETS_HPP
#define OPFIELD_PRESETS_HPP

#include "opfield/decl.hpp"

namespace opfield {

/// Built-in declarations:
///   nderiv:<n>        n commuting derivations (local, maximal ideal of dim n)
///   dsigma            one derivation and one endomorphism that commute
///   single:<a>,<b>,<c> one operator with constants (a, b, c)
///   trunc3            truncated power series at order 3
///   sqrt2             the algebra x^2 = 2, residue field a proper extension
/// An optional prime switches the coefficient field, e.g. "dsigma@5".
SystemDecl preset_decl(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace opfield

#endif
