#ifndef OPFIELD_ERRORS_HPP
#define OPFIELD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace opfield {

/// Error codes raised by the library. Codes are split into two classes:
/// input errors (malformed declarations, bad indices, unparsable text) and
/// math errors (the input is well-formed but the requested structure does
/// not exist). The CLI maps the former to exit code 1, the latter to 2.
enum class errc {
  // exact arithmetic
  division_by_zero,
  field_mismatch,
  invalid_field,
  non_square,
  zero_polynomial,
  dimension_mismatch,
  singular_matrix,
  // algebra validation / decomposition
  not_commutative,
  not_associative,
  no_unit,
  unit_mismatch,
  unsupported_characteristic,
  residue_not_base,
  residue_assumption_failed,
  // operator systems
  arity_mismatch,
  duplicate_name,
  constraint_violated,
  degenerate_derivation,
  bad_slot,
  // words and symbolic engine
  unknown_letter,
  zero_combination,
  unsupported_frobenius,
  unsupported_ratio,
  // growth
  bound_too_small,
  // frontend
  parse_error,
  invalid_argument,
  internal,
};

const char* errc_name(errc c);

/// True for codes that indicate malformed input rather than a mathematical
/// obstruction.
bool errc_is_input_error(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const { return code_; }
  bool is_input_error() const { return errc_is_input_error(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace opfield

#endif
