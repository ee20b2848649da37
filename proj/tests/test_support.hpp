#ifndef OPFIELD_TEST_SUPPORT_HPP
#define OPFIELD_TEST_SUPPORT_HPP

#include <optional>
#include <random>

#include "opfield/scalar.hpp"

namespace opfield::test {

template <typename F>
std::optional<errc> thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline Scalar random_scalar(std::mt19937_64& rng, const Field& f,
                            bool nonzero = false) {
  for (;;) {
    Scalar s = f.is_rational()
                   ? Scalar::rational(static_cast<long>(rng() % 21) - 10,
                                      static_cast<long>(rng() % 9) + 1)
                   : Scalar::residue(f, rng() % f.characteristic());
    if (!nonzero || !s.is_zero()) return s;
  }
}

}  // namespace opfield::test

#endif
