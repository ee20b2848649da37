#ifndef OPFIELD_ALGEBRA_HPP
#define OPFIELD_ALGEBRA_HPP

#include <optional>
#include <vector>

#include "opfield/matrix.hpp"

namespace opfield {

/// Finite-dimensional commutative algebra over the base field, given by
/// structure constants: e_i e_j = sum_k a[i][j][k] e_k. Construction via
/// build_algebra validates commutativity, associativity and the two-sided
/// unit; if no unit vector is supplied the unique one is solved for.
class Algebra {
 public:
  Algebra() : dim_(0) {}  // empty; fill via build_algebra

  const Field& field() const { return field_; }
  int dim() const { return dim_; }

  const Scalar& constant(int i, int j, int k) const {
    return constants_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }
  const std::vector<Scalar>& constants() const { return constants_; }
  const Vec& unit() const { return unit_; }

  /// Bilinear product of coordinate vectors through the constants.
  Vec multiply(const Vec& x, const Vec& y) const;

  /// Matrix of multiplication by x: column j holds x * e_j.
  Matrix mult_matrix(const Vec& x) const;

  /// Basis of the nilradical, via the kernel of the trace form
  /// (x, y) -> trace(mult_matrix(x*y)). Requires characteristic 0 or
  /// p > dim; each returned element is verified nilpotent.
  std::vector<Vec> radical() const;

  Vec basis_vector(int i) const;
  Vec zero_vector() const { return Vec(dim_, Scalar::zero(field_)); }

  friend Algebra build_algebra(const Field& f, int dim,
                               std::vector<Scalar> constants,
                               std::optional<Vec> unit);

 private:
  Field field_;
  int dim_;
  std::vector<Scalar> constants_;  // dim^3, index ((i*dim)+j)*dim+k
  Vec unit_;
};

Algebra build_algebra(const Field& f, int dim, std::vector<Scalar> constants,
                      std::optional<Vec> unit = std::nullopt);

}  // namespace opfield

#endif
