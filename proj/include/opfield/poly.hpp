#ifndef OPFIELD_POLY_HPP
#define OPFIELD_POLY_HPP

#include <utility>
#include <vector>

#include "opfield/scalar.hpp"

namespace opfield {

/// Univariate polynomial over Scalar, coefficients lowest degree first.
/// Normalized: the leading coefficient is nonzero unless the polynomial is
/// zero (empty coefficient sequence).
class Poly {
 public:
  explicit Poly(const Field& f) : field_(f) {}
  Poly(const Field& f, std::vector<Scalar> coeffs);

  static Poly zero(const Field& f) { return Poly(f); }
  static Poly constant(const Scalar& c);
  /// x - r
  static Poly linear_root(const Scalar& r);
  /// x^n
  static Poly power(const Field& f, int n);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(int i) const;
  Scalar leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Scalar& c) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Exact division with remainder by a nonzero divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  Scalar eval(const Scalar& x) const;
  Poly monic() const;
  Poly derivative() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();

  Field field_;
  std::vector<Scalar> coeffs_;
};

/// One root of a polynomial together with its multiplicity.
struct RootMult {
  Scalar root;
  int multiplicity;
};

struct LinearRootSplit {
  std::vector<RootMult> roots;  // ordered by (|num|, den, sign) / residue
  Poly residual;                // no roots in the base field
};

/// Splits off every root lying in the base field:
///   p = residual * prod (x - root)^multiplicity.
/// Over Q the candidates come from divisor enumeration on the primitive
/// integer form (rational root theorem); over F_p from an exhaustive scan.
LinearRootSplit linear_roots(const Poly& p);

/// Monic greatest common divisor by the Euclidean algorithm.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Product of the distinct irreducible factors (valid in characteristic 0
/// or p > deg), monic.
Poly squarefree_part(const Poly& p);

}  // namespace opfield

#endif
