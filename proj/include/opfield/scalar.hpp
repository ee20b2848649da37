#ifndef OPFIELD_SCALAR_HPP
#define OPFIELD_SCALAR_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "opfield/errors.hpp"

namespace opfield {

/// Coefficient field descriptor: the rationals, or a prime field F_p with
/// p <= 2^31. Primality of p is checked at construction.
class Field {
 public:
  Field() : p_(0) {}  // rationals

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  std::string to_string() const;  // "Q" or "F<p>"
  static Field parse(const std::string& s);

 private:
  std::uint64_t p_;  // 0 means rationals
};

/// Exact element of the base field: a normalized rational or a residue mod
/// a prime. Arithmetic between elements of different fields is rejected,
/// never coerced. Values are immutable in spirit: all operations return
/// fresh scalars.
class Scalar {
 public:
  Scalar() : field_(), rat_(0), res_(0) {}  // 0 in Q

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long v);
  static Scalar rational(const mpq_class& q);
  static Scalar rational(long num, long den);
  static Scalar residue(const Field& f, std::uint64_t v);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Total order used for canonical output: rationals by value, residues
  /// by representative. Comparing across fields is a field mismatch.
  bool less_than(const Scalar& o) const;

  /// Order by (|numerator|, denominator, sign) for rationals and by residue
  /// for prime fields; used to fix the root order of linear_roots.
  bool magnitude_less(const Scalar& o) const;

  /// Rational payload (rationals only).
  const mpq_class& rat() const;
  /// Residue payload (prime fields only).
  std::uint64_t res() const { return res_; }

  std::string to_string() const;

  /// Parses "n" or "n/d"; over F_p the value is reduced (and divided) mod p.
  static Scalar parse(const Field& f, const std::string& text);

 private:
  void check_same_field(const Scalar& o) const;

  Field field_;
  mpq_class rat_;      // used when field_.is_rational()
  std::uint64_t res_;  // used otherwise, 0 <= res_ < p
};

}  // namespace opfield

#endif
