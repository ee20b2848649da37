#include "opfield/scalar.hpp"

#include <cstdlib>

namespace opfield {

const char* errc_name(errc c) {
  switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::invalid_field: return "InvalidField";
    case errc::non_square: return "NonSquare";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::not_commutative: return "NotCommutative";
    case errc::not_associative: return "NotAssociative";
    case errc::no_unit: return "NoUnit";
    case errc::unit_mismatch: return "UnitMismatch";
    case errc::unsupported_characteristic: return "UnsupportedCharacteristic";
    case errc::residue_not_base: return "ResidueNotBase";
    case errc::residue_assumption_failed: return "ResidueAssumptionFailed";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::duplicate_name: return "DuplicateName";
    case errc::constraint_violated: return "ConstraintViolated";
    case errc::degenerate_derivation: return "DegenerateDerivation";
    case errc::bad_slot: return "BadSlot";
    case errc::unknown_letter: return "UnknownLetter";
    case errc::zero_combination: return "ZeroCombination";
    case errc::unsupported_frobenius: return "UnsupportedFrobenius";
    case errc::unsupported_ratio: return "UnsupportedRatio";
    case errc::bound_too_small: return "BoundTooSmall";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::internal: return "InternalError";
  }
  return "Error";
}

bool errc_is_input_error(errc c) {
  switch (c) {
    case errc::parse_error:
    case errc::invalid_argument:
    case errc::invalid_field:
    case errc::arity_mismatch:
    case errc::duplicate_name:
    case errc::dimension_mismatch:
    case errc::bad_slot:
      return true;
    default:
      return false;
  }
}

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// value^e mod p by square and multiply; p < 2^31 so products fit in u64
std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on (a, p), a != 0
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p > (1ull << 31))
    fail(errc::invalid_field, "prime modulus exceeds 2^31: " + std::to_string(p));
  if (!is_prime_u64(p))
    fail(errc::invalid_field, "modulus is not prime: " + std::to_string(p));
  Field f;
  f.p_ = p;
  return f;
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Field Field::parse(const std::string& s) {
  if (s == "Q") return rationals();
  if (s.size() > 1 && s[0] == 'F') {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s.c_str() + 1, &end, 10);
    if (end && *end == '\0') return prime(v);
  }
  fail(errc::invalid_field, "unknown field: " + s);
}

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long v) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.rat_ = v;
  } else {
    std::int64_t p = static_cast<std::int64_t>(f.characteristic());
    std::int64_t r = v % p;
    if (r < 0) r += p;
    s.res_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::rational(const mpq_class& q) {
  // mpq arithmetic demands canonical operands (positive denominator, no
  // common factor); canonicalize on a limb-level copy before any mpq call
  if (q.get_den() == 0)
    fail(errc::division_by_zero, "rational with zero denominator");
  Scalar s;
  s.field_ = Field::rationals();
  mpq_class canon(q.get_num(), q.get_den());
  canon.canonicalize();
  s.rat_ = canon;
  return s;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
  return rational(mpq_class(mpz_class(num), mpz_class(den)));
}

Scalar Scalar::residue(const Field& f, std::uint64_t v) {
  if (f.is_rational()) fail(errc::field_mismatch, "residue in Q");
  Scalar s;
  s.field_ = f;
  s.res_ = v % f.characteristic();
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rat_ == 1 : res_ == 1 % field_.characteristic();
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    fail(errc::field_mismatch, "mixed-field arithmetic: " + field_.to_string() +
                                   " vs " + o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.is_rational())
    s.rat_ = rat_ + o.rat_;
  else
    s.res_ = (res_ + o.res_) % field_.characteristic();
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.is_rational())
    s.rat_ = rat_ - o.rat_;
  else
    s.res_ = (res_ + field_.characteristic() - o.res_) % field_.characteristic();
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.is_rational())
    s.rat_ = rat_ * o.rat_;
  else
    s.res_ = res_ * o.res_ % field_.characteristic();
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of 0");
  Scalar s = *this;
  if (field_.is_rational())
    s.rat_ = 1 / rat_;
  else
    s.res_ = inv_mod(res_, field_.characteristic());
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational())
    s.rat_ = -rat_;
  else if (res_ != 0)
    s.res_ = field_.characteristic() - res_;
  return s;
}

Scalar Scalar::pow(std::uint64_t e) const {
  if (field_.is_rational()) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), rat_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), rat_.get_den().get_mpz_t(), e);
    return rational(mpq_class(num) / mpq_class(den));
  }
  return residue(field_, pow_mod(res_, e, field_.characteristic()));
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

bool Scalar::less_than(const Scalar& o) const {
  check_same_field(o);
  return field_.is_rational() ? rat_ < o.rat_ : res_ < o.res_;
}

bool Scalar::magnitude_less(const Scalar& o) const {
  check_same_field(o);
  if (!field_.is_rational()) return res_ < o.res_;
  mpz_class an = abs(rat_.get_num()), bn = abs(o.rat_.get_num());
  if (an != bn) return an < bn;
  if (rat_.get_den() != o.rat_.get_den()) return rat_.get_den() < o.rat_.get_den();
  return rat_ > o.rat_;  // equal magnitude: positive first
}

const mpq_class& Scalar::rat() const {
  if (!field_.is_rational()) fail(errc::field_mismatch, "rat() on residue");
  return rat_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return rat_.get_str();
  return std::to_string(res_);
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  auto slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "" : text.substr(slash + 1);
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!is_int(num) || (slash != std::string::npos && !is_int(den)))
    fail(errc::parse_error, "malformed scalar: " + text);
  if (f.is_rational()) {
    if (!den.empty() && mpz_class(den) == 0)
      fail(errc::division_by_zero, "scalar with zero denominator: " + text);
    mpq_class q(num + (den.empty() ? "" : "/" + den));
    q.canonicalize();
    return rational(q);
  }
  mpz_class n(num);
  std::uint64_t p = f.characteristic();
  mpz_class r = n % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  Scalar s = residue(f, r.get_ui());
  if (!den.empty()) {
    mpz_class d(den);
    mpz_class rd = d % static_cast<unsigned long>(p);
    if (rd < 0) rd += static_cast<unsigned long>(p);
    Scalar sd = residue(f, rd.get_ui());
    if (sd.is_zero())
      fail(errc::division_by_zero, "scalar with zero denominator: " + text);
    s = s / sd;
  }
  return s;
}

}  // namespace opfield
