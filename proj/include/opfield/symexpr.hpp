#ifndef OPFIELD_SYMEXPR_HPP
#define OPFIELD_SYMEXPR_HPP

#include <string>
#include <utility>
#include <vector>

#include "opfield/triangular.hpp"
#include "opfield/word.hpp"

namespace opfield {

/// Generator of the free symbolic field: a word applied to a named
/// variable, e.g. F1.F2(x). The empty word is the variable itself.
struct Gen {
  std::string var;
  Word word;

  bool operator==(const Gen& o) const { return var == o.var && word == o.word; }
};

int compare_gens(const Gen& a, const Gen& b);

/// Product of generators with positive exponents, sorted; the empty
/// monomial is 1.
struct Monomial {
  std::vector<std::pair<Gen, int>> factors;

  int total_degree() const;
  bool operator==(const Monomial& o) const { return factors == o.factors; }
  std::string to_string() const;
};

int compare_monomials(const Monomial& a, const Monomial& b);

using Terms = std::vector<std::pair<Monomial, Scalar>>;  // canonical: sorted, nonzero

/// Exact expression in the generators: a polynomial, or a ratio of two
/// polynomials with monic denominator. Polynomials are kept in canonical
/// form (monomials sorted, zero coefficients pruned), so equality of
/// polynomials is literal; ratios are compared by cross-multiplication.
class SymExpr {
 public:
  explicit SymExpr(const Field& f);

  static SymExpr constant(const Scalar& c);
  static SymExpr variable(const Field& f, const std::string& name);
  static SymExpr generator(const Field& f, const std::string& name, const Word& w);

  const Field& field() const { return field_; }
  bool is_zero() const { return num_.empty(); }
  bool is_polynomial() const;
  const Terms& num() const { return num_; }
  const Terms& den() const { return den_; }

  SymExpr operator+(const SymExpr& o) const;
  SymExpr operator-(const SymExpr& o) const;
  SymExpr operator*(const SymExpr& o) const;
  SymExpr operator/(const SymExpr& o) const;
  SymExpr operator-() const;
  SymExpr operator*(const Scalar& c) const;

  SymExpr& operator+=(const SymExpr& o) { return *this = *this + o; }
  SymExpr& operator-=(const SymExpr& o) { return *this = *this - o; }
  SymExpr& operator*=(const SymExpr& o) { return *this = *this * o; }

  /// Literal equality of normal forms (cross-multiplied for ratios).
  bool equals(const SymExpr& o) const;

  std::string to_string() const;

  static SymExpr from_terms(const Field& f, Terms t);
  static SymExpr from_ratio(const Field& f, Terms num, Terms den);

 private:
  void normalize();

  Field field_;
  Terms num_;
  Terms den_;  // canonical, monic; {(1, 1)} for polynomials
};

/// Rule table for operator application: the structure constants of an
/// algebra presentation, optionally with the triangular metadata needed
/// for sigma letters and Frobenius normalization.
struct RuleContext {
  const Algebra* algebra = nullptr;
  const TriangularSystem* tri = nullptr;

  explicit RuleContext(const Algebra& a) : algebra(&a) {}
  explicit RuleContext(const TriangularSystem& t)
      : algebra(&t.transformed), tri(&t) {}
};

/// Applies one letter: additive in e; on a generator prepends the letter;
/// on a product expands through the structure constants (operator slots)
/// or multiplicatively (sigma letters, Frobenius); on the constant 1
/// yields the letter's coordinate of the algebra unit.
SymExpr apply_letter(const Letter& l, const SymExpr& e, const RuleContext& ctx);

/// Composition of apply_letter, rightmost letter first.
SymExpr apply_word(const Word& w, const SymExpr& e, const RuleContext& ctx);

struct IdentityCheck {
  bool equal;
  std::string witness;  // a differing monomial when not equal
};

IdentityCheck check_identity(const SymExpr& lhs, const SymExpr& rhs);

}  // namespace opfield

#endif
