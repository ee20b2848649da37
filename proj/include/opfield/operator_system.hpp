#ifndef OPFIELD_OPERATOR_SYSTEM_HPP
#define OPFIELD_OPERATOR_SYSTEM_HPP

#include <string>
#include <vector>

#include "opfield/decompose.hpp"

namespace opfield {

/// An algebra together with named operators F_0 = id, F_1, ..., F_n bound
/// to its coordinates: the presentation sends x to sum_k F_k(x) e_k.
struct OperatorSystem {
  Algebra algebra;
  std::vector<std::string> names;       // names[0] is the identity operator
  bool first_coordinate = false;        // unit vector has coordinate 0 equal to 1
  std::vector<std::string> invertible;  // operator names declared invertible
};

OperatorSystem build_system(const Algebra& a, std::vector<std::string> names,
                            std::vector<std::string> invertible = {});

/// A field endomorphism extracted from one local factor, presented as a
/// linear combination sigma = sum_k coeffs[k] F_k of the operators.
struct EndoDescriptor {
  Vec coeffs;
  int block = -1;      // source block in the decomposition
  int index = -1;      // position in the family; 0 is the identity
  bool invertible = false;

  bool is_identity() const;
};

/// One descriptor per local block, ordered with the identity first (the
/// identity is always among them). Requires the residue check to pass.
std::vector<EndoDescriptor> associated_endomorphisms(const OperatorSystem& s,
                                                     const Decomposition& d);

enum class SingleOpCase { trivial_scalar, derivation, endomorphism };

/// Classification of one operator F with product rule
///   F(xy) = a xy + b (x F(y) + y F(x)) + c F(x) F(y),  b^2 - b = a c.
struct SingleOpClassification {
  SingleOpCase tag;
  Scalar a, b, c;
  std::string description;  // e.g. "d = F + 2 id"
  // endomorphism case: orthogonal idempotent basis of the split algebra
  std::vector<Vec> new_basis;  // {e'_0, e'_1} when tag == endomorphism
};

SingleOpClassification classify_single_operator(const Scalar& a, const Scalar& b,
                                                const Scalar& c);

/// The two-dimensional algebra of a single operator with constants (a,b,c):
/// e_0^2 = e_0 + a e_1, e_0 e_1 = b e_1, e_1^2 = c e_1.
Algebra single_operator_algebra(const Scalar& a, const Scalar& b, const Scalar& c);

}  // namespace opfield

#endif
