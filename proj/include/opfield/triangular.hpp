#ifndef OPFIELD_TRIANGULAR_HPP
#define OPFIELD_TRIANGULAR_HPP

#include "opfield/operator_system.hpp"

namespace opfield {

/// Slot layout of one local block inside the triangular basis: the sigma
/// slot (the block unit direction) comes first, then the eta slots ordered
/// by radical-filtration level.
struct TriBlock {
  int sigma_slot = -1;
  std::vector<int> eta_slots;
  std::vector<int> eta_levels;  // level of each eta slot, 1-based
  int endo_index = -1;          // this block's sigma in the endomorphism family
};

/// Nonzero constant in eta_k eta_l = sum_j b_{k,l}(j) eta_j (one block;
/// k, l, j are local 1-based eta indices). Supported on j > max(k, l).
struct BConstant {
  int block;
  int k, l, j;
  Scalar value;
};

/// Sparse linear form over the triangular slots.
struct LinearForm {
  std::vector<std::pair<int, Scalar>> terms;  // (slot, coefficient), slot ascending
};

/// Expansion of slot j on a product:
///   F_j(xy) = sigma(x) F_j(y) + sum_{l < j} R_{j,l}(x) F_l(y),
/// with sigma the block's sigma slot and each R_{j,l} a linear form over
/// slots 0..j of the same block.
struct ProductRule {
  int slot = -1;
  int sigma_slot = -1;
  std::vector<std::pair<int, LinearForm>> remainders;  // (l, R_{j,l}), l ascending
};

/// Operator basis in which every operator expands triangularly. `basis`
/// columns are the new basis vectors in original coordinates; `transformed`
/// carries the structure constants in the new basis (the rule table used by
/// the symbolic engine).
struct TriangularSystem {
  Field field;
  Matrix basis;
  Matrix basis_inv;
  Algebra transformed;
  std::vector<TriBlock> blocks;
  std::vector<EndoDescriptor> endos;
  std::vector<BConstant> constants;
  OperatorSystem source;

  TriangularSystem() : basis(Field(), 0, 0), basis_inv(Field(), 0, 0) {}

  int slot_count() const { return transformed.dim(); }
  int block_of_slot(int j) const;
  bool is_sigma_slot(int j) const;
  /// Endomorphism index of sigma_{i_j} for slot j (the block's sigma).
  int endo_of_slot(int j) const;
  /// Number of non-identity endomorphisms t (valid inverse-letter indices
  /// are 1..t).
  int endo_count_nonid() const { return static_cast<int>(endos.size()) - 1; }
  /// Global sigma slot of the block providing endomorphism `index`.
  int slot_of_endo(int index) const;
};

TriangularSystem triangularize(const OperatorSystem& s, const Decomposition& d);

ProductRule product_rule(const TriangularSystem& t, int slot);

}  // namespace opfield

#endif
