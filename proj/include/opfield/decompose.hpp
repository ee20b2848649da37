#ifndef OPFIELD_DECOMPOSE_HPP
#define OPFIELD_DECOMPOSE_HPP

#include <string>
#include <vector>

#include "opfield/algebra.hpp"

namespace opfield {

/// One local factor of the algebra: its embedding into the ambient algebra,
/// the projection onto it, its own structure constants, and its maximal
/// ideal. When the residue field equals the base field the block also
/// carries the residue functional (kernel = maximal ideal, value 1 on the
/// block unit).
struct LocalBlock {
  int dim = 0;
  std::vector<Vec> embedding;  // basis of the block inside the ambient algebra
  Matrix theta;                // projection: ambient coords -> block coords
  Vec unit;                    // block unit, block coords
  Algebra algebra;             // induced structure constants on the block
  std::vector<Vec> max_ideal;  // radical of the block, block coords
  bool residue_ok = false;     // dim == 1 + |max_ideal|
  Vec rho;                     // residue functional (row), only if residue_ok
  std::vector<Poly> witnesses; // nonlinear residual factors seen on this block

  int residue_dim() const { return dim - static_cast<int>(max_ideal.size()); }

  explicit LocalBlock(const Field& f) : theta(f, 0, 0) {}
};

struct ResidueReport {
  bool pass = false;
  struct Entry {
    int block;
    int dim;
    int residue_dim;
    bool ok;
    std::vector<Poly> witnesses;
  };
  std::vector<Entry> entries;
};

/// Splitting of the algebra into local factors. Blocks are ordered by
/// (dimension descending, then lexicographically smallest embedded basis);
/// the reconstruction matrix maps concatenated block coordinates back to
/// ambient coordinates (it is the inverse of the stacked projections).
struct Decomposition {
  Algebra ambient;
  std::vector<LocalBlock> blocks;
  Matrix reconstruction;
  bool residue_ok = false;
  std::vector<Poly> witnesses;

  explicit Decomposition(const Field& f) : reconstruction(f, 0, 0) {}
};

/// Simultaneous generalized-eigenspace refinement: every block is split
/// along the base-field eigenvalues of multiplication by each basis
/// element until stable. Stable blocks whose minimal polynomials retain a
/// nonlinear residual are returned as-is with the residue report failed.
Decomposition local_decompose(const Algebra& a);

ResidueReport check_residue_assumption(const Decomposition& d);

/// The functional with kernel the maximal ideal and value 1 on the block
/// unit. Throws ResidueNotBase when the block's residue field is a proper
/// extension.
Vec residue_functional(const LocalBlock& b);

}  // namespace opfield

#endif
