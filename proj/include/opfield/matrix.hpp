#ifndef OPFIELD_MATRIX_HPP
#define OPFIELD_MATRIX_HPP

#include <vector>

#include "opfield/poly.hpp"
#include "opfield/scalar.hpp"

namespace opfield {

using Vec = std::vector<Scalar>;

/// Dense matrix over Scalar, row-major. All entries share one field.
class Matrix {
 public:
  Matrix(const Field& f, int rows, int cols);
  static Matrix identity(const Field& f, int n);
  static Matrix from_rows(const Field& f, const std::vector<Vec>& rows);
  static Matrix from_cols(const Field& f, const std::vector<Vec>& cols);

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Scalar& c) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Vec apply(const Vec& v) const;  // matrix * column vector
  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  Matrix pow(int e) const;

  Vec row(int i) const;
  Vec col(int j) const;

  /// Reduced row echelon form; appends pivot column indices to `pivots`.
  /// Deterministic: pivots on the first row with a nonzero entry in the
  /// leftmost unprocessed column.
  Matrix rref(std::vector<int>* pivots = nullptr) const;

  int rank() const;
  Matrix inverse() const;  // throws SingularMatrix

  std::string to_string() const;

 private:
  Field field_;
  int rows_, cols_;
  std::vector<Scalar> data_;
};

/// Exact basis of the null space { v : M v = 0 }. Each basis vector is
/// normalized so its first nonzero entry is 1; vectors are ordered by free
/// column. Deterministic.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Monic polynomial of least degree annihilating the square matrix M.
Poly minimal_polynomial(const Matrix& m);

/// p(M).
Matrix eval_poly(const Poly& p, const Matrix& m);

/// Solves M x = b exactly; returns false if inconsistent. When the system
/// is underdetermined the particular solution with zero free variables is
/// returned.
bool solve_linear(const Matrix& m, const Vec& b, Vec& x);

/// Row space basis in reduced echelon form (canonical for the subspace).
std::vector<Vec> row_space_basis(const Field& f, const std::vector<Vec>& vectors);

/// True if v lies in the span of `basis` (vectors over f).
bool in_span(const Field& f, const std::vector<Vec>& basis, const Vec& v);

}  // namespace opfield

#endif
