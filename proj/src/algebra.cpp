#include "opfield/algebra.hpp"

namespace opfield {

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    fail(errc::dimension_mismatch, "multiply: vector length != dim");
  Vec out = zero_vector();
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) {
        const Scalar& c = constant(i, j, k);
        if (!c.is_zero()) out[k] += xy * c;
      }
    }
  }
  return out;
}

Matrix Algebra::mult_matrix(const Vec& x) const {
  Matrix m(field_, dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec prod = multiply(x, basis_vector(j));
    for (int i = 0; i < dim_; ++i) m.at(i, j) = prod[i];
  }
  return m;
}

Vec Algebra::basis_vector(int i) const {
  Vec v = zero_vector();
  v[i] = Scalar::one(field_);
  return v;
}

std::vector<Vec> Algebra::radical() const {
  std::uint64_t p = field_.characteristic();
  if (p != 0 && p <= static_cast<std::uint64_t>(dim_))
    fail(errc::unsupported_characteristic,
         "radical needs characteristic 0 or p > dim (p = " + std::to_string(p) +
             ", dim = " + std::to_string(dim_) + ")");
  // Gram matrix of the trace form on the basis
  Matrix gram(field_, dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) {
      Vec prod = multiply(basis_vector(i), basis_vector(j));
      Scalar t = mult_matrix(prod).trace();
      gram.at(i, j) = t;
      gram.at(j, i) = t;
    }
  std::vector<Vec> basis = kernel_basis(gram);
  for (const auto& r : basis)
    if (!mult_matrix(r).pow(dim_).is_zero())
      fail(errc::internal, "trace-form kernel element is not nilpotent");
  return basis;
}

Algebra build_algebra(const Field& f, int dim, std::vector<Scalar> constants,
                      std::optional<Vec> unit) {
  if (dim <= 0) fail(errc::invalid_argument, "dimension must be positive");
  if (constants.size() != static_cast<std::size_t>(dim) * dim * dim)
    fail(errc::dimension_mismatch, "structure constants: expected dim^3 entries");
  for (const auto& c : constants)
    if (c.field() != f) fail(errc::field_mismatch, "structure constant field");

  Algebra a;
  a.field_ = f;
  a.dim_ = dim;
  a.constants_ = std::move(constants);

  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (a.constant(i, j, k) != a.constant(j, i, k))
          fail(errc::not_commutative,
               "e_" + std::to_string(i) + " e_" + std::to_string(j) +
                   " differs from e_" + std::to_string(j) + " e_" +
                   std::to_string(i) + " at coordinate " + std::to_string(k));

  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        Vec left = a.multiply(a.multiply(a.basis_vector(i), a.basis_vector(j)),
                              a.basis_vector(k));
        Vec right = a.multiply(a.basis_vector(i),
                               a.multiply(a.basis_vector(j), a.basis_vector(k)));
        if (left != right)
          fail(errc::not_associative,
               "(e_" + std::to_string(i) + " e_" + std::to_string(j) + ") e_" +
                   std::to_string(k) + " != e_" + std::to_string(i) + " (e_" +
                   std::to_string(j) + " e_" + std::to_string(k) + ")");
      }

  auto is_unit = [&](const Vec& u) {
    for (int i = 0; i < dim; ++i)
      if (a.multiply(u, a.basis_vector(i)) != a.basis_vector(i)) return false;
    return true;
  };

  if (unit) {
    if (static_cast<int>(unit->size()) != dim)
      fail(errc::dimension_mismatch, "unit vector length != dim");
    if (!is_unit(*unit))
      fail(errc::unit_mismatch, "declared unit is not a two-sided unit");
    a.unit_ = std::move(*unit);
  } else {
    // solve sum_i u_i a[i][j][k] = delta_{jk} for u
    Matrix sys(f, dim * dim, dim);
    Vec rhs(static_cast<std::size_t>(dim) * dim, Scalar::zero(f));
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        for (int i = 0; i < dim; ++i) sys.at(j * dim + k, i) = a.constant(i, j, k);
        if (j == k) rhs[static_cast<std::size_t>(j) * dim + k] = Scalar::one(f);
      }
    Vec u;
    if (!solve_linear(sys, rhs, u) || !is_unit(u))
      fail(errc::no_unit, "algebra has no two-sided unit");
    a.unit_ = std::move(u);
  }
  return a;
}

}  // namespace opfield
