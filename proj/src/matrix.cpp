#include "opfield/matrix.hpp"

#include <algorithm>

namespace opfield {

Matrix::Matrix(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      fail(errc::dimension_mismatch, "ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_cols(const Field& f, const std::vector<Vec>& cols) {
  return from_rows(f, cols).transpose();
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
    fail(errc::dimension_mismatch, "matrix add");
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
    fail(errc::dimension_mismatch, "matrix sub");
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || field_ != o.field_)
    fail(errc::dimension_mismatch, "matrix mul");
  Matrix m(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
    }
  return m;
}

Matrix Matrix::operator*(const Scalar& c) const {
  Matrix m = *this;
  for (auto& x : m.data_) x *= c;
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         data_ == o.data_;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    fail(errc::dimension_mismatch, "matrix apply");
  Vec out(rows_, Scalar::zero(field_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix m(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) fail(errc::non_square, "trace of non-square matrix");
  Scalar t = Scalar::zero(field_);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::pow(int e) const {
  if (rows_ != cols_) fail(errc::non_square, "pow of non-square matrix");
  Matrix acc = identity(field_, rows_);
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

Vec Matrix::row(int i) const {
  Vec v(cols_, Scalar::zero(field_));
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(int j) const {
  Vec v(rows_, Scalar::zero(field_));
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Matrix Matrix::rref(std::vector<int>* pivots) const {
  Matrix m = *this;
  int pr = 0;
  for (int pc = 0; pc < cols_ && pr < rows_; ++pc) {
    int sel = -1;
    for (int i = pr; i < rows_; ++i)
      if (!m.at(i, pc).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != pr)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(pr, j));
    Scalar inv = m.at(pr, pc).inverse();
    for (int j = pc; j < cols_; ++j) m.at(pr, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == pr || m.at(i, pc).is_zero()) continue;
      Scalar factor = m.at(i, pc);
      for (int j = pc; j < cols_; ++j) m.at(i, j) -= factor * m.at(pr, j);
    }
    if (pivots) pivots->push_back(pc);
    ++pr;
  }
  return m;
}

int Matrix::rank() const {
  std::vector<int> piv;
  rref(&piv);
  return static_cast<int>(piv.size());
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) fail(errc::non_square, "inverse of non-square matrix");
  Matrix aug(field_, rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Scalar::one(field_);
  }
  std::vector<int> piv;
  Matrix r = aug.rref(&piv);
  if (static_cast<int>(piv.size()) != rows_ ||
      (rows_ > 0 && piv[rows_ - 1] >= cols_))
    fail(errc::singular_matrix, "matrix is singular");
  Matrix inv(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
  return inv;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (int i = 0; i < rows_; ++i) {
    out += i ? "; " : "";
    for (int j = 0; j < cols_; ++j) out += (j ? " " : "") + at(i, j).to_string();
  }
  return out + "]";
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  std::vector<int> pivots;
  Matrix r = m.rref(&pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (int fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    Vec v(m.cols(), Scalar::zero(m.field()));
    v[fc] = Scalar::one(m.field());
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      v[pivots[pi]] = -r.at(static_cast<int>(pi), fc);
    // normalize: first nonzero entry is 1
    for (const auto& entry : v) {
      if (entry.is_zero()) continue;
      if (!entry.is_one()) {
        Scalar inv = entry.inverse();
        for (auto& e : v) e *= inv;
      }
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Poly minimal_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) fail(errc::non_square, "minimal polynomial");
  const Field& f = m.field();
  int n = m.rows();
  // find the least k with vec(M^k) dependent on the lower powers
  std::vector<Vec> powers;  // vectorized M^0..M^k
  Matrix mk = Matrix::identity(f, n);
  for (int k = 0;; ++k) {
    Vec flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat.push_back(mk.at(i, j));
    powers.push_back(std::move(flat));
    // solve sum_{i<k} c_i vec(M^i) = vec(M^k)
    if (k > 0) {
      Matrix sys(f, n * n, k);
      for (int i = 0; i < n * n; ++i)
        for (int c = 0; c < k; ++c) sys.at(i, c) = powers[c][i];
      Vec rhs = powers[k];
      Vec coef;
      if (solve_linear(sys, rhs, coef)) {
        std::vector<Scalar> pc(k + 1, Scalar::zero(f));
        for (int i = 0; i < k; ++i) pc[i] = -coef[i];
        pc[k] = Scalar::one(f);
        return Poly(f, std::move(pc));
      }
    }
    mk = mk * m;
  }
}

Matrix eval_poly(const Poly& p, const Matrix& m) {
  if (m.rows() != m.cols()) fail(errc::non_square, "eval_poly");
  Matrix acc(m.field(), m.rows(), m.rows());
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    Scalar c = p.coeff(i);
    for (int d = 0; d < m.rows(); ++d) acc.at(d, d) += c;
  }
  return acc;
}

bool solve_linear(const Matrix& m, const Vec& b, Vec& x) {
  if (static_cast<int>(b.size()) != m.rows())
    fail(errc::dimension_mismatch, "solve_linear");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<int> pivots;
  Matrix r = aug.rref(&pivots);
  if (!pivots.empty() && pivots.back() == m.cols()) return false;  // inconsistent
  x.assign(m.cols(), Scalar::zero(m.field()));
  for (std::size_t pi = 0; pi < pivots.size(); ++pi)
    x[pivots[pi]] = r.at(static_cast<int>(pi), m.cols());
  return true;
}

std::vector<Vec> row_space_basis(const Field& f, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return {};
  Matrix m = Matrix::from_rows(f, vectors);
  std::vector<int> pivots;
  Matrix r = m.rref(&pivots);
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < pivots.size(); ++i) basis.push_back(r.row(static_cast<int>(i)));
  return basis;
}

bool in_span(const Field& f, const std::vector<Vec>& basis, const Vec& v) {
  if (basis.empty()) {
    for (const auto& e : v)
      if (!e.is_zero()) return false;
    return true;
  }
  Matrix m = Matrix::from_cols(f, basis);
  Vec x;
  return solve_linear(m, v, x);
}

}  // namespace opfield
