#include "opfield/decompose.hpp"

#include <algorithm>

namespace opfield {

namespace {

// Matrix of multiplication by e_b restricted to the ideal spanned by
// `basis` (columns of V), expressed in that basis: solves V R = L_b V.
Matrix restrict_mult(const Algebra& a, int b, const std::vector<Vec>& basis) {
  const Field& f = a.field();
  int m = static_cast<int>(basis.size());
  Matrix v = Matrix::from_cols(f, basis);
  Matrix images(f, a.dim(), m);
  for (int j = 0; j < m; ++j) {
    Vec img = a.multiply(a.basis_vector(b), basis[j]);
    for (int i = 0; i < a.dim(); ++i) images.at(i, j) = img[i];
  }
  Matrix r(f, m, m);
  for (int j = 0; j < m; ++j) {
    Vec x;
    if (!solve_linear(v, images.col(j), x))
      fail(errc::internal, "block is not closed under multiplication");
    for (int i = 0; i < m; ++i) r.at(i, j) = x[i];
  }
  return r;
}

// lexicographic compare of canonical (row-echelon) bases, entry by entry
bool basis_lex_less(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (a[i][j] == b[i][j]) continue;
      return a[i][j].less_than(b[i][j]);
    }
  return a.size() < b.size();
}

// converts block-coordinate kernel vectors back to ambient coordinates
std::vector<Vec> embed_chunk(const Field& f, const std::vector<Vec>& block_basis,
                             const std::vector<Vec>& chunk) {
  std::vector<Vec> out;
  for (const auto& c : chunk) {
    Vec v(block_basis[0].size(), Scalar::zero(f));
    for (std::size_t i = 0; i < block_basis.size(); ++i)
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += block_basis[i][k] * c[i];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Decomposition local_decompose(const Algebra& a) {
  const Field& f = a.field();
  int d = a.dim();

  // refinement: split blocks along base-field eigenvalues of multiplication
  // by each basis element, until no block splits
  std::vector<std::vector<Vec>> blocks;
  {
    std::vector<Vec> all;
    for (int i = 0; i < d; ++i) all.push_back(a.basis_vector(i));
    blocks.push_back(row_space_basis(f, all));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<Vec>> next;
    for (const auto& block : blocks) {
      bool split = false;
      for (int b = 0; b < d && !split; ++b) {
        Matrix r = restrict_mult(a, b, block);
        Poly mu = minimal_polynomial(r);
        LinearRootSplit sp = linear_roots(mu);
        int chunks = static_cast<int>(sp.roots.size()) +
                     (sp.residual.degree() >= 1 ? 1 : 0);
        if (chunks <= 1) continue;
        split = true;
        changed = true;
        for (const auto& rm : sp.roots) {
          Poly factor = Poly::linear_root(rm.root);
          Matrix power = eval_poly(factor, r).pow(rm.multiplicity);
          auto ker = kernel_basis(power);
          next.push_back(row_space_basis(f, embed_chunk(f, block, ker)));
        }
        if (sp.residual.degree() >= 1) {
          auto ker = kernel_basis(eval_poly(sp.residual, r));
          next.push_back(row_space_basis(f, embed_chunk(f, block, ker)));
        }
      }
      if (!split) next.push_back(block);
    }
    blocks = std::move(next);
  }

  // canonical order: dimension descending, then lexicographically smallest
  // embedded basis
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<Vec>& x, const std::vector<Vec>& y) {
              if (x.size() != y.size()) return x.size() > y.size();
              return basis_lex_less(x, y);
            });

  Decomposition dec(f);
  dec.ambient = a;

  // stacked projections = inverse of the basis concatenation
  std::vector<Vec> all_cols;
  for (const auto& block : blocks)
    for (const auto& v : block) all_cols.push_back(v);
  if (static_cast<int>(all_cols.size()) != d)
    fail(errc::internal, "block dimensions do not sum to dim");
  Matrix concat = Matrix::from_cols(f, all_cols);
  dec.reconstruction = concat;
  Matrix proj = concat.inverse();

  int offset = 0;
  dec.residue_ok = true;
  for (const auto& block : blocks) {
    LocalBlock lb(f);
    lb.dim = static_cast<int>(block.size());
    lb.embedding = block;
    lb.theta = Matrix(f, lb.dim, d);
    for (int i = 0; i < lb.dim; ++i)
      for (int j = 0; j < d; ++j) lb.theta.at(i, j) = proj.at(offset + i, j);

    lb.unit = lb.theta.apply(a.unit());

    // induced structure constants
    std::vector<Scalar> consts(static_cast<std::size_t>(lb.dim) * lb.dim * lb.dim,
                               Scalar::zero(f));
    for (int i = 0; i < lb.dim; ++i)
      for (int j = 0; j < lb.dim; ++j) {
        Vec prod = lb.theta.apply(a.multiply(block[i], block[j]));
        for (int k = 0; k < lb.dim; ++k)
          consts[(static_cast<std::size_t>(i) * lb.dim + j) * lb.dim + k] = prod[k];
      }
    lb.algebra = build_algebra(f, lb.dim, std::move(consts), lb.unit);

    lb.max_ideal = lb.algebra.radical();
    lb.residue_ok = (lb.residue_dim() == 1);

    // witnesses: nonlinear residuals of the minimal polynomials modulo the
    // block radical (distinct irreducible factors only)
    for (int b = 0; b < d; ++b) {
      Matrix r = restrict_mult(a, b, block);
      LinearRootSplit sp = linear_roots(minimal_polynomial(r));
      if (sp.residual.degree() >= 1) {
        Poly w = squarefree_part(sp.residual);
        if (std::find(lb.witnesses.begin(), lb.witnesses.end(), w) ==
            lb.witnesses.end())
          lb.witnesses.push_back(w);
      }
    }

    if (lb.residue_ok) lb.rho = residue_functional(lb);
    dec.residue_ok = dec.residue_ok && lb.residue_ok;
    for (const auto& w : lb.witnesses)
      if (std::find(dec.witnesses.begin(), dec.witnesses.end(), w) ==
          dec.witnesses.end())
        dec.witnesses.push_back(w);

    offset += lb.dim;
    dec.blocks.push_back(std::move(lb));
  }
  return dec;
}

ResidueReport check_residue_assumption(const Decomposition& d) {
  ResidueReport rep;
  rep.pass = true;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const LocalBlock& b = d.blocks[i];
    ResidueReport::Entry e;
    e.block = static_cast<int>(i);
    e.dim = b.dim;
    e.residue_dim = b.residue_dim();
    e.ok = b.residue_ok;
    e.witnesses = b.witnesses;
    rep.pass = rep.pass && e.ok;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

Vec residue_functional(const LocalBlock& b) {
  if (b.residue_dim() != 1)
    fail(errc::residue_not_base,
         "block residue field has dimension " + std::to_string(b.residue_dim()) +
             " over the base field");
  const Field& f = b.algebra.field();
  // rho * v = 0 on the maximal ideal, rho * unit = 1
  int rows = static_cast<int>(b.max_ideal.size()) + 1;
  Matrix sys(f, rows, b.dim);
  Vec rhs(rows, Scalar::zero(f));
  for (std::size_t i = 0; i < b.max_ideal.size(); ++i)
    for (int j = 0; j < b.dim; ++j) sys.at(static_cast<int>(i), j) = b.max_ideal[i][j];
  for (int j = 0; j < b.dim; ++j) sys.at(rows - 1, j) = b.unit[j];
  rhs[rows - 1] = Scalar::one(f);
  Vec rho;
  if (!solve_linear(sys, rhs, rho))
    fail(errc::internal, "residue functional system is inconsistent");
  return rho;
}

}  // namespace opfield
