#include "opfield/triangular.hpp"

#include <algorithm>

namespace opfield {

int TriangularSystem::block_of_slot(int j) const {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].sigma_slot == j) return static_cast<int>(b);
    for (int e : blocks[b].eta_slots)
      if (e == j) return static_cast<int>(b);
  }
  fail(errc::bad_slot, "slot out of range: " + std::to_string(j));
}

bool TriangularSystem::is_sigma_slot(int j) const {
  return blocks[block_of_slot(j)].sigma_slot == j;
}

int TriangularSystem::endo_of_slot(int j) const {
  return blocks[block_of_slot(j)].endo_index;
}

int TriangularSystem::slot_of_endo(int index) const {
  for (const auto& b : blocks)
    if (b.endo_index == index) return b.sigma_slot;
  fail(errc::unknown_letter, "no block for endomorphism " + std::to_string(index));
}

namespace {

// span of all pairwise products of two families, inside one block algebra
std::vector<Vec> product_span(const Algebra& alg, const std::vector<Vec>& u,
                              const std::vector<Vec>& v) {
  std::vector<Vec> prods;
  for (const auto& x : u)
    for (const auto& y : v) prods.push_back(alg.multiply(x, y));
  return row_space_basis(alg.field(), prods);
}

}  // namespace

TriangularSystem triangularize(const OperatorSystem& s, const Decomposition& d) {
  if (!d.residue_ok)
    fail(errc::residue_assumption_failed, "residue check failed; cannot triangularize");
  const Field& f = s.algebra.field();
  int dim = s.algebra.dim();

  TriangularSystem t;
  t.field = f;
  t.source = s;
  t.endos = associated_endomorphisms(s, d);

  // per block: sigma direction = block unit, eta basis adapted to the
  // filtration m > m^2 > ... (level 1 slots first)
  std::vector<Vec> new_cols;  // ambient coordinates
  int slot = 0;
  for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
    const LocalBlock& lb = d.blocks[bi];
    TriBlock tb;
    tb.sigma_slot = slot++;
    for (const auto& e : t.endos)
      if (e.block == static_cast<int>(bi)) tb.endo_index = e.index;

    auto embed = [&](const Vec& block_coords) {
      Vec v(dim, Scalar::zero(f));
      for (int i = 0; i < lb.dim; ++i)
        for (int k = 0; k < dim; ++k) v[k] += lb.embedding[i][k] * block_coords[i];
      return v;
    };
    new_cols.push_back(embed(lb.unit));

    // powers of the maximal ideal, block coordinates
    std::vector<std::vector<Vec>> powers;  // powers[0] = m
    if (!lb.max_ideal.empty()) {
      powers.push_back(lb.max_ideal);
      while (!powers.back().empty())
        powers.push_back(product_span(lb.algebra, lb.max_ideal, powers.back()));
      powers.pop_back();  // drop the zero level
    }
    for (std::size_t lev = 0; lev < powers.size(); ++lev) {
      // level lev+1 vectors: extend a basis of the next power to this one
      std::vector<Vec> chosen =
          lev + 1 < powers.size() ? powers[lev + 1] : std::vector<Vec>{};
      for (const auto& v : powers[lev]) {
        if (in_span(f, chosen, v)) continue;
        chosen.push_back(v);
        tb.eta_slots.push_back(slot++);
        tb.eta_levels.push_back(static_cast<int>(lev) + 1);
        new_cols.push_back(embed(v));
      }
    }
    t.blocks.push_back(std::move(tb));
  }

  t.basis = Matrix::from_cols(f, new_cols);
  t.basis_inv = t.basis.inverse();

  // structure constants in the new basis
  std::vector<Scalar> consts(static_cast<std::size_t>(dim) * dim * dim,
                             Scalar::zero(f));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Vec prod = t.basis_inv.apply(s.algebra.multiply(new_cols[i], new_cols[j]));
      for (int k = 0; k < dim; ++k)
        consts[(static_cast<std::size_t>(i) * dim + j) * dim + k] = prod[k];
    }
  t.transformed =
      build_algebra(f, dim, std::move(consts), t.basis_inv.apply(s.algebra.unit()));

  // the unit must be the indicator of the sigma slots
  for (int j = 0; j < dim; ++j) {
    bool sigma = t.is_sigma_slot(j);
    const Scalar& u = t.transformed.unit()[j];
    if (sigma ? !u.is_one() : !u.is_zero())
      fail(errc::internal, "triangular unit is not the sigma-slot indicator");
  }

  // read off b_{k,l}(j) per block and check the support condition
  for (std::size_t bi = 0; bi < t.blocks.size(); ++bi) {
    const TriBlock& tb = t.blocks[bi];
    int r = static_cast<int>(tb.eta_slots.size());
    for (int k = 1; k <= r; ++k)
      for (int l = 1; l <= r; ++l) {
        int gk = tb.eta_slots[k - 1], gl = tb.eta_slots[l - 1];
        for (int target = 0; target < dim; ++target) {
          const Scalar& c = t.transformed.constant(gk, gl, target);
          if (c.is_zero()) continue;
          int tb_of_target = t.block_of_slot(target);
          if (tb_of_target != static_cast<int>(bi) || t.is_sigma_slot(target))
            fail(errc::internal, "eta product leaves the block radical");
          int j = 1;
          while (tb.eta_slots[j - 1] != target) ++j;
          if (j <= std::max(k, l))
            fail(errc::internal, "eta product violates the support condition");
          if (k <= l) t.constants.push_back({static_cast<int>(bi), k, l, j, c});
        }
      }
  }
  return t;
}

ProductRule product_rule(const TriangularSystem& t, int slot) {
  if (slot < 0 || slot >= t.slot_count())
    fail(errc::bad_slot, "slot out of range: " + std::to_string(slot));
  const TriBlock& tb = t.blocks[t.block_of_slot(slot)];

  ProductRule rule;
  rule.slot = slot;
  rule.sigma_slot = tb.sigma_slot;
  if (slot == tb.sigma_slot) return rule;  // multiplicative, empty remainder

  // l = sigma slot: R_{j,0}(x) = F_j(x)
  LinearForm self;
  self.terms.push_back({slot, Scalar::one(t.field)});
  rule.remainders.push_back({tb.sigma_slot, std::move(self)});

  int j_loc = 1;
  while (tb.eta_slots[j_loc - 1] != slot) ++j_loc;
  for (int l_loc = 1; l_loc < j_loc; ++l_loc) {
    LinearForm form;
    for (int k_loc = 1; k_loc < j_loc; ++k_loc) {
      Scalar c = t.transformed.constant(tb.eta_slots[k_loc - 1],
                                        tb.eta_slots[l_loc - 1], slot);
      if (!c.is_zero()) form.terms.push_back({tb.eta_slots[k_loc - 1], c});
    }
    if (!form.terms.empty())
      rule.remainders.push_back({tb.eta_slots[l_loc - 1], std::move(form)});
  }
  return rule;
}

}  // namespace opfield
