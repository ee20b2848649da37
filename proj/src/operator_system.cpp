#include "opfield/operator_system.hpp"

#include <algorithm>
#include <set>

namespace opfield {

OperatorSystem build_system(const Algebra& a, std::vector<std::string> names,
                            std::vector<std::string> invertible) {
  if (static_cast<int>(names.size()) != a.dim())
    fail(errc::arity_mismatch,
         "expected " + std::to_string(a.dim()) + " operator names, got " +
             std::to_string(names.size()));
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second)
      fail(errc::duplicate_name, "duplicate operator name: " + n);
  for (const auto& n : invertible)
    if (!seen.count(n))
      fail(errc::invalid_argument,
           "invertible declaration names unknown operator: " + n);

  OperatorSystem s;
  s.algebra = a;
  s.names = std::move(names);
  s.first_coordinate = a.unit()[0].is_one();
  s.invertible = std::move(invertible);
  return s;
}

bool EndoDescriptor::is_identity() const {
  if (coeffs.empty() || !coeffs[0].is_one()) return false;
  for (std::size_t k = 1; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero()) return false;
  return true;
}

std::vector<EndoDescriptor> associated_endomorphisms(const OperatorSystem& s,
                                                     const Decomposition& d) {
  if (!d.residue_ok)
    fail(errc::residue_assumption_failed,
         "residue check failed; no associated endomorphisms");
  const Field& f = s.algebra.field();
  int dim = s.algebra.dim();

  std::vector<EndoDescriptor> per_block;
  for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
    const LocalBlock& b = d.blocks[bi];
    EndoDescriptor e;
    e.block = static_cast<int>(bi);
    e.coeffs.assign(dim, Scalar::zero(f));
    // sigma(x) = rho(theta(phi(x))): coefficient of F_k is rho(theta(e_k))
    for (int k = 0; k < dim; ++k) {
      Vec tk = b.theta.apply(s.algebra.basis_vector(k));
      Scalar c = Scalar::zero(f);
      for (int i = 0; i < b.dim; ++i) c += b.rho[i] * tk[i];
      e.coeffs[k] = c;
    }
    per_block.push_back(std::move(e));
  }

  // identity first, remaining blocks in decomposition order
  std::vector<EndoDescriptor> family;
  int id_at = -1;
  for (std::size_t i = 0; i < per_block.size(); ++i)
    if (per_block[i].is_identity()) {
      id_at = static_cast<int>(i);
      break;
    }
  if (id_at < 0)
    fail(errc::internal, "identity endomorphism missing from extracted family");
  family.push_back(per_block[id_at]);
  for (std::size_t i = 0; i < per_block.size(); ++i)
    if (static_cast<int>(i) != id_at) family.push_back(per_block[i]);
  for (std::size_t i = 0; i < family.size(); ++i) {
    family[i].index = static_cast<int>(i);
    // invertibility: the identity, or a single operator declared invertible
    if (family[i].is_identity()) {
      family[i].invertible = true;
      continue;
    }
    int support = -1;
    bool single = true;
    for (int k = 0; k < dim; ++k) {
      if (family[i].coeffs[k].is_zero()) continue;
      if (support >= 0 || !family[i].coeffs[k].is_one()) single = false;
      support = k;
    }
    family[i].invertible =
        single && support >= 0 &&
        std::find(s.invertible.begin(), s.invertible.end(), s.names[support]) !=
            s.invertible.end();
  }
  return family;
}

SingleOpClassification classify_single_operator(const Scalar& a, const Scalar& b,
                                                const Scalar& c) {
  const Field& f = a.field();
  if (b.field() != f || c.field() != f)
    fail(errc::field_mismatch, "classification constants in different fields");
  if (b * b - b != a * c)
    fail(errc::constraint_violated,
         "b^2 - b != a c  (b^2 - b = " + (b * b - b).to_string() +
             ", a c = " + (a * c).to_string() + ")");

  SingleOpClassification cl{SingleOpCase::trivial_scalar, a, b, c, "", {}};

  auto id_term = [&](const Scalar& coef) {
    if (coef.is_zero()) return std::string();
    std::string cs = coef.to_string();
    if (!cs.empty() && cs[0] == '-') return " - " + (coef.is_one() ? "" : cs.substr(1) + " ") + "id";
    return " + " + (coef.is_one() ? "" : cs + " ") + "id";
  };

  if (c.is_zero()) {
    if (b.is_zero()) {
      cl.tag = SingleOpCase::trivial_scalar;
      cl.description = "F = " + a.to_string() + " id";
    } else if (b.is_one()) {
      cl.tag = SingleOpCase::derivation;
      cl.description = "d = F" + id_term(a);
    } else {
      fail(errc::degenerate_derivation,
           "c = 0 requires b in {0, 1}, got b = " + b.to_string());
    }
  } else {
    cl.tag = SingleOpCase::endomorphism;
    std::string head = c.is_one() ? "F" : c.to_string() + " F";
    cl.description = "s = " + head + id_term(b);
    // orthogonal basis: e'_1 = c^{-1} e_1, e'_0 = e_0 - b e'_1
    Scalar cinv = c.inverse();
    Vec e1p{Scalar::zero(f), cinv};
    Vec e0p{Scalar::one(f), -(b * cinv)};
    cl.new_basis = {e0p, e1p};
  }
  return cl;
}

Algebra single_operator_algebra(const Scalar& a, const Scalar& b, const Scalar& c) {
  const Field& f = a.field();
  auto z = Scalar::zero(f);
  auto one = Scalar::one(f);
  std::vector<Scalar> consts(8, z);
  auto set = [&](int i, int j, const Scalar& c0, const Scalar& c1) {
    consts[(static_cast<std::size_t>(i) * 2 + j) * 2 + 0] = c0;
    consts[(static_cast<std::size_t>(i) * 2 + j) * 2 + 1] = c1;
  };
  set(0, 0, one, a);
  set(0, 1, z, b);
  set(1, 0, z, b);
  set(1, 1, z, c);
  return build_algebra(f, 2, std::move(consts));
}

}  // namespace opfield
