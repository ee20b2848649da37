#include <doctest.h>

#include "opfield/presets.hpp"
#include "opfield/triangular.hpp"
#include "test_support.hpp"

using namespace opfield;
using opfield::test::random_scalar;
using opfield::test::thrown_code;

TEST_SUITE_BEGIN("operator-system");

namespace {

OperatorSystem preset_system(const std::string& name) {
  return system_from_decl(preset_decl(name));
}

TriangularSystem preset_triangular(const std::string& name) {
  OperatorSystem s = preset_system(name);
  return triangularize(s, local_decompose(s.algebra));
}

}  // namespace

TEST_CASE("build_system") {
  SUBCASE("commuting derivations, flag set") {
    OperatorSystem s = preset_system("nderiv:3");
    CHECK(s.first_coordinate);
    CHECK(s.names == std::vector<std::string>{"id", "d1", "d2", "d3"});
  }
  SUBCASE("derivation+endomorphism: unit e_0 + e_2 still has coordinate 1") {
    OperatorSystem s = preset_system("dsigma");
    CHECK(s.first_coordinate);
  }
  SUBCASE("arity and name collisions") {
    Algebra a = preset_system("dsigma").algebra;
    CHECK(thrown_code([&] { build_system(a, {"id", "d"}); }) ==
          errc::arity_mismatch);
    CHECK(thrown_code([&] { build_system(a, {"id", "d", "d"}); }) ==
          errc::duplicate_name);
  }
}

TEST_CASE("associated endomorphisms") {
  SUBCASE("single operator with c != 0: {id, s = b id + c F}") {
    OperatorSystem s = preset_system("single:3,3,2");  // b^2-b = 6 = ac
    auto endos = associated_endomorphisms(s, local_decompose(s.algebra));
    REQUIRE(endos.size() == 2);
    CHECK(endos[0].is_identity());
    Field q = s.algebra.field();
    CHECK(endos[1].coeffs == Vec{Scalar::from_int(q, 3), Scalar::from_int(q, 2)});
  }
  SUBCASE("single operator with c = 0: identity only") {
    OperatorSystem s = preset_system("single:5,1,0");
    auto endos = associated_endomorphisms(s, local_decompose(s.algebra));
    REQUIRE(endos.size() == 1);
    CHECK(endos[0].is_identity());
  }
  SUBCASE("dsigma: {id, F_2}, and F_2 is declared invertible") {
    OperatorSystem s = preset_system("dsigma");
    auto endos = associated_endomorphisms(s, local_decompose(s.algebra));
    REQUIRE(endos.size() == 2);
    Field q = s.algebra.field();
    CHECK(endos[0].coeffs == Vec{Scalar::one(q), Scalar::zero(q), Scalar::zero(q)});
    CHECK(endos[1].coeffs == Vec{Scalar::zero(q), Scalar::zero(q), Scalar::one(q)});
    CHECK(endos[0].invertible);
    CHECK(endos[1].invertible);
  }
  SUBCASE("failed residue check is refused") {
    OperatorSystem s = preset_system("sqrt2");
    CHECK(thrown_code([&] {
            associated_endomorphisms(s, local_decompose(s.algebra));
          }) == errc::residue_assumption_failed);
  }
}

TEST_CASE("classify_single_operator") {
  Field q = Field::rationals();
  auto rat = [&](long n, long d = 1) { return Scalar::rational(n, d); };

  SUBCASE("derivation: (0, 1, 0)") {
    auto cl = classify_single_operator(rat(0), rat(1), rat(0));
    CHECK(cl.tag == SingleOpCase::derivation);
    CHECK(cl.description == "d = F");
  }
  SUBCASE("derivation with shift: (2, 1, 0)") {
    auto cl = classify_single_operator(rat(2), rat(1), rat(0));
    CHECK(cl.tag == SingleOpCase::derivation);
    CHECK(cl.description == "d = F + 2 id");
  }
  SUBCASE("endomorphism: (0, 0, 1)") {
    auto cl = classify_single_operator(rat(0), rat(0), rat(1));
    CHECK(cl.tag == SingleOpCase::endomorphism);
    CHECK(cl.description == "s = F");
    REQUIRE(cl.new_basis.size() == 2);
    // orthogonal idempotents of the split algebra
    Algebra a = single_operator_algebra(rat(0), rat(0), rat(1));
    Vec e0p = cl.new_basis[0], e1p = cl.new_basis[1];
    CHECK(a.multiply(e0p, e0p) == e0p);
    CHECK(a.multiply(e1p, e1p) == e1p);
    CHECK(a.multiply(e0p, e1p) == a.zero_vector());
  }
  SUBCASE("trivial: (5, 0, 0)") {
    auto cl = classify_single_operator(rat(5), rat(0), rat(0));
    CHECK(cl.tag == SingleOpCase::trivial_scalar);
    CHECK(cl.description == "F = 5 id");
  }
  SUBCASE("constraint violation: (1, 3, 1)") {
    CHECK(thrown_code([&] {
            classify_single_operator(rat(1), rat(3), rat(1));
          }) == errc::constraint_violated);
  }
  SUBCASE("orthogonal idempotents for random endomorphism cases") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
      Scalar b = random_scalar(rng, q);
      Scalar c = random_scalar(rng, q, true);
      Scalar a = (b * b - b) / c;
      auto cl = classify_single_operator(a, b, c);
      REQUIRE(cl.tag == SingleOpCase::endomorphism);
      Algebra alg = single_operator_algebra(a, b, c);
      Vec e0p = cl.new_basis[0], e1p = cl.new_basis[1];
      CHECK(alg.multiply(e0p, e0p) == e0p);
      CHECK(alg.multiply(e1p, e1p) == e1p);
      CHECK(alg.multiply(e0p, e1p) == alg.zero_vector());
    }
  }
}

TEST_CASE("triangularize: commuting derivations are already triangular") {
  TriangularSystem t = preset_triangular("nderiv:3");
  CHECK(t.constants.empty());  // m^2 = 0
  REQUIRE(t.blocks.size() == 1);
  CHECK(t.blocks[0].sigma_slot == 0);
  CHECK(t.blocks[0].eta_slots == std::vector<int>{1, 2, 3});
  CHECK(t.blocks[0].eta_levels == std::vector<int>{1, 1, 1});
  CHECK(t.basis == Matrix::identity(t.field, 4));
}

TEST_CASE("triangularize: truncated power series") {
  TriangularSystem t = preset_triangular("trunc3");
  REQUIRE(t.blocks.size() == 1);
  CHECK(t.blocks[0].eta_levels == std::vector<int>{1, 2});
  REQUIRE(t.constants.size() == 1);
  CHECK(t.constants[0].k == 1);
  CHECK(t.constants[0].l == 1);
  CHECK(t.constants[0].j == 2);
  CHECK(t.constants[0].value.is_one());

  // slot 2 rule: F_2(xy) = sigma(x) F_2(y) + F_1(x) F_1(y) + F_2(x) sigma(y)
  ProductRule r = product_rule(t, 2);
  CHECK(r.sigma_slot == 0);
  REQUIRE(r.remainders.size() == 2);
  CHECK(r.remainders[0].first == 0);  // l = sigma slot
  REQUIRE(r.remainders[0].second.terms.size() == 1);
  CHECK(r.remainders[0].second.terms[0].first == 2);
  CHECK(r.remainders[0].second.terms[0].second.is_one());
  CHECK(r.remainders[1].first == 1);
  REQUIRE(r.remainders[1].second.terms.size() == 1);
  CHECK(r.remainders[1].second.terms[0].first == 1);
  CHECK(r.remainders[1].second.terms[0].second.is_one());
}

TEST_CASE("triangularize: dsigma block rules") {
  TriangularSystem t = preset_triangular("dsigma");
  REQUIRE(t.blocks.size() == 2);
  CHECK(t.blocks[0].sigma_slot == 0);
  CHECK(t.blocks[0].eta_slots == std::vector<int>{1});
  CHECK(t.blocks[1].sigma_slot == 2);
  CHECK(t.blocks[1].eta_slots.empty());
  CHECK(t.blocks[0].endo_index == 0);
  CHECK(t.blocks[1].endo_index == 1);

  // F_1(xy) = x F_1(y) + F_1(x) y
  ProductRule r1 = product_rule(t, 1);
  CHECK(r1.sigma_slot == 0);
  REQUIRE(r1.remainders.size() == 1);
  CHECK(r1.remainders[0].first == 0);
  CHECK(r1.remainders[0].second.terms ==
        std::vector<std::pair<int, Scalar>>{{1, Scalar::one(t.field)}});

  // F_2(xy) = F_2(x) F_2(y)
  ProductRule r2 = product_rule(t, 2);
  CHECK(r2.slot == 2);
  CHECK(r2.sigma_slot == 2);
  CHECK(r2.remainders.empty());

  CHECK(thrown_code([&] { product_rule(t, 5); }) == errc::bad_slot);
}

TEST_CASE("triangular invariants over the presets") {
  for (const char* name : {"nderiv:2", "nderiv:3", "dsigma", "trunc3",
                           "single:0,0,1", "single:2,1,0", "dsigma@7"}) {
    CAPTURE(name);
    OperatorSystem s = preset_system(name);
    Decomposition dec = local_decompose(s.algebra);
    TriangularSystem t = triangularize(s, dec);
    int d = t.slot_count();

    // support condition: b_{k,l}(j) != 0 only for j > max(k,l)
    for (const auto& b : t.constants) CHECK(b.j > std::max(b.k, b.l));

    // filtration: eta of level p times eta of level q lands in levels >= p+q
    for (const auto& tb : t.blocks) {
      for (std::size_t ki = 0; ki < tb.eta_slots.size(); ++ki)
        for (std::size_t li = 0; li < tb.eta_slots.size(); ++li) {
          for (int target = 0; target < d; ++target) {
            const Scalar& c =
                t.transformed.constant(tb.eta_slots[ki], tb.eta_slots[li], target);
            if (c.is_zero()) continue;
            // target must be an eta slot of the same block at level >= p+q
            auto it = std::find(tb.eta_slots.begin(), tb.eta_slots.end(), target);
            REQUIRE(it != tb.eta_slots.end());
            int lev = tb.eta_levels[it - tb.eta_slots.begin()];
            CHECK(lev >= tb.eta_levels[ki] + tb.eta_levels[li]);
          }
        }
    }

    // basis invertibility, exactly
    CHECK(t.basis * t.basis_inv == Matrix::identity(t.field, d));

    // conjugating back reproduces the original structure constants
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Vec prod_new = t.transformed.multiply(t.basis_inv.apply(s.algebra.basis_vector(i)),
                                              t.basis_inv.apply(s.algebra.basis_vector(j)));
        Vec back = t.basis.apply(prod_new);
        CHECK(back == s.algebra.multiply(s.algebra.basis_vector(i),
                                         s.algebra.basis_vector(j)));
      }

    // cross-block products vanish
    for (std::size_t b1 = 0; b1 < t.blocks.size(); ++b1)
      for (std::size_t b2 = 0; b2 < t.blocks.size(); ++b2) {
        if (b1 == b2) continue;
        std::vector<int> s1 = t.blocks[b1].eta_slots;
        s1.push_back(t.blocks[b1].sigma_slot);
        std::vector<int> s2 = t.blocks[b2].eta_slots;
        s2.push_back(t.blocks[b2].sigma_slot);
        for (int i : s1)
          for (int j : s2)
            for (int k = 0; k < d; ++k)
              CHECK(t.transformed.constant(i, j, k).is_zero());
      }
  }
}

TEST_CASE("triangularize refuses a failed residue check") {
  OperatorSystem s = preset_system("sqrt2");
  CHECK(thrown_code([&] {
          triangularize(s, local_decompose(s.algebra));
        }) == errc::residue_assumption_failed);
}

TEST_SUITE_END();
