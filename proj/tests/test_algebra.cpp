#include <doctest.h>

#include "opfield/decompose.hpp"
#include "opfield/presets.hpp"
#include "test_support.hpp"

using namespace opfield;
using opfield::test::random_scalar;
using opfield::test::thrown_code;

TEST_SUITE_BEGIN("algebra-core");

namespace {

Algebra preset_algebra(const std::string& name) {
  return system_from_decl(preset_decl(name)).algebra;
}

Vec random_vec(std::mt19937_64& rng, const Algebra& a) {
  Vec v = a.zero_vector();
  for (auto& e : v) e = random_scalar(rng, a.field());
  return v;
}

// independent triple-product oracle working on a raw constants array
Vec raw_mul(const Field& f, int d, const std::vector<Scalar>& c, const Vec& x,
            const Vec& y) {
  Vec out(d, Scalar::zero(f));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        out[k] += x[i] * y[j] * c[(static_cast<std::size_t>(i) * d + j) * d + k];
  return out;
}

}  // namespace

TEST_CASE("build_algebra accepts the commuting-derivations constants") {
  Algebra a = preset_algebra("nderiv:3");
  CHECK(a.dim() == 4);
  CHECK(a.unit() == Vec{Scalar::one(a.field()), Scalar::zero(a.field()),
                        Scalar::zero(a.field()), Scalar::zero(a.field())});
}

TEST_CASE("build_algebra accepts the one-dimensional field") {
  Field q = Field::rationals();
  Algebra a = build_algebra(q, 1, {Scalar::one(q)});
  CHECK(a.dim() == 1);
  CHECK(a.unit() == Vec{Scalar::one(q)});
}

TEST_CASE("build_algebra rejects a non-associative table with a witness") {
  Field q = Field::rationals();
  Scalar z = Scalar::zero(q), one = Scalar::one(q);
  // e1 e1 = e0, e1 e2 = e1, e2 e2 = e2, everything else 0
  std::vector<Scalar> c(27, z);
  auto put = [&](int i, int j, int k) {
    c[(static_cast<std::size_t>(i) * 3 + j) * 3 + k] = one;
  };
  put(1, 1, 0);
  put(1, 2, 1);
  put(2, 1, 1);
  put(2, 2, 2);

  // hand oracle: some triple fails associativity under the raw expansion
  bool violated = false;
  for (int i = 0; i < 3 && !violated; ++i)
    for (int j = 0; j < 3 && !violated; ++j)
      for (int k = 0; k < 3 && !violated; ++k) {
        Vec ei(3, z), ej(3, z), ek(3, z);
        ei[i] = one;
        ej[j] = one;
        ek[k] = one;
        Vec left = raw_mul(q, 3, c, raw_mul(q, 3, c, ei, ej), ek);
        Vec right = raw_mul(q, 3, c, ei, raw_mul(q, 3, c, ej, ek));
        if (left != right) violated = true;
      }
  CHECK(violated);

  auto code = thrown_code([&] { build_algebra(q, 3, c); });
  CHECK(code == errc::not_associative);
  try {
    build_algebra(q, 3, c);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("e_") != std::string::npos);  // witness triple
  }
}

TEST_CASE("build_algebra rejects non-commutative constants") {
  Field q = Field::rationals();
  Scalar z = Scalar::zero(q), one = Scalar::one(q);
  std::vector<Scalar> c(8, z);
  c[(0 * 2 + 1) * 2 + 0] = one;  // e0 e1 = e0 but e1 e0 = 0
  CHECK(thrown_code([&] { build_algebra(q, 2, c); }) == errc::not_commutative);
}

TEST_CASE("unit handling") {
  SUBCASE("solved when omitted") {
    // dsigma without a declared unit: 1 = e0 + e2
    SystemDecl d = preset_decl("dsigma");
    d.unit.reset();
    Algebra a = system_from_decl(d).algebra;
    Field q = a.field();
    CHECK(a.unit() == Vec{Scalar::one(q), Scalar::zero(q), Scalar::one(q)});
  }
  SUBCASE("NoUnit when none exists") {
    CHECK(thrown_code([] { preset_algebra("single:2,0,0"); }) == errc::no_unit);
  }
  SUBCASE("UnitMismatch for a wrong declaration") {
    SystemDecl d = preset_decl("trunc3");
    (*d.unit)[1] = Scalar::one(d.field);
    CHECK(thrown_code([&] { system_from_decl(d); }) == errc::unit_mismatch);
  }
}

TEST_CASE("multiply matches the displayed relations") {
  Algebra a = preset_algebra("dsigma");
  std::mt19937_64 rng(5);
  Vec x = random_vec(rng, a);
  CHECK(a.multiply(a.unit(), x) == x);

  Vec e0 = a.basis_vector(0), e1 = a.basis_vector(1), e2 = a.basis_vector(2);
  CHECK(a.multiply(e1, e1) == a.zero_vector());
  CHECK(a.multiply(e0, e2) == a.zero_vector());
  CHECK(a.multiply(e0, e1) == e1);
  CHECK(a.multiply(e2, e2) == e2);

  CHECK(thrown_code([&] { a.multiply(Vec{}, e0); }) == errc::dimension_mismatch);
}

TEST_CASE("radical of the preset algebras") {
  SUBCASE("commuting derivations: span{e_1..e_n}") {
    Algebra a = preset_algebra("nderiv:3");
    auto rad = a.radical();
    REQUIRE(rad.size() == 3);
    for (int i = 0; i < 3; ++i) {
      CHECK(rad[i][0].is_zero());
      CHECK(rad[i][i + 1].is_one());
    }
  }
  SUBCASE("derivation+endomorphism: span{e_1}, by brute nilpotency scan") {
    Algebra a = preset_algebra("dsigma");
    auto rad = a.radical();
    REQUIRE(rad.size() == 1);
    CHECK(rad[0] == Vec{Scalar::zero(a.field()), Scalar::one(a.field()),
                        Scalar::zero(a.field())});
    // oracle: scan small-coordinate vectors for nilpotent multiplication
    std::vector<Vec> nilpotent;
    for (int c0 = -2; c0 <= 2; ++c0)
      for (int c1 = -2; c1 <= 2; ++c1)
        for (int c2 = -2; c2 <= 2; ++c2) {
          Field q = a.field();
          Vec v{Scalar::from_int(q, c0), Scalar::from_int(q, c1),
                Scalar::from_int(q, c2)};
          if (a.mult_matrix(v).pow(a.dim()).is_zero()) nilpotent.push_back(v);
        }
    auto span = row_space_basis(a.field(), nilpotent);
    CHECK(span == rad);
  }
  SUBCASE("split single-operator algebra is semisimple") {
    Algebra a = preset_algebra("single:0,0,1");
    CHECK(a.radical().empty());
  }
  SUBCASE("characteristic must exceed the dimension") {
    Algebra a = preset_algebra("sqrt2@2");
    CHECK(thrown_code([&] { a.radical(); }) == errc::unsupported_characteristic);
  }
}

TEST_CASE("radical elements have nilpotent multiplication") {
  for (const char* name : {"nderiv:2", "dsigma", "trunc3"}) {
    Algebra a = preset_algebra(name);
    for (const auto& r : a.radical())
      CHECK(a.mult_matrix(r).pow(a.dim()).is_zero());
  }
}

TEST_CASE("local_decompose: fixtures") {
  SUBCASE("dsigma splits into blocks of dims {2, 1}") {
    Decomposition dec = local_decompose(preset_algebra("dsigma"));
    REQUIRE(dec.blocks.size() == 2);
    CHECK(dec.blocks[0].dim == 2);
    CHECK(dec.blocks[1].dim == 1);
    CHECK(dec.residue_ok);
    CHECK(dec.blocks[0].max_ideal.size() == 1);
    CHECK(dec.blocks[1].max_ideal.empty());
  }
  SUBCASE("nderiv:3 is local") {
    Decomposition dec = local_decompose(preset_algebra("nderiv:3"));
    REQUIRE(dec.blocks.size() == 1);
    CHECK(dec.blocks[0].dim == 4);
    CHECK(dec.blocks[0].max_ideal.size() == 3);
    CHECK(dec.residue_ok);
  }
  SUBCASE("sqrt2 fails the residue check with witness x^2 - 2") {
    Decomposition dec = local_decompose(preset_algebra("sqrt2"));
    REQUIRE(dec.blocks.size() == 1);
    CHECK(dec.blocks[0].dim == 2);
    CHECK_FALSE(dec.residue_ok);
    REQUIRE(dec.witnesses.size() == 1);
    CHECK(dec.witnesses[0].to_string() == "x^2 - 2");

    ResidueReport rep = check_residue_assumption(dec);
    CHECK_FALSE(rep.pass);
    CHECK(rep.entries[0].residue_dim == 2);
  }
  SUBCASE("dimension-1 algebra passes") {
    Field q = Field::rationals();
    Decomposition dec = local_decompose(build_algebra(q, 1, {Scalar::one(q)}));
    CHECK(check_residue_assumption(dec).pass);
  }
  SUBCASE("nilpotent thickening of x^2 = 2 reports the squarefree witness") {
    // Q[x]/((x^2-2)^2): local, residue field of dimension 2, radical of
    // dimension 2; the witness is x^2 - 2, not its square
    Field q = Field::rationals();
    auto n = [&](long v) { return Scalar::from_int(q, v); };
    std::vector<Scalar> c(64, n(0));
    auto put = [&](int i, int j, std::vector<long> coords) {
      for (int k = 0; k < 4; ++k) {
        c[(static_cast<std::size_t>(i) * 4 + j) * 4 + k] = n(coords[k]);
        c[(static_cast<std::size_t>(j) * 4 + i) * 4 + k] = n(coords[k]);
      }
    };
    put(0, 0, {1, 0, 0, 0});
    put(0, 1, {0, 1, 0, 0});
    put(0, 2, {0, 0, 1, 0});
    put(0, 3, {0, 0, 0, 1});
    put(1, 1, {0, 0, 1, 0});
    put(1, 2, {0, 0, 0, 1});
    put(1, 3, {-4, 0, 4, 0});
    put(2, 2, {-4, 0, 4, 0});
    put(2, 3, {0, -4, 0, 4});
    put(3, 3, {-16, 0, 12, 0});
    Algebra a = build_algebra(q, 4, std::move(c));
    Decomposition dec = local_decompose(a);
    REQUIRE(dec.blocks.size() == 1);
    CHECK(dec.blocks[0].max_ideal.size() == 2);
    CHECK(dec.blocks[0].residue_dim() == 2);
    CHECK_FALSE(dec.residue_ok);
    // x generates the residue extension with x^2 - 2; x^3 contributes the
    // minimal polynomial of 2*sqrt(2); both appear squarefree
    REQUIRE(dec.witnesses.size() == 2);
    CHECK(dec.witnesses[0].to_string() == "x^2 - 2");
    CHECK(dec.witnesses[1].to_string() == "x^2 - 8");
  }
  SUBCASE("x^2 = 2 splits mod 7 (2 = 3^2) but not mod 5") {
    Decomposition mod7 = local_decompose(preset_algebra("sqrt2@7"));
    CHECK(mod7.blocks.size() == 2);
    CHECK(mod7.residue_ok);

    Decomposition mod5 = local_decompose(preset_algebra("sqrt2@5"));
    CHECK(mod5.blocks.size() == 1);
    CHECK_FALSE(mod5.residue_ok);
    REQUIRE(mod5.witnesses.size() == 1);
    CHECK(mod5.witnesses[0].to_string() == "x^2 + 3");  // -2 mod 5
  }
}

TEST_CASE("residue functionals") {
  SUBCASE("nderiv block: coordinate along e_0") {
    Decomposition dec = local_decompose(preset_algebra("nderiv:3"));
    const LocalBlock& b = dec.blocks[0];
    Vec rho = residue_functional(b);
    CHECK(rho == Vec{Scalar::one(b.algebra.field()), Scalar::zero(b.algebra.field()),
                     Scalar::zero(b.algebra.field()), Scalar::zero(b.algebra.field())});
  }
  SUBCASE("dsigma blocks") {
    Decomposition dec = local_decompose(preset_algebra("dsigma"));
    Field q = dec.ambient.field();
    Vec rho0 = residue_functional(dec.blocks[0]);
    // kills the image of e_1
    Vec t1 = dec.blocks[0].theta.apply(dec.ambient.basis_vector(1));
    Scalar dot = Scalar::zero(q);
    for (int i = 0; i < dec.blocks[0].dim; ++i) dot += rho0[i] * t1[i];
    CHECK(dot.is_zero());
    CHECK(residue_functional(dec.blocks[1]) == Vec{Scalar::one(q)});
  }
  SUBCASE("failed block raises ResidueNotBase") {
    Decomposition dec = local_decompose(preset_algebra("sqrt2"));
    CHECK(thrown_code([&] { residue_functional(dec.blocks[0]); }) ==
          errc::residue_not_base);
  }
}

TEST_CASE("decomposition invariants") {
  std::mt19937_64 rng(77);
  for (const char* name : {"nderiv:2", "nderiv:3", "dsigma", "trunc3",
                           "single:0,0,1", "sqrt2", "dsigma@5"}) {
    CAPTURE(name);
    Algebra a = preset_algebra(name);
    Decomposition dec = local_decompose(a);

    int dim_sum = 0;
    for (const auto& b : dec.blocks) dim_sum += b.dim;
    CHECK(dim_sum == a.dim());

    // reconstruction: multiply blockwise, map back, compare
    for (int trial = 0; trial < 10; ++trial) {
      Vec x = random_vec(rng, a), y = random_vec(rng, a);
      Vec combined(a.dim(), Scalar::zero(a.field()));
      int off = 0;
      for (const auto& b : dec.blocks) {
        Vec px = b.theta.apply(x), py = b.theta.apply(y);
        Vec pz = b.algebra.multiply(px, py);
        for (int i = 0; i < b.dim; ++i) combined[off + i] = pz[i];
        off += b.dim;
      }
      CHECK(dec.reconstruction.apply(combined) == a.multiply(x, y));
    }

    // block units pull back to the unit
    Vec unit_concat(a.dim(), Scalar::zero(a.field()));
    int off = 0;
    for (const auto& b : dec.blocks) {
      for (int i = 0; i < b.dim; ++i) unit_concat[off + i] = b.unit[i];
      off += b.dim;
    }
    CHECK(dec.reconstruction.apply(unit_concat) == a.unit());

    // theta_i is an algebra map onto its block
    for (const auto& b : dec.blocks) {
      CHECK(b.theta.apply(a.unit()) == b.unit);
      for (int trial = 0; trial < 5; ++trial) {
        Vec x = random_vec(rng, a), y = random_vec(rng, a);
        CHECK(b.theta.apply(a.multiply(x, y)) ==
              b.algebra.multiply(b.theta.apply(x), b.theta.apply(y)));
      }
    }

    // idempotence: each block algebra is already local
    for (const auto& b : dec.blocks) {
      Decomposition again = local_decompose(b.algebra);
      CHECK(again.blocks.size() == 1);
      CHECK(again.blocks[0].dim == b.dim);
    }

    // determinism: bit-identical second run
    Decomposition rerun = local_decompose(a);
    REQUIRE(rerun.blocks.size() == dec.blocks.size());
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
      CHECK(rerun.blocks[i].embedding == dec.blocks[i].embedding);
      CHECK(rerun.blocks[i].theta == dec.blocks[i].theta);
      CHECK(rerun.blocks[i].max_ideal == dec.blocks[i].max_ideal);
    }
  }
}

TEST_SUITE_END();
