#include <doctest.h>

#include <cstdint>

#include "opfield/growth.hpp"
#include "test_support.hpp"

using namespace opfield;
using opfield::test::thrown_code;

TEST_SUITE_BEGIN("growth");

TEST_CASE("enumerate_reduced: sizes and reducedness") {
  FreeAlphabet two{2};
  CHECK(enumerate_reduced(two, 0).size() == 1);
  auto r1 = enumerate_reduced(two, 1);
  CHECK(r1.size() == 5);  // id + 4 letters
  auto r2 = enumerate_reduced(two, 2);
  CHECK(r2.size() == 17);  // 1 + 4 + 12
  for (const auto& w : r2) CHECK(w.reduced());

  // deterministic order: repeated runs agree, words graded by length
  auto again = enumerate_reduced(two, 2);
  REQUIRE(again.size() == r2.size());
  for (std::size_t i = 0; i < r2.size(); ++i) CHECK(again[i] == r2[i]);
  for (std::size_t i = 1; i < r2.size(); ++i)
    CHECK(r2[i - 1].size() <= r2[i].size());
}

TEST_CASE("free shells grow by a factor of 3") {
  FreeAlphabet two{2};
  GrowthReport rep = growth_function(two, RelationFamily{}, 5, 5);
  REQUIRE(rep.rows.size() == 6);
  CHECK(rep.rows[0].shell == 1);
  CHECK(rep.rows[1].shell == 4);
  for (int r = 2; r <= 5; ++r)
    CHECK(rep.rows[r].shell == 3 * rep.rows[r - 1].shell);
  std::uint64_t expect = 1;
  for (int r = 0; r <= 5; ++r) {
    CHECK(rep.rows[r].classes == 2 * expect - 1);  // 2*3^r - 1
    CHECK(rep.rows[r].total == rep.rows[r].classes);
    expect *= 3;
  }
}

TEST_CASE("free reduction in concat") {
  GrowthWord s1 = GrowthWord::power(0, 1);
  GrowthWord s1i = GrowthWord::power(0, -1);
  CHECK(s1.concat(s1i).size() == 0);
  CHECK(s1.concat(s1).size() == 2);
  CHECK(GrowthWord::power(1, 3).concat(GrowthWord::power(1, -3)).size() == 0);
}

TEST_CASE("single relation s1 = id collapses three words of the ball of radius 1") {
  FreeAlphabet two{2};
  RelationFamily fam;
  fam.pairs.push_back({GrowthWord::power(0, 1), GrowthWord::empty()});
  GrowthReport rep = growth_function(two, fam, 1, 2);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].classes == 1);
  // hand union-find over {id, s1, s1^-1, s2, s2^-1}: s1 ~ id, and
  // prepending s1^-1 gives s1^-1 ~ id; s2, s2^-1 stay alone
  CHECK(rep.rows[1].classes == 3);
}

TEST_CASE("fixed-power family reaches the linear count 2r+1") {
  FreeAlphabet two{2};
  RelationFamily fam = RelationFamily::first_fixes_second_powers();
  GrowthReport rep = growth_function(two, fam, 4, 6);
  REQUIRE(rep.rows.size() == 5);
  for (int r = 0; r <= 4; ++r)
    CHECK(rep.rows[r].classes == static_cast<std::uint64_t>(2 * r + 1));
}

TEST_CASE("class counts are stable as the bound grows") {
  FreeAlphabet two{2};
  RelationFamily fam = RelationFamily::first_fixes_second_powers();
  GrowthReport a = growth_function(two, fam, 3, 5);
  GrowthReport b = growth_function(two, fam, 3, 7);
  for (int r = 0; r <= 3; ++r) CHECK(a.rows[r].classes == b.rows[r].classes);
}

TEST_CASE("monotone refinement: adding pairs never increases the count") {
  FreeAlphabet two{2};
  RelationFamily small;
  small.pairs.push_back({GrowthWord::power(1, 2), GrowthWord::power(1, 1)});
  RelationFamily larger = small;
  larger.pairs.push_back({GrowthWord::power(0, 1), GrowthWord::empty()});
  GrowthReport free_rep = growth_function(two, RelationFamily{}, 3, 3);
  GrowthReport small_rep = growth_function(two, small, 3, 4);
  GrowthReport larger_rep = growth_function(two, larger, 3, 4);
  for (int r = 0; r <= 3; ++r) {
    CHECK(small_rep.rows[r].classes <= free_rep.rows[r].classes);
    CHECK(larger_rep.rows[r].classes <= small_rep.rows[r].classes);
  }
}

TEST_CASE("left-closure soundness on the computed partition") {
  FreeAlphabet two{2};
  RelationFamily fam = RelationFamily::first_fixes_second_powers();
  int r = 3, bound = 4;
  auto words = enumerate_reduced(two, r);
  auto part = growth_partition(two, fam, r, bound);
  REQUIRE(part.size() == words.size());

  auto index_of = [&](const GrowthWord& w) -> int {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (words[i] == w) return static_cast<int>(i);
    return -1;
  };
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (part[i] != part[j]) continue;
      for (int letter = 0; letter < two.letter_count(); ++letter) {
        GrowthWord prefix;
        prefix.letters.push_back(static_cast<std::uint8_t>(letter));
        GrowthWord lu = prefix.concat(words[i]), lv = prefix.concat(words[j]);
        int iu = index_of(lu), iv = index_of(lv);
        if (iu < 0 || iv < 0) continue;  // left the ball of radius r
        CHECK(part[iu] == part[iv]);
      }
    }
}

TEST_CASE("input validation and BoundTooSmall") {
  FreeAlphabet two{2};
  RelationFamily fam;
  fam.pairs.push_back({GrowthWord::power(0, 5), GrowthWord::empty()});
  // the seed word does not fit in the enumerated arena
  CHECK(thrown_code([&] { growth_function(two, fam, 1, 2); }) ==
        errc::bound_too_small);

  RelationFamily unreduced;
  GrowthWord bad;
  bad.letters = {0, 1};  // s1 s1^-1
  unreduced.pairs.push_back({bad, GrowthWord::empty()});
  CHECK(thrown_code([&] { growth_function(two, unreduced, 1, 2); }) ==
        errc::invalid_argument);

  CHECK(thrown_code([&] { growth_function(two, RelationFamily{}, -1, 2); }) ==
        errc::invalid_argument);
  CHECK(thrown_code([&] { growth_function(two, fam, 3, 2); }) ==
        errc::invalid_argument);  // bound below the radius
  CHECK(thrown_code([&] { growth_function(FreeAlphabet{0}, RelationFamily{}, 1, 1); }) ==
        errc::invalid_argument);
}

TEST_SUITE_END();
