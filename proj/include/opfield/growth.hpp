#ifndef OPFIELD_GROWTH_HPP
#define OPFIELD_GROWTH_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "opfield/errors.hpp"

namespace opfield {

/// Alphabet of k generators with formal inverses. Letters are encoded
/// 0..2k-1: generator i (1-based) is 2(i-1), its inverse 2(i-1)+1, so the
/// inverse pairing flips the low bit. Enumeration order follows the codes:
/// s1 < s1^-1 < s2 < s2^-1 < ...
struct FreeAlphabet {
  int generators = 0;

  int letter_count() const { return 2 * generators; }
  static int inverse(int letter) { return letter ^ 1; }
  std::string letter_name(int letter) const;
};

/// Freely reduced word, first letter first. The empty word is the identity.
struct GrowthWord {
  std::vector<std::uint8_t> letters;

  static GrowthWord empty() { return {}; }
  /// generator^exp (exp may be negative), e.g. power(1, -3) = s2^-3
  static GrowthWord power(int generator0, int exp);
  GrowthWord concat(const GrowthWord& o) const;  // free reduction applied

  std::size_t size() const { return letters.size(); }
  bool reduced() const;
  bool operator==(const GrowthWord& o) const { return letters == o.letters; }

  std::string to_string(const FreeAlphabet& a) const;
};

/// Word pairs (u, v) meaning u(x) = v(x), plus an optional parametric
/// generator producing pairs up to a bound.
struct RelationFamily {
  std::vector<std::pair<GrowthWord, GrowthWord>> pairs;
  std::function<std::vector<std::pair<GrowthWord, GrowthWord>>(int)> parametric;

  bool empty() const { return pairs.empty() && !parametric; }

  /// The family (s1 s2^l, s2^l) for |l| <= bound.
  static RelationFamily first_fixes_second_powers();
};

struct GrowthReport {
  struct Row {
    int radius;
    std::uint64_t total;  // |words of length <= radius|
    std::uint64_t shell;  // |words of length exactly radius|
    std::uint64_t classes;
  };
  std::vector<Row> rows;
};

/// All freely reduced words of length <= r, in deterministic (graded,
/// code-ascending) order.
std::vector<GrowthWord> enumerate_reduced(const FreeAlphabet& a, int r);

/// Class counts of words of length <= s (s = 0..r) under the smallest
/// equivalence containing the relation pairs and closed under left
/// concatenation by letters (with free reduction). Computed by fixed-point
/// union-find over the words of length <= r + bound; the result is
/// certified by recomputing over length <= r + bound - 1, and
/// BoundTooSmall is raised if the counts disagree.
GrowthReport growth_function(const FreeAlphabet& a, const RelationFamily& rel,
                             int r, int bound);

/// Class representative per word of enumerate_reduced(a, r), computed over
/// the arena of radius r + bound. Representatives are indices into the
/// same enumeration.
std::vector<std::size_t> growth_partition(const FreeAlphabet& a,
                                          const RelationFamily& rel, int r,
                                          int bound);

}  // namespace opfield

#endif
