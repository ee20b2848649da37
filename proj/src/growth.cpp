#include "opfield/growth.hpp"

#include <algorithm>

namespace opfield {

std::string FreeAlphabet::letter_name(int letter) const {
  std::string s = "s" + std::to_string(letter / 2 + 1);
  if (letter & 1) s += "^-1";
  return s;
}

GrowthWord GrowthWord::power(int generator0, int exp) {
  GrowthWord w;
  std::uint8_t letter =
      static_cast<std::uint8_t>(2 * generator0 + (exp < 0 ? 1 : 0));
  for (int i = 0; i < (exp < 0 ? -exp : exp); ++i) w.letters.push_back(letter);
  return w;
}

GrowthWord GrowthWord::concat(const GrowthWord& o) const {
  GrowthWord w = *this;
  for (std::uint8_t l : o.letters) {
    if (!w.letters.empty() && FreeAlphabet::inverse(w.letters.back()) == l)
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

bool GrowthWord::reduced() const {
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (FreeAlphabet::inverse(letters[i - 1]) == letters[i]) return false;
  return true;
}

std::string GrowthWord::to_string(const FreeAlphabet& a) const {
  if (letters.empty()) return "id";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i)
    out += (i ? "." : "") + a.letter_name(letters[i]);
  return out;
}

RelationFamily RelationFamily::first_fixes_second_powers() {
  RelationFamily fam;
  fam.parametric = [](int bound) {
    std::vector<std::pair<GrowthWord, GrowthWord>> pairs;
    for (int l = -bound; l <= bound; ++l) {
      GrowthWord rhs = GrowthWord::power(1, l);        // s2^l
      GrowthWord lhs = GrowthWord::power(0, 1).concat(rhs);  // s1 s2^l
      pairs.push_back({lhs, rhs});
    }
    return pairs;
  };
  return fam;
}

namespace {

// Packed word code over base B = letter_count: a word d_0 d_1 ... d_{l-1}
// (first letter d_0) is B^l + sum d_i B^i. Codes are strictly increasing
// with (length, shell position), so the enumeration is a sorted list.
using Code = std::uint64_t;

struct Arena {
  int base;
  int radius;
  Code limit;               // codes must stay below base^(radius+1)
  std::vector<Code> codes;  // sorted
  std::vector<std::uint64_t> shell_end;  // prefix size per radius

  int index_of(Code c) const {
    auto it = std::lower_bound(codes.begin(), codes.end(), c);
    if (it == codes.end() || *it != c) return -1;
    return static_cast<int>(it - codes.begin());
  }
};

Code encode(const GrowthWord& w, int base) {
  Code c = 1;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    c = c * base + *it;
  return c;
}

// reduced prepend of letter x; 0 length words have code 1
Code prepend_code(Code c, int x, int base) {
  if (c != 1 && static_cast<int>(c % base) == FreeAlphabet::inverse(x)) {
    Code rest = (c - c % base) / base;
    return rest;
  }
  return c * static_cast<Code>(base) + static_cast<Code>(x);
}

Arena build_arena(const FreeAlphabet& a, int radius) {
  Arena ar;
  ar.base = a.letter_count();
  ar.radius = radius;
  ar.limit = 1;
  for (int i = 0; i <= radius; ++i) ar.limit *= ar.base;

  ar.codes.push_back(1);
  ar.shell_end.push_back(1);
  std::size_t level_begin = 0, level_end = 1;
  for (int len = 1; len <= radius; ++len) {
    for (std::size_t i = level_begin; i < level_end; ++i) {
      Code c = ar.codes[i];
      int first = c == 1 ? -1 : static_cast<int>(c % ar.base);
      for (int x = 0; x < ar.base; ++x) {
        if (first >= 0 && FreeAlphabet::inverse(x) == first) continue;
        ar.codes.push_back(c * ar.base + x);
      }
    }
    level_begin = level_end;
    level_end = ar.codes.size();
    ar.shell_end.push_back(ar.codes.size());
  }
  return ar;
}

struct UnionFind {
  std::vector<std::int32_t> parent, size;

  explicit UnionFind(std::size_t n) : parent(n), size(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<std::int32_t>(i);
  }
  int find(int i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return true;
  }
};

UnionFind closure(const Arena& ar,
                  const std::vector<std::pair<GrowthWord, GrowthWord>>& pairs) {
  UnionFind uf(ar.codes.size());
  std::vector<std::pair<std::int32_t, std::int32_t>> work;
  for (const auto& [u, v] : pairs) {
    if (static_cast<int>(u.size()) > ar.radius ||
        static_cast<int>(v.size()) > ar.radius)
      fail(errc::bound_too_small, "relation word exceeds the enumerated radius");
    int iu = ar.index_of(encode(u, ar.base));
    int iv = ar.index_of(encode(v, ar.base));
    if (iu < 0 || iv < 0) fail(errc::internal, "relation word missing from arena");
    if (uf.unite(iu, iv)) work.push_back({iu, iv});
  }

  // left-concatenation closure: u ~ v implies xu ~ xv (freely reduced),
  // as long as both stay within the arena
  while (!work.empty()) {
    auto [i, j] = work.back();
    work.pop_back();
    Code cu = ar.codes[i], cv = ar.codes[j];
    for (int x = 0; x < ar.base; ++x) {
      Code nu = prepend_code(cu, x, ar.base);
      Code nv = prepend_code(cv, x, ar.base);
      if (nu >= ar.limit || nv >= ar.limit) continue;
      int iu = ar.index_of(nu), iv = ar.index_of(nv);
      if (iu < 0 || iv < 0) continue;
      if (uf.unite(iu, iv)) work.push_back({iu, iv});
    }
  }
  return uf;
}

std::vector<std::uint64_t> class_counts(
    const FreeAlphabet& a, const std::vector<std::pair<GrowthWord, GrowthWord>>& pairs,
    int r, int arena_radius) {
  Arena ar = build_arena(a, arena_radius);
  UnionFind uf = closure(ar, pairs);

  // distinct classes among words of length <= s, s = 0..r
  std::vector<std::uint64_t> counts;
  std::vector<std::int32_t> stamp(ar.codes.size(), -1);
  std::uint64_t running = 0;
  std::size_t idx = 0;
  for (int s = 0; s <= r; ++s) {
    for (; idx < ar.shell_end[s]; ++idx) {
      int root = uf.find(static_cast<int>(idx));
      if (stamp[root] != 0) {
        stamp[root] = 0;
        ++running;
      }
    }
    counts.push_back(running);
  }
  return counts;
}

}  // namespace

std::vector<GrowthWord> enumerate_reduced(const FreeAlphabet& a, int r) {
  if (a.generators < 1) fail(errc::invalid_argument, "alphabet needs a generator");
  if (r < 0) fail(errc::invalid_argument, "radius must be nonnegative");
  Arena ar = build_arena(a, r);
  std::vector<GrowthWord> words;
  words.reserve(ar.codes.size());
  for (Code c : ar.codes) {
    GrowthWord w;
    while (c != 1) {
      w.letters.push_back(static_cast<std::uint8_t>(c % ar.base));
      c /= ar.base;
    }
    words.push_back(std::move(w));
  }
  return words;
}

GrowthReport growth_function(const FreeAlphabet& a, const RelationFamily& rel,
                             int r, int bound) {
  if (a.generators < 1) fail(errc::invalid_argument, "alphabet needs a generator");
  if (r < 0) fail(errc::invalid_argument, "radius must be nonnegative");
  if (bound < r)
    fail(errc::invalid_argument, "bound must be at least the radius");
  if (!rel.empty() && bound < 1)
    fail(errc::invalid_argument, "bound must be positive when relations are given");

  std::vector<std::pair<GrowthWord, GrowthWord>> pairs = rel.pairs;
  if (rel.parametric) {
    auto more = rel.parametric(bound);
    pairs.insert(pairs.end(), more.begin(), more.end());
  }
  for (const auto& [u, v] : pairs)
    if (!u.reduced() || !v.reduced())
      fail(errc::invalid_argument, "relation words must be freely reduced");

  GrowthReport rep;
  std::vector<std::uint64_t> counts;
  if (pairs.empty()) {
    // free case: classes are the words themselves
    Arena ar = build_arena(a, r);
    for (int s = 0; s <= r; ++s) counts.push_back(ar.shell_end[s]);
  } else {
    counts = class_counts(a, pairs, r, r + bound);
    // fixed-point certificate: the counts must be stable when the
    // enumeration radius shrinks by one
    std::vector<std::uint64_t> check = class_counts(a, pairs, r, r + bound - 1);
    if (check != counts)
      fail(errc::bound_too_small,
           "class counts not stable at the enumerated radius; increase the bound");
  }

  std::uint64_t prev_total = 0;
  Arena sizes = build_arena(a, r);
  for (int s = 0; s <= r; ++s) {
    GrowthReport::Row row;
    row.radius = s;
    row.total = sizes.shell_end[s];
    row.shell = row.total - prev_total;
    row.classes = counts[s];
    prev_total = row.total;
    rep.rows.push_back(row);
  }
  return rep;
}

std::vector<std::size_t> growth_partition(const FreeAlphabet& a,
                                          const RelationFamily& rel, int r,
                                          int bound) {
  if (a.generators < 1) fail(errc::invalid_argument, "alphabet needs a generator");
  if (r < 0) fail(errc::invalid_argument, "radius must be nonnegative");
  std::vector<std::pair<GrowthWord, GrowthWord>> pairs = rel.pairs;
  if (rel.parametric) {
    auto more = rel.parametric(bound);
    pairs.insert(pairs.end(), more.begin(), more.end());
  }
  Arena ar = build_arena(a, r + bound);
  UnionFind uf = closure(ar, pairs);
  std::size_t n = ar.shell_end[r];
  std::vector<std::size_t> rep(n);
  std::vector<std::int32_t> first_seen(ar.codes.size(), -1);
  for (std::size_t i = 0; i < n; ++i) {
    int root = uf.find(static_cast<int>(i));
    if (first_seen[root] < 0) first_seen[root] = static_cast<std::int32_t>(i);
    rep[i] = static_cast<std::size_t>(first_seen[root]);
  }
  return rep;
}

}  // namespace opfield
