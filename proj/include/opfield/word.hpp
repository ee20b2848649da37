#ifndef OPFIELD_WORD_HPP
#define OPFIELD_WORD_HPP

#include <string>
#include <vector>

#include "opfield/errors.hpp"

namespace opfield {

/// One letter of the operator alphabet: an inverse endomorphism s_j^-1,
/// an operator slot F_i of a triangular system, or the Frobenius. Over a
/// characteristic-0 system the Frobenius denotes the identity and is
/// normalized away when words are built against such a system.
struct Letter {
  enum class Kind { sigma_inv, op, frob };

  Kind kind = Kind::op;
  int index = 0;  // s_j^-1: j >= 1; F_i: slot index (0 only for internal use)

  static Letter op(int i) { return {Kind::op, i}; }
  static Letter sigma_inv(int j) { return {Kind::sigma_inv, j}; }
  static Letter frobenius() { return {Kind::frob, 0}; }

  bool operator==(const Letter& o) const {
    return kind == o.kind && index == o.index;
  }
  bool operator!=(const Letter& o) const { return !(*this == o); }

  std::string to_string() const;
};

/// Letter order: s_i^-1 < s_j^-1 < F_i < F_j < Frob for i < j.
int compare_letters(const Letter& a, const Letter& b);

/// Finite sequence of letters; the empty word is the identity. Words are
/// formal: no cancellation of s_j^-1 against anything is performed here.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  Word prepend(const Letter& l) const;

  bool operator==(const Word& o) const { return letters == o.letters; }
  bool operator!=(const Word& o) const { return !(*this == o); }

  std::string to_string() const;  // "F1.F2", "id" for the empty word
};

/// Graded lexicographic order: shorter words first, equal lengths compared
/// letter by letter. Returns <0, 0, >0.
int compare_words(const Word& a, const Word& b);

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    return compare_words(a, b) < 0;
  }
};

/// A composition of associated endomorphisms and Frobenius powers: a
/// Frobenius exponent (pulled out front; Frobenius commutes with every
/// field endomorphism) and a signed product of endomorphism indices in
/// composition order, with identity factors dropped and adjacent inverse
/// pairs cancelled.
struct EndoWord {
  int frob_exp = 0;
  std::vector<std::pair<int, int>> factors;  // (endo index >= 1, exponent != 0)

  bool is_identity() const { return frob_exp == 0 && factors.empty(); }
  void push(int endo_index, int exp);  // merges with the trailing factor

  bool operator==(const EndoWord& o) const {
    return frob_exp == o.frob_exp && factors == o.factors;
  }
  bool operator!=(const EndoWord& o) const { return !(*this == o); }

  /// Composition: this applied after `inner`.
  EndoWord compose(const EndoWord& inner) const;

  std::string to_string() const;  // "id", "s1^2", "frob.s2^-1"
};

}  // namespace opfield

#endif
