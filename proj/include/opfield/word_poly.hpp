#ifndef OPFIELD_WORD_POLY_HPP
#define OPFIELD_WORD_POLY_HPP

#include <map>

#include "opfield/symexpr.hpp"

namespace opfield {

/// Finite linear combination of words with exact symbolic coefficients
/// (scalars embed as constant expressions). Zero coefficients are never
/// stored.
class WordPoly {
 public:
  explicit WordPoly(const Field& f) : field_(f) {}

  const Field& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, SymExpr, WordLess>& terms() const { return terms_; }

  void add(const Word& w, const SymExpr& coeff);
  void add(const Word& w, const Scalar& coeff);

  /// The largest word under the graded lexicographic order, with its
  /// coefficient. Throws ZeroCombination on the zero combination.
  std::pair<Word, SymExpr> degree() const;

  std::string to_string() const;

 private:
  Field field_;
  std::map<Word, SymExpr, WordLess> terms_;
};

/// The endomorphism determined by a word: each slot letter contributes its
/// block's sigma, inverse letters contribute inverses, Frobenius letters a
/// Frobenius power (the identity in characteristic 0).
EndoWord sigma_of_word(const Word& w, const TriangularSystem& t);

/// The sigma word as a generator expression applied to `var` (Frobenius
/// powers first, then sigma-slot letters / inverse letters in composition
/// order).
SymExpr sigma_generator(const EndoWord& e, const std::string& var,
                        const TriangularSystem& t);

struct ScaleExpansion {
  Word leading_word;
  SymExpr leading_coeff;  // the full coefficient of the leading word
  WordPoly remainder;     // every word strictly smaller than leading_word
};

/// Expands S(g x) through the product rules of the triangular system. The
/// leading term is the degree word of S with coefficient lambda * sigma(g);
/// the remainder collects the strictly smaller words with coefficients
/// symbolic in g.
ScaleExpansion expand_scale(const WordPoly& s, const std::string& g,
                            const TriangularSystem& t);

}  // namespace opfield

#endif
