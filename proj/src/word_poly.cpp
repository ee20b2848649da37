#include "opfield/word_poly.hpp"

namespace opfield {

void WordPoly::add(const Word& w, const SymExpr& coeff) {
  if (coeff.field() != field_) fail(errc::field_mismatch, "word poly coefficient");
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    if (!coeff.is_zero()) terms_.emplace(w, coeff);
    return;
  }
  SymExpr sum = it->second + coeff;
  if (sum.is_zero())
    terms_.erase(it);
  else
    it->second = sum;
}

void WordPoly::add(const Word& w, const Scalar& coeff) {
  add(w, SymExpr::constant(coeff));
}

std::pair<Word, SymExpr> WordPoly::degree() const {
  if (terms_.empty()) fail(errc::zero_combination, "degree of the zero combination");
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

std::string WordPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.to_string() + ")*" + it->first.to_string() + "(x)";
  }
  return out;
}

EndoWord sigma_of_word(const Word& w, const TriangularSystem& t) {
  EndoWord e;
  bool char0 = t.field.characteristic() == 0;
  for (const auto& l : w.letters) {
    switch (l.kind) {
      case Letter::Kind::op: {
        if (l.index < 0 || l.index >= t.slot_count())
          fail(errc::unknown_letter, "no slot " + std::to_string(l.index));
        e.push(t.endo_of_slot(l.index), 1);
        break;
      }
      case Letter::Kind::sigma_inv:
        if (l.index < 1 || l.index > t.endo_count_nonid())
          fail(errc::unknown_letter, "no endomorphism " + std::to_string(l.index));
        e.push(l.index, -1);
        break;
      case Letter::Kind::frob:
        if (!char0) e.frob_exp += 1;
        break;
    }
  }
  return e;
}

SymExpr sigma_generator(const EndoWord& e, const std::string& var,
                        const TriangularSystem& t) {
  Word w;
  for (int i = 0; i < e.frob_exp; ++i) w.letters.push_back(Letter::frobenius());
  for (const auto& [idx, exp] : e.factors) {
    if (exp > 0) {
      int slot = t.slot_of_endo(idx);
      for (int i = 0; i < exp; ++i) w.letters.push_back(Letter::op(slot));
    } else {
      for (int i = 0; i < -exp; ++i) w.letters.push_back(Letter::sigma_inv(idx));
    }
  }
  return SymExpr::generator(t.field, var, w);
}

ScaleExpansion expand_scale(const WordPoly& s, const std::string& g,
                            const TriangularSystem& t) {
  if (s.is_zero()) fail(errc::zero_combination, "expansion of the zero combination");
  if (g == "x")
    fail(errc::invalid_argument, "the scale symbol may not be named 'x'");
  const Field& f = t.field;
  RuleContext ctx(t);

  SymExpr gx = SymExpr::variable(f, g) * SymExpr::variable(f, "x");
  SymExpr total(f);
  for (const auto& [w, coeff] : s.terms()) {
    if (!coeff.is_polynomial())
      fail(errc::unsupported_ratio, "expansion needs polynomial coefficients");
    total += apply_word(w, gx, ctx) * coeff;
  }
  if (!total.is_polynomial())
    fail(errc::internal, "expansion produced a ratio");

  // regroup: each monomial is linear in x; everything else joins the
  // coefficient of that x-word
  std::map<Word, Terms, WordLess> grouped;
  for (const auto& [m, c] : total.num()) {
    const Word* xword = nullptr;
    Monomial rest;
    for (const auto& [gen, exp] : m.factors) {
      if (gen.var == "x") {
        if (xword || exp != 1)
          fail(errc::internal, "expansion is not linear in x");
        xword = &gen.word;
      } else {
        rest.factors.push_back({gen, exp});
      }
    }
    if (!xword) fail(errc::internal, "expansion lost the x factor");
    grouped[*xword].push_back({std::move(rest), c});
  }

  Word lead = s.degree().first;
  ScaleExpansion out{lead, SymExpr(f), WordPoly(f)};
  for (auto& [w, terms] : grouped) {
    SymExpr coeff = SymExpr::from_terms(f, std::move(terms));
    if (coeff.is_zero()) continue;
    if (w == lead)
      out.leading_coeff = coeff;
    else
      out.remainder.add(w, coeff);
  }
  return out;
}

}  // namespace opfield
