#include "opfield/word.hpp"

namespace opfield {

std::string Letter::to_string() const {
  switch (kind) {
    case Kind::sigma_inv: return "s" + std::to_string(index) + "^-1";
    case Kind::op: return "F" + std::to_string(index);
    case Kind::frob: return "frob";
  }
  return "?";
}

int compare_letters(const Letter& a, const Letter& b) {
  auto cls = [](const Letter& l) {
    switch (l.kind) {
      case Letter::Kind::sigma_inv: return 0;
      case Letter::Kind::op: return 1;
      case Letter::Kind::frob: return 2;
    }
    return 3;
  };
  if (cls(a) != cls(b)) return cls(a) < cls(b) ? -1 : 1;
  if (a.index != b.index) return a.index < b.index ? -1 : 1;
  return 0;
}

Word Word::prepend(const Letter& l) const {
  Word w;
  w.letters.reserve(letters.size() + 1);
  w.letters.push_back(l);
  w.letters.insert(w.letters.end(), letters.begin(), letters.end());
  return w;
}

std::string Word::to_string() const {
  if (letters.empty()) return "id";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i)
    out += (i ? "." : "") + letters[i].to_string();
  return out;
}

int compare_words(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = compare_letters(a.letters[i], b.letters[i]);
    if (c != 0) return c;
  }
  return 0;
}

void EndoWord::push(int endo_index, int exp) {
  if (endo_index == 0 || exp == 0) return;  // identity factor
  if (!factors.empty() && factors.back().first == endo_index) {
    factors.back().second += exp;
    if (factors.back().second == 0) factors.pop_back();
    return;
  }
  factors.push_back({endo_index, exp});
}

EndoWord EndoWord::compose(const EndoWord& inner) const {
  EndoWord out = *this;
  out.frob_exp += inner.frob_exp;
  for (const auto& [idx, exp] : inner.factors) out.push(idx, exp);
  return out;
}

std::string EndoWord::to_string() const {
  if (is_identity()) return "id";
  std::string out;
  if (frob_exp > 0) {
    out += "frob";
    if (frob_exp > 1) out += "^" + std::to_string(frob_exp);
  }
  for (const auto& [idx, exp] : factors) {
    if (!out.empty()) out += ".";
    out += "s" + std::to_string(idx);
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out;
}

}  // namespace opfield
