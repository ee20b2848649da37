#include "opfield/symexpr.hpp"

#include <algorithm>

namespace opfield {

int compare_gens(const Gen& a, const Gen& b) {
  if (a.var != b.var) return a.var < b.var ? -1 : 1;
  return compare_words(a.word, b.word);
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [g, e] : factors) d += e;
  return d;
}

std::string Monomial::to_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [g, e] : factors) {
    if (!out.empty()) out += "*";
    out += g.word.empty() ? g.var : g.word.to_string() + "(" + g.var + ")";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

int compare_monomials(const Monomial& a, const Monomial& b) {
  if (a.total_degree() != b.total_degree())
    return a.total_degree() < b.total_degree() ? -1 : 1;
  for (std::size_t i = 0; i < std::min(a.factors.size(), b.factors.size()); ++i) {
    int c = compare_gens(a.factors[i].first, b.factors[i].first);
    if (c != 0) return c;
    if (a.factors[i].second != b.factors[i].second)
      return a.factors[i].second > b.factors[i].second ? -1 : 1;
  }
  if (a.factors.size() != b.factors.size())
    return a.factors.size() < b.factors.size() ? -1 : 1;
  return 0;
}

namespace {

Terms canonicalize(Terms t) {
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
    return compare_monomials(a.first, b.first) < 0;
  });
  Terms out;
  for (auto& [m, c] : t) {
    if (!out.empty() && compare_monomials(out.back().first, m) == 0)
      out.back().second += c;
    else
      out.push_back({std::move(m), c});
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  }
  return out;
}

Terms add_terms(const Terms& a, const Terms& b) {
  Terms t = a;
  t.insert(t.end(), b.begin(), b.end());
  return canonicalize(std::move(t));
}

Monomial mul_monomials(const Monomial& a, const Monomial& b) {
  Monomial m;
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    if (j == b.factors.size() ||
        (i < a.factors.size() &&
         compare_gens(a.factors[i].first, b.factors[j].first) < 0)) {
      m.factors.push_back(a.factors[i++]);
    } else if (i == a.factors.size() ||
               compare_gens(b.factors[j].first, a.factors[i].first) < 0) {
      m.factors.push_back(b.factors[j++]);
    } else {
      m.factors.push_back({a.factors[i].first,
                           a.factors[i].second + b.factors[j].second});
      ++i;
      ++j;
    }
  }
  return m;
}

Terms mul_terms(const Terms& a, const Terms& b) {
  Terms t;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) t.push_back({mul_monomials(ma, mb), ca * cb});
  return canonicalize(std::move(t));
}

Terms one_terms(const Field& f) { return {{Monomial{}, Scalar::one(f)}}; }

Terms scale_terms(Terms t, const Scalar& c) {
  if (c.is_zero()) return {};
  for (auto& [m, x] : t) x *= c;
  return t;
}

bool terms_equal(const Terms& a, const Terms& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i].second == b[i].second) ||
        compare_monomials(a[i].first, b[i].first) != 0)
      return false;
  return true;
}

bool terms_is_one(const Terms& t) {
  return t.size() == 1 && t[0].first.factors.empty() && t[0].second.is_one();
}

}  // namespace

SymExpr::SymExpr(const Field& f) : field_(f), den_(one_terms(f)) {}

SymExpr SymExpr::constant(const Scalar& c) {
  SymExpr e(c.field());
  if (!c.is_zero()) e.num_ = {{Monomial{}, c}};
  return e;
}

SymExpr SymExpr::variable(const Field& f, const std::string& name) {
  return generator(f, name, Word{});
}

SymExpr SymExpr::generator(const Field& f, const std::string& name, const Word& w) {
  SymExpr e(f);
  Monomial m;
  m.factors.push_back({Gen{name, w}, 1});
  e.num_ = {{std::move(m), Scalar::one(f)}};
  return e;
}

bool SymExpr::is_polynomial() const { return terms_is_one(den_); }

void SymExpr::normalize() {
  if (num_.empty()) {
    den_ = one_terms(field_);
    return;
  }
  // monic denominator: scale both sides by the inverse of the leading
  // (largest) denominator coefficient
  Scalar lead = den_.back().second;
  if (!lead.is_one()) {
    Scalar inv = lead.inverse();
    num_ = scale_terms(std::move(num_), inv);
    den_ = scale_terms(std::move(den_), inv);
  }
}

SymExpr SymExpr::from_terms(const Field& f, Terms t) {
  SymExpr e(f);
  e.num_ = canonicalize(std::move(t));
  return e;
}

SymExpr SymExpr::from_ratio(const Field& f, Terms num, Terms den) {
  SymExpr e(f);
  e.num_ = canonicalize(std::move(num));
  e.den_ = canonicalize(std::move(den));
  if (e.den_.empty()) fail(errc::division_by_zero, "ratio with zero denominator");
  e.normalize();
  return e;
}

SymExpr SymExpr::operator+(const SymExpr& o) const {
  if (field_ != o.field_) fail(errc::field_mismatch, "symexpr add");
  if (terms_equal(den_, o.den_))
    return from_ratio(field_, add_terms(num_, o.num_), den_);
  return from_ratio(field_,
                    add_terms(mul_terms(num_, o.den_), mul_terms(o.num_, den_)),
                    mul_terms(den_, o.den_));
}

SymExpr SymExpr::operator-(const SymExpr& o) const { return *this + (-o); }

SymExpr SymExpr::operator-() const {
  SymExpr e = *this;
  e.num_ = scale_terms(std::move(e.num_), -Scalar::one(field_));
  return e;
}

SymExpr SymExpr::operator*(const SymExpr& o) const {
  if (field_ != o.field_) fail(errc::field_mismatch, "symexpr mul");
  return from_ratio(field_, mul_terms(num_, o.num_), mul_terms(den_, o.den_));
}

SymExpr SymExpr::operator*(const Scalar& c) const {
  SymExpr e = *this;
  e.num_ = scale_terms(std::move(e.num_), c);
  if (e.num_.empty()) e.den_ = one_terms(field_);
  return e;
}

SymExpr SymExpr::operator/(const SymExpr& o) const {
  if (field_ != o.field_) fail(errc::field_mismatch, "symexpr div");
  if (o.is_zero()) fail(errc::division_by_zero, "symexpr division by zero");
  return from_ratio(field_, mul_terms(num_, o.den_), mul_terms(den_, o.num_));
}

bool SymExpr::equals(const SymExpr& o) const {
  if (field_ != o.field_) return false;
  if (is_polynomial() && o.is_polynomial()) return terms_equal(num_, o.num_);
  return terms_equal(mul_terms(num_, o.den_), mul_terms(o.num_, den_));
}

std::string SymExpr::to_string() const {
  auto poly_str = [](const Terms& t) {
    if (t.empty()) return std::string("0");
    std::string out;
    // print largest monomial first
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string cs = c.to_string();
      bool neg = !cs.empty() && cs[0] == '-';
      std::string mag = neg ? cs.substr(1) : cs;
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (m.factors.empty())
        out += mag;
      else if (mag == "1")
        out += m.to_string();
      else
        out += mag + "*" + m.to_string();
    }
    return out;
  };
  if (is_polynomial()) return poly_str(num_);
  return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

namespace {

// true when prepending the slot letter is a no-op (the slot function is
// literally the identity: slot 0 of a plain presentation, or a sigma slot 0
// whose endomorphism is the identity)
bool slot_is_identity_map(int slot, const RuleContext& ctx) {
  if (slot != 0) return false;
  if (!ctx.tri) return true;  // plain presentation: F_0 = Id
  return ctx.tri->endo_of_slot(0) == 0;
}

bool slot_is_multiplicative(int slot, const RuleContext& ctx) {
  return ctx.tri && ctx.tri->is_sigma_slot(slot);
}

bool frobenius_is_identity(const RuleContext& ctx) {
  return ctx.algebra->field().characteristic() == 0;
}

// flattened factor list of a monomial
std::vector<Gen> flatten(const Monomial& m) {
  std::vector<Gen> gens;
  for (const auto& [g, e] : m.factors)
    for (int i = 0; i < e; ++i) gens.push_back(g);
  return gens;
}

SymExpr apply_gen(const Letter& l, const Gen& g, const RuleContext& ctx) {
  return SymExpr::generator(ctx.algebra->field(), g.var, g.word.prepend(l));
}

SymExpr apply_slot_factors(int slot, const std::vector<Gen>& factors,
                           const RuleContext& ctx);

// multiplicative letters act factor by factor
SymExpr apply_mult_factors(const Letter& l, const std::vector<Gen>& factors,
                           const RuleContext& ctx) {
  SymExpr acc = SymExpr::constant(Scalar::one(ctx.algebra->field()));
  for (const auto& g : factors) acc *= apply_gen(l, g, ctx);
  return acc;
}

SymExpr apply_slot_factors(int slot, const std::vector<Gen>& factors,
                           const RuleContext& ctx) {
  const Field& f = ctx.algebra->field();
  if (factors.empty()) return SymExpr::constant(ctx.algebra->unit()[slot]);
  if (slot_is_identity_map(slot, ctx)) {
    SymExpr acc = SymExpr::constant(Scalar::one(f));
    for (const auto& g : factors) acc *= SymExpr::generator(f, g.var, g.word);
    return acc;
  }
  if (factors.size() == 1) return apply_gen(Letter::op(slot), factors[0], ctx);
  std::vector<Gen> rest(factors.begin() + 1, factors.end());
  SymExpr out(f);
  int d = ctx.algebra->dim();
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      const Scalar& c = ctx.algebra->constant(k, l, slot);
      if (c.is_zero()) continue;
      out += (apply_slot_factors(k, {factors[0]}, ctx) *
              apply_slot_factors(l, rest, ctx)) *
             c;
    }
  return out;
}

// derivation-shaped slot: F_j(xy) = x F_j(y) + F_j(x) y exactly
bool slot_is_derivation_shaped(int slot, const RuleContext& ctx) {
  if (!slot_is_identity_map(0, ctx)) return false;
  int d = ctx.algebra->dim();
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      const Scalar& c = ctx.algebra->constant(k, l, slot);
      bool leibniz = (k == 0 && l == slot) || (k == slot && l == 0);
      if (leibniz ? !c.is_one() : !c.is_zero()) return false;
    }
  return true;
}

}  // namespace

SymExpr apply_letter(const Letter& l, const SymExpr& e, const RuleContext& ctx) {
  const Field& f = ctx.algebra->field();
  if (e.field() != f) fail(errc::field_mismatch, "apply_letter: expression field");

  if (l.kind == Letter::Kind::frob && frobenius_is_identity(ctx)) return e;
  if (l.kind == Letter::Kind::sigma_inv) {
    if (!ctx.tri)
      fail(errc::unknown_letter, "inverse letters need a triangular system");
    if (l.index < 1 || l.index > ctx.tri->endo_count_nonid())
      fail(errc::unknown_letter, "no endomorphism " + std::to_string(l.index));
  }
  if (l.kind == Letter::Kind::op &&
      (l.index < 0 || l.index >= ctx.algebra->dim()))
    fail(errc::unknown_letter, "no operator slot " + std::to_string(l.index));

  bool ratio = !e.is_polynomial();
  if (ratio) {
    bool multiplicative = l.kind != Letter::Kind::op ||
                          slot_is_multiplicative(l.index, ctx) ||
                          slot_is_identity_map(l.index, ctx);
    if (multiplicative) {
      SymExpr num = apply_letter(l, SymExpr::from_terms(f, e.num()), ctx);
      SymExpr den = apply_letter(l, SymExpr::from_terms(f, e.den()), ctx);
      return num / den;
    }
    if (l.kind == Letter::Kind::op && slot_is_derivation_shaped(l.index, ctx)) {
      SymExpr num = SymExpr::from_terms(f, e.num());
      SymExpr den = SymExpr::from_terms(f, e.den());
      SymExpr dn = apply_letter(l, num, ctx);
      SymExpr dd = apply_letter(l, den, ctx);
      return (dn * den - num * dd) / (den * den);
    }
    fail(errc::unsupported_ratio,
         "letter " + l.to_string() + " cannot be applied to a ratio");
  }

  // additive over monomials; Frobenius raises coefficients to the p
  SymExpr out(f);
  for (const auto& [m, c] : e.num()) {
    std::vector<Gen> gens = flatten(m);
    Scalar coeff = c;
    SymExpr applied(f);
    switch (l.kind) {
      case Letter::Kind::op:
        applied = apply_slot_factors(l.index, gens, ctx);
        break;
      case Letter::Kind::sigma_inv:
        applied = apply_mult_factors(l, gens, ctx);
        break;
      case Letter::Kind::frob:
        coeff = coeff.pow(f.characteristic());
        applied = apply_mult_factors(l, gens, ctx);
        break;
    }
    out += applied * coeff;
  }
  return out;
}

SymExpr apply_word(const Word& w, const SymExpr& e, const RuleContext& ctx) {
  SymExpr out = e;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out = apply_letter(*it, out, ctx);
  return out;
}

IdentityCheck check_identity(const SymExpr& lhs, const SymExpr& rhs) {
  if (lhs.equals(rhs)) return {true, ""};
  SymExpr diff = lhs - rhs;
  std::string witness;
  if (!diff.num().empty()) {
    const auto& [m, c] = diff.num().back();
    witness = c.to_string() + (m.factors.empty() ? "" : "*" + m.to_string());
  }
  return {false, witness};
}

}  // namespace opfield
