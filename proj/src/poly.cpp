#include "opfield/poly.hpp"

#include <algorithm>

namespace opfield {

Poly::Poly(const Field& f, std::vector<Scalar> coeffs)
    : field_(f), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.field() != field_) fail(errc::field_mismatch, "poly coefficient field");
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Scalar& c) {
  return Poly(c.field(), std::vector<Scalar>{c});
}

Poly Poly::linear_root(const Scalar& r) {
  return Poly(r.field(), {-r, Scalar::one(r.field())});
}

Poly Poly::power(const Field& f, int n) {
  std::vector<Scalar> c(n + 1, Scalar::zero(f));
  c[n] = Scalar::one(f);
  return Poly(f, std::move(c));
}

Scalar Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Scalar::zero(field_);
  return coeffs_[i];
}

Scalar Poly::leading() const {
  if (is_zero()) fail(errc::zero_polynomial, "leading coefficient of 0");
  return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
  if (field_ != o.field_) fail(errc::field_mismatch, "poly add");
  std::vector<Scalar> c(std::max(coeffs_.size(), o.coeffs_.size()),
                        Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return Poly(field_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Scalar> c(coeffs_);
  for (auto& x : c) x = -x;
  return Poly(field_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  if (field_ != o.field_) fail(errc::field_mismatch, "poly mul");
  if (is_zero() || o.is_zero()) return zero(field_);
  std::vector<Scalar> c(coeffs_.size() + o.coeffs_.size() - 1,
                        Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * o.coeffs_[j];
  return Poly(field_, std::move(c));
}

Poly Poly::operator*(const Scalar& s) const {
  std::vector<Scalar> c(coeffs_);
  for (auto& x : c) x *= s;
  return Poly(field_, std::move(c));
}

bool Poly::operator==(const Poly& o) const {
  if (field_ != o.field_ || coeffs_.size() != o.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != o.coeffs_[i]) return false;
  return true;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) fail(errc::division_by_zero, "poly division by 0");
  if (field_ != divisor.field_) fail(errc::field_mismatch, "poly divmod");
  std::vector<Scalar> rem(coeffs_);
  int dd = divisor.degree();
  Scalar lead_inv = divisor.leading().inverse();
  std::vector<Scalar> quot;
  int qd = degree() - dd;
  if (qd < 0) return {zero(field_), *this};
  quot.assign(qd + 1, Scalar::zero(field_));
  for (int i = degree(); i >= dd; --i) {
    Scalar q = rem[i] * lead_inv;
    if (q.is_zero()) continue;
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.coeffs_[j];
  }
  return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) fail(errc::zero_polynomial, "monic of 0");
  return *this * leading().inverse();
}

Poly Poly::derivative() const {
  if (degree() < 1) return zero(field_);
  std::vector<Scalar> c;
  for (int i = 1; i <= degree(); ++i)
    c.push_back(coeffs_[i] * Scalar::from_int(field_, i));
  return Poly(field_, std::move(c));
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string xs = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (xs.empty())
      out += mag;
    else if (mag == "1")
      out += xs;
    else
      out += mag + "*" + xs;
  }
  return out;
}

namespace {

// positive divisors of n > 0 by trial division, ascending
std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> small, big;
  mpz_class d = 1;
  while (d * d <= n) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) big.push_back(n / d);
    }
    ++d;
  }
  small.insert(small.end(), big.rbegin(), big.rend());
  return small;
}

// strips x^k, returns k
int strip_zero_root(Poly& p) {
  int k = 0;
  const Field& f = p.field();
  Poly x = Poly::power(f, 1);
  while (!p.is_zero() && p.coeff(0).is_zero()) {
    p = p.divmod(x).first;
    ++k;
  }
  return k;
}

int peel_root(Poly& p, const Scalar& r) {
  int mult = 0;
  Poly lin = Poly::linear_root(r);
  while (p.degree() >= 1) {
    auto [q, rem] = p.divmod(lin);
    if (!rem.is_zero()) break;
    p = q;
    ++mult;
  }
  return mult;
}

}  // namespace

LinearRootSplit linear_roots(const Poly& p) {
  if (p.is_zero()) fail(errc::zero_polynomial, "linear_roots of 0");
  const Field& f = p.field();
  Poly work = p;
  std::vector<RootMult> roots;

  int zero_mult = strip_zero_root(work);
  if (zero_mult > 0) roots.push_back({Scalar::zero(f), zero_mult});

  if (work.degree() >= 1) {
    if (f.is_rational()) {
      // primitive integer form: clear denominators, divide by content
      mpz_class den_lcm = 1;
      for (const auto& c : work.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                c.rat().get_den().get_mpz_t());
      std::vector<mpz_class> z;
      for (const auto& c : work.coeffs())
        z.push_back(mpz_class(c.rat() * den_lcm));
      mpz_class content = 0;
      for (const auto& v : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
      for (auto& v : z) v /= content;

      mpz_class a0 = abs(z.front());
      mpz_class an = abs(z.back());
      std::vector<Scalar> candidates;
      for (const auto& u : divisors(a0))
        for (const auto& v : divisors(an)) {
          mpq_class q(u, v);
          q.canonicalize();
          candidates.push_back(Scalar::rational(q));
          candidates.push_back(Scalar::rational(mpq_class(-q)));
        }
      std::sort(candidates.begin(), candidates.end(),
                [](const Scalar& a, const Scalar& b) { return a.magnitude_less(b); });
      candidates.erase(std::unique(candidates.begin(), candidates.end()),
                       candidates.end());
      for (const auto& cand : candidates) {
        if (work.degree() < 1) break;
        if (!work.eval(cand).is_zero()) continue;
        int m = peel_root(work, cand);
        roots.push_back({cand, m});
      }
    } else {
      for (std::uint64_t v = 0; v < f.characteristic() && work.degree() >= 1; ++v) {
        Scalar cand = Scalar::residue(f, v);
        if (!work.eval(cand).is_zero()) continue;
        int m = peel_root(work, cand);
        roots.push_back({cand, m});
      }
    }
  }

  std::sort(roots.begin(), roots.end(), [](const RootMult& a, const RootMult& b) {
    return a.root.magnitude_less(b.root);
  });
  return {std::move(roots), std::move(work)};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divmod(y).second;
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) fail(errc::zero_polynomial, "squarefree part of 0");
  if (p.degree() == 0) return Poly::constant(Scalar::one(p.field()));
  Poly g = poly_gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

}  // namespace opfield
