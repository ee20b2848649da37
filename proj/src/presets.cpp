#include "opfield/presets.hpp"

namespace opfield {

namespace {

SystemDecl::MulEntry entry(const Field& f, int i, int j, int dim,
                           std::vector<std::pair<int, Scalar>> coords) {
  SystemDecl::MulEntry e;
  e.i = i;
  e.j = j;
  e.line = 0;
  e.value.assign(dim, Scalar::zero(f));
  for (auto& [k, c] : coords) e.value[k] = c;
  return e;
}

SystemDecl nderiv(const Field& f, int n) {
  if (n < 1) fail(errc::invalid_argument, "nderiv needs n >= 1");
  SystemDecl d;
  d.field = f;
  d.dim = n + 1;
  d.ops.push_back("id");
  for (int i = 1; i <= n; ++i) d.ops.push_back("d" + std::to_string(i));
  d.unit = std::vector<Scalar>(d.dim, Scalar::zero(f));
  (*d.unit)[0] = Scalar::one(f);
  Scalar one = Scalar::one(f);
  d.muls.push_back(entry(f, 0, 0, d.dim, {{0, one}}));
  for (int j = 1; j <= n; ++j) d.muls.push_back(entry(f, 0, j, d.dim, {{j, one}}));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) d.muls.push_back(entry(f, i, j, d.dim, {}));
  return d;
}

SystemDecl dsigma(const Field& f) {
  SystemDecl d;
  d.field = f;
  d.dim = 3;
  d.ops = {"id", "d", "s"};
  Scalar one = Scalar::one(f);
  d.unit = std::vector<Scalar>{one, Scalar::zero(f), one};
  d.muls.push_back(entry(f, 0, 0, 3, {{0, one}}));
  d.muls.push_back(entry(f, 0, 1, 3, {{1, one}}));
  d.muls.push_back(entry(f, 0, 2, 3, {}));
  d.muls.push_back(entry(f, 1, 1, 3, {}));
  d.muls.push_back(entry(f, 1, 2, 3, {}));
  d.muls.push_back(entry(f, 2, 2, 3, {{2, one}}));
  d.invertible.push_back("s");
  return d;
}

SystemDecl single(const Field& f, const Scalar& a, const Scalar& b,
                  const Scalar& c) {
  SystemDecl d;
  d.field = f;
  d.dim = 2;
  d.ops = {"id", "f"};
  d.muls.push_back(entry(f, 0, 0, 2, {{0, Scalar::one(f)}, {1, a}}));
  d.muls.push_back(entry(f, 0, 1, 2, {{1, b}}));
  d.muls.push_back(entry(f, 1, 1, 2, {{1, c}}));
  if (!c.is_zero() && b.is_zero()) d.invertible.push_back("f");
  return d;
}

SystemDecl trunc3(const Field& f) {
  SystemDecl d;
  d.field = f;
  d.dim = 3;
  d.ops = {"id", "f1", "f2"};
  Scalar one = Scalar::one(f);
  d.unit = std::vector<Scalar>{one, Scalar::zero(f), Scalar::zero(f)};
  d.muls.push_back(entry(f, 0, 0, 3, {{0, one}}));
  d.muls.push_back(entry(f, 0, 1, 3, {{1, one}}));
  d.muls.push_back(entry(f, 0, 2, 3, {{2, one}}));
  d.muls.push_back(entry(f, 1, 1, 3, {{2, one}}));
  d.muls.push_back(entry(f, 1, 2, 3, {}));
  d.muls.push_back(entry(f, 2, 2, 3, {}));
  return d;
}

SystemDecl sqrt2(const Field& f) {
  SystemDecl d;
  d.field = f;
  d.dim = 2;
  d.ops = {"id", "w"};
  Scalar one = Scalar::one(f);
  d.unit = std::vector<Scalar>{one, Scalar::zero(f)};
  d.muls.push_back(entry(f, 0, 0, 2, {{0, one}}));
  d.muls.push_back(entry(f, 0, 1, 2, {{1, one}}));
  d.muls.push_back(entry(f, 1, 1, 2, {{0, Scalar::from_int(f, 2)}}));
  return d;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"nderiv:<n>", "dsigma", "single:<a>,<b>,<c>", "trunc3", "sqrt2"};
}

SystemDecl preset_decl(const std::string& name) {
  std::string base = name;
  Field f = Field::rationals();
  auto at = name.find('@');
  if (at != std::string::npos) {
    base = name.substr(0, at);
    try {
      f = Field::prime(std::stoull(name.substr(at + 1)));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(errc::invalid_argument, "bad preset field suffix: " + name);
    }
  }

  std::string head = base, arg;
  auto colon = base.find(':');
  if (colon != std::string::npos) {
    head = base.substr(0, colon);
    arg = base.substr(colon + 1);
  }

  if (head == "nderiv") {
    if (arg.empty()) fail(errc::invalid_argument, "usage: nderiv:<n>");
    int n = 0;
    try {
      n = std::stoi(arg);
    } catch (const std::exception&) {
      fail(errc::invalid_argument, "bad nderiv count: " + arg);
    }
    return nderiv(f, n);
  }
  if (head == "dsigma") return dsigma(f);
  if (head == "single") {
    std::vector<Scalar> abc;
    std::size_t pos = 0;
    while (abc.size() < 3) {
      auto comma = arg.find(',', pos);
      std::string tok =
          comma == std::string::npos ? arg.substr(pos) : arg.substr(pos, comma - pos);
      abc.push_back(Scalar::parse(f, tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (abc.size() != 3)
      fail(errc::invalid_argument, "usage: single:<a>,<b>,<c>");
    return single(f, abc[0], abc[1], abc[2]);
  }
  if (head == "trunc3") return trunc3(f);
  if (head == "sqrt2") return sqrt2(f);
  fail(errc::invalid_argument, "unknown preset: " + name);
}

}  // namespace opfield
