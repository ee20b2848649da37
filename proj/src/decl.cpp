#include "opfield/decl.hpp"

#include <algorithm>
#include <sstream>

namespace opfield {

bool SystemDecl::operator==(const SystemDecl& o) const {
  auto muls_equal = [](const std::vector<MulEntry>& a,
                       const std::vector<MulEntry>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].i != b[i].i || a[i].j != b[i].j || a[i].value != b[i].value)
        return false;
    return true;
  };
  return field == o.field && dim == o.dim && ops == o.ops && unit == o.unit &&
         muls_equal(muls, o.muls) && invertible == o.invertible &&
         sparse == o.sparse;
}

namespace {

struct Cursor {
  int line;
  int col;
};

[[noreturn]] void syntax_error(const Cursor& at, const std::string& msg) {
  fail(errc::parse_error, "line " + std::to_string(at.line) + ", column " +
                              std::to_string(at.col) + ": " + msg);
}

struct LineTokens {
  int line;
  std::vector<std::string> tokens;
  std::vector<int> cols;
};

std::vector<LineTokens> tokenize(const std::string& text) {
  std::vector<LineTokens> out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    LineTokens lt{lineno, {}, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      if (raw[i] == '#') break;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) &&
             raw[i] != '#')
        ++i;
      lt.tokens.push_back(raw.substr(start, i - start));
      lt.cols.push_back(static_cast<int>(start) + 1);
    }
    if (!lt.tokens.empty()) out.push_back(std::move(lt));
  }
  return out;
}

Scalar parse_scalar_at(const Field& f, const LineTokens& lt, std::size_t k) {
  try {
    return Scalar::parse(f, lt.tokens[k]);
  } catch (const Error& e) {
    syntax_error({lt.line, lt.cols[k]}, e.what());
  }
}

std::vector<Scalar> parse_scalars(const Field& f, const LineTokens& lt,
                                  std::size_t from, int count) {
  if (static_cast<int>(lt.tokens.size() - from) != count)
    syntax_error({lt.line, 1}, "expected " + std::to_string(count) +
                                   " scalars, got " +
                                   std::to_string(lt.tokens.size() - from));
  std::vector<Scalar> v;
  for (int i = 0; i < count; ++i)
    v.push_back(parse_scalar_at(f, lt, from + static_cast<std::size_t>(i)));
  return v;
}

int parse_int_at(const LineTokens& lt, std::size_t k) {
  const std::string& t = lt.tokens[k];
  try {
    std::size_t used = 0;
    int v = std::stoi(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    syntax_error({lt.line, lt.cols[k]}, "expected an integer, got '" + t + "'");
  }
}

}  // namespace

SystemDecl parse_declaration(const std::string& text) {
  std::vector<LineTokens> lines = tokenize(text);
  SystemDecl d;
  bool have_field = false, have_dim = false, have_ops = false;

  for (const auto& lt : lines) {
    const std::string& head = lt.tokens[0];
    Cursor at{lt.line, lt.cols[0]};
    if (head == "field") {
      if (lt.tokens.size() == 2 && lt.tokens[1] == "Q") {
        d.field = Field::rationals();
      } else if (lt.tokens.size() == 3 && lt.tokens[1] == "F") {
        int p = parse_int_at(lt, 2);
        try {
          d.field = Field::prime(static_cast<std::uint64_t>(p));
        } catch (const Error& e) {
          syntax_error({lt.line, lt.cols[2]}, e.what());
        }
      } else {
        syntax_error(at, "expected 'field Q' or 'field F <prime>'");
      }
      have_field = true;
    } else if (head == "dim") {
      if (!have_field) syntax_error(at, "'dim' before 'field'");
      if (lt.tokens.size() != 2) syntax_error(at, "expected 'dim <n>'");
      d.dim = parse_int_at(lt, 1);
      if (d.dim <= 0) syntax_error({lt.line, lt.cols[1]}, "dimension must be positive");
      have_dim = true;
    } else if (head == "ops") {
      if (!have_dim) syntax_error(at, "'ops' before 'dim'");
      if (static_cast<int>(lt.tokens.size()) - 1 != d.dim)
        syntax_error(at, "expected " + std::to_string(d.dim) + " operator names");
      if (lt.tokens[1] != "id")
        syntax_error({lt.line, lt.cols[1]}, "the first operator must be 'id'");
      d.ops.assign(lt.tokens.begin() + 1, lt.tokens.end());
      have_ops = true;
    } else if (head == "sparse") {
      if (lt.tokens.size() != 1) syntax_error(at, "'sparse' takes no arguments");
      d.sparse = true;
    } else if (head == "unit") {
      if (!have_dim) syntax_error(at, "'unit' before 'dim'");
      d.unit = parse_scalars(d.field, lt, 1, d.dim);
    } else if (head == "mul") {
      if (!have_dim) syntax_error(at, "'mul' before 'dim'");
      if (lt.tokens.size() < 4 || lt.tokens[3] != "=")
        syntax_error(at, "expected 'mul <i> <j> = <scalars>'");
      SystemDecl::MulEntry e;
      e.i = parse_int_at(lt, 1);
      e.j = parse_int_at(lt, 2);
      e.line = lt.line;
      if (e.i < 0 || e.i >= d.dim)
        syntax_error({lt.line, lt.cols[1]}, "index out of range: " + lt.tokens[1]);
      if (e.j < 0 || e.j >= d.dim)
        syntax_error({lt.line, lt.cols[2]}, "index out of range: " + lt.tokens[2]);
      if (e.i > e.j)
        syntax_error({lt.line, lt.cols[1]}, "mul indices must satisfy i <= j");
      for (const auto& prev : d.muls)
        if (prev.i == e.i && prev.j == e.j)
          syntax_error(at, "duplicate mul entry for (" + lt.tokens[1] + ", " +
                               lt.tokens[2] + "), first given on line " +
                               std::to_string(prev.line));
      e.value = parse_scalars(d.field, lt, 4, d.dim);
      d.muls.push_back(std::move(e));
    } else if (head == "invertible") {
      if (!have_ops) syntax_error(at, "'invertible' before 'ops'");
      if (lt.tokens.size() != 2) syntax_error(at, "expected 'invertible <name>'");
      if (std::find(d.ops.begin(), d.ops.end(), lt.tokens[1]) == d.ops.end())
        syntax_error({lt.line, lt.cols[1]}, "unknown operator: " + lt.tokens[1]);
      d.invertible.push_back(lt.tokens[1]);
    } else {
      syntax_error(at, "unknown directive '" + head + "'");
    }
  }

  if (!have_field) fail(errc::parse_error, "missing 'field' clause");
  if (!have_dim) fail(errc::parse_error, "missing 'dim' clause");
  if (!have_ops) fail(errc::parse_error, "missing 'ops' clause");
  std::sort(d.muls.begin(), d.muls.end(), [](const auto& a, const auto& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  if (!d.sparse) {
    for (int i = 0; i < d.dim; ++i)
      for (int j = i; j < d.dim; ++j) {
        bool found = false;
        for (const auto& e : d.muls)
          if (e.i == i && e.j == j) found = true;
        if (!found)
          fail(errc::parse_error, "missing mul entry for (" + std::to_string(i) +
                                      ", " + std::to_string(j) +
                                      ") and no 'sparse' pragma");
      }
  }
  return d;
}

std::string serialize_declaration(const SystemDecl& d) {
  std::string out = "field " + (d.field.is_rational()
                                    ? std::string("Q")
                                    : "F " + std::to_string(d.field.characteristic()));
  out += "\ndim " + std::to_string(d.dim) + "\nops";
  for (const auto& n : d.ops) out += " " + n;
  out += "\n";
  if (d.sparse) out += "sparse\n";
  if (d.unit) {
    out += "unit";
    for (const auto& s : *d.unit) out += " " + s.to_string();
    out += "\n";
  }
  for (const auto& e : d.muls) {
    out += "mul " + std::to_string(e.i) + " " + std::to_string(e.j) + " =";
    for (const auto& s : e.value) out += " " + s.to_string();
    out += "\n";
  }
  for (const auto& n : d.invertible) out += "invertible " + n + "\n";
  return out;
}

OperatorSystem system_from_decl(const SystemDecl& d) {
  std::vector<Scalar> consts(
      static_cast<std::size_t>(d.dim) * d.dim * d.dim, Scalar::zero(d.field));
  auto put = [&](int i, int j, int k, const Scalar& c) {
    consts[(static_cast<std::size_t>(i) * d.dim + j) * d.dim + k] = c;
  };
  for (const auto& e : d.muls)
    for (int k = 0; k < d.dim; ++k) {
      put(e.i, e.j, k, e.value[k]);
      put(e.j, e.i, k, e.value[k]);
    }
  Algebra a = build_algebra(d.field, d.dim, std::move(consts), d.unit);
  return build_system(a, d.ops, d.invertible);
}

}  // namespace opfield
