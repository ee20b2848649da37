#include "opfield/commands.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "opfield/decl.hpp"
#include "opfield/growth.hpp"
#include "opfield/presets.hpp"
#include "opfield/word_poly.hpp"

namespace opfield {

namespace {

using nlohmann::json;

json scalar_vec_json(const Vec& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) out.push_back(scalar_vec_json(m.row(i)));
  return out;
}

// ---------------------------------------------------------------------
// word / word-poly parsing for the expand command
// ---------------------------------------------------------------------

Letter parse_letter(const std::string& tok) {
  if (tok == "frob") return Letter::frobenius();
  if (tok.size() >= 2 && tok[0] == 'F') {
    try {
      return Letter::op(std::stoi(tok.substr(1)));
    } catch (const std::exception&) {
    }
  }
  if (tok.size() >= 2 && tok[0] == 's') {
    std::string body = tok.substr(1);
    auto caret = body.find("^-1");
    if (caret != std::string::npos && caret + 3 == body.size()) {
      try {
        return Letter::sigma_inv(std::stoi(body.substr(0, caret)));
      } catch (const std::exception&) {
      }
    }
  }
  fail(errc::parse_error, "unknown letter '" + tok + "'");
}

Word parse_word(const std::string& text) {
  if (text == "id" || text == "1") return Word{};
  Word w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto dot = text.find('.', pos);
    std::string tok =
        dot == std::string::npos ? text.substr(pos) : text.substr(pos, dot - pos);
    w.letters.push_back(parse_letter(tok));
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return w;
}

bool looks_like_scalar(const std::string& tok) {
  if (tok.empty()) return false;
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i])) && tok[i] != '/')
      return false;
  return true;
}

/// "3 F1.F2 - 1/2 s1^-1 + 4" : sum of terms, each an optional scalar times
/// an optional word ('*' between them also accepted).
WordPoly parse_word_poly(const Field& f, const std::string& text) {
  WordPoly s(f);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) fail(errc::parse_error, "empty combination");
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    Scalar sign = Scalar::one(f);
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -sign;
      ++i;
    } else if (!first) {
      fail(errc::parse_error, "expected '+' or '-' at position " + std::to_string(i));
    }
    first = false;
    skip_ws();
    std::vector<std::string> factors;
    while (i < text.size() && text[i] != '+' && text[i] != '-') {
      if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '*' && text[i] != '+' && text[i] != '-')
        ++i;
      factors.push_back(text.substr(start, i - start));
    }
    if (factors.empty()) fail(errc::parse_error, "empty term");
    Scalar coeff = sign;
    Word word;
    bool have_word = false;
    for (const auto& tok : factors) {
      if (looks_like_scalar(tok)) {
        coeff *= Scalar::parse(f, tok);
      } else {
        if (have_word) fail(errc::parse_error, "two words in one term: " + tok);
        word = parse_word(tok);
        have_word = true;
      }
    }
    s.add(word, coeff);
  }
  return s;
}

GrowthWord parse_growth_word(const FreeAlphabet& a, const std::string& text) {
  if (text == "id" || text == "1") return GrowthWord::empty();
  GrowthWord w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto dot = text.find('.', pos);
    std::string tok =
        dot == std::string::npos ? text.substr(pos) : text.substr(pos, dot - pos);
    bool inv = false;
    if (tok.size() >= 4 && tok.substr(tok.size() - 3) == "^-1") {
      inv = true;
      tok = tok.substr(0, tok.size() - 3);
    }
    if (tok.size() < 2 || tok[0] != 's')
      fail(errc::parse_error, "unknown growth letter '" + tok + "'");
    int gen = 0;
    try {
      gen = std::stoi(tok.substr(1));
    } catch (const std::exception&) {
      fail(errc::parse_error, "unknown growth letter '" + tok + "'");
    }
    if (gen < 1 || gen > a.generators)
      fail(errc::parse_error, "generator out of range: " + tok);
    w.letters.push_back(static_cast<std::uint8_t>(2 * (gen - 1) + (inv ? 1 : 0)));
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  if (!w.reduced()) fail(errc::invalid_argument, "relation word is not reduced");
  return w;
}

// ---------------------------------------------------------------------
// flag parsing
// ---------------------------------------------------------------------

struct Options {
  std::string command;
  std::vector<std::string> positional;
  std::string input_file;
  std::string preset;
  bool json_out = false;
  int radius = -1;
  int bound = -1;
  std::uint64_t prime = 0;
  int free_gens = 0;
  bool fix_powers = false;
  std::vector<std::string> relations;
};

Options parse_options(const std::vector<std::string>& args) {
  Options o;
  if (args.empty()) fail(errc::invalid_argument, "missing command");
  o.command = args[0];
  std::size_t i = 1;
  auto need_value = [&](const std::string& flag) -> std::string {
    if (i + 1 >= args.size())
      fail(errc::invalid_argument, flag + " needs a value");
    return args[++i];
  };
  for (; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--json") o.json_out = true;
    else if (a == "--input") o.input_file = need_value(a);
    else if (a == "--preset") o.preset = need_value(a);
    else if (a == "--radius") o.radius = std::stoi(need_value(a));
    else if (a == "--bound") o.bound = std::stoi(need_value(a));
    else if (a == "--prime") o.prime = std::stoull(need_value(a));
    else if (a == "--free") o.free_gens = std::stoi(need_value(a));
    else if (a == "--fix-powers") o.fix_powers = true;
    else if (a == "--relation") o.relations.push_back(need_value(a));
    else if (a.size() >= 2 && a[0] == '-' && a[1] == '-')
      fail(errc::invalid_argument, "unknown flag: " + a);
    else o.positional.push_back(a);
  }
  return o;
}

SystemDecl load_decl(const Options& o) {
  if (!o.input_file.empty() && !o.preset.empty())
    fail(errc::invalid_argument, "--input and --preset are exclusive");
  if (!o.preset.empty()) return preset_decl(o.preset);
  if (!o.input_file.empty()) {
    std::ifstream in(o.input_file);
    if (!in) fail(errc::invalid_argument, "cannot open " + o.input_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_declaration(ss.str());
  }
  fail(errc::invalid_argument, "need --input FILE or --preset NAME");
}

// ---------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------

json decomposition_json(const Decomposition& dec) {
  json blocks = json::array();
  for (const auto& b : dec.blocks)
    blocks.push_back(json{{"dim", b.dim},
                          {"radical_dim", static_cast<int>(b.max_ideal.size())},
                          {"residue_ok", b.residue_ok}});
  return blocks;
}

std::string decomposition_text(const Decomposition& dec) {
  std::string out;
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    const auto& b = dec.blocks[i];
    out += "block " + std::to_string(i) + ": dim " + std::to_string(b.dim) +
           ", radical dim " + std::to_string(b.max_ideal.size()) + ", residue " +
           (b.residue_ok ? "ok" : "FAILED") + "\n";
    for (const auto& w : b.witnesses) out += "  witness: " + w.to_string() + "\n";
  }
  out += std::string("residue assumption: ") + (dec.residue_ok ? "pass" : "FAILED") + "\n";
  return out;
}

CommandResult finish(json j, std::string text, int code) {
  CommandResult r;
  r.exit_code = code;
  r.json = j.dump(2) + "\n";
  r.text = std::move(text);
  return r;
}

CommandResult cmd_validate(const Options& o) {
  SystemDecl d = load_decl(o);
  OperatorSystem s = system_from_decl(d);
  json j{{"command", "validate"},
         {"field", d.field.to_string()},
         {"dimension", s.algebra.dim()},
         {"status", "ok"},
         {"unit", scalar_vec_json(s.algebra.unit())},
         {"first_coordinate", s.first_coordinate}};
  std::string text = "ok: dimension " + std::to_string(s.algebra.dim()) +
                     " over " + d.field.to_string() + ", unit = (";
  for (int i = 0; i < s.algebra.dim(); ++i)
    text += (i ? ", " : "") + s.algebra.unit()[i].to_string();
  text += ")\n";
  return finish(j, text, 0);
}

CommandResult cmd_decompose(const Options& o) {
  SystemDecl d = load_decl(o);
  OperatorSystem s = system_from_decl(d);
  Decomposition dec = local_decompose(s.algebra);
  json j{{"command", "decompose"},
         {"field", d.field.to_string()},
         {"dimension", s.algebra.dim()},
         {"blocks", decomposition_json(dec)},
         {"status", dec.residue_ok ? "ok" : "residue_failed"}};
  json wit = json::array();
  for (const auto& w : dec.witnesses) wit.push_back(w.to_string());
  j["witnesses"] = wit;
  return finish(j, decomposition_text(dec), dec.residue_ok ? 0 : 2);
}

CommandResult cmd_endos(const Options& o) {
  SystemDecl d = load_decl(o);
  OperatorSystem s = system_from_decl(d);
  Decomposition dec = local_decompose(s.algebra);
  std::vector<EndoDescriptor> endos = associated_endomorphisms(s, dec);
  json ej = json::array();
  for (const auto& e : endos) ej.push_back(scalar_vec_json(e.coeffs));
  json j{{"command", "endos"},
         {"field", d.field.to_string()},
         {"dimension", s.algebra.dim()},
         {"blocks", decomposition_json(dec)},
         {"endomorphisms", ej}};
  std::string text;
  for (const auto& e : endos) {
    text += "s" + std::to_string(e.index) + " =";
    bool first = true;
    for (int k = 0; k < s.algebra.dim(); ++k) {
      const Scalar& c = e.coeffs[k];
      if (c.is_zero()) continue;
      std::string cs = c.to_string();
      bool neg = !cs.empty() && cs[0] == '-';
      std::string mag = neg ? cs.substr(1) : cs;
      text += first ? (neg ? " -" : " ") : (neg ? " - " : " + ");
      text += (mag == "1" ? "" : mag + " ") + s.names[k];
      first = false;
    }
    if (first) text += " 0";
    text += e.invertible ? "  [invertible]" : "";
    text += "  (block " + std::to_string(e.block) + ")\n";
  }
  return finish(j, text, 0);
}

CommandResult cmd_classify1(const Options& o) {
  if (o.positional.size() != 3)
    fail(errc::invalid_argument, "usage: classify1 <a> <b> <c>");
  Field f = o.prime ? Field::prime(o.prime) : Field::rationals();
  Scalar a = Scalar::parse(f, o.positional[0]);
  Scalar b = Scalar::parse(f, o.positional[1]);
  Scalar c = Scalar::parse(f, o.positional[2]);
  SingleOpClassification cl = classify_single_operator(a, b, c);
  const char* tag = cl.tag == SingleOpCase::derivation ? "derivation"
                    : cl.tag == SingleOpCase::endomorphism ? "endomorphism"
                                                           : "trivial";
  json j{{"command", "classify1"},
         {"field", f.to_string()},
         {"case", tag},
         {"a", a.to_string()},
         {"b", b.to_string()},
         {"c", c.to_string()},
         {"map", cl.description}};
  if (!cl.new_basis.empty()) {
    j["basis"] = json::array();
    for (const auto& v : cl.new_basis) j["basis"].push_back(scalar_vec_json(v));
  }
  return finish(j, std::string(tag) + ": " + cl.description + "\n", 0);
}

json rules_json(const TriangularSystem& t) {
  json rules = json::array();
  for (int slot = 0; slot < t.slot_count(); ++slot) {
    ProductRule r = product_rule(t, slot);
    json rem = json::array();
    for (const auto& [l, form] : r.remainders) {
      json terms = json::array();
      for (const auto& [k, c] : form.terms)
        terms.push_back(json{{"slot", k}, {"coeff", c.to_string()}});
      rem.push_back(json{{"l", l}, {"form", terms}});
    }
    rules.push_back(json{{"slot", slot}, {"sigma", r.sigma_slot}, {"remainder", rem}});
  }
  return rules;
}

std::string rule_text(const ProductRule& r) {
  auto fop = [](int s) { return "F" + std::to_string(s); };
  std::string out = fop(r.slot) + "(xy) = " + fop(r.sigma_slot) + "(x) " +
                    fop(r.slot) + "(y)";
  if (r.slot == r.sigma_slot)
    return fop(r.slot) + "(xy) = " + fop(r.slot) + "(x) " + fop(r.slot) + "(y)";
  for (const auto& [l, form] : r.remainders) {
    std::string fs;
    for (const auto& [k, c] : form.terms) {
      if (!fs.empty()) fs += " + ";
      fs += (c.is_one() ? "" : c.to_string() + "*") + fop(k) + "(x)";
    }
    if (form.terms.size() > 1) fs = "(" + fs + ")";
    out += " + " + fs + " " + fop(l) + "(y)";
  }
  return out;
}

CommandResult cmd_triangularize(const Options& o) {
  SystemDecl d = load_decl(o);
  OperatorSystem s = system_from_decl(d);
  Decomposition dec = local_decompose(s.algebra);
  TriangularSystem t = triangularize(s, dec);

  json consts = json::array();
  for (const auto& b : t.constants)
    consts.push_back(json{{"block", b.block},
                          {"k", b.k},
                          {"l", b.l},
                          {"j", b.j},
                          {"value", b.value.to_string()}});
  json blocks = json::array();
  for (const auto& tb : t.blocks) {
    json eta = json::array();
    for (std::size_t i = 0; i < tb.eta_slots.size(); ++i)
      eta.push_back(json{{"slot", tb.eta_slots[i]}, {"level", tb.eta_levels[i]}});
    blocks.push_back(json{{"sigma_slot", tb.sigma_slot},
                          {"eta", eta},
                          {"endo", tb.endo_index}});
  }
  json j{{"command", "triangularize"},
         {"field", d.field.to_string()},
         {"dimension", s.algebra.dim()},
         {"blocks", decomposition_json(dec)},
         {"triangular", json{{"basis", matrix_json(t.basis)},
                             {"constants", consts},
                             {"rules", rules_json(t)},
                             {"layout", blocks}}}};
  std::string text = "triangular basis (columns):\n";
  for (int i = 0; i < t.basis.rows(); ++i) {
    text += " ";
    for (int k = 0; k < t.basis.cols(); ++k)
      text += " " + t.basis.at(i, k).to_string();
    text += "\n";
  }
  for (int slot = 0; slot < t.slot_count(); ++slot)
    text += rule_text(product_rule(t, slot)) + "\n";
  if (!t.constants.empty()) {
    text += "constants b_{k,l}(j):\n";
    for (const auto& b : t.constants)
      text += "  block " + std::to_string(b.block) + ": b_{" + std::to_string(b.k) +
              "," + std::to_string(b.l) + "}(" + std::to_string(b.j) +
              ") = " + b.value.to_string() + "\n";
  }
  return finish(j, text, 0);
}

CommandResult cmd_expand(const Options& o) {
  if (o.positional.size() != 2)
    fail(errc::invalid_argument, "usage: expand <combination> <symbol>");
  SystemDecl d = load_decl(o);
  OperatorSystem s = system_from_decl(d);
  Decomposition dec = local_decompose(s.algebra);
  TriangularSystem t = triangularize(s, dec);
  WordPoly sp = parse_word_poly(d.field, o.positional[0]);
  const std::string& g = o.positional[1];
  ScaleExpansion ex = expand_scale(sp, g, t);
  EndoWord sw = sigma_of_word(ex.leading_word, t);

  json rem = json::array();
  for (const auto& [w, c] : ex.remainder.terms())
    rem.push_back(json{{"word", w.to_string()}, {"coeff", c.to_string()}});
  json j{{"command", "expand"},
         {"field", d.field.to_string()},
         {"dimension", s.algebra.dim()},
         {"expand", json{{"input", sp.to_string()},
                         {"leading_word", ex.leading_word.to_string()},
                         {"leading_sigma", sw.to_string()},
                         {"leading_coeff", ex.leading_coeff.to_string()},
                         {"remainder", rem}}}};
  std::string text = "S(" + g + " x) expansion:\n";
  text += "  leading word: " + ex.leading_word.to_string() + "\n";
  text += "  sigma: " + sw.to_string() + "\n";
  text += "  leading coefficient: " + ex.leading_coeff.to_string() + "\n";
  text += "  remainder: " + ex.remainder.to_string() + "\n";
  return finish(j, text, 0);
}

CommandResult cmd_growth(const Options& o) {
  FreeAlphabet a{o.free_gens > 0 ? o.free_gens : 2};
  RelationFamily fam;
  if (o.fix_powers) fam = RelationFamily::first_fixes_second_powers();
  for (const auto& r : o.relations) {
    auto eq = r.find('=');
    if (eq == std::string::npos)
      fail(errc::invalid_argument, "relation must be of the form u=v: " + r);
    fam.pairs.push_back({parse_growth_word(a, r.substr(0, eq)),
                         parse_growth_word(a, r.substr(eq + 1))});
  }
  int radius = o.radius >= 0 ? o.radius : 3;
  int bound = o.bound >= 0 ? o.bound : std::max(radius, 1);
  GrowthReport rep = growth_function(a, fam, radius, bound);

  json shells = json::array(), classes = json::array(), totals = json::array();
  for (const auto& row : rep.rows) {
    if (row.radius >= 1) shells.push_back(row.shell);
    classes.push_back(row.classes);
    totals.push_back(row.total);
  }
  const char* note =
      "class counts model the growth of the word orbit; they equal the "
      "transcendence degree only when no algebraic relations hold beyond "
      "the declared ones";
  json j{{"command", "growth"},
         {"generators", a.generators},
         {"radius", radius},
         {"bound", bound},
         {"note", note},
         {"growth", json{{"shells", shells}, {"classes", classes}, {"totals", totals}}}};
  std::string text = std::string("# ") + note + "\n";
  for (const auto& row : rep.rows)
    text += "r=" + std::to_string(row.radius) + ": total " +
            std::to_string(row.total) + ", shell " + std::to_string(row.shell) +
            ", classes " + std::to_string(row.classes) + "\n";
  return finish(j, text, 0);
}

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
  Options o;
  try {
    o = parse_options(args);
    if (o.command == "validate") return cmd_validate(o);
    if (o.command == "decompose") return cmd_decompose(o);
    if (o.command == "endos") return cmd_endos(o);
    if (o.command == "classify1") return cmd_classify1(o);
    if (o.command == "triangularize") return cmd_triangularize(o);
    if (o.command == "expand") return cmd_expand(o);
    if (o.command == "growth") return cmd_growth(o);
    fail(errc::invalid_argument, "unknown command: " + o.command);
  } catch (const Error& e) {
    CommandResult r;
    r.exit_code = e.is_input_error() ? 1 : 2;
    json j{{"command", o.command.empty() ? "?" : o.command},
           {"error", json{{"code", errc_name(e.code())}, {"message", e.what()}}}};
    r.json = j.dump(2) + "\n";
    r.text = std::string("error [") + errc_name(e.code()) + "]: " + e.what() + "\n";
    return r;
  } catch (const std::exception& e) {
    CommandResult r;
    r.exit_code = 1;
    json j{{"command", o.command.empty() ? "?" : o.command},
           {"error", json{{"code", "InvalidArgument"}, {"message", e.what()}}}};
    r.json = j.dump(2) + "\n";
    r.text = std::string("error: ") + e.what() + "\n";
    return r;
  }
}

}  // namespace opfield
