#include "ietlab/workspace.hpp"

#include "ietlab/revfact.hpp"
#include "ietlab/saf.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ietlab {

namespace {

std::string at(int line, size_t col) {
  return "line " + std::to_string(line) + ", column " + std::to_string(col) + ": ";
}

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// A field is "name= value"; the value runs to the next field or end of line.
struct FieldSeg {
  std::string name;
  std::string value;
  size_t col;  // 1-based column of the value
};

std::vector<FieldSeg> split_fields(const std::string& text, int line,
                                   const std::string& head) {
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  size_t h = i;
  while (i < text.size() && ident_char(text[i])) ++i;
  if (text.substr(h, i - h) != head)
    throw ParseError(at(line, h + 1) + "expected '" + head + "'");

  struct Match {
    size_t name_pos, val_pos;
    std::string name;
  };
  std::vector<Match> matches;
  for (size_t p = i; p < text.size(); ++p) {
    if (!ident_char(text[p]) || std::isdigit(static_cast<unsigned char>(text[p])))
      continue;
    if (p > 0 && ident_char(text[p - 1])) continue;
    size_t q = p;
    while (q < text.size() && ident_char(text[q])) ++q;
    size_t r = q;
    while (r < text.size() && (text[r] == ' ' || text[r] == '\t')) ++r;
    if (r < text.size() && text[r] == '=')
      matches.push_back({p, r + 1, text.substr(p, q - p)});
    p = q - 1;
  }
  if (matches.empty())
    throw ParseError(at(line, i + 1) + "expected a 'name=' field after '" + head + "'");
  if (trim(text.substr(i, matches.front().name_pos - i)) != "")
    throw ParseError(at(line, i + 1) + "unexpected text before the first field");

  std::vector<FieldSeg> out;
  for (size_t k = 0; k < matches.size(); ++k) {
    size_t end = k + 1 < matches.size() ? matches[k + 1].name_pos : text.size();
    size_t v = matches[k].val_pos;
    while (v < end && std::isspace(static_cast<unsigned char>(text[v]))) ++v;
    out.push_back({matches[k].name, trim(text.substr(v, end - v)), v + 1});
  }
  return out;
}

std::vector<Scalar> parse_scalar_list(const SymbolTable& table, const FieldSeg& f,
                                      int line) {
  std::vector<Scalar> out;
  size_t start = 0, col = f.col;
  for (;;) {
    size_t comma = f.value.find(',', start);
    std::string item = f.value.substr(start, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - start);
    std::string t = trim(item);
    size_t lead = 0;
    while (lead < item.size() && std::isspace(static_cast<unsigned char>(item[lead])))
      ++lead;
    if (t.empty())
      throw ParseError(at(line, col) + "empty entry in '" + f.name + "' list");
    try {
      out.push_back(Scalar::parse(table, t));
    } catch (const ParseError& e) {
      throw ParseError(at(line, col + lead) + e.what());
    }
    if (comma == std::string::npos) break;
    col = f.col + comma + 1;
    start = comma + 1;
  }
  return out;
}

long long parse_int_field(const FieldSeg& f, int line) {
  try {
    size_t used = 0;
    long long v = std::stoll(f.value, &used);
    if (used != f.value.size()) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::exception&) {
    throw ParseError(at(line, f.col) + "expected an integer for '" + f.name + "'");
  }
}

void expect_fields(const std::vector<FieldSeg>& fields,
                   const std::vector<std::string>& names, int line) {
  bool ok = fields.size() == names.size();
  for (size_t k = 0; ok && k < names.size(); ++k) ok = fields[k].name == names[k];
  if (!ok) {
    std::string want;
    for (const auto& n : names) want += (want.empty() ? "'" : " '") + n + "='";
    throw ParseError(at(line, 1) + "expected fields " + want);
  }
}

}  // namespace

Iet parse_iet_body(const SymbolTable& table, const std::string& text, int line) {
  auto fields = split_fields(text, line, "iet");
  if (fields.front().name == "lengths") {
    expect_fields(fields, {"lengths", "permutation"}, line);
    std::vector<Scalar> lengths = parse_scalar_list(table, fields[0], line);
    Permutation pi;
    try {
      pi = Permutation::parse(fields[1].value, static_cast<int>(lengths.size()));
    } catch (const Error& e) {
      throw ParseError(at(line, fields[1].col) + e.what());
    }
    if (pi.size() != static_cast<int>(lengths.size()))
      throw ParseError(at(line, fields[1].col) + "permutation size " +
                       std::to_string(pi.size()) + " does not match " +
                       std::to_string(lengths.size()) + " lengths");
    return Iet::from_lengths(lengths, pi);
  }
  expect_fields(fields, {"breakpoints", "translations"}, line);
  std::vector<Scalar> b = parse_scalar_list(table, fields[0], line);
  std::vector<Scalar> t = parse_scalar_list(table, fields[1], line);
  if (b.size() != t.size())
    throw ParseError(at(line, fields[1].col) + std::to_string(b.size()) +
                     " breakpoints need " + std::to_string(b.size()) +
                     " translations, got " + std::to_string(t.size()));
  return Iet(std::move(b), std::move(t));
}

GnElement parse_gn_body(const SymbolTable& table, const std::string& text, int line) {
  auto fields = split_fields(text, line, "gn");
  expect_fields(fields, {"n", "sigma", "alpha"}, line);
  long long n = parse_int_field(fields[0], line);
  if (n < 1 || n > 1 << 20)
    throw ParseError(at(line, fields[0].col) + "block count out of range");
  Permutation sigma;
  try {
    sigma = Permutation::parse(fields[1].value, static_cast<int>(n));
  } catch (const Error& e) {
    throw ParseError(at(line, fields[1].col) + e.what());
  }
  if (sigma.size() != n)
    throw ParseError(at(line, fields[1].col) + "permutation size does not match n");
  std::vector<Scalar> angles = parse_scalar_list(table, fields[2], line);
  if (angles.size() != static_cast<size_t>(n))
    throw ParseError(at(line, fields[2].col) + "expected " + std::to_string(n) +
                     " angles, got " + std::to_string(angles.size()));
  Rational m(1, n);
  std::vector<CircleValue> alpha;
  for (const auto& s : angles) alpha.push_back(reduce_mod(s, m));
  return GnElement(std::move(alpha), std::move(sigma));
}

Word parse_word(const std::string& text, int line) {
  std::string t = trim(text);
  if (t == "1") return {};
  Word out;
  size_t p = 0;
  while (p < t.size()) {
    while (p < t.size() && std::isspace(static_cast<unsigned char>(t[p]))) ++p;
    if (p >= t.size()) break;
    size_t start = p;
    if (!ident_char(t[p]) || std::isdigit(static_cast<unsigned char>(t[p])))
      throw ParseError(at(line, p + 1) + "expected a generator name");
    while (p < t.size() && ident_char(t[p])) ++p;
    WordFactor f{t.substr(start, p - start), 1};
    if (p < t.size() && t[p] == '^') {
      ++p;
      size_t e = p;
      if (p < t.size() && (t[p] == '-' || t[p] == '+')) ++p;
      while (p < t.size() && std::isdigit(static_cast<unsigned char>(t[p]))) ++p;
      if (p == e || (p == e + 1 && !std::isdigit(static_cast<unsigned char>(t[e]))))
        throw ParseError(at(line, e + 1) + "expected an exponent after '^'");
      f.exponent = std::stoi(t.substr(e, p - e));
    }
    if (f.exponent != 0) out.push_back(std::move(f));
  }
  return out;
}

namespace {

struct SourceLine {
  int no;
  std::string text;
};

std::vector<SourceLine> content_lines(const std::string& content) {
  std::vector<SourceLine> out;
  std::istringstream in(content);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.push_back({no, std::move(t)});
  }
  return out;
}

std::string first_token(const std::string& s) {
  size_t q = 0;
  while (q < s.size() && ident_char(s[q])) ++q;
  return s.substr(0, q);
}

void register_symbol_line(Workspace& ws, const SourceLine& l) {
  // "symbol <name> = <witness>"
  std::string rest = trim(l.text.substr(6));
  size_t eq = rest.find('=');
  if (eq == std::string::npos)
    throw ParseError(at(l.no, 1) + "expected 'symbol <name> = <witness>'");
  std::string name = trim(rest.substr(0, eq));
  std::string witness = trim(rest.substr(eq + 1));
  if (name.empty() || witness.empty())
    throw ParseError(at(l.no, 1) + "expected 'symbol <name> = <witness>'");
  int idx = ws.symbols.index_of(name);
  if (idx >= 0) {
    if (ws.symbols.entry(idx).witness_text != witness)
      throw DuplicateSymbol(at(l.no, 1) + "symbol " + name +
                            " already declared with a different witness");
    return;
  }
  try {
    ws.symbols.register_symbol(name, witness);
  } catch (const MalformedWitness& e) {
    throw ParseError(at(l.no, eq + 8) + e.what());
  }
}

Iet parse_gen_body(const Workspace& ws, const std::string& body, int line,
                   size_t col) {
  std::string head = first_token(trim(body));
  if (head == "iet") return parse_iet_body(ws.symbols, body, line);
  if (head == "gn") return to_iet(parse_gn_body(ws.symbols, body, line));
  throw ParseError(at(line, col) + "expected an 'iet' or 'gn' body");
}

}  // namespace

WorkspaceValue load_value(Workspace& ws, const std::string& content) {
  auto lines = content_lines(content);
  size_t k = 0;
  while (k < lines.size() && first_token(lines[k].text) == "symbol")
    register_symbol_line(ws, lines[k++]);
  if (k == lines.size()) throw ParseError("no value in input");

  std::string head = first_token(lines[k].text);
  if (head == "iet" || head == "gn") {
    if (k + 1 < lines.size())
      throw ParseError(at(lines[k + 1].no, 1) + "unexpected trailing content");
    if (head == "iet") return parse_iet_body(ws.symbols, lines[k].text, lines[k].no);
    return parse_gn_body(ws.symbols, lines[k].text, lines[k].no);
  }

  if (head != "gen" && head != "relation")
    throw ParseError(at(lines[k].no, 1) +
                     "expected 'symbol', 'iet', 'gn', 'gen', or 'relation:'");
  MarkedAction action;
  for (; k < lines.size(); ++k) {
    const SourceLine& l = lines[k];
    std::string t = first_token(l.text);
    if (t == "symbol") {
      register_symbol_line(ws, l);
    } else if (t == "gen") {
      std::string rest = l.text.substr(3);
      size_t eq = rest.find('=');
      if (eq == std::string::npos)
        throw ParseError(at(l.no, 1) + "expected 'gen <name> = <body>'");
      std::string name = trim(rest.substr(0, eq));
      if (name.empty() || !std::all_of(name.begin(), name.end(), ident_char))
        throw ParseError(at(l.no, 4) + "bad generator name");
      if (action.generators.count(name))
        throw ParseError(at(l.no, 4) + "generator " + name + " bound twice");
      action.generators.emplace(
          name, parse_gen_body(ws, rest.substr(eq + 1), l.no, 4 + eq + 1));
    } else if (t == "relation") {
      size_t colon = l.text.find(':');
      if (colon == std::string::npos)
        throw ParseError(at(l.no, 9) + "expected ':' after 'relation'");
      action.relations.push_back(parse_word(l.text.substr(colon + 1), l.no));
    } else {
      throw ParseError(at(l.no, 1) + "expected 'symbol', 'gen', or 'relation:'");
    }
  }
  for (const auto& w : action.relations)
    for (const auto& f : w)
      if (!action.generators.count(f.name))
        throw UnboundGenerator("relation uses unbound generator: " + f.name);
  return action;
}

Iet load_iet(Workspace& ws, const std::string& content) {
  return as_iet(load_value(ws, content));
}

GnElement load_gn(Workspace& ws, const std::string& content) {
  WorkspaceValue v = load_value(ws, content);
  if (auto* g = std::get_if<GnElement>(&v)) return std::move(*g);
  throw ParseError("expected a gn value");
}

MarkedAction load_action(Workspace& ws, const std::string& content) {
  WorkspaceValue v = load_value(ws, content);
  if (auto* a = std::get_if<MarkedAction>(&v)) return std::move(*a);
  throw ParseError("expected an action (gen/relation lines)");
}

Iet as_iet(const WorkspaceValue& v) {
  if (const auto* f = std::get_if<Iet>(&v)) return *f;
  if (const auto* g = std::get_if<GnElement>(&v)) return to_iet(*g);
  throw ParseError("expected a map, got an action");
}

namespace {

std::string symbol_header(const Workspace& ws) {
  std::string out;
  for (int i = 0; i < ws.symbols.size(); ++i) {
    const SymbolEntry& e = ws.symbols.entry(i);
    out += "symbol " + e.name + " = " + e.witness_text + "\n";
  }
  return out;
}

}  // namespace

std::string save_iet(const Workspace& ws, const Iet& f) {
  return symbol_header(ws) + f.to_string() + "\n";
}

std::string save_gn(const Workspace& ws, const GnElement& g) {
  return symbol_header(ws) + g.to_string() + "\n";
}

std::string save_action(const Workspace& ws, const MarkedAction& action) {
  std::string out = symbol_header(ws);
  for (const auto& [name, g] : action.generators)
    out += "gen " + name + " = " + g.to_string() + "\n";
  for (const auto& w : action.relations)
    out += "relation: " + word_to_string(w) + "\n";
  return out;
}

std::string save_value(const Workspace& ws, const WorkspaceValue& v) {
  if (const auto* f = std::get_if<Iet>(&v)) return save_iet(ws, *f);
  if (const auto* g = std::get_if<GnElement>(&v)) return save_gn(ws, *g);
  return save_action(ws, std::get<MarkedAction>(v));
}

}  // namespace ietlab
