#include "ietlab/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ietlab {

SymbolTable::SymbolTable() : entries_(std::make_shared<std::vector<SymbolEntry>>()) {}

void SymbolTable::register_symbol(const std::string& name, const std::string& witness) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
    throw MalformedWitness("bad symbol name: '" + name + "'");
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      throw MalformedWitness("bad symbol name: '" + name + "'");
  if (index_of(name) >= 0) throw DuplicateSymbol("symbol already registered: " + name);
  DecimalWitness w;
  try {
    w = parse_decimal_witness(witness);
  } catch (const std::invalid_argument& e) {
    throw MalformedWitness(e.what());
  }
  entries_->push_back({name, witness, w.value, w.fraction_digits});
}

int SymbolTable::size() const { return static_cast<int>(entries_->size()); }

int SymbolTable::index_of(const std::string& name) const {
  for (size_t i = 0; i < entries_->size(); ++i)
    if ((*entries_)[i].name == name) return static_cast<int>(i);
  return -1;
}

const SymbolEntry& SymbolTable::entry(int index) const { return (*entries_)[index]; }

Scalar::Scalar(const Rational& q) : constant_(q) {}

Scalar::Scalar(const SymbolTable& table, const Rational& q)
    : table_(table.entries_), constant_(q) {}

Scalar Scalar::symbol(const SymbolTable& table, const std::string& name) {
  int idx = table.index_of(name);
  if (idx < 0) throw ParseError("unknown symbol: " + name);
  Scalar s(table, 0);
  s.coeffs_[idx] = 1;
  return s;
}

void Scalar::merge_table(const Scalar& o, Scalar& out) const {
  if (table_ && o.table_ && table_ != o.table_)
    throw MixedSymbolTables("operands belong to different symbol tables");
  out.table_ = table_ ? table_ : o.table_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r;
  merge_table(o, r);
  r.constant_ = constant_ + o.constant_;
  r.coeffs_ = coeffs_;
  for (const auto& [k, v] : o.coeffs_) {
    auto it = r.coeffs_.find(k);
    if (it == r.coeffs_.end()) {
      r.coeffs_[k] = v;
    } else {
      it->second += v;
      if (it->second == 0) r.coeffs_.erase(it);
    }
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.constant_ = -r.constant_;
  for (auto& [k, v] : r.coeffs_) v = -v;
  return r;
}

Scalar Scalar::scaled(const Rational& q) const {
  Scalar r;
  r.table_ = table_;
  if (q == 0) return r;
  r.constant_ = constant_ * q;
  for (const auto& [k, v] : coeffs_) r.coeffs_[k] = v * q;
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  return constant_ == o.constant_ && coeffs_ == o.coeffs_;
}

void Scalar::enclosure(Rational& lo, Rational& hi) const {
  lo = hi = constant_;
  for (const auto& [k, v] : coeffs_) {
    const SymbolEntry& e = (*table_)[k];
    // The witness claims witness_precision correct fraction digits: the true
    // value lies within one unit in the last claimed place.
    Int scale = 1;
    for (int i = 0; i < e.witness_precision; ++i) scale *= 10;
    Rational radius(Int(1), scale);
    Rational wlo = e.witness - radius, whi = e.witness + radius;
    if (v >= 0) {
      lo += v * wlo;
      hi += v * whi;
    } else {
      lo += v * whi;
      hi += v * wlo;
    }
  }
}

Ordering Scalar::sign() const {
  if (coeffs_.empty()) {
    if (constant_ == 0) return Ordering::Equal;
    return constant_ > 0 ? Ordering::Greater : Ordering::Less;
  }
  Rational lo, hi;
  enclosure(lo, hi);
  if (lo > 0) return Ordering::Greater;
  if (hi < 0) return Ordering::Less;
  throw InsufficientPrecision("witness enclosure [" + rational_to_string(lo) + ", " +
                              rational_to_string(hi) + "] cannot be separated from 0 for " +
                              to_string());
}

Ordering Scalar::compare(const Scalar& o) const {
  Scalar d = *this - o;
  if (d.coeffs_.empty())
    return d.constant_ == 0 ? Ordering::Equal
                            : (d.constant_ > 0 ? Ordering::Greater : Ordering::Less);
  return d.sign();
}

std::string Scalar::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (constant_ != 0 || coeffs_.empty()) {
    out << rational_to_string(constant_);
    first = false;
  }
  for (const auto& [k, v] : coeffs_) {
    const std::string& name = (*table_)[k].name;
    Rational a = v;
    if (!first) {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a == -1) {
      out << "-";
      a = 1;
    } else if (a < 0) {
      out << "-";
      a = -a;
    }
    if (a != 1) out << rational_to_string(a) << "*";
    out << name;
    first = false;
  }
  return out.str();
}

// ---- parser -----------------------------------------------------------

namespace {

struct ScalarParser {
  const SymbolTable& table;
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  std::string read_number() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.'))
      ++pos;
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    if (pos == start) throw ParseError("expected number at position " + std::to_string(start) +
                                       " in '" + text + "'");
    return text.substr(start, pos - start);
  }

  std::string read_ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_'))
      ++pos;
    if (pos == start) throw ParseError("expected identifier at position " +
                                       std::to_string(start) + " in '" + text + "'");
    return text.substr(start, pos - start);
  }

  // term := rational | rational '*' ident | ident
  Scalar term() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      Rational q = parse_rational(read_number());
      if (peek() == '*') {
        ++pos;
        return Scalar::symbol(table, read_ident()).scaled(q);
      }
      return Scalar(table, q);
    }
    return Scalar::symbol(table, read_ident());
  }

  Scalar parse() {
    Scalar acc(table, 0);
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos;
    } else if (peek() == '+') {
      ++pos;
    }
    acc = negate ? -term() : term();
    while (!at_end()) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos;
        Scalar t = term();
        acc = c == '+' ? acc + t : acc - t;
      } else {
        throw ParseError("unexpected character '" + std::string(1, c) + "' in '" + text + "'");
      }
    }
    return acc;
  }
};

}  // namespace

Scalar Scalar::parse(const SymbolTable& table, const std::string& text) {
  ScalarParser p{table, text};
  if (p.at_end()) throw ParseError("empty scalar");
  return p.parse();
}

// ---- circle values ----------------------------------------------------

CircleValue::CircleValue(const Scalar& value, const Rational& modulus) {
  if (modulus <= 0) throw Error("modulus must be positive");
  *this = reduce_mod(value, modulus);
}

CircleValue reduce_mod(const Scalar& a, const Rational& modulus) {
  if (modulus <= 0) throw Error("modulus must be positive");
  Rational lo, hi;
  a.enclosure(lo, hi);
  // Initial guess from the enclosure midpoint, then correct by exact compare.
  Int k = rational_floor((lo + hi) / 2 / modulus);
  Scalar rep = a - Scalar(Rational(k) * modulus);
  Scalar zero{Rational(0)}, mod{modulus};
  while (rep.compare(zero) == Ordering::Less) rep = rep + mod;
  while (rep.compare(mod) != Ordering::Less) rep = rep - mod;
  CircleValue cv;
  cv.modulus_ = modulus;
  cv.rep_ = rep;
  return cv;
}

CircleValue CircleValue::operator+(const CircleValue& o) const {
  if (modulus_ != o.modulus_) throw Error("circle value modulus mismatch");
  return reduce_mod(rep_ + o.rep_, modulus_);
}

CircleValue CircleValue::operator-() const { return reduce_mod(-rep_, modulus_); }

bool CircleValue::operator==(const CircleValue& o) const {
  return modulus_ == o.modulus_ && rep_ == o.rep_;
}

bool CircleValue::is_zero() const { return rep_.is_rational() && rep_.constant() == 0; }

// ---- rank -------------------------------------------------------------

namespace {

// Rows are (constant, coefficients over all symbols seen); returns the rank
// over Q by fraction-free elimination.
int matrix_rank(std::vector<std::vector<Rational>> rows) {
  size_t cols = 0;
  for (const auto& r : rows) cols = std::max(cols, r.size());
  for (auto& r : rows) r.resize(cols, Rational(0));
  int rank = 0;
  size_t col = 0;
  for (size_t r = 0; r < rows.size() && col < cols; ++col) {
    size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rational factor = rows[i][col] / rows[r][col];
      for (size_t j = col; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> scalar_rows(const std::vector<Scalar>& values) {
  int max_idx = -1;
  for (const auto& v : values)
    for (const auto& [k, q] : v.coefficients()) max_idx = std::max(max_idx, k);
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : values) {
    std::vector<Rational> row(static_cast<size_t>(max_idx + 2), Rational(0));
    row[0] = v.constant();
    for (const auto& [k, q] : v.coefficients()) row[static_cast<size_t>(k + 1)] = q;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int q_rank(const std::vector<Scalar>& values) {
  auto rows = scalar_rows(values);
  std::vector<Rational> one(rows.empty() ? 1 : rows[0].size(), Rational(0));
  one[0] = 1;
  rows.push_back(std::move(one));
  return matrix_rank(std::move(rows));
}

int q_rank_without_one(const std::vector<Scalar>& values) {
  return matrix_rank(scalar_rows(values));
}

}  // namespace ietlab
