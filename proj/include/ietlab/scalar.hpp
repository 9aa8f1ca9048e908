#pragma once

#include "ietlab/errors.hpp"
#include "ietlab/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ietlab {

// Exact arithmetic for numbers of the form q0 + sum q_i * s_i, where the s_i
// are registered irrational symbols assumed Q-linearly independent together
// with 1. All exactness guarantees are conditional on that declared
// independence. Ordering is decided from fixed-precision decimal witnesses
// supplied at registration; a comparison that exceeds them throws
// InsufficientPrecision rather than guessing.

struct SymbolEntry {
  std::string name;
  std::string witness_text;
  Rational witness;       // decimal value of the witness string
  int witness_precision;  // number of correct fraction digits claimed
};

class SymbolTable {
 public:
  SymbolTable();

  /// Registers a symbol. Symbols are append-only; Scalars built against an
  /// earlier snapshot stay valid. Throws DuplicateSymbol / MalformedWitness.
  void register_symbol(const std::string& name, const std::string& witness);

  int size() const;
  int index_of(const std::string& name) const;  // -1 if absent
  const SymbolEntry& entry(int index) const;

  bool same_storage(const SymbolTable& other) const {
    return entries_ == other.entries_;
  }

 private:
  friend class Scalar;
  std::shared_ptr<std::vector<SymbolEntry>> entries_;
};

enum class Ordering { Less, Equal, Greater };

class Scalar {
 public:
  Scalar() = default;                       // zero, table-free
  explicit Scalar(const Rational& q);       // rational constant, table-free
  Scalar(const SymbolTable& table, const Rational& q);

  /// The symbol with the given name, coefficient 1.
  static Scalar symbol(const SymbolTable& table, const std::string& name);

  static Scalar parse(const SymbolTable& table, const std::string& text);

  const Rational& constant() const { return constant_; }
  const std::map<int, Rational>& coefficients() const { return coeffs_; }
  bool is_rational() const { return coeffs_.empty(); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar scaled(const Rational& q) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }

  /// Exact equality: identical coefficient vectors.
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Ordering compare(const Scalar& o) const;
  bool operator<(const Scalar& o) const { return compare(o) == Ordering::Less; }
  bool operator<=(const Scalar& o) const { return compare(o) != Ordering::Greater; }
  bool operator>(const Scalar& o) const { return compare(o) == Ordering::Greater; }
  bool operator>=(const Scalar& o) const { return compare(o) != Ordering::Less; }

  Ordering sign() const;  // compare against 0

  /// Witness enclosure [lo, hi] containing the true value.
  void enclosure(Rational& lo, Rational& hi) const;

  /// Canonical text per the scalar grammar: constant first, then symbols in
  /// registration order, coefficient 1 elided.
  std::string to_string() const;

  bool has_table() const { return table_ != nullptr; }
  std::shared_ptr<const std::vector<SymbolEntry>> table_storage() const { return table_; }

 private:
  void merge_table(const Scalar& o, Scalar& out) const;
  std::shared_ptr<const std::vector<SymbolEntry>> table_;
  Rational constant_;
  std::map<int, Rational> coeffs_;  // symbol index -> nonzero coefficient
};

/// Circle value: representative r with 0 <= r < L, arithmetic mod L.
class CircleValue {
 public:
  CircleValue() : modulus_(1) {}
  CircleValue(const Scalar& value, const Rational& modulus);  // reduces

  const Rational& modulus() const { return modulus_; }
  const Scalar& representative() const { return rep_; }

  CircleValue operator+(const CircleValue& o) const;
  CircleValue operator-() const;
  CircleValue operator-(const CircleValue& o) const { return *this + (-o); }
  bool operator==(const CircleValue& o) const;
  bool operator!=(const CircleValue& o) const { return !(*this == o); }
  bool is_zero() const;

 private:
  friend CircleValue reduce_mod(const Scalar& a, const Rational& modulus);
  Rational modulus_;
  Scalar rep_;
};

/// reduce_mod(a, L): the representative of a in [0, L).
CircleValue reduce_mod(const Scalar& a, const Rational& modulus);

/// dim_Q of span({1} union values), by exact Gaussian elimination. The empty
/// list gives 1 (the constant-1 direction alone).
int q_rank(const std::vector<Scalar>& values);

/// dim_Q of span(values) alone, without the forced constant-1 row.
int q_rank_without_one(const std::vector<Scalar>& values);

}  // namespace ietlab
