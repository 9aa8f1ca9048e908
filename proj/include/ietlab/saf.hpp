#pragma once

#include "ietlab/iet.hpp"
#include "ietlab/scalar.hpp"

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ietlab {

// Element of R (x)_Q R restricted to the span of the basis (1, s_1, ..., s_m):
// a sparse rational matrix indexed by ordered basis pairs. Index 0 is the
// constant-1 direction, index i >= 1 the i-th registered symbol.
class SafTensor {
 public:
  SafTensor() = default;

  /// a (x) b.
  static SafTensor outer(const Scalar& a, const Scalar& b);
  /// a /\ b := a (x) b - b (x) a.
  static SafTensor wedge(const Scalar& a, const Scalar& b);

  SafTensor operator+(const SafTensor& o) const;
  SafTensor operator-() const;
  SafTensor operator-(const SafTensor& o) const { return *this + (-o); }
  SafTensor scaled(const Rational& q) const;
  SafTensor& operator+=(const SafTensor& o) { return *this = *this + o; }

  bool operator==(const SafTensor& o) const { return entries_ == o.entries_; }
  bool operator!=(const SafTensor& o) const { return !(*this == o); }
  bool is_zero() const { return entries_.empty(); }

  /// 1 + highest symbol index touched (so unused symbols cost nothing).
  int basis_size() const;
  const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }
  /// Machine form: (i, j, coefficient) triples in index order.
  std::vector<std::tuple<int, int, Rational>> triples() const;

  /// Wedge normal form when antisymmetric, raw (x) terms otherwise.
  std::string to_string() const;

 private:
  friend SafTensor wedge_normal_form(const SafTensor& t);
  void add_entry(int i, int j, const Rational& q);
  void adopt_labels(const Scalar& s);
  std::shared_ptr<const std::vector<SymbolEntry>> labels_;
  std::map<std::pair<int, int>, Rational> entries_;
};

/// The translation-length invariant: sum over canonical pieces of
/// length (x) translation, exact over the symbol basis.
SafTensor saf(const Iet& f);

/// Rewrites an antisymmetric tensor with support strictly above the diagonal,
/// entry (i, j) = coefficient of e_i /\ e_j. Throws NotAntisymmetric when the
/// symmetric part does not vanish.
SafTensor wedge_normal_form(const SafTensor& t);

inline bool is_zero(const SafTensor& t) { return t.is_zero(); }

}  // namespace ietlab
