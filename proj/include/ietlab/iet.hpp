#pragma once

#include "ietlab/gn.hpp"
#include "ietlab/perm.hpp"
#include "ietlab/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ietlab {

/// Half-open interval [left, right).
struct Interval {
  Scalar left, right;
};

/// Sorts by left endpoint and merges abutting intervals.
std::vector<Interval> normalize_intervals(std::vector<Interval> intervals);
/// Exact set difference a \ b for unions of half-open intervals.
std::vector<Interval> subtract_intervals(const std::vector<Interval>& a,
                                         const std::vector<Interval>& b);

// Interval exchange transformation of [0,1): x -> x + t_k on [b_{k-1}, b_k),
// with b_0 = 0 and b_r = 1 implicit. Always stored canonically: adjacent
// pieces with equal translations are merged, and the image intervals are
// checked to tile [0,1) exactly.
class Iet {
 public:
  Iet(std::vector<Scalar> breakpoints, std::vector<Scalar> translations);
  static Iet identity();
  static Iet rotation(const Scalar& angle);
  /// Standard (lengths, permutation) data: interval k is sent to position
  /// pi(k) in the image order.
  static Iet from_lengths(const std::vector<Scalar>& lengths, const Permutation& pi);

  int pieces() const { return static_cast<int>(translations_.size()); }
  const std::vector<Scalar>& breakpoints() const { return breakpoints_; }
  const std::vector<Scalar>& translations() const { return translations_; }
  Scalar left(int k) const;   // left endpoint of piece k (1-based)
  Scalar right(int k) const;  // right endpoint of piece k
  /// Index of the piece containing x (1-based).
  int piece_containing(const Scalar& x) const;
  const Scalar& translation_at(const Scalar& x) const;

  bool is_identity() const;
  bool operator==(const Iet& o) const;
  bool operator!=(const Iet& o) const { return !(*this == o); }

  std::string to_string() const;  // "iet breakpoints= ... translations= ..."

 private:
  std::vector<Scalar> breakpoints_;
  std::vector<Scalar> translations_;
};

Scalar evaluate(const Iet& f, const Scalar& x);
Iet compose(const Iet& f, const Iet& g);
Iet inverse(const Iet& f);
Iet power(const Iet& f, long long k);
bool equals(const Iet& f, const Iet& g);

/// Least p <= budget with f^p = id, or nullopt.
std::optional<long long> period(const Iet& f, long long budget = 10000);

struct KeaneCertificate {
  std::vector<Scalar> induced_lengths;
  Permutation permutation;
  bool irreducible = false;
  int q_rank_value = 0;
};

enum class ComponentKind { Periodic, Minimal, Unresolved };

struct Component {
  std::vector<Interval> support;
  ComponentKind kind = ComponentKind::Unresolved;
  long long period = 0;  // Periodic only
  std::optional<KeaneCertificate> certificate;  // Minimal only
  long long budget_spent = 0;  // Unresolved only
};

struct ComponentDecomposition {
  std::vector<Component> components;  // ordered by leftmost support point
};

/// Partition of [0,1) into invariant components, each certified Periodic
/// (orbit closes up exactly), Minimal (first-return map satisfies the Keane
/// criterion: irreducible induced permutation, induced lengths of full
/// Q-rank), or honestly Unresolved when the step budget runs out.
ComponentDecomposition decompose(const Iet& f, long long budget = 10000);

struct BpGrowth {
  std::vector<long long> counts;  // #(BP(f^n) within the orbit segment), n = 1..N
  double slope_estimate = 0.0;    // last count / N; an estimate, not the limit
};
BpGrowth bp_growth(const Iet& f, const Scalar& x, int N);

struct RestrictedRotationPiece {
  Interval support;
  Scalar angle;  // translation of the left part; 0 for an identity piece
};

/// Splits [0,1) at every invariant breakpoint and reports the pieces if each
/// is a restricted rotation (or identity); nullopt when f is not of this form.
std::optional<std::vector<RestrictedRotationPiece>> detect_restricted_rotation_product(
    const Iet& f);

/// Piecewise affine bijection of [0,1) with rational slopes.
struct AffinePiece {
  Rational slope;  // positive
  Scalar offset;   // x -> slope*x + offset
};

class PlMap {
 public:
  PlMap(std::vector<Scalar> breakpoints, std::vector<AffinePiece> pieces);
  static PlMap identity();

  int piece_count() const { return static_cast<int>(pieces_.size()); }
  const std::vector<Scalar>& breakpoints() const { return breakpoints_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  Scalar left(int k) const;
  Scalar right(int k) const;

  Scalar evaluate(const Scalar& x) const;
  int piece_containing(const Scalar& x) const;
  PlMap inverse() const;

 private:
  std::vector<Scalar> breakpoints_;
  std::vector<AffinePiece> pieces_;
};

struct NormalizedRestrictedRotations {
  PlMap R;
  GnElement F;  // R o phi o R^{-1}, sigma = id
};

/// Conjugates a product of n restricted rotations onto the n-block model by
/// the piecewise affine map sending the i-th piece onto [(i-1)/n, i/n).
/// Requires every piece length rational (so the slopes are rational).
NormalizedRestrictedRotations normalize_restricted_rotations(const Iet& phi);

/// R o f o R^{-1} when that conjugate has slope 1 on every piece.
Iet conjugate_by_pl(const Iet& f, const PlMap& R);

}  // namespace ietlab
