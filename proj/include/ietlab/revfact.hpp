#pragma once

#include "ietlab/iet.hpp"
#include "ietlab/saf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ietlab {

enum class FactorKind { Involutions, Periodic };

// Factors multiply apply-right-first to the original map; every order in
// factor_orders has been verified by exact powering.
struct FactorizationResult {
  std::vector<Iet> factors;
  FactorKind kind = FactorKind::Involutions;
  bool recomposition_checked = false;
  std::vector<long long> factor_orders;
};

/// Rotation by d1 on [0, l1) followed by rotation by d2 on [l1, 1).
Iet two_restricted_rotation_map(const Scalar& l1, const Scalar& d1, const Scalar& d2);

/// Writes a periodic map as a product of two involutions: on each orbit tower
/// J_1, ..., J_p of equal-length floors the first involution translates J_k
/// onto J_{p+1-k}, and the second is the first composed with the map.
FactorizationResult factor_periodic_two_involutions(const Iet& f, long long budget = 10000);

/// Given any exact reverser h of f (h f h^-1 = f^-1), returns a reverser of
/// verified finite order, built per invariant component: an orbit-tower
/// involution on the periodic part, a sign-flipped h on even families of
/// minimal components, an odd power of h when h has finite order on the
/// family, and a pullback through the n-block normalization when <f, h> acts
/// freely. The output order is 2 or a multiple of 4.
Iet finite_order_reverser(const Iet& f, const Iet& h, long long budget = 10000);

/// f = h' o (h'^-1 o f) with h' of finite even order d, so both factors are
/// periodic ((h'^-1 f)^d = id); each is then split into two involutions.
FactorizationResult factor_reversible_four_involutions(const Iet& f, const Iet& h,
                                                       long long budget = 10000);

struct ThreeIetAnalysis {
  SafTensor invariant;
  bool saf_zero = false;
  bool periodic = false;
  std::optional<long long> period_found;
  std::optional<FactorizationResult> involution_pair;  // set when periodic
  bool anomaly = false;  // zero invariant but no period within budget
};

/// For maps with at most 3 canonical pieces: zero invariant iff periodic;
/// when periodic, the period and a 2-involution factorization are produced.
ThreeIetAnalysis three_iet_analysis(const Iet& f, long long budget = 10000);

struct NonReversibilityCertificate {
  Scalar l1, d1, l2, d2;          // piece lengths and angles
  bool lengths_differ = false;    // l1 != l2, exact
  int irrational_ratio_index = 0; // 1 or 2: which d_i/l_i is irrational
  std::string argument;
};

/// For a product of exactly two restricted rotations with l1 != l2 and at
/// least one angle/length ratio irrational: a checked certificate that no
/// exact reverser exists. Throws NotApplicable when the hypotheses fail.
NonReversibilityCertificate rr_non_reversibility_certificate(const Iet& f);

/// The 6-involution factorization of the two-restricted-rotation map with
/// l1 = p/(p+1), angles d1 and d2 = -p*d1 + r: a rational q with
/// 0 < (p+1)*d1 - q < 1/p is located from the witness enclosure, the map is
/// twisted by the periodic product RP of rational restricted rotations, the
/// twist is absorbed by a cyclic element of the (p+1)-block group, and the
/// three periodic pieces are each split into two involutions.
FactorizationResult six_involutions_rr(int p, const Scalar& d1, const Rational& r,
                                       long long budget = 10000);

}  // namespace ietlab
