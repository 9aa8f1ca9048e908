#pragma once

#include "ietlab/perm.hpp"
#include "ietlab/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ietlab {

class Iet;

// The group of exchanges of [0,1) preserving the partition into n equal
// blocks and acting blockwise as a rotation: elements are pairs
// (alpha, sigma) with alpha a vector of n circle values of modulus 1/n.
//
// Composition convention matches the permutation one (apply-right-first):
//   sigma_{f o g} = sigma_f o sigma_g,  alpha_{f o g} = alpha_g + sigma_g(alpha_f)
// where sigma(alpha)_i = alpha_{sigma(i)}.
class GnElement {
 public:
  GnElement(std::vector<CircleValue> alpha, Permutation sigma);
  static GnElement identity(int n);

  int n() const { return sigma_.size(); }
  const Permutation& sigma() const { return sigma_; }
  const CircleValue& alpha(int i) const { return alpha_[static_cast<size_t>(i - 1)]; }
  const std::vector<CircleValue>& alpha() const { return alpha_; }
  Rational block_modulus() const { return Rational(1, n()); }

  bool operator==(const GnElement& o) const;
  bool operator!=(const GnElement& o) const { return !(*this == o); }
  bool is_identity() const;

  std::string to_string() const;  // "gn n=4 sigma=... alpha=..."

 private:
  std::vector<CircleValue> alpha_;
  Permutation sigma_;
};

GnElement compose(const GnElement& f, const GnElement& g);
GnElement inverse(const GnElement& f);
GnElement power(const GnElement& f, long long k);

bool is_involution(const GnElement& f);

/// A(f) = 2 sum_j alpha_j(f) in the circle of modulus 1/n. A is a morphism
/// and vanishes on the involution-generated subgroup.
CircleValue a_morphism(const GnElement& f);

struct OrderResult {
  bool finite = false;
  Int value = 0;  // meaningful when finite
};
OrderResult order(const GnElement& f);

/// q_rank of the representatives of the angles of f.
int rank(const GnElement& f);

/// One distinguished point per <sigma,tau>-orbit (minimal admissible point).
/// Requires tau an involution reversing sigma.
std::vector<int> distinguished_representatives(const Permutation& sigma, const Permutation& tau);

enum class OrbitCase { AFixed, ASigma, B };

struct OrbitReport {
  std::vector<int> points;  // the <sigma_f,tau>-orbit, sorted
  int representative = 0;   // distinguished point u
  OrbitCase kind = OrbitCase::B;
  bool condition_holds = false;       // the per-orbit angle-sum condition
  std::string admissible_choices;     // description of the alpha_u(T) freedom
};

struct ReversibilityReport {
  Permutation tau;
  std::vector<OrbitReport> orbits;
  std::vector<GnElement> witnesses;  // verified involutions reversing f
  bool all_conditions_hold() const;
};

enum class ChoicePolicy { Default, Enumerate };

/// Decides whether f admits a reversing involution T with sigma_T = tau, and
/// constructs every admissible witness (two per tau-invariant cycle; the free
/// case-B coordinate follows the policy). Each witness is verified
/// (T^2 = id, T f T = f^{-1}) before being reported.
ReversibilityReport strong_reversibility_by(const GnElement& f, const Permutation& tau,
                                            ChoicePolicy policy = ChoicePolicy::Default);

/// Reports for every involution tau reversing sigma_f. f is strongly
/// reversible iff some report carries a witness.
std::vector<ReversibilityReport> find_strong_reversers(const GnElement& f,
                                                       int enumeration_bound = 10);

/// Given any reverser h of f (involution or not), produces a verified
/// involution reversing f, following the per-class parity constructions.
GnElement strengthen_reverser(const GnElement& f, const GnElement& h);

/// Writes f with A(f) = 0 as a product of at most 4 involutions
/// (apply-right-first: the composition of the returned list equals f).
std::vector<GnElement> factor_four_involutions(const GnElement& f);

/// Conversions between the block model and plain interval exchanges.
Iet to_iet(const GnElement& f);
GnElement from_iet(const Iet& g, int n);

/// Orbits of the subgroup generated by the given permutations, sorted by
/// minimal element.
std::vector<std::vector<int>> group_orbits(const std::vector<Permutation>& generators);

}  // namespace ietlab
