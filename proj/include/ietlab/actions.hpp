#pragma once

#include "ietlab/gn.hpp"
#include "ietlab/iet.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ietlab {

struct WordFactor {
  std::string name;
  int exponent = 1;
};
using Word = std::vector<WordFactor>;

std::string word_to_string(const Word& w);

// Finitely presented action by interval exchanges: named generators plus
// relation words that must evaluate to the identity.
struct MarkedAction {
  std::map<std::string, Iet> generators;
  std::vector<Word> relations;

  const Iet& generator(const std::string& name) const;  // throws UnboundGenerator
};

/// Left-to-right composition of generator powers (rightmost factor acts first).
Iet eval_word(const MarkedAction& action, const Word& word);

/// Exact identity test per relation.
std::vector<bool> check_relations(const MarkedAction& action);
/// Throws RelationNotSatisfied naming the first failing relation.
void require_relations(const MarkedAction& action);

enum class OrderKind { Finite, Infinite, Unknown };

struct FaithfulnessReport {
  OrderKind a_order = OrderKind::Unknown;
  OrderKind b_order = OrderKind::Unknown;
  Int a_order_value = 0;  // set when finite
  Int b_order_value = 0;
  bool decided = false;
  bool faithful = false;  // faithful iff both orders infinite
  std::string witness;    // set when not faithful
};

/// For an action with generators a, b satisfying b a b^-1 = a^-1: the action
/// is faithful exactly when both generators have infinite order. Orders are
/// exact for block-group elements and budget-limited otherwise.
FaithfulnessReport bs_faithfulness(const MarkedAction& action, long long budget = 10000);

struct FreenessReport {
  bool clean = true;                 // no fixed point found up to the bound
  Word word;                         // violating normal-form word a^p b^q
  std::optional<Scalar> fixed_point; // left end of a translation-0 piece
};

/// Checks every nontrivial normal-form word a^p b^q with |p|, |q| <= bound
/// for fixed points; a map has one iff some canonical piece has translation 0.
FreenessReport bounded_freeness(const MarkedAction& action, int word_bound = 5);

struct MinimalityCertificate {
  int n = 0;                     // common block count
  bool transitive = false;       // block-level transitivity
  std::vector<Word> stabilizer_generators;  // Schreier generators of Stab(block 1)
  std::vector<Scalar> stabilizer_angles;    // their angles on block 1
  int angle_rank = 0;            // q_rank of the angles
  bool valid = false;            // transitive and angle_rank >= 2
  std::vector<Interval> invariant_set;  // evidence when not transitive
};

/// For an action with every generator in a common block group: a certificate
/// of minimality (dense stabilizer angle group on a transitive block action),
/// or explicit evidence (an invariant union of blocks, or rational angles).
MinimalityCertificate minimality_certificate(const MarkedAction& action);

struct NormalizedBsAction {
  PlMap R;
  Iet E;
  GnElement F;
  GnElement H;
};

/// Conjugates a free reversing pair (h f h^-1 = f^-1) into a block group:
/// some power of f decomposes into minimal restricted-rotation components of
/// rational length, the affine normalization of that power carries f and h to
/// exact block-group elements, and the relation is re-verified there.
NormalizedBsAction normalize_free_bs_action(const Iet& f, const Iet& h,
                                            long long budget = 10000);

std::vector<std::string> builtin_example_names();
/// bs11_flat, bs11_minimal, c1; requires symbols alpha, beta in the table.
MarkedAction builtin_example(const SymbolTable& table, const std::string& name);

}  // namespace ietlab
