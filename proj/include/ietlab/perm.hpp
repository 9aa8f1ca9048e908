#pragma once

#include "ietlab/errors.hpp"

#include <string>
#include <vector>

namespace ietlab {

// Permutations of {1..n}. Composition is apply-right-first:
// compose(s, r)(i) = s(r(i)). Note the matrix remark in the alpha-vector
// algebra goes the opposite way; keep the convention straight at call sites.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  /// From 1-indexed image list; must be a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);
  /// From cycles over {1..n}, e.g. {{1,2},{3,4}} on n points.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
  bool is_identity() const;
  bool is_involution() const;  // sigma^2 = id (includes identity)

  Permutation inverse() const;
  Permutation power(long long k) const;
  long long order() const;  // lcm of cycle lengths

  /// Cycles partition {1..n}; each cycle starts at its minimal point and
  /// cycles are listed by minimal point. Fixed points appear as 1-cycles.
  std::vector<std::vector<int>> cycle_decomposition() const;

  /// One-line image list "2 1 4 3" (canonical) and cycle form "(1 2)(3 4)".
  std::string to_string() const;
  std::string to_cycle_string() const;
  static Permutation parse(const std::string& text, int n_hint = -1);

 private:
  std::vector<int> images_;
};

Permutation compose(const Permutation& s, const Permutation& r);

/// True iff tau sigma tau^{-1} = sigma^{-1}.
bool is_reverser(const Permutation& tau, const Permutation& sigma);

/// An involution tau with tau sigma tau = sigma^{-1}: within each cycle
/// (c_0,...,c_{m-1}), tau(c_j) = c_{(m-j) mod m}.
Permutation reversing_involution(const Permutation& sigma);

/// All involutions of S_n (including the identity), lexicographic by image list.
std::vector<Permutation> all_involutions(int n);

}  // namespace ietlab
