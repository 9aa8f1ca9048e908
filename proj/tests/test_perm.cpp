#include "ietlab/perm.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace ietlab;

namespace {

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<size_t> cycle_type(const Permutation& p) {
  std::vector<size_t> type;
  for (const auto& c : p.cycle_decomposition()) type.push_back(c.size());
  std::sort(type.begin(), type.end());
  return type;
}

}  // namespace

TEST_CASE("compose and inverse") {
  Permutation four = Permutation::from_cycles(4, {{1, 2, 3, 4}});
  CHECK(compose(four, four.inverse()).is_identity());
  CHECK(compose(four, four) == Permutation::from_cycles(4, {{1, 3}, {2, 4}}));
  Permutation inv = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
  CHECK(inv.inverse() == inv);
  CHECK_THROWS_AS(compose(four, Permutation::identity(3)), SizeMismatch);
}

TEST_CASE("composition is apply-right-first") {
  // s = (1 2), r = (2 3): (s o r)(2) = s(3) = 3
  Permutation s = Permutation::from_cycles(3, {{1, 2}});
  Permutation r = Permutation::from_cycles(3, {{2, 3}});
  CHECK(compose(s, r)(2) == 3);
}

TEST_CASE("cycle decomposition") {
  CHECK(Permutation::identity(3).cycle_decomposition() ==
        std::vector<std::vector<int>>{{1}, {2}, {3}});
  CHECK(Permutation::from_cycles(4, {{1, 2, 3, 4}}).cycle_decomposition() ==
        std::vector<std::vector<int>>{{1, 2, 3, 4}});
  CHECK(Permutation::from_cycles(4, {{1, 4}, {2, 3}}).cycle_decomposition() ==
        std::vector<std::vector<int>>{{1, 4}, {2, 3}});
}

TEST_CASE("is_reverser") {
  Permutation four = Permutation::from_cycles(4, {{1, 2, 3, 4}});
  CHECK(is_reverser(Permutation::from_cycles(4, {{1, 3}}), four));
  CHECK(is_reverser(Permutation::from_cycles(4, {{1, 2}, {3, 4}}), four));
  CHECK_FALSE(is_reverser(Permutation::identity(3), Permutation::from_cycles(3, {{1, 2, 3}})));
}

TEST_CASE("reversing_involution examples") {
  Permutation three = Permutation::from_cycles(3, {{1, 2, 3}});
  Permutation tau = reversing_involution(three);
  CHECK(tau == Permutation::from_cycles(3, {{2, 3}}));
  CHECK(compose(tau, compose(three, tau)) == three.inverse());

  CHECK(reversing_involution(Permutation::identity(4)).is_identity());

  Permutation four = Permutation::from_cycles(4, {{1, 2, 3, 4}});
  Permutation tau4 = reversing_involution(four);
  CHECK(tau4(1) == 1);
  CHECK(tau4(2) == 4);
  CHECK(tau4(3) == 3);
  CHECK(tau4.is_involution());
  CHECK(is_reverser(tau4, four));
}

TEST_CASE("reversing_involution exhaustive up to n=6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& sigma : all_permutations(n)) {
      Permutation tau = reversing_involution(sigma);
      CHECK(tau.is_involution());
      CHECK(is_reverser(tau, sigma));
    }
  }
}

TEST_CASE("cycle type invariant under conjugation") {
  std::mt19937 rng(11);
  auto perms = all_permutations(6);
  std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
  for (int i = 0; i < 50; ++i) {
    const Permutation& p = perms[pick(rng)];
    const Permutation& g = perms[pick(rng)];
    Permutation conj = compose(g, compose(p, g.inverse()));
    CHECK(cycle_type(conj) == cycle_type(p));
  }
}

TEST_CASE("text forms") {
  Permutation p = Permutation::parse("2 1 4 3");
  CHECK(p == Permutation::from_cycles(4, {{1, 2}, {3, 4}}));
  CHECK(p.to_string() == "2 1 4 3");
  CHECK(p.to_cycle_string() == "(1 2)(3 4)");
  CHECK(Permutation::parse("(1 2)(3 4)") == p);
  CHECK(Permutation::parse("(1 3)", 4) == Permutation::from_cycles(4, {{1, 3}}));
}

TEST_CASE("all_involutions") {
  auto inv4 = all_involutions(4);
  CHECK(inv4.size() == 10);  // 1 + 6 + 3
  for (const auto& t : inv4) CHECK(t.is_involution());
}
