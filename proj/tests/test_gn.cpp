#include "ietlab/gn.hpp"

#include "doctest.h"

#include <random>

using namespace ietlab;

namespace {

SymbolTable table_ab() {
  SymbolTable t;
  // sqrt(2)/16 and sqrt(3)/16, both inside (0, 1/4)
  t.register_symbol("alpha", "0.08838834764831844055010554526310636184360680632466");
  t.register_symbol("beta", "0.10825317547305483029950288588162848652937300566872");
  return t;
}

CircleValue cv(const Scalar& s, int n) { return reduce_mod(s, Rational(1, n)); }

GnElement make(int n, const std::vector<Scalar>& vals, const Permutation& sigma) {
  std::vector<CircleValue> alpha;
  for (const auto& v : vals) alpha.push_back(cv(v, n));
  return GnElement(std::move(alpha), sigma);
}

// the two commuting generators of the figure-eight example: a is a vector of
// rotations, b swaps the outer and inner pairs of blocks
GnElement example_a(const SymbolTable& t) {
  Scalar a = Scalar::symbol(t, "alpha");
  return make(4, {-a, a, -a, a}, Permutation::identity(4));
}

GnElement example_b(const SymbolTable& t) {
  Scalar b = Scalar::symbol(t, "beta");
  return make(4, {Scalar(), b, Scalar(), -b}, Permutation::from_cycles(4, {{1, 4}, {2, 3}}));
}

GnElement random_gn(const SymbolTable& t, int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 3), num(-4, 4);
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
  std::shuffle(img.begin(), img.end(), rng);
  std::vector<Scalar> vals;
  for (int i = 0; i < n; ++i) {
    Scalar s(t, Rational(num(rng), 4 * n));
    int k = kind(rng);
    if (k == 1) s += Scalar::symbol(t, "alpha").scaled(Rational(num(rng), 2));
    if (k == 2) s += Scalar::symbol(t, "beta").scaled(Rational(num(rng), 2));
    vals.push_back(s);
  }
  return make(n, vals, Permutation(img));
}

}  // namespace

TEST_CASE("group operations") {
  SymbolTable t = table_ab();
  GnElement a = example_a(t), b = example_b(t);
  Scalar al = Scalar::symbol(t, "alpha"), be = Scalar::symbol(t, "beta");

  CHECK(compose(b, compose(a, inverse(b))) == inverse(a));
  CHECK(inverse(a) == make(4, {al, -al, al, -al}, Permutation::identity(4)));
  CHECK(compose(a, inverse(a)).is_identity());
  CHECK(compose(b, inverse(b)).is_identity());
  CHECK(power(b, 2) == make(4, {-be, be, be, -be}, Permutation::identity(4)));
  CHECK(power(b, -1) == inverse(b));
  CHECK(power(a, 0).is_identity());
}

TEST_CASE("group axioms on random triples") {
  SymbolTable t = table_ab();
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    GnElement f = random_gn(t, n, rng), g = random_gn(t, n, rng), h = random_gn(t, n, rng);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(compose(f, inverse(f)).is_identity());
    CHECK(compose(inverse(f), f).is_identity());
    CHECK(inverse(compose(f, g)) == compose(inverse(g), inverse(f)));
  }
}

TEST_CASE("is_involution") {
  SymbolTable t = table_ab();
  Scalar al = Scalar::symbol(t, "alpha");
  CHECK(is_involution(make(2, {al, -al}, Permutation::from_cycles(2, {{1, 2}}))));
  CHECK(is_involution(GnElement::identity(3)));
  CHECK_FALSE(is_involution(make(2, {al, -al}, Permutation::identity(2))));
}

TEST_CASE("a_morphism") {
  SymbolTable t = table_ab();
  Scalar al = Scalar::symbol(t, "alpha");
  CHECK(a_morphism(GnElement::identity(4)).is_zero());
  CHECK(a_morphism(make(2, {al, -al}, Permutation::identity(2))).is_zero());

  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    GnElement f = random_gn(t, n, rng), g = random_gn(t, n, rng);
    CHECK(a_morphism(compose(f, g)) == a_morphism(f) + a_morphism(g));
  }
}

TEST_CASE("order") {
  SymbolTable t = table_ab();
  Scalar al = Scalar::symbol(t, "alpha");

  // f^2 rotates each half by 1/4 in the circle of length 1/2, so f^4 = id
  GnElement f = make(2, {al, Scalar(t, Rational(1, 4)) - al}, Permutation::from_cycles(2, {{1, 2}}));
  OrderResult r = order(f);
  CHECK(r.finite);
  CHECK(r.value == 4);
  CHECK(power(f, 4).is_identity());
  CHECK_FALSE(power(f, 2).is_identity());

  CHECK_FALSE(order(make(2, {al, -al}, Permutation::identity(2))).finite);
  OrderResult rid = order(GnElement::identity(3));
  CHECK(rid.finite);
  CHECK(rid.value == 1);
  CHECK_FALSE(order(example_b(t)).finite);
}

TEST_CASE("rank") {
  SymbolTable t;
  t.register_symbol("g1", "0.11103000000000000001");
  t.register_symbol("g2", "0.23157000000000000002");
  Scalar g1 = Scalar::symbol(t, "g1"), g2 = Scalar::symbol(t, "g2");

  CHECK(rank(GnElement::identity(5)) == 1);
  CHECK(rank(make(3, {g1, g2, -g1 - g2}, Permutation::identity(3))) == 3);
  Scalar e(t, Rational(1, 8));
  CHECK(rank(make(2, {e, e}, Permutation::identity(2))) == 1);
}

TEST_CASE("distinguished_representatives") {
  CHECK(distinguished_representatives(Permutation::identity(2),
                                      Permutation::from_cycles(2, {{1, 2}})) ==
        std::vector<int>{1});
  CHECK(distinguished_representatives(Permutation::from_cycles(2, {{1, 2}}),
                                      Permutation::from_cycles(2, {{1, 2}})) ==
        std::vector<int>{1});
  CHECK(distinguished_representatives(Permutation::from_cycles(4, {{1, 2}, {3, 4}}),
                                      Permutation::from_cycles(4, {{1, 3}, {2, 4}})) ==
        std::vector<int>{1});
  CHECK_THROWS_AS(distinguished_representatives(Permutation::from_cycles(3, {{1, 2, 3}}),
                                                Permutation::from_cycles(3, {{1, 2, 3}})),
                  NotAnInvolution);
}

TEST_CASE("strong_reversibility_by, case B witness") {
  SymbolTable t = table_ab();
  Scalar al = Scalar::symbol(t, "alpha");
  GnElement f = make(2, {al, -al}, Permutation::identity(2));
  auto report = strong_reversibility_by(f, Permutation::from_cycles(2, {{1, 2}}));
  REQUIRE(report.orbits.size() == 1);
  CHECK(report.orbits[0].kind == OrbitCase::B);
  CHECK(report.orbits[0].condition_holds);
  REQUIRE(!report.witnesses.empty());
  GnElement T = report.witnesses.front();
  CHECK(T == make(2, {Scalar(), Scalar()}, Permutation::from_cycles(2, {{1, 2}})));
  CHECK(compose(compose(T, f), T) == inverse(f));
}

TEST_CASE("strong_reversibility_by, failed condition") {
  SymbolTable t = table_ab();
  GnElement f = make(2, {Scalar::symbol(t, "alpha"), Scalar::symbol(t, "beta")},
                     Permutation::identity(2));
  auto report = strong_reversibility_by(f, Permutation::from_cycles(2, {{1, 2}}));
  CHECK_FALSE(report.all_conditions_hold());
  CHECK(report.witnesses.empty());
}

TEST_CASE("strong_reversibility_by, case A-sigma") {
  SymbolTable t = table_ab();
  Scalar al = Scalar::symbol(t, "alpha");
  GnElement f = make(2, {al, Scalar(t, Rational(1, 4)) - al}, Permutation::from_cycles(2, {{1, 2}}));
  auto report = strong_reversibility_by(f, Permutation::from_cycles(2, {{1, 2}}));
  REQUIRE(report.orbits.size() == 1);
  CHECK(report.orbits[0].kind == OrbitCase::ASigma);
  CHECK(report.orbits[0].condition_holds);
  REQUIRE(report.witnesses.size() == 2);
  GnElement expected = make(2, {al, -al}, Permutation::from_cycles(2, {{1, 2}}));
  CHECK((report.witnesses[0] == expected || report.witnesses[1] == expected));
  for (const auto& T : report.witnesses) {
    CHECK(is_involution(T));
    CHECK(compose(compose(T, f), T) == inverse(f));
  }
}

TEST_CASE("find_strong_reversers") {
  SymbolTable t = table_ab();
  Scalar al = Scalar::symbol(t, "alpha"), be = Scalar::symbol(t, "beta");

  // sigma_f a 4-cycle and A(f) = 0: a witness must exist
  GnElement f = make(4, {al, -al, be, -be}, Permutation::from_cycles(4, {{1, 2, 3, 4}}));
  REQUIRE(a_morphism(f).is_zero());
  bool found = false;
  for (const auto& rep : find_strong_reversers(f)) found = found || !rep.witnesses.empty();
  CHECK(found);

  bool id_found = false;
  for (const auto& rep : find_strong_reversers(GnElement::identity(3)))
    id_found = id_found || !rep.witnesses.empty();
  CHECK(id_found);

  // rank-3 vector of rotations: no involution reverses it
  SymbolTable t3;
  t3.register_symbol("g1", "0.11103000000000000001");
  t3.register_symbol("g2", "0.23157000000000000002");
  Scalar g1 = Scalar::symbol(t3, "g1"), g2 = Scalar::symbol(t3, "g2");
  GnElement g = make(3, {g1, g2, -g1 - g2}, Permutation::identity(3));
  for (const auto& rep : find_strong_reversers(g)) CHECK(rep.witnesses.empty());

  CHECK_THROWS_AS(find_strong_reversers(GnElement::identity(11)), EnumerationBoundExceeded);
}

TEST_CASE("single-cycle strongly reversible elements have order dividing 2n") {
  SymbolTable t = table_ab();
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<int> cyc(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cyc[static_cast<size_t>(i)] = i + 1;
    std::shuffle(cyc.begin() + 1, cyc.end(), rng);
    std::vector<Scalar> vals;
    Scalar sum;
    for (int i = 0; i + 1 < n; ++i) {
      Scalar s(t, Rational(num(rng), 2 * n));
      if (trial % 2) s += Scalar::symbol(t, "alpha").scaled(num(rng));
      vals.push_back(s);
      sum += s;
    }
    vals.push_back(-sum + Scalar(t, Rational(static_cast<int>(rng() % 2), 2 * n)));
    GnElement f = make(n, vals, Permutation::from_cycles(n, {cyc}));
    REQUIRE(a_morphism(f).is_zero());
    bool witnessed = false;
    for (const auto& rep : find_strong_reversers(f)) witnessed = witnessed || !rep.witnesses.empty();
    CHECK(witnessed);
    OrderResult r = order(f);
    CHECK(r.finite);
    CHECK(Int(2 * n) % r.value == 0);
  }
}

TEST_CASE("odd-power sigma reverser forces small order") {
  SymbolTable t = table_ab();
  Scalar al = Scalar::symbol(t, "alpha");
  // h with sigma_h = sigma_f (an odd power) reverses f, so order(f) | 4
  GnElement f = make(2, {al, Scalar(t, Rational(1, 4)) - al}, Permutation::from_cycles(2, {{1, 2}}));
  GnElement h = make(2, {al, -al}, Permutation::from_cycles(2, {{1, 2}}));
  REQUIRE(compose(compose(h, f), inverse(h)) == inverse(f));
  CHECK(f.sigma().power(2).is_identity());
  OrderResult r = order(f);
  CHECK(r.finite);
  CHECK((r.value == 1 || r.value == 2 || r.value == 4));
}

TEST_CASE("strengthen_reverser") {
  SymbolTable t = table_ab();
  Scalar al = Scalar::symbol(t, "alpha");

  GnElement f = make(2, {al, Scalar(t, Rational(1, 4)) - al}, Permutation::from_cycles(2, {{1, 2}}));
  GnElement T = make(2, {al, -al}, Permutation::from_cycles(2, {{1, 2}}));
  GnElement h = compose(T, power(f, 2));
  REQUIRE(compose(compose(h, f), inverse(h)) == inverse(f));
  GnElement out = strengthen_reverser(f, h);
  CHECK(is_involution(out));
  CHECK(compose(compose(out, f), out) == inverse(f));

  // an involution reverses itself
  GnElement inv = make(2, {al, -al}, Permutation::from_cycles(2, {{1, 2}}));
  GnElement out2 = strengthen_reverser(inv, inv);
  CHECK(is_involution(out2));
  CHECK(compose(compose(out2, inv), out2) == inverse(inv));

  // the figure-eight pair: b reverses a and has infinite order
  GnElement a = example_a(t), b = example_b(t);
  REQUIRE(compose(compose(b, a), inverse(b)) == inverse(a));
  REQUIRE_FALSE(is_involution(b));
  GnElement t0 = strengthen_reverser(a, b);
  CHECK(is_involution(t0));
  CHECK(compose(compose(t0, a), t0) == inverse(a));

  CHECK_THROWS_AS(strengthen_reverser(a, GnElement::identity(4)), NotAReverser);
}

TEST_CASE("strengthen_reverser on random centralizer-coset reversers") {
  SymbolTable t = table_ab();
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    // f a vector of rotations reversed by h = (beta, pi) whenever the
    // rotation vector is anti-symmetric under pi; beta is free
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    Permutation pi(img);
    std::vector<Scalar> v(static_cast<size_t>(n));
    for (const auto& cycle : pi.cycle_decomposition()) {
      if (cycle.size() % 2 == 1) {
        for (int j : cycle) v[static_cast<size_t>(j - 1)] = Scalar();
      } else {
        Scalar s = Scalar::symbol(t, "alpha").scaled(Rational(num(rng), 2)) +
                   Scalar(t, Rational(num(rng), 2 * n));
        bool flip = false;
        for (int j : cycle) {
          v[static_cast<size_t>(j - 1)] = flip ? -s : s;
          flip = !flip;
        }
      }
    }
    GnElement f = make(n, v, Permutation::identity(n));
    std::vector<Scalar> beta;
    for (int i = 0; i < n; ++i)
      beta.push_back(Scalar(t, Rational(num(rng), 2 * n)) +
                     Scalar::symbol(t, "beta").scaled(num(rng)));
    GnElement h = make(n, beta, pi);
    if (compose(compose(h, f), inverse(h)) != inverse(f)) continue;  // antisymmetry mismatch
    GnElement out = strengthen_reverser(f, h);
    CHECK(is_involution(out));
    CHECK(compose(compose(out, f), out) == inverse(f));
  }
}

TEST_CASE("factor_four_involutions") {
  SymbolTable t = table_ab();
  Scalar al = Scalar::symbol(t, "alpha"), be = Scalar::symbol(t, "beta");

  GnElement f = make(3, {al, be, -al - be}, Permutation::identity(3));
  auto factors = factor_four_involutions(f);
  CHECK(factors.size() <= 4);
  GnElement prod = GnElement::identity(3);
  for (const auto& g : factors) {
    CHECK(is_involution(g));
    prod = compose(prod, g);
  }
  CHECK(prod == f);

  GnElement inv = make(2, {al, -al}, Permutation::from_cycles(2, {{1, 2}}));
  auto single = factor_four_involutions(inv);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == inv);

  // A(f) = 1/8 in the circle of length 1/4: obstructed
  GnElement bad = make(4, {al, be, -al, -be + Scalar(t, Rational(1, 16))},
                       Permutation::identity(4));
  CHECK_THROWS_AS(factor_four_involutions(bad), AObstruction);
}

TEST_CASE("factor_four_involutions on random kernel elements") {
  SymbolTable t = table_ab();
  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    GnElement f = random_gn(t, n, rng);
    // project into ker A by correcting the last angle
    Scalar sum;
    for (int i = 1; i < n; ++i) sum += f.alpha(i).representative();
    std::vector<CircleValue> alpha(f.alpha());
    alpha[static_cast<size_t>(n - 1)] =
        cv(-sum + Scalar(t, Rational(static_cast<int>(rng() % 2), 2 * n)), n);
    GnElement g(alpha, f.sigma());
    REQUIRE(a_morphism(g).is_zero());
    auto factors = factor_four_involutions(g);
    CHECK(factors.size() <= 4);
    GnElement prod = GnElement::identity(n);
    for (const auto& x : factors) {
      CHECK(is_involution(x));
      prod = compose(prod, x);
    }
    CHECK(prod == g);
  }
}

TEST_CASE("text form") {
  SymbolTable t = table_ab();
  GnElement b = example_b(t);
  CHECK(b.to_string() == "gn n=4 sigma=4 3 2 1 alpha=0, beta, 0, 1/4 - beta");
}
