#include "ietlab/iet.hpp"

#include "doctest.h"

#include <random>

using namespace ietlab;

namespace {

SymbolTable table_ab() {
  SymbolTable t;
  t.register_symbol("alpha", "0.08838834764831844055010554526310636184360680632466");
  t.register_symbol("beta", "0.10825317547305483029950288588162848652937300566872");
  return t;
}

Scalar sym(const SymbolTable& t, const char* name) { return Scalar::symbol(t, name); }

GnElement random_gn(const SymbolTable& t, int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 3), num(-4, 4);
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
  std::shuffle(img.begin(), img.end(), rng);
  std::vector<CircleValue> alpha;
  for (int i = 0; i < n; ++i) {
    Scalar s(t, Rational(num(rng), 4 * n));
    int k = kind(rng);
    if (k == 1) s += sym(t, "alpha").scaled(Rational(num(rng), 2));
    if (k == 2) s += sym(t, "beta").scaled(Rational(num(rng), 2));
    alpha.push_back(reduce_mod(s, Rational(1, n)));
  }
  return GnElement(std::move(alpha), Permutation(img));
}

Iet random_iet(const SymbolTable& t, std::mt19937& rng) {
  int n = 2 + static_cast<int>(rng() % 3);
  return to_iet(random_gn(t, n, rng));
}

// rotation by alpha on [0, 1/2) and by -alpha on [1/2, 1)
Iet half_rotations(const Scalar& a) {
  Scalar h(Rational(1, 2));
  return Iet({Scalar(), h - a, h, h + a}, {a, a - h, h - a, -a});
}

}  // namespace

TEST_CASE("constructor validates and canonicalizes") {
  SymbolTable t = table_ab();
  Scalar a = sym(t, "alpha");

  CHECK_THROWS_AS(Iet({Scalar(), Scalar(Rational(1, 2))}, {Scalar(Rational(1, 4)), Scalar()}),
                  BadPartition);
  CHECK_THROWS_AS(Iet({Scalar()}, {Scalar(Rational(1, 2))}), BadPartition);
  CHECK_THROWS_AS(Iet({Scalar(Rational(1, 4))}, {Scalar()}), BadPartition);

  // pieces with equal translations merge
  Iet merged({Scalar(), Scalar(Rational(1, 3))}, {Scalar(), Scalar()});
  CHECK(merged.pieces() == 1);
  CHECK(merged.is_identity());

  Iet r = Iet::rotation(a);
  CHECK(r.pieces() == 2);
  CHECK(Iet(r.breakpoints(), r.translations()) == r);  // canonical idempotence
}

TEST_CASE("evaluate") {
  SymbolTable t = table_ab();
  Scalar a = sym(t, "alpha");

  CHECK(evaluate(Iet::identity(), a) == a);

  // 3-IET with permutation (1 3): the first interval moves by lambda2+lambda3
  Scalar l1 = a, l2 = Scalar(t, Rational(1, 2)), l3 = Scalar(t, Rational(1, 2)) - a;
  Iet f = Iet::from_lengths({l1, l2, l3}, Permutation::from_cycles(3, {{1, 3}}));
  Scalar x = a.scaled(Rational(1, 2));
  CHECK(evaluate(f, x) == x + l2 + l3);

  // wraparound branch of a rotation
  Iet r = Iet::rotation(a);
  Scalar y = Scalar(t, 1) - a.scaled(Rational(1, 2));
  CHECK(evaluate(r, y) == a.scaled(Rational(1, 2)));

  CHECK_THROWS_AS(evaluate(r, Scalar(t, 1)), OutOfDomain);
  CHECK_THROWS_AS(evaluate(r, Scalar(t, Rational(-1, 2))), OutOfDomain);
}

TEST_CASE("compose, inverse, rotations") {
  SymbolTable t = table_ab();
  Scalar a = sym(t, "alpha"), b = sym(t, "beta");

  Iet ra = Iet::rotation(a), rb = Iet::rotation(b);
  CHECK(compose(ra, inverse(ra)).is_identity());
  CHECK(compose(ra, rb) == Iet::rotation(a + b));
  for (int j = 0; j < 20; ++j) {
    Scalar x(t, Rational(j, 20));
    CHECK(evaluate(compose(ra, rb), x) == evaluate(ra, evaluate(rb, x)));
  }
  CHECK(equals(compose(Iet::rotation(Scalar(t, Rational(1, 2))),
                       Iet::rotation(Scalar(t, Rational(1, 2)))),
               Iet::identity()));
  CHECK_FALSE(equals(ra, rb));
  CHECK(equals(ra, compose(ra, Iet::identity())));
}

TEST_CASE("composition properties on random maps") {
  SymbolTable t = table_ab();
  std::mt19937 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    Iet f = random_iet(t, rng), g = random_iet(t, rng), h = random_iet(t, rng);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(compose(f, g).pieces() <= f.pieces() + g.pieces());
    Scalar x(t, Rational(static_cast<int>(rng() % 97), 97));
    CHECK(evaluate(compose(f, g), x) == evaluate(f, evaluate(g, x)));
    CHECK(evaluate(compose(inverse(f), f), x) == x);
  }
}

TEST_CASE("period") {
  SymbolTable t = table_ab();
  Scalar a = sym(t, "alpha");

  CHECK(period(Iet::rotation(Scalar(t, Rational(1, 3)))) == 3);

  Iet f = Iet::from_lengths({a, Scalar(t, 1) - a.scaled(2), a},
                            Permutation::from_cycles(3, {{1, 3}}));
  CHECK(period(f) == 2);
  CHECK(power(f, 2).is_identity());

  CHECK(period(Iet::rotation(a), 1000) == std::nullopt);
  CHECK(period(Iet::identity()) == 1);
}

TEST_CASE("decompose: periodic rotation") {
  SymbolTable t = table_ab();
  auto d = decompose(Iet::rotation(Scalar(t, Rational(1, 3))));
  REQUIRE(d.components.size() == 1);
  const Component& c = d.components[0];
  CHECK(c.kind == ComponentKind::Periodic);
  CHECK(c.period == 3);
  REQUIRE(c.support.size() == 1);
  CHECK(c.support[0].left == Scalar());
  CHECK(c.support[0].right == Scalar(Rational(1)));
  CHECK(power(Iet::rotation(Scalar(t, Rational(1, 3))), c.period).is_identity());
}

TEST_CASE("decompose: minimal rotation with Keane certificate") {
  SymbolTable t = table_ab();
  Scalar a = sym(t, "alpha");
  auto d = decompose(Iet::rotation(a));
  REQUIRE(d.components.size() == 1);
  const Component& c = d.components[0];
  CHECK(c.kind == ComponentKind::Minimal);
  REQUIRE(c.certificate.has_value());
  CHECK(c.certificate->irreducible);
  CHECK(c.certificate->q_rank_value == 2);
  REQUIRE(c.certificate->induced_lengths.size() == 2);
  CHECK(c.certificate->induced_lengths[0] == Scalar(t, 1) - a);
  CHECK(c.certificate->induced_lengths[1] == a);
}

TEST_CASE("decompose: two minimal halves") {
  SymbolTable t = table_ab();
  Scalar a = sym(t, "alpha");
  auto d = decompose(half_rotations(a));
  REQUIRE(d.components.size() == 2);
  for (const auto& c : d.components) {
    CHECK(c.kind == ComponentKind::Minimal);
    REQUIRE(c.support.size() == 1);
  }
  CHECK(d.components[0].support[0].left == Scalar());
  CHECK(d.components[0].support[0].right == Scalar(Rational(1, 2)));
  CHECK(d.components[1].support[0].left == Scalar(Rational(1, 2)));
  CHECK(d.components[1].support[0].right == Scalar(Rational(1)));
}

TEST_CASE("decompose: mixed periodic and minimal") {
  SymbolTable t = table_ab();
  Scalar a = sym(t, "alpha");
  // alpha-rotation on [0,1/2), rotation by 1/4 on [1/2,1)
  Scalar h(Rational(1, 2)), q(Rational(1, 4));
  Iet f({Scalar(), h - a, h, Scalar(Rational(3, 4))}, {a, a - h, q, q - h});
  auto d = decompose(f);
  REQUIRE(d.components.size() == 2);
  CHECK(d.components[0].kind == ComponentKind::Minimal);
  CHECK(d.components[1].kind == ComponentKind::Periodic);
  CHECK(d.components[1].period == 2);
  CHECK(d.components[1].support[0].left == h);

  // supports partition [0,1)
  std::vector<Interval> all;
  for (const auto& c : d.components)
    all.insert(all.end(), c.support.begin(), c.support.end());
  all = normalize_intervals(all);
  REQUIRE(all.size() == 1);
  CHECK(all[0].left == Scalar());
  CHECK(all[0].right == Scalar(Rational(1)));
}

TEST_CASE("decompose: budget exhaustion is honest") {
  SymbolTable t = table_ab();
  Scalar a = sym(t, "alpha");
  // rationally dependent irrational lengths defeat the rank certificate, and
  // the periodicity probe cannot close an aperiodic orbit
  Iet f = Iet::from_lengths({a, a, Scalar(t, 1) - a.scaled(2)},
                            Permutation::from_cycles(3, {{1, 3}}));
  auto d = decompose(f, 50);
  bool any_unresolved = false;
  for (const auto& c : d.components) any_unresolved |= c.kind == ComponentKind::Unresolved;
  CHECK(any_unresolved);
}

TEST_CASE("reverser maps minimal supports to minimal supports") {
  SymbolTable t = table_ab();
  Scalar a = sym(t, "alpha");
  Iet f = half_rotations(a);
  Iet h = Iet::rotation(Scalar(t, Rational(1, 2)));
  REQUIRE(compose(compose(h, f), inverse(h)) == inverse(f));
  auto d = decompose(f);
  REQUIRE(d.components.size() == 2);
  // h swaps the two minimal supports
  CHECK(evaluate(h, d.components[0].support[0].left) == d.components[1].support[0].left);
  CHECK(evaluate(h, d.components[1].support[0].left) == d.components[0].support[0].left);
}

TEST_CASE("fixed points of a reverser lie in the periodic part") {
  SymbolTable t = table_ab();
  Scalar a = sym(t, "alpha");
  // f rotates block 1 by alpha, block 2 by -alpha, fixes block 3
  GnElement f = GnElement({reduce_mod(a, Rational(1, 3)), reduce_mod(-a, Rational(1, 3)),
                           CircleValue(Scalar(), Rational(1, 3))},
                          Permutation::identity(3));
  GnElement T = GnElement(std::vector<CircleValue>(3, CircleValue(Scalar(), Rational(1, 3))),
                          Permutation::from_cycles(3, {{1, 2}}));
  REQUIRE(compose(compose(T, f), T) == inverse(f));
  Iet fi = to_iet(f), hi = to_iet(T);
  Scalar fixed(t, Rational(5, 6));
  REQUIRE(evaluate(hi, fixed) == fixed);
  auto d = decompose(fi);
  for (const auto& c : d.components) {
    for (const auto& iv : c.support) {
      if (!(fixed < iv.left) && fixed < iv.right) CHECK(c.kind == ComponentKind::Periodic);
    }
  }
}

TEST_CASE("bp_growth") {
  SymbolTable t = table_ab();
  Scalar a = sym(t, "alpha");

  auto gid = bp_growth(Iet::identity(), a, 5);
  for (long long c : gid.counts) CHECK(c == 0);
  CHECK(gid.slope_estimate == 0.0);

  auto grot = bp_growth(Iet::rotation(a), Scalar(t, Rational(1, 7)), 8);
  for (long long c : grot.counts) CHECK(c <= 2);

  std::mt19937 rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    Iet f = random_iet(t, rng);
    auto g = bp_growth(f, Scalar(t, Rational(1, 13)), 6);
    for (int n = 1; n <= 6; ++n)
      CHECK(g.counts[static_cast<size_t>(n - 1)] <= n + f.pieces());
  }
}

TEST_CASE("detect_restricted_rotation_product") {
  SymbolTable t = table_ab();
  Scalar a = sym(t, "alpha"), b = sym(t, "beta");

  auto one = detect_restricted_rotation_product(Iet::rotation(a));
  REQUIRE(one.has_value());
  REQUIRE(one->size() == 1);
  CHECK((*one)[0].angle == a);
  CHECK((*one)[0].support.right == Scalar(Rational(1)));

  // two restricted rotations with cut at 2/3
  Scalar l1(Rational(2, 3)), l2(Rational(1, 3));
  Iet f({Scalar(), Scalar(Rational(2, 3)) - a, Scalar(Rational(2, 3)), Scalar(Rational(1)) - b},
        {a, a - l1, b, b - l2});
  auto two = detect_restricted_rotation_product(f);
  REQUIRE(two.has_value());
  REQUIRE(two->size() == 2);
  CHECK((*two)[0].support.right == Scalar(Rational(2, 3)));
  CHECK((*two)[0].angle == a);
  CHECK((*two)[1].angle == b);

  // symbolic 3-IET with permutation (1 3) admits no invariant splitting
  Iet g = Iet::from_lengths({a, b, Scalar(t, 1) - a - b}, Permutation::from_cycles(3, {{1, 3}}));
  CHECK_FALSE(detect_restricted_rotation_product(g).has_value());
}

TEST_CASE("normalize_restricted_rotations") {
  SymbolTable t = table_ab();
  Scalar a = sym(t, "alpha"), b = sym(t, "beta");

  auto single = normalize_restricted_rotations(Iet::rotation(a));
  CHECK(single.R.piece_count() == 1);
  CHECK(single.R.pieces()[0].slope == 1);
  CHECK(single.F.n() == 1);
  CHECK(single.F.alpha(1).representative() == a);

  // pieces [0,1/3) and [1/3,1): slopes 3/2 and 3/4
  Scalar c(Rational(1, 3));
  Iet two({Scalar(), c - a, c, Scalar(Rational(1)) - b},
          {a, a - c, b, b - (Scalar(Rational(1)) - c)});
  auto norm = normalize_restricted_rotations(two);
  REQUIRE(norm.R.piece_count() == 2);
  CHECK(norm.R.pieces()[0].slope == Rational(3, 2));
  CHECK(norm.R.pieces()[1].slope == Rational(3, 4));
  CHECK(norm.F.sigma().is_identity());
  CHECK(norm.F.alpha(1).representative() == a.scaled(Rational(3, 2)));
  CHECK(conjugate_by_pl(two, norm.R) == to_iet(norm.F));

  // pieces of lengths 1/2, 1/4, 1/4: slopes 2/3, 4/3, 4/3
  Scalar h(Rational(1, 2)), q3(Rational(3, 4));
  Iet three({Scalar(), h - a, h, q3 - b, q3}, {a, a - h, b, b - Scalar(Rational(1, 4)), Scalar()});
  auto n3 = normalize_restricted_rotations(three);
  REQUIRE(n3.R.piece_count() == 3);
  CHECK(n3.R.pieces()[0].slope == Rational(2, 3));
  CHECK(n3.R.pieces()[1].slope == Rational(4, 3));
  CHECK(n3.R.pieces()[2].slope == Rational(4, 3));
  CHECK(n3.F.alpha(3).is_zero());

  // irrational piece length: the normalizing slope would be irrational
  Iet odd({Scalar(), a, a.scaled(Rational(3, 2))},
          {a.scaled(Rational(1, 2)), -a, Scalar()});
  CHECK_THROWS_AS(normalize_restricted_rotations(odd), NotOfThisForm);
}

TEST_CASE("conjugate_by_pl") {
  SymbolTable t = table_ab();
  Scalar a = sym(t, "alpha");

  Iet r = Iet::rotation(a);
  CHECK(conjugate_by_pl(r, PlMap::identity()) == r);

  // slopes 2 and 1/2 shear the quarter rotation off the IET class
  PlMap shear({Scalar(), Scalar(Rational(1, 3))},
              {{Rational(2), Scalar()}, {Rational(1, 2), Scalar(Rational(1, 2))}});
  CHECK_THROWS_AS(conjugate_by_pl(Iet::rotation(Scalar(t, Rational(1, 4))), shear), NotAnIet);
}

TEST_CASE("to_iet and from_iet") {
  SymbolTable t = table_ab();
  Scalar a = sym(t, "alpha"), b = sym(t, "beta");

  CHECK(to_iet(GnElement::identity(3)).is_identity());
  CHECK(from_iet(Iet::identity(), 3) == GnElement::identity(3));

  GnElement gb = GnElement({CircleValue(Scalar(), Rational(1, 4)), reduce_mod(b, Rational(1, 4)),
                            CircleValue(Scalar(), Rational(1, 4)), reduce_mod(-b, Rational(1, 4))},
                           Permutation::from_cycles(4, {{1, 4}, {2, 3}}));
  Iet ib = to_iet(gb);
  CHECK(ib.pieces() >= 6);
  CHECK(from_iet(ib, 4) == gb);

  std::mt19937 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    GnElement g = random_gn(t, n, rng);
    CHECK(from_iet(to_iet(g), n) == g);
  }

  CHECK_THROWS_AS(from_iet(Iet::rotation(a), 2), NotInGn);
}

TEST_CASE("text form") {
  SymbolTable t = table_ab();
  Scalar a = sym(t, "alpha");
  Iet r = Iet::rotation(a);
  CHECK(r.to_string() == "iet breakpoints= 0, 1 - alpha translations= alpha, -1 + alpha");
}
