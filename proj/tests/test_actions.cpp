#include "ietlab/actions.hpp"

#include "doctest.h"

using namespace ietlab;

namespace {

SymbolTable table_ab() {
  SymbolTable t;
  t.register_symbol("alpha", "0.08838834764831844055010554526310636184360680632466");
  t.register_symbol("beta", "0.10825317547305483029950288588162848652937300566872");
  return t;
}

Iet gn4(const SymbolTable&, std::vector<Scalar> angles, std::vector<int> img) {
  Rational m(1, 4);
  std::vector<CircleValue> alpha;
  for (const auto& s : angles) alpha.push_back(reduce_mod(s, m));
  return to_iet(GnElement(std::move(alpha), Permutation(std::move(img))));
}

Iet gn2(std::vector<Scalar> angles, std::vector<int> img) {
  Rational m(1, 2);
  std::vector<CircleValue> alpha;
  for (const auto& s : angles) alpha.push_back(reduce_mod(s, m));
  return to_iet(GnElement(std::move(alpha), Permutation(std::move(img))));
}

}  // namespace

TEST_CASE("eval_word") {
  SymbolTable t = table_ab();
  MarkedAction act = builtin_example(t, "bs11_flat");

  CHECK(eval_word(act, {}).is_identity());
  CHECK(eval_word(act, {{"a", 1}, {"a", -1}}).is_identity());
  CHECK(eval_word(act, {{"b", 1}, {"a", 1}, {"b", -1}, {"a", 1}}).is_identity());
  CHECK(eval_word(act, {{"b", 2}}) == power(act.generator("b"), 2));
  CHECK_THROWS_AS(eval_word(act, {{"c", 1}}), UnboundGenerator);

  CHECK(word_to_string({{"b", 1}, {"a", -2}}) == "b a^-2");
  CHECK(word_to_string({}) == "1");
}

TEST_CASE("check_relations") {
  SymbolTable t = table_ab();
  Scalar a = Scalar::symbol(t, "alpha"), b = Scalar::symbol(t, "beta"), z;

  for (const auto& name : builtin_example_names()) {
    MarkedAction act = builtin_example(t, name);
    for (bool ok : check_relations(act)) CHECK(ok);
    CHECK_NOTHROW(require_relations(act));
  }

  // perturbing one angle breaks the defining relation
  MarkedAction bad = builtin_example(t, "bs11_flat");
  bad.generators.at("a") =
      gn4(t, {-a + Scalar(Rational(1, 16)), a, -a, a}, {1, 2, 3, 4});
  CHECK_FALSE(check_relations(bad)[0]);
  CHECK_THROWS_AS(require_relations(bad), RelationNotSatisfied);
}

TEST_CASE("bs_faithfulness") {
  SymbolTable t = table_ab();
  Scalar a = Scalar::symbol(t, "alpha"), z;

  FaithfulnessReport flat = bs_faithfulness(builtin_example(t, "bs11_flat"));
  CHECK(flat.decided);
  CHECK(flat.faithful);
  CHECK(flat.a_order == OrderKind::Infinite);
  CHECK(flat.b_order == OrderKind::Infinite);

  CHECK(bs_faithfulness(builtin_example(t, "bs11_minimal")).faithful);

  // reversing involution in place of b: not faithful
  MarkedAction invol = builtin_example(t, "bs11_flat");
  invol.generators.at("b") = gn4(t, {z, z, z, z}, {4, 3, 2, 1});
  FaithfulnessReport ri = bs_faithfulness(invol);
  CHECK(ri.decided);
  CHECK_FALSE(ri.faithful);
  CHECK(ri.b_order == OrderKind::Finite);
  CHECK(ri.b_order_value == 2);

  // rational angle for a: finite order
  MarkedAction rat = builtin_example(t, "bs11_flat");
  Scalar r(Rational(1, 8));
  rat.generators.at("a") = gn4(t, {-r, r, -r, r}, {1, 2, 3, 4});
  FaithfulnessReport rr = bs_faithfulness(rat);
  CHECK(rr.decided);
  CHECK_FALSE(rr.faithful);
  CHECK(rr.a_order == OrderKind::Finite);

  MarkedAction broken = builtin_example(t, "bs11_flat");
  broken.generators.at("b") = Iet::identity();
  CHECK_THROWS_AS(bs_faithfulness(broken), RelationNotSatisfied);
}

TEST_CASE("bounded_freeness") {
  SymbolTable t = table_ab();
  Scalar z;

  CHECK(bounded_freeness(builtin_example(t, "bs11_flat"), 5).clean);
  CHECK(bounded_freeness(builtin_example(t, "bs11_minimal"), 5).clean);

  MarkedAction invol = builtin_example(t, "bs11_flat");
  invol.generators.at("b") = gn4(t, {z, z, z, z}, {4, 3, 2, 1});
  FreenessReport r = bounded_freeness(invol, 5);
  CHECK_FALSE(r.clean);
  REQUIRE(r.fixed_point.has_value());
  Iet w = eval_word(invol, r.word);
  CHECK(evaluate(w, *r.fixed_point) == *r.fixed_point);
}

TEST_CASE("minimality_certificate") {
  SymbolTable t = table_ab();
  Scalar a = Scalar::symbol(t, "alpha");

  MinimalityCertificate good = minimality_certificate(builtin_example(t, "bs11_minimal"));
  CHECK(good.n == 4);
  CHECK(good.transitive);
  CHECK(good.angle_rank == 3);
  CHECK(good.valid);
  CHECK_FALSE(good.stabilizer_generators.empty());

  MinimalityCertificate flat = minimality_certificate(builtin_example(t, "bs11_flat"));
  CHECK(flat.n == 4);
  CHECK_FALSE(flat.transitive);
  CHECK_FALSE(flat.valid);
  REQUIRE(flat.invariant_set.size() == 2);
  CHECK(flat.invariant_set[0].left == Scalar());
  CHECK(flat.invariant_set[0].right == Scalar(Rational(1, 4)));
  CHECK(flat.invariant_set[1].left == Scalar(Rational(3, 4)));
  CHECK(flat.invariant_set[1].right == Scalar(Rational(1)));

  // rational angles: transitive but rank 1, no certificate
  Scalar r(Rational(1, 16));
  MarkedAction rat;
  rat.generators.emplace("a", gn4(t, {-r, r, -r, r}, {1, 2, 3, 4}));
  rat.generators.emplace("b", gn4(t, {r, r, r, r}, {2, 3, 4, 1}));
  MinimalityCertificate rc = minimality_certificate(rat);
  CHECK(rc.transitive);
  CHECK(rc.angle_rank == 1);
  CHECK_FALSE(rc.valid);

  // a rotation is not expressible over 4 blocks together with these
  MarkedAction mixed;
  mixed.generators.emplace("a", Iet::rotation(a));
  CHECK(minimality_certificate(mixed).n == 1);
}

TEST_CASE("normalize_free_bs_action") {
  SymbolTable t = table_ab();
  Scalar a = Scalar::symbol(t, "alpha"), b = Scalar::symbol(t, "beta");

  // four-block pair normalizes with the identity rescaling
  MarkedAction flat = builtin_example(t, "bs11_flat");
  NormalizedBsAction n4 =
      normalize_free_bs_action(flat.generator("a"), flat.generator("b"));
  CHECK(n4.F.n() == 4);
  CHECK(n4.E.is_identity());
  CHECK(compose(compose(n4.H, n4.F), inverse(n4.H)) == inverse(n4.F));
  CHECK(to_iet(n4.F) == flat.generator("a"));
  GnElement invol = strengthen_reverser(n4.F, n4.H);
  CHECK(is_involution(invol));

  // two-block pair with an infinite order reverser
  Iet f2 = gn2({a, -a}, {1, 2});
  Iet h2 = gn2({b, b}, {2, 1});
  REQUIRE(equals(compose(compose(h2, f2), inverse(h2)), inverse(f2)));
  NormalizedBsAction n2 = normalize_free_bs_action(f2, h2);
  CHECK(n2.F.n() == 2);
  CHECK(compose(compose(n2.H, n2.F), inverse(n2.H)) == inverse(n2.F));
  CHECK_FALSE(order(n2.H).finite);

  // involutive reverser: the pair is not free
  Iet hflip = gn2({Scalar(), Scalar()}, {2, 1});
  REQUIRE(equals(compose(compose(hflip, f2), inverse(hflip)), inverse(f2)));
  CHECK_THROWS_AS(normalize_free_bs_action(f2, hflip), FreenessUnverified);

  CHECK_THROWS_AS(normalize_free_bs_action(f2, Iet::rotation(a)), NotAReverser);
}

TEST_CASE("builtin examples") {
  SymbolTable t = table_ab();
  CHECK(builtin_example_names() == std::vector<std::string>{"bs11_flat", "bs11_minimal", "c1"});
  CHECK_THROWS_AS(builtin_example(t, "nope"), ParseError);

  // the crystallographic example: squares of the generators commute
  MarkedAction c1 = builtin_example(t, "c1");
  Iet a2 = power(c1.generator("a"), 2), b2 = power(c1.generator("b"), 2);
  CHECK(equals(compose(a2, b2), compose(b2, a2)));
  CHECK_FALSE(eval_word(c1, {{"a", 1}, {"b", 1}}).is_identity());
}
