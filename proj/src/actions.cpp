#include "ietlab/actions.hpp"

#include "ietlab/errors.hpp"

#include <algorithm>

namespace ietlab {

namespace {

constexpr int kMaxBlockCount = 64;

// smallest common block count for which every generator converts, or 0
int common_block_count(const MarkedAction& action) {
  for (int n = 1; n <= kMaxBlockCount; ++n) {
    bool all = true;
    for (const auto& [name, g] : action.generators) {
      try {
        from_iet(g, n);
      } catch (const NotInGn&) {
        all = false;
        break;
      }
    }
    if (all) return n;
  }
  return 0;
}

struct OrderProbe {
  OrderKind kind = OrderKind::Unknown;
  Int value = 0;
};

OrderProbe probe_order(const Iet& g, long long budget) {
  for (int n = 1; n <= kMaxBlockCount; ++n) {
    try {
      OrderResult r = order(from_iet(g, n));
      return r.finite ? OrderProbe{OrderKind::Finite, r.value}
                      : OrderProbe{OrderKind::Infinite, 0};
    } catch (const NotInGn&) {
    }
  }
  if (auto p = period(g, budget)) return {OrderKind::Finite, Int(*p)};
  return {OrderKind::Unknown, 0};
}

std::optional<Scalar> fixed_piece(const Iet& g) {
  for (int k = 1; k <= g.pieces(); ++k)
    if (g.translations()[static_cast<size_t>(k - 1)] == Scalar()) return g.left(k);
  return std::nullopt;
}

}  // namespace

std::string word_to_string(const Word& w) {
  std::string out;
  for (const auto& [name, e] : w) {
    if (!out.empty()) out += " ";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

const Iet& MarkedAction::generator(const std::string& name) const {
  auto it = generators.find(name);
  if (it == generators.end()) throw UnboundGenerator("unbound generator: " + name);
  return it->second;
}

Iet eval_word(const MarkedAction& action, const Word& word) {
  Iet out = Iet::identity();
  for (const auto& [name, e] : word)
    out = compose(out, power(action.generator(name), e));
  return out;
}

std::vector<bool> check_relations(const MarkedAction& action) {
  std::vector<bool> out;
  for (const auto& w : action.relations)
    out.push_back(eval_word(action, w).is_identity());
  return out;
}

void require_relations(const MarkedAction& action) {
  auto ok = check_relations(action);
  for (size_t i = 0; i < ok.size(); ++i)
    if (!ok[i])
      throw RelationNotSatisfied("relation fails: " + word_to_string(action.relations[i]));
}

FaithfulnessReport bs_faithfulness(const MarkedAction& action, long long budget) {
  const Iet& a = action.generator("a");
  const Iet& b = action.generator("b");
  if (!equals(compose(compose(b, a), inverse(b)), inverse(a)))
    throw RelationNotSatisfied("b a b^-1 = a^-1 does not hold");
  FaithfulnessReport r;
  OrderProbe pa = probe_order(a, budget), pb = probe_order(b, budget);
  r.a_order = pa.kind;
  r.b_order = pb.kind;
  r.a_order_value = pa.value;
  r.b_order_value = pb.value;
  if (pa.kind == OrderKind::Finite) {
    r.decided = true;
    r.witness = "a has finite order " + pa.value.str();
  } else if (pb.kind == OrderKind::Finite) {
    r.decided = true;
    r.witness = "b has finite order " + pb.value.str();
  } else if (pa.kind == OrderKind::Infinite && pb.kind == OrderKind::Infinite) {
    r.decided = true;
    r.faithful = true;
  }
  return r;
}

FreenessReport bounded_freeness(const MarkedAction& action, int word_bound) {
  const Iet& a = action.generator("a");
  const Iet& b = action.generator("b");
  FreenessReport r;
  for (int p = -word_bound; p <= word_bound; ++p)
    for (int q = -word_bound; q <= word_bound; ++q) {
      if (p == 0 && q == 0) continue;
      Iet w = compose(power(a, p), power(b, q));
      if (auto x = fixed_piece(w)) {
        r.clean = false;
        if (p != 0) r.word.push_back({"a", p});
        if (q != 0) r.word.push_back({"b", q});
        r.fixed_point = x;
        return r;
      }
    }
  return r;
}

MinimalityCertificate minimality_certificate(const MarkedAction& action) {
  int n = common_block_count(action);
  if (n == 0) throw NotInGn("generators do not share a block group");
  MinimalityCertificate cert;
  cert.n = n;

  std::vector<std::pair<std::string, GnElement>> gens;
  for (const auto& [name, g] : action.generators) gens.emplace_back(name, from_iet(g, n));

  // block orbit of 1 with a transversal word per reached block
  std::vector<Word> via(static_cast<size_t>(n) + 1);
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  std::vector<int> queue{1};
  seen[1] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    int j = queue[head];
    for (const auto& [name, g] : gens)
      for (int e : {1, -1}) {
        int img = e == 1 ? g.sigma()(j) : g.sigma().inverse()(j);
        if (seen[static_cast<size_t>(img)]) continue;
        seen[static_cast<size_t>(img)] = 1;
        via[static_cast<size_t>(img)] = via[static_cast<size_t>(j)];
        via[static_cast<size_t>(img)].insert(via[static_cast<size_t>(img)].begin(),
                                             {name, e});
        queue.push_back(img);
      }
  }
  cert.transitive = static_cast<int>(queue.size()) == n;
  if (!cert.transitive) {
    std::vector<Interval> blocks;
    for (int j : queue)
      blocks.push_back({Scalar(Rational(j - 1, n)), Scalar(Rational(j, n))});
    cert.invariant_set = normalize_intervals(std::move(blocks));
    return cert;
  }

  MarkedAction gn_words;  // reuse word evaluation at the block-group level
  gn_words.generators = action.generators;
  auto invert_word = [](const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->name, -it->exponent});
    return out;
  };
  for (int j : queue)
    for (const auto& [name, g] : gens) {
      int img = g.sigma()(j);
      Word s = invert_word(via[static_cast<size_t>(img)]);
      s.push_back({name, 1});
      Word uj = via[static_cast<size_t>(j)];
      s.insert(s.end(), uj.begin(), uj.end());
      GnElement elt = from_iet(eval_word(gn_words, s), n);
      if (elt.sigma()(1) != 1)
        throw InternalVerificationFailed("Schreier word does not stabilize block 1");
      if (elt.is_identity()) continue;
      cert.stabilizer_generators.push_back(std::move(s));
      cert.stabilizer_angles.push_back(elt.alpha(1).representative());
    }
  cert.angle_rank = q_rank(cert.stabilizer_angles);
  cert.valid = cert.transitive && cert.angle_rank >= 2;
  return cert;
}

NormalizedBsAction normalize_free_bs_action(const Iet& f, const Iet& h, long long budget) {
  if (!equals(compose(compose(h, f), inverse(h)), inverse(f)))
    throw NotAReverser("h does not reverse f");
  MarkedAction pair;
  pair.generators.emplace("a", f);
  pair.generators.emplace("b", h);
  FreenessReport free_check = bounded_freeness(pair, 5);
  if (!free_check.clean)
    throw FreenessUnverified("word " + word_to_string(free_check.word) + " has a fixed point");

  long long max_power = std::min<long long>(budget, kMaxBlockCount);
  for (long long p = 1; p <= max_power; ++p) {
    Iet fp = power(f, p);
    ComponentDecomposition dec = decompose(fp, budget);
    bool all_minimal = !dec.components.empty();
    for (const auto& c : dec.components)
      if (c.kind != ComponentKind::Minimal) all_minimal = false;
    if (!all_minimal) continue;
    try {
      NormalizedRestrictedRotations nrr = normalize_restricted_rotations(fp);
      GnElement F = from_iet(conjugate_by_pl(f, nrr.R), nrr.F.n());
      GnElement H = from_iet(conjugate_by_pl(h, nrr.R), nrr.F.n());
      if (compose(compose(H, F), inverse(H)) != inverse(F))
        throw InternalVerificationFailed("conjugated pair loses the relation");
      return {nrr.R, Iet::identity(), std::move(F), std::move(H)};
    } catch (const NotOfThisForm&) {
    } catch (const NotAnIet&) {
    } catch (const NotInGn&) {
    }
  }
  throw UnresolvedComponent("no power of f normalizes to the block model within the budget");
}

std::vector<std::string> builtin_example_names() {
  return {"bs11_flat", "bs11_minimal", "c1"};
}

MarkedAction builtin_example(const SymbolTable& table, const std::string& name) {
  Scalar a = Scalar::symbol(table, "alpha");
  Scalar b = Scalar::symbol(table, "beta");
  Scalar z;
  Rational m(1, 4);
  auto gn4 = [&](std::vector<Scalar> angles, std::vector<int> img) {
    std::vector<CircleValue> alpha;
    for (const auto& s : angles) alpha.push_back(reduce_mod(s, m));
    return to_iet(GnElement(std::move(alpha), Permutation(std::move(img))));
  };
  MarkedAction act;
  if (name == "bs11_flat") {
    act.generators.emplace("a", gn4({-a, a, -a, a}, {1, 2, 3, 4}));
    act.generators.emplace("b", gn4({z, b, z, -b}, {4, 3, 2, 1}));
    act.relations.push_back({{"b", 1}, {"a", 1}, {"b", -1}, {"a", 1}});
  } else if (name == "bs11_minimal") {
    act.generators.emplace("a", gn4({-a, a, -a, a}, {1, 2, 3, 4}));
    act.generators.emplace("b", gn4({b, b, b, b}, {2, 3, 4, 1}));
    act.relations.push_back({{"b", 1}, {"a", 1}, {"b", -1}, {"a", 1}});
  } else if (name == "c1") {
    act.generators.emplace("a", gn4({z, a, -a, z}, {3, 4, 1, 2}));
    act.generators.emplace("b", gn4({b, z, -b, z}, {4, 3, 2, 1}));
    act.relations.push_back({{"b", 1}, {"a", 2}, {"b", -1}, {"a", 2}});
    act.relations.push_back({{"a", 1}, {"b", 2}, {"a", -1}, {"b", 2}});
  } else {
    throw ParseError("unknown builtin example: " + name);
  }
  return act;
}

}  // namespace ietlab
