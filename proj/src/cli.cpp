#include "ietlab/revfact.hpp"
#include "ietlab/saf.hpp"
#include "ietlab/workspace.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace ietlab {

namespace {

// Default witnesses for the builtin examples: sqrt(2)/16 and sqrt(3)/16.
constexpr const char* kAlphaWitness =
    "0.08838834764831844055010554526310636184360680632466";
constexpr const char* kBetaWitness =
    "0.10825317547305483029950288588162848652937300566872";

const char* kUsage = R"(usage: iet-lab [options] <command> [args]

values are files in the iet/gn/action grammars; '-' reads stdin

  compose f g [h ...]        left-to-right composition (rightmost acts first)
  inverse f                  inverse map
  power f k                  k-th power (k may be negative)
  eval f x                   image of the point x
  order g                    order of a block-group element
  period f [--budget N]      least p with f^p = id, searched up to the budget
  saf f                      the scissors invariant, in wedge normal form
  decompose f                invariant components: periodic / minimal / unresolved
  reverse-check f [h]        verify h f h^-1 = f^-1, or search all block reversers
  reverse-construct g tau    reversing involutions with the given block permutation
  strengthen g h             turn any reverser h into a reversing involution
  factor two-involutions f   periodic map as a product of <= 2 involutions
  factor four-involutions g  block element as <= 4 involutions (or with: f h)
  factor six-involutions p d1 r   two-restricted-rotation family, 6 involutions
  factor two-periodic f h    f as a product of 2 periodic maps
  three-iet f                invariant / periodicity report for a 3-interval map
  rank g                     rational rank of the block angles
  bp-growth f x N            breakpoint counts of f^1..f^N along the orbit of x
  normalize-rr f             affine normalization of a restricted-rotation product
  relations a.act            check every relation of an action
  faithful a.act             faithfulness of a reversing pair action
  free a.act [--bound B]     fixed-point search over words a^p b^q
  minimal a.act              block-transitivity + angle-rank certificate
  examples [name]            emit a builtin action file (bs11_flat, bs11_minimal, c1)

options: --emit human|canonical   --budget N   --bound B   --symbol name=witness
exit codes: 0 ok, 1 usage or parse error, 2 mathematical obstruction
)";

struct Invocation {
  std::string cmd;
  std::vector<std::string> pos;
  std::string emit = "human";
  long long budget = 10000;
  int bound = 5;
  std::vector<std::pair<std::string, std::string>> symbols;
};

bool is_obstruction(const Error& e) {
  return dynamic_cast<const AObstruction*>(&e) || dynamic_cast<const NotAReverser*>(&e) ||
         dynamic_cast<const NotAnInvolution*>(&e) || dynamic_cast<const NotInGn*>(&e) ||
         dynamic_cast<const NotOfThisForm*>(&e) || dynamic_cast<const NotAnIet*>(&e) ||
         dynamic_cast<const NotPeriodicWithinBudget*>(&e) ||
         dynamic_cast<const HypothesesViolated*>(&e) ||
         dynamic_cast<const RationalGapNotFound*>(&e) ||
         dynamic_cast<const UnresolvedComponent*>(&e) ||
         dynamic_cast<const NotApplicable*>(&e) ||
         dynamic_cast<const FreenessUnverified*>(&e) ||
         dynamic_cast<const RelationNotSatisfied*>(&e) ||
         dynamic_cast<const EnumerationBoundExceeded*>(&e) ||
         dynamic_cast<const InsufficientPrecision*>(&e) ||
         dynamic_cast<const NotAntisymmetric*>(&e);
}

struct UsageError : Error {
  using Error::Error;
};

long long parse_ll(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw UsageError("expected an integer for " + what + ", got '" + s + "'");
  }
}

Invocation parse_args(const std::vector<std::string>& args) {
  Invocation inv;
  auto value_of = [&](size_t& i, const std::string& opt) -> std::string {
    const std::string& a = args[i];
    size_t eq = a.find('=');
    if (eq != std::string::npos) return a.substr(eq + 1);
    if (i + 1 >= args.size()) throw UsageError(opt + " needs a value");
    return args[++i];
  };
  for (size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    std::string key = a.substr(0, a.find('='));
    if (key == "--emit") {
      inv.emit = value_of(i, key);
      if (inv.emit != "human" && inv.emit != "canonical")
        throw UsageError("--emit must be 'human' or 'canonical'");
    } else if (key == "--budget") {
      inv.budget = parse_ll(value_of(i, key), "--budget");
      if (inv.budget < 1) throw UsageError("--budget must be positive");
    } else if (key == "--bound") {
      inv.bound = static_cast<int>(parse_ll(value_of(i, key), "--bound"));
      if (inv.bound < 1) throw UsageError("--bound must be positive");
    } else if (key == "--symbol") {
      std::string def = value_of(i, key);
      size_t eq = def.find('=');
      if (eq == std::string::npos)
        throw UsageError("--symbol needs name=witness, got '" + def + "'");
      inv.symbols.emplace_back(def.substr(0, eq), def.substr(eq + 1));
    } else if (a.size() > 1 && a[0] == '-' && a[1] == '-') {
      throw UsageError("unknown option " + a);
    } else if (inv.cmd.empty()) {
      inv.cmd = a;
    } else {
      inv.pos.push_back(a);
    }
  }
  return inv;
}

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot read file: " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

GnElement need_gn(const WorkspaceValue& v) {
  if (const auto* g = std::get_if<GnElement>(&v)) return *g;
  Iet f = as_iet(v);
  for (int n = 1; n <= 64; ++n) {
    try {
      return from_iet(f, n);
    } catch (const NotInGn&) {
    }
  }
  throw NotInGn("the map lies in no block group up to 64 blocks");
}

MarkedAction need_action(const WorkspaceValue& v) {
  if (const auto* a = std::get_if<MarkedAction>(&v)) return *a;
  throw UsageError("this command needs an action file (gen/relation lines)");
}

std::string intervals_to_string(const std::vector<Interval>& u) {
  std::string out;
  for (const auto& iv : u) {
    if (!out.empty()) out += " u ";
    out += "[" + iv.left.to_string() + ", " + iv.right.to_string() + ")";
  }
  return out.empty() ? "(empty)" : out;
}

class Driver {
 public:
  Driver(const Invocation& inv, std::istream& in, std::ostream& out)
      : inv_(inv), in_(in), out_(out) {
    for (const auto& [name, witness] : inv.symbols)
      ws_.symbols.register_symbol(name, witness);
  }

  int run();

 private:
  const Invocation& inv_;
  std::istream& in_;
  std::ostream& out_;
  Workspace ws_;

  WorkspaceValue arg_value(size_t k) { return load_value(ws_, slurp(pos(k), in_)); }
  Iet arg_iet(size_t k) { return as_iet(arg_value(k)); }

  const std::string& pos(size_t k) {
    if (k >= inv_.pos.size())
      throw UsageError("missing argument for '" + inv_.cmd + "' (see --help)");
    return inv_.pos[k];
  }
  void expect_args(size_t n) {
    if (inv_.pos.size() != n)
      throw UsageError("'" + inv_.cmd + "' takes " + std::to_string(n) +
                       " argument(s), got " + std::to_string(inv_.pos.size()));
  }
  bool canonical() const { return inv_.emit == "canonical"; }

  void emit_iet(const Iet& f) {
    out_ << (canonical() ? save_iet(ws_, f) : f.to_string() + "\n");
  }
  void emit_gn(const GnElement& g) {
    out_ << (canonical() ? save_gn(ws_, g) : g.to_string() + "\n");
  }
  void emit_value(const WorkspaceValue& v) {
    if (const auto* g = std::get_if<GnElement>(&v))
      emit_gn(*g);
    else
      emit_iet(as_iet(v));
  }

  void emit_factorization(const FactorizationResult& r) {
    if (canonical()) {
      out_ << symbol_block();
      for (const Iet& f : r.factors) out_ << f.to_string() << "\n";
      return;
    }
    for (size_t k = 0; k < r.factors.size(); ++k) {
      out_ << "factor " << k + 1 << " (order " << r.factor_orders[k]
           << "): " << r.factors[k].to_string() << "\n";
    }
    out_ << (r.kind == FactorKind::Involutions ? "all factors are involutions"
                                               : "all factors are periodic")
         << "; recomposition "
         << (r.recomposition_checked ? "verified" : "NOT verified") << "\n";
  }

  std::string symbol_block() {
    std::string out;
    for (int i = 0; i < ws_.symbols.size(); ++i) {
      const SymbolEntry& e = ws_.symbols.entry(i);
      out += "symbol " + e.name + " = " + e.witness_text + "\n";
    }
    return out;
  }

  int cmd_compose();
  int cmd_unary_kind_preserving(bool invert);
  int cmd_eval();
  int cmd_order();
  int cmd_period();
  int cmd_saf();
  int cmd_decompose();
  int cmd_reverse_check();
  int cmd_reverse_construct();
  int cmd_strengthen();
  int cmd_factor();
  int cmd_three_iet();
  int cmd_rank();
  int cmd_bp_growth();
  int cmd_normalize_rr();
  int cmd_relations();
  int cmd_faithful();
  int cmd_free();
  int cmd_minimal();
  int cmd_examples();
};

int Driver::cmd_compose() {
  if (inv_.pos.size() < 2) throw UsageError("compose takes at least 2 arguments");
  std::vector<WorkspaceValue> vals;
  for (size_t k = 0; k < inv_.pos.size(); ++k) vals.push_back(arg_value(k));
  bool all_gn = true;
  for (const auto& v : vals)
    if (!std::holds_alternative<GnElement>(v)) all_gn = false;
  if (all_gn) {
    GnElement acc = std::get<GnElement>(vals[0]);
    bool same_n = true;
    for (size_t k = 1; k < vals.size(); ++k)
      if (std::get<GnElement>(vals[k]).n() != acc.n()) same_n = false;
    if (same_n) {
      for (size_t k = 1; k < vals.size(); ++k)
        acc = compose(acc, std::get<GnElement>(vals[k]));
      emit_gn(acc);
      return 0;
    }
  }
  Iet acc = as_iet(vals[0]);
  for (size_t k = 1; k < vals.size(); ++k) acc = compose(acc, as_iet(vals[k]));
  emit_iet(acc);
  return 0;
}

int Driver::cmd_unary_kind_preserving(bool invert) {
  long long k = 0;
  if (invert) {
    expect_args(1);
  } else {
    expect_args(2);
    k = parse_ll(pos(1), "the exponent");
  }
  WorkspaceValue v = arg_value(0);
  if (const auto* g = std::get_if<GnElement>(&v))
    emit_gn(invert ? inverse(*g) : power(*g, k));
  else
    emit_iet(invert ? inverse(as_iet(v)) : power(as_iet(v), k));
  return 0;
}

int Driver::cmd_eval() {
  expect_args(2);
  Iet f = arg_iet(0);
  Scalar x = Scalar::parse(ws_.symbols, pos(1));
  out_ << evaluate(f, x).to_string() << "\n";
  return 0;
}

int Driver::cmd_order() {
  expect_args(1);
  WorkspaceValue v = arg_value(0);
  try {
    OrderResult r = order(need_gn(v));
    if (r.finite)
      out_ << "order = " << r.value.str() << "\n";
    else
      out_ << "order = infinite\n";
    return 0;
  } catch (const NotInGn&) {
  }
  if (auto p = period(as_iet(v), inv_.budget))
    out_ << "order = " << *p << "\n";
  else
    out_ << "order = unknown (budget " << inv_.budget << " exhausted)\n";
  return 0;
}

int Driver::cmd_period() {
  expect_args(1);
  if (auto p = period(arg_iet(0), inv_.budget))
    out_ << "period = " << *p << "\n";
  else
    out_ << "no period within budget " << inv_.budget << "\n";
  return 0;
}

int Driver::cmd_saf() {
  expect_args(1);
  SafTensor s = saf(arg_iet(0));
  if (wedge_normal_form(s).is_zero())
    out_ << "SAF = 0\n";
  else
    out_ << "SAF = " << s.to_string() << "\n";
  return 0;
}

int Driver::cmd_decompose() {
  expect_args(1);
  ComponentDecomposition dec = decompose(arg_iet(0), inv_.budget);
  for (const Component& c : dec.components) {
    out_ << intervals_to_string(c.support) << ": ";
    switch (c.kind) {
      case ComponentKind::Periodic:
        out_ << "periodic, period " << c.period << "\n";
        break;
      case ComponentKind::Minimal:
        out_ << "minimal, induced rank " << c.certificate->q_rank_value << " over "
             << c.certificate->induced_lengths.size() << " intervals\n";
        break;
      case ComponentKind::Unresolved:
        out_ << "unresolved after " << c.budget_spent << " steps\n";
        break;
    }
  }
  return 0;
}

int Driver::cmd_reverse_check() {
  if (inv_.pos.size() == 2) {
    Iet f = arg_iet(0), h = arg_iet(1);
    if (equals(compose(compose(h, f), inverse(h)), inverse(f))) {
      out_ << "h reverses f: h f h^-1 = f^-1\n";
      return 0;
    }
    throw NotAReverser("h f h^-1 differs from f^-1");
  }
  expect_args(1);
  GnElement g = need_gn(arg_value(0));
  auto reports = find_strong_reversers(g);
  bool any = false;
  for (const auto& rep : reports) {
    out_ << "tau = " << rep.tau.to_string() << ": " << rep.witnesses.size()
         << " reversing involution(s)\n";
    for (const auto& w : rep.witnesses) out_ << "  " << w.to_string() << "\n";
    if (!rep.witnesses.empty()) any = true;
  }
  if (reports.empty()) out_ << "no involution reverses the block permutation\n";
  if (!any) throw NotAReverser("no reversing involution exists in the block group");
  return 0;
}

int Driver::cmd_reverse_construct() {
  expect_args(2);
  GnElement g = need_gn(arg_value(0));
  Permutation tau = Permutation::parse(pos(1), g.n());
  ReversibilityReport rep = strong_reversibility_by(g, tau, ChoicePolicy::Enumerate);
  for (const auto& orb : rep.orbits) {
    out_ << "orbit {";
    for (size_t j = 0; j < orb.points.size(); ++j)
      out_ << (j ? ", " : "") << orb.points[j];
    out_ << "}: " << (orb.condition_holds ? "angle condition holds"
                                          : "angle condition fails")
         << "\n";
  }
  for (const auto& w : rep.witnesses) out_ << "witness: " << w.to_string() << "\n";
  if (rep.witnesses.empty()) {
    for (const auto& orb : rep.orbits)
      if (!orb.condition_holds)
        throw NotAReverser("angle condition fails on the orbit of " +
                           std::to_string(orb.points.empty() ? 0 : orb.points[0]));
    throw NotAReverser("no admissible witness for this tau");
  }
  return 0;
}

int Driver::cmd_strengthen() {
  expect_args(2);
  GnElement g = need_gn(arg_value(0));
  GnElement h = need_gn(arg_value(1));
  emit_gn(strengthen_reverser(g, h));
  return 0;
}

int Driver::cmd_factor() {
  std::string mode = pos(0);
  if (mode == "two-involutions") {
    expect_args(2);
    emit_factorization(factor_periodic_two_involutions(arg_iet(1), inv_.budget));
    return 0;
  }
  if (mode == "four-involutions") {
    if (inv_.pos.size() == 3) {
      Iet f = arg_iet(1), h = arg_iet(2);
      emit_factorization(factor_reversible_four_involutions(f, h, inv_.budget));
      return 0;
    }
    expect_args(2);
    GnElement g0 = need_gn(arg_value(1));
    std::vector<GnElement> parts = factor_four_involutions(g0);
    FactorizationResult r;
    r.kind = FactorKind::Involutions;
    GnElement probe = GnElement::identity(g0.n());
    for (const auto& g : parts) {
      r.factors.push_back(to_iet(g));
      r.factor_orders.push_back(g.is_identity() ? 1 : 2);
      probe = compose(probe, g);
    }
    r.recomposition_checked = probe == g0;
    emit_factorization(r);
    return 0;
  }
  if (mode == "six-involutions") {
    expect_args(4);
    int p = static_cast<int>(parse_ll(pos(1), "p"));
    Scalar d1 = Scalar::parse(ws_.symbols, pos(2));
    Rational r;
    try {
      r = parse_rational(pos(3));
    } catch (const std::exception&) {
      throw UsageError("expected a rational for r, got '" + pos(3) + "'");
    }
    emit_factorization(six_involutions_rr(p, d1, r, inv_.budget));
    return 0;
  }
  if (mode == "two-periodic") {
    expect_args(3);
    Iet f = arg_iet(1), h = arg_iet(2);
    Iet hp = finite_order_reverser(f, h, inv_.budget);
    FactorizationResult r;
    r.kind = FactorKind::Periodic;
    r.factors = {inverse(hp), compose(hp, f)};
    for (const Iet& g : r.factors) {
      auto p = period(g, inv_.budget);
      if (!p) throw NotPeriodicWithinBudget("periodic factor exceeds the budget");
      r.factor_orders.push_back(*p);
    }
    r.recomposition_checked = equals(compose(r.factors[0], r.factors[1]), f);
    if (!r.recomposition_checked)
      throw InternalVerificationFailed("two-periodic recomposition failed");
    emit_factorization(r);
    return 0;
  }
  throw UsageError("unknown factor mode '" + mode +
                   "' (two-involutions, four-involutions, six-involutions, two-periodic)");
}

int Driver::cmd_three_iet() {
  expect_args(1);
  ThreeIetAnalysis a = three_iet_analysis(arg_iet(0), inv_.budget);
  out_ << "SAF = "
       << (wedge_normal_form(a.invariant).is_zero() ? "0" : a.invariant.to_string())
       << "\n";
  if (a.periodic)
    out_ << "periodic, period " << *a.period_found << "\n";
  else
    out_ << "no period within budget " << inv_.budget << "\n";
  if (a.involution_pair) {
    out_ << "involution factorization:\n";
    for (size_t k = 0; k < a.involution_pair->factors.size(); ++k)
      out_ << "  factor " << k + 1 << ": "
           << a.involution_pair->factors[k].to_string() << "\n";
  }
  if (a.anomaly) out_ << "ANOMALY: SAF = 0 but no period found within the budget\n";
  return 0;
}

int Driver::cmd_rank() {
  expect_args(1);
  out_ << "rank = " << rank(need_gn(arg_value(0))) << "\n";
  return 0;
}

int Driver::cmd_bp_growth() {
  expect_args(3);
  Iet f = arg_iet(0);
  Scalar x = Scalar::parse(ws_.symbols, pos(1));
  int N = static_cast<int>(parse_ll(pos(2), "N"));
  if (N < 1) throw UsageError("N must be positive");
  BpGrowth g = bp_growth(f, x, N);
  out_ << "counts:";
  for (long long c : g.counts) out_ << " " << c;
  out_ << "\nslope estimate: " << g.slope_estimate << "\n";
  return 0;
}

int Driver::cmd_normalize_rr() {
  expect_args(1);
  NormalizedRestrictedRotations nrr = normalize_restricted_rotations(arg_iet(0));
  if (!canonical()) {
    for (int k = 1; k <= nrr.R.piece_count(); ++k) {
      const AffinePiece& p = nrr.R.pieces()[static_cast<size_t>(k - 1)];
      out_ << "R on [" << nrr.R.left(k).to_string() << ", "
           << nrr.R.right(k).to_string() << "): slope "
           << rational_to_string(p.slope) << ", offset " << p.offset.to_string()
           << "\n";
    }
  }
  emit_gn(nrr.F);
  return 0;
}

int Driver::cmd_relations() {
  expect_args(1);
  MarkedAction action = need_action(arg_value(0));
  std::vector<bool> ok = check_relations(action);
  bool all = true;
  for (size_t k = 0; k < ok.size(); ++k) {
    if (ok[k]) continue;
    all = false;
    out_ << "relation fails: " << word_to_string(action.relations[k]) << "\n";
  }
  if (all) {
    out_ << "all relations hold\n";
    return 0;
  }
  throw RelationNotSatisfied("a relation fails");
}

int Driver::cmd_faithful() {
  expect_args(1);
  FaithfulnessReport r = bs_faithfulness(need_action(arg_value(0)), inv_.budget);
  auto show = [&](const char* name, OrderKind k, const Int& v) {
    out_ << "order(" << name << ") = ";
    if (k == OrderKind::Finite)
      out_ << v.str() << "\n";
    else
      out_ << (k == OrderKind::Infinite ? "infinite" : "unknown") << "\n";
  };
  show("a", r.a_order, r.a_order_value);
  show("b", r.b_order, r.b_order_value);
  if (!r.decided)
    out_ << "undecided within budget " << inv_.budget << "\n";
  else if (r.faithful)
    out_ << "faithful\n";
  else
    out_ << "not faithful: " << r.witness << "\n";
  return 0;
}

int Driver::cmd_free() {
  expect_args(1);
  FreenessReport r = bounded_freeness(need_action(arg_value(0)), inv_.bound);
  if (r.clean)
    out_ << "no fixed point up to word bound " << inv_.bound << "\n";
  else
    out_ << "word " << word_to_string(r.word) << " fixes x = "
         << r.fixed_point->to_string() << "\n";
  return 0;
}

int Driver::cmd_minimal() {
  expect_args(1);
  MinimalityCertificate c = minimality_certificate(need_action(arg_value(0)));
  out_ << "block count: " << c.n << "\n";
  if (!c.transitive) {
    out_ << "not transitive on blocks; invariant set "
         << intervals_to_string(c.invariant_set) << "\n";
    return 0;
  }
  out_ << "transitive on blocks; stabilizer angle rank " << c.angle_rank << "\n";
  for (size_t k = 0; k < c.stabilizer_generators.size(); ++k)
    out_ << "  stabilizer generator " << word_to_string(c.stabilizer_generators[k])
         << ", angle " << c.stabilizer_angles[k].to_string() << "\n";
  out_ << (c.valid ? "minimality certificate valid\n"
                   : "no certificate: angle rank below 2\n");
  return 0;
}

int Driver::cmd_examples() {
  if (inv_.pos.empty()) {
    for (const auto& name : builtin_example_names()) out_ << name << "\n";
    return 0;
  }
  expect_args(1);
  if (ws_.symbols.index_of("alpha") < 0)
    ws_.symbols.register_symbol("alpha", kAlphaWitness);
  if (ws_.symbols.index_of("beta") < 0)
    ws_.symbols.register_symbol("beta", kBetaWitness);
  out_ << save_action(ws_, builtin_example(ws_.symbols, pos(0)));
  return 0;
}

int Driver::run() {
  const std::string& c = inv_.cmd;
  if (c == "compose") return cmd_compose();
  if (c == "inverse") return cmd_unary_kind_preserving(true);
  if (c == "power") return cmd_unary_kind_preserving(false);
  if (c == "eval") return cmd_eval();
  if (c == "order") return cmd_order();
  if (c == "period") return cmd_period();
  if (c == "saf") return cmd_saf();
  if (c == "decompose") return cmd_decompose();
  if (c == "reverse-check") return cmd_reverse_check();
  if (c == "reverse-construct") return cmd_reverse_construct();
  if (c == "strengthen") return cmd_strengthen();
  if (c == "factor") return cmd_factor();
  if (c == "three-iet") return cmd_three_iet();
  if (c == "rank") return cmd_rank();
  if (c == "bp-growth") return cmd_bp_growth();
  if (c == "normalize-rr") return cmd_normalize_rr();
  if (c == "relations") return cmd_relations();
  if (c == "faithful") return cmd_faithful();
  if (c == "free") return cmd_free();
  if (c == "minimal") return cmd_minimal();
  if (c == "examples") return cmd_examples();
  throw UsageError("unknown command '" + c + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  for (const auto& a : args)
    if (a == "--help" || a == "-h" || a == "help") {
      out << kUsage;
      return 0;
    }
  try {
    Invocation inv = parse_args(args);
    if (inv.cmd.empty()) {
      err << kUsage;
      return 1;
    }
    Driver driver(inv, in, out);
    return driver.run();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    if (is_obstruction(e)) {
      err << "obstruction: " << e.what() << "\n";
      return 2;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ietlab
