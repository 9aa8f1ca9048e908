#include "ietlab/gn.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace ietlab {

namespace {

std::vector<int> cycle_of(const Permutation& sigma, int u) {
  std::vector<int> cycle{u};
  for (int v = sigma(u); v != u; v = sigma(v)) cycle.push_back(v);
  return cycle;
}

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

GnElement::GnElement(std::vector<CircleValue> alpha, Permutation sigma)
    : alpha_(std::move(alpha)), sigma_(std::move(sigma)) {
  int n = sigma_.size();
  if (n < 1) throw NotInGn("empty permutation");
  if (static_cast<int>(alpha_.size()) != n)
    throw SizeMismatch("alpha vector length does not match permutation degree");
  Rational mod(1, n);
  for (const auto& a : alpha_)
    if (a.modulus() != mod) throw NotInGn("angle modulus is not 1/n");
}

GnElement GnElement::identity(int n) {
  std::vector<CircleValue> alpha(static_cast<size_t>(n), CircleValue(Scalar(), Rational(1, n)));
  return GnElement(std::move(alpha), Permutation::identity(n));
}

bool GnElement::operator==(const GnElement& o) const {
  if (sigma_ != o.sigma_) return false;
  for (size_t i = 0; i < alpha_.size(); ++i)
    if (alpha_[i] != o.alpha_[i]) return false;
  return true;
}

bool GnElement::is_identity() const {
  if (!sigma_.is_identity()) return false;
  for (const auto& a : alpha_)
    if (!a.is_zero()) return false;
  return true;
}

std::string GnElement::to_string() const {
  std::ostringstream out;
  out << "gn n=" << n() << " sigma=" << sigma_.to_string() << " alpha=";
  for (int i = 1; i <= n(); ++i) {
    if (i > 1) out << ", ";
    out << alpha(i).representative().to_string();
  }
  return out.str();
}

GnElement compose(const GnElement& f, const GnElement& g) {
  if (f.n() != g.n()) throw SizeMismatch("composing elements of different degree");
  int n = f.n();
  std::vector<CircleValue> alpha;
  alpha.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) alpha.push_back(g.alpha(i) + f.alpha(g.sigma()(i)));
  return GnElement(std::move(alpha), compose(f.sigma(), g.sigma()));
}

GnElement inverse(const GnElement& f) {
  int n = f.n();
  Permutation sinv = f.sigma().inverse();
  std::vector<CircleValue> alpha;
  alpha.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) alpha.push_back(-f.alpha(sinv(i)));
  return GnElement(std::move(alpha), std::move(sinv));
}

GnElement power(const GnElement& f, long long k) {
  if (k < 0) return power(inverse(f), -k);
  GnElement acc = GnElement::identity(f.n());
  GnElement base = f;
  while (k > 0) {
    if (k & 1) acc = compose(base, acc);
    base = compose(base, base);
    k >>= 1;
  }
  return acc;
}

bool is_involution(const GnElement& f) {
  if (!f.sigma().is_involution()) return false;
  for (int i = 1; i <= f.n(); ++i)
    if (f.alpha(f.sigma()(i)) != -f.alpha(i)) return false;
  return true;
}

CircleValue a_morphism(const GnElement& f) {
  Scalar sum;
  for (int i = 1; i <= f.n(); ++i) sum += f.alpha(i).representative();
  return reduce_mod(sum + sum, f.block_modulus());
}

OrderResult order(const GnElement& f) {
  long long m = f.sigma().order();
  GnElement g = power(f, m);
  Int n = f.n();
  Int k = 1;
  for (int i = 1; i <= f.n(); ++i) {
    const Scalar& rep = g.alpha(i).representative();
    if (!rep.is_rational()) return {false, 0};
    Int a = numerator(rep.constant());
    Int b = denominator(rep.constant());
    k = int_lcm(k, b / int_gcd(a * n, b));
  }
  return {true, Int(m) * k};
}

int rank(const GnElement& f) {
  std::vector<Scalar> reps;
  reps.reserve(static_cast<size_t>(f.n()));
  for (int i = 1; i <= f.n(); ++i) reps.push_back(f.alpha(i).representative());
  return q_rank(reps);
}

std::vector<std::vector<int>> group_orbits(const std::vector<Permutation>& generators) {
  if (generators.empty()) return {};
  int n = generators.front().size();
  for (const auto& g : generators)
    if (g.size() != n) throw SizeMismatch("orbit generators of different degree");
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  std::vector<std::vector<int>> orbits;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    std::vector<int> orbit;
    std::deque<int> queue{start};
    seen[static_cast<size_t>(start)] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      orbit.push_back(v);
      for (const auto& g : generators) {
        for (int w : {g(v), g.inverse()(v)}) {
          if (!seen[static_cast<size_t>(w)]) {
            seen[static_cast<size_t>(w)] = 1;
            queue.push_back(w);
          }
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

namespace {

bool admissible_rep(const Permutation& sigma, const Permutation& tau, int u) {
  std::vector<int> s = cycle_of(sigma, u);
  return !contains(s, tau(u)) || tau(u) == u || tau(u) == sigma(u);
}

// Propagates alpha_T over the <sigma_f, tau>-orbit of u from the seed value
// beta_u = alpha_u(T), via
//   alpha_{sigma^k(u)}(T) = beta_u - sum_{j<k} alpha_{sigma^j(u)}(f)
//                                  - sum_{1<=j<=k} alpha_{tau(sigma^j(u))}(f)
// and, when tau moves the cycle off itself, alpha_{tau(v)}(T) = -alpha_v(T).
void fill_orbit(const GnElement& f, const std::function<int(int)>& tau, int u,
                const CircleValue& beta_u, std::vector<CircleValue>& alphaT) {
  std::vector<int> s = cycle_of(f.sigma(), u);
  size_t m = s.size();
  std::vector<CircleValue> beta(m);
  beta[0] = beta_u;
  for (size_t k = 1; k < m; ++k)
    beta[k] = beta[k - 1] - f.alpha(s[k - 1]) - f.alpha(tau(s[k]));
  for (size_t k = 0; k < m; ++k) alphaT[static_cast<size_t>(s[k])] = beta[k];
  if (!contains(s, tau(u)))
    for (size_t k = 0; k < m; ++k)
      alphaT[static_cast<size_t>(tau(s[k]))] = -beta[k];
}

CircleValue circle_zero(const GnElement& f) {
  return CircleValue(Scalar(), f.block_modulus());
}

CircleValue half_block(const GnElement& f) {
  return CircleValue(Scalar(Rational(1, 2 * f.n())), f.block_modulus());
}

std::string describe_choices(const std::vector<CircleValue>& choices, bool free_case) {
  std::ostringstream out;
  out << "alpha_u(T) in {";
  for (size_t i = 0; i < choices.size(); ++i) {
    if (i) out << ", ";
    out << choices[i].representative().to_string();
  }
  out << "}";
  if (free_case) out << " (free; sampled)";
  return out.str();
}

}  // namespace

std::vector<int> distinguished_representatives(const Permutation& sigma, const Permutation& tau) {
  if (!tau.is_involution()) throw NotAnInvolution("tau is not an involution");
  if (!is_reverser(tau, sigma)) throw NotAReverser("tau does not reverse sigma");
  std::vector<int> reps;
  for (const auto& orbit : group_orbits({sigma, tau})) {
    int rep = 0;
    for (int v : orbit) {
      if (admissible_rep(sigma, tau, v)) {
        rep = v;
        break;
      }
    }
    if (rep == 0) throw InternalVerificationFailed("no distinguished point in orbit");
    reps.push_back(rep);
  }
  return reps;
}

bool ReversibilityReport::all_conditions_hold() const {
  for (const auto& o : orbits)
    if (!o.condition_holds) return false;
  return true;
}

ReversibilityReport strong_reversibility_by(const GnElement& f, const Permutation& tau,
                                            ChoicePolicy policy) {
  if (tau.size() != f.n()) throw SizeMismatch("tau degree does not match f");
  if (!tau.is_involution()) throw NotAnInvolution("tau is not an involution");
  if (!is_reverser(tau, f.sigma())) throw NotAReverser("tau does not reverse sigma_f");

  const Permutation& sigma = f.sigma();
  ReversibilityReport report;
  report.tau = tau;

  std::vector<std::vector<CircleValue>> choices_per_orbit;
  for (const auto& orbit : group_orbits({sigma, tau})) {
    OrbitReport orb;
    orb.points = orbit;
    for (int v : orbit) {
      if (admissible_rep(sigma, tau, v)) {
        orb.representative = v;
        break;
      }
    }
    if (orb.representative == 0)
      throw InternalVerificationFailed("no distinguished point in orbit");
    int u = orb.representative;

    std::vector<int> s = cycle_of(sigma, u);
    // angle-sum condition over the cycle of u and its tau-image
    Scalar sum;
    for (int j : s) sum += f.alpha(j).representative();
    for (int j : s) sum += f.alpha(tau(j)).representative();
    orb.condition_holds = reduce_mod(sum, f.block_modulus()).is_zero();

    std::vector<CircleValue> choices;
    bool free_case = false;
    if (tau(u) == u) {
      orb.kind = OrbitCase::AFixed;
      choices = {circle_zero(f), half_block(f)};
    } else if (tau(u) == sigma(u)) {
      orb.kind = OrbitCase::ASigma;
      choices = {f.alpha(u), f.alpha(u) + half_block(f)};
    } else {
      orb.kind = OrbitCase::B;
      free_case = true;
      choices = {circle_zero(f)};
      if (policy == ChoicePolicy::Enumerate) {
        for (const CircleValue& extra : {half_block(f), f.alpha(u)})
          if (std::none_of(choices.begin(), choices.end(),
                           [&](const CircleValue& c) { return c == extra; }))
            choices.push_back(extra);
      }
    }
    orb.admissible_choices = describe_choices(choices, free_case);
    report.orbits.push_back(std::move(orb));
    choices_per_orbit.push_back(std::move(choices));
  }

  if (!report.all_conditions_hold()) return report;

  GnElement finv = inverse(f);
  std::function<int(int)> tau_fn = [&tau](int i) { return tau(i); };
  std::vector<size_t> index(choices_per_orbit.size(), 0);
  while (true) {
    std::vector<CircleValue> alphaT(static_cast<size_t>(f.n()) + 1, circle_zero(f));
    for (size_t o = 0; o < index.size(); ++o)
      fill_orbit(f, tau_fn, report.orbits[o].representative, choices_per_orbit[o][index[o]],
                 alphaT);
    GnElement T(std::vector<CircleValue>(alphaT.begin() + 1, alphaT.end()), tau);
    if (!is_involution(T) || compose(compose(T, f), T) != finv)
      throw InternalVerificationFailed("constructed witness fails verification");
    report.witnesses.push_back(std::move(T));

    size_t o = 0;
    while (o < index.size() && ++index[o] == choices_per_orbit[o].size()) {
      index[o] = 0;
      ++o;
    }
    if (o == index.size()) break;
  }
  return report;
}

std::vector<ReversibilityReport> find_strong_reversers(const GnElement& f, int enumeration_bound) {
  if (f.n() > enumeration_bound)
    throw EnumerationBoundExceeded("degree exceeds the involution enumeration bound");
  std::vector<ReversibilityReport> reports;
  for (const auto& tau : all_involutions(f.n()))
    if (is_reverser(tau, f.sigma()))
      reports.push_back(strong_reversibility_by(f, tau));
  return reports;
}

namespace {

// Solves for an involution on the class C (invariant under sigma_f and
// sigma_h), writing its permutation values into sigT and its angles into
// alphaT. h reverses f. Recursion: either sigma_h acts on C as a reversing
// involution (seeded propagation), or an odd power of h times a power of f
// fixes a block of C (recurse with that reverser), or the parity splitting
// of C is consistent and T acts blockwise as h or h^{-1}.
void solve_class(const GnElement& f, const GnElement& h, const std::vector<int>& C,
                 std::vector<int>& sigT, std::vector<CircleValue>& alphaT) {
  const Permutation& sigma = f.sigma();
  const Permutation& tau = h.sigma();

  bool tau_ok = true;
  for (int j : C) {
    if (tau(tau(j)) != j || tau(sigma(j)) != sigma.inverse()(tau(j))) {
      tau_ok = false;
      break;
    }
  }
  if (tau_ok) {
    // C is a single <sigma, tau>-orbit; run the seeded propagation
    int u = 0;
    for (int v : C) {
      if (admissible_rep(sigma, tau, v)) {
        u = v;
        break;
      }
    }
    if (u == 0) throw InternalVerificationFailed("no distinguished point in class");
    CircleValue beta_u = tau(u) == sigma(u) ? f.alpha(u)
                                            : CircleValue(Scalar(), f.block_modulus());
    std::function<int(int)> tau_fn = [&tau](int i) { return tau(i); };
    fill_orbit(f, tau_fn, u, beta_u, alphaT);
    for (int j : C) sigT[static_cast<size_t>(j)] = tau(j);
    return;
  }

  long long mh = tau.order();
  long long p = sigma.order();
  for (long long s = 1; s < 2 * mh; s += 2) {
    Permutation ts = tau.power(s);
    for (long long t = 0; t < p; ++t) {
      Permutation gs = compose(ts, sigma.power(t));
      int fixed = 0;
      for (int j : C) {
        if (gs(j) == j) {
          fixed = j;
          break;
        }
      }
      if (fixed == 0) continue;
      GnElement g = compose(power(h, s), power(f, t));
      for (const auto& orbit : group_orbits({sigma, g.sigma()})) {
        if (!contains(C, orbit.front())) continue;
        solve_class(f, g, orbit, sigT, alphaT);
      }
      return;
    }
  }

  // parity splitting: sign flips across tau, is constant along sigma
  std::vector<int> eps(sigT.size(), 0);
  std::deque<int> queue;
  for (int j : cycle_of(sigma, C.front())) {
    eps[static_cast<size_t>(j)] = 1;
    queue.push_back(j);
  }
  Permutation tinv = tau.inverse();
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    int e = eps[static_cast<size_t>(v)];
    struct Step { int w; int sign; };
    for (Step step : {Step{sigma(v), e}, Step{tau(v), -e}, Step{tinv(v), -e}}) {
      int& slot = eps[static_cast<size_t>(step.w)];
      if (slot == 0) {
        slot = step.sign;
        queue.push_back(step.w);
      } else if (slot != step.sign) {
        throw InternalVerificationFailed("parity splitting is inconsistent");
      }
    }
  }
  GnElement hinv = inverse(h);
  for (int j : C) {
    if (eps[static_cast<size_t>(j)] == 1) {
      sigT[static_cast<size_t>(j)] = tau(j);
      alphaT[static_cast<size_t>(j)] = h.alpha(j);
    } else {
      sigT[static_cast<size_t>(j)] = tinv(j);
      alphaT[static_cast<size_t>(j)] = hinv.alpha(j);
    }
  }
}

}  // namespace

GnElement strengthen_reverser(const GnElement& f, const GnElement& h) {
  if (f.n() != h.n()) throw SizeMismatch("degrees differ");
  GnElement finv = inverse(f);
  if (compose(compose(h, f), inverse(h)) != finv)
    throw NotAReverser("h does not reverse f");

  std::vector<int> sigT(static_cast<size_t>(f.n()) + 1, 0);
  std::vector<CircleValue> alphaT(static_cast<size_t>(f.n()) + 1,
                                  CircleValue(Scalar(), f.block_modulus()));
  for (const auto& C : group_orbits({f.sigma(), h.sigma()}))
    solve_class(f, h, C, sigT, alphaT);

  GnElement T(std::vector<CircleValue>(alphaT.begin() + 1, alphaT.end()),
              Permutation(std::vector<int>(sigT.begin() + 1, sigT.end())));
  if (!is_involution(T) || compose(compose(T, f), T) != finv)
    throw InternalVerificationFailed("strengthened reverser fails verification");
  return T;
}

std::vector<GnElement> factor_four_involutions(const GnElement& f) {
  if (!a_morphism(f).is_zero())
    throw AObstruction("A(f) is nonzero; f is not a product of involutions");
  if (is_involution(f)) return {f};

  int n = f.n();
  std::vector<int> cyc(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) cyc[static_cast<size_t>(i)] = i + 1;
  Permutation gamma = Permutation::from_cycles(n, {cyc});
  Permutation tau = compose(gamma, f.sigma().inverse());

  std::vector<CircleValue> zeros(static_cast<size_t>(n), CircleValue(Scalar(), Rational(1, n)));
  GnElement T(zeros, tau);
  GnElement Tf = compose(T, f);

  std::vector<GnElement> factors;
  if (!tau.is_identity()) {
    GnElement Tinv(zeros, tau.inverse());
    if (tau.is_involution()) {
      factors.push_back(Tinv);
    } else {
      Permutation rho = reversing_involution(tau.inverse());
      GnElement S1(zeros, rho);
      factors.push_back(S1);
      factors.push_back(compose(S1, Tinv));
    }
  }

  if (is_involution(Tf)) {
    factors.push_back(Tf);
  } else {
    auto report = strong_reversibility_by(Tf, reversing_involution(gamma));
    if (report.witnesses.empty())
      throw InternalVerificationFailed("cycle-adjusted element is not strongly reversible");
    const GnElement& W = report.witnesses.front();
    factors.push_back(W);
    factors.push_back(compose(W, Tf));
  }

  GnElement product = GnElement::identity(n);
  for (const auto& g : factors) {
    if (!is_involution(g)) throw InternalVerificationFailed("factor is not an involution");
    product = compose(product, g);
  }
  if (product != f || factors.size() > 4)
    throw InternalVerificationFailed("involution factorization does not multiply back");
  return factors;
}

}  // namespace ietlab
