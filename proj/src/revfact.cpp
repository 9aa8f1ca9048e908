#include "ietlab/revfact.hpp"

#include "ietlab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace ietlab {

namespace {

Rational mod_r(const Rational& x, const Rational& m) {
  return x - Rational(rational_floor(x / m)) * m;
}

void sort_unique(std::vector<Scalar>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool contains_scalar(const std::vector<Scalar>& sorted, const Scalar& x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  return it != sorted.end() && *it == x;
}

std::vector<Interval> full_interval() {
  return {{Scalar(), Scalar(Rational(1))}};
}

bool region_contains(const std::vector<Interval>& region, const Scalar& x) {
  for (const auto& iv : region)
    if (iv.left <= x && x < iv.right) return true;
  return false;
}

// One map per support region, identity in between; the regions must be
// pairwise disjoint and each map must permute its own region.
struct MapOnRegion {
  std::vector<Interval> region;
  const Iet* map;
};

Iet assemble(const std::vector<MapOnRegion>& parts) {
  std::vector<Scalar> bps{Scalar()};
  for (const auto& part : parts) {
    for (const auto& iv : part.region) {
      bps.push_back(iv.left);
      if (iv.right < Scalar(Rational(1))) bps.push_back(iv.right);
      for (const auto& b : part.map->breakpoints())
        if (iv.left < b && b < iv.right) bps.push_back(b);
    }
  }
  sort_unique(bps);
  std::vector<Scalar> ts;
  for (const auto& x : bps) {
    Scalar t;
    for (const auto& part : parts)
      if (region_contains(part.region, x)) {
        t = part.map->translation_at(x);
        break;
      }
    ts.push_back(t);
  }
  return Iet(std::move(bps), std::move(ts));
}

std::vector<Interval> image_of(const Iet& h, const std::vector<Interval>& region) {
  std::vector<Interval> out;
  for (const auto& iv : region) {
    std::vector<Scalar> cuts{iv.left};
    for (const auto& b : h.breakpoints())
      if (iv.left < b && b < iv.right) cuts.push_back(b);
    cuts.push_back(iv.right);
    sort_unique(cuts);
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
      const Scalar& t = h.translation_at(cuts[k]);
      out.push_back({cuts[k] + t, cuts[k + 1] + t});
    }
  }
  return normalize_intervals(std::move(out));
}

bool same_region(std::vector<Interval> a, std::vector<Interval> b) {
  a = normalize_intervals(std::move(a));
  b = normalize_intervals(std::move(b));
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].left != b[i].left || a[i].right != b[i].right) return false;
  return true;
}

// On an f-invariant union U where f is periodic: the involution that reverses
// each orbit tower of atoms (the partition of U refined by every power of f),
// extended by the identity off U.
Iet periodic_reversing_involution(const Iet& f, const std::vector<Interval>& U,
                                  long long cap) {
  std::vector<Scalar> pts;
  for (const auto& iv : U) pts.push_back(iv.left);
  for (const auto& b : f.breakpoints())
    if (region_contains(U, b)) pts.push_back(b);
  sort_unique(pts);
  long long guard = 0;
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Scalar> add;
    for (const auto& p : pts) {
      Scalar q = evaluate(f, p);
      if (!contains_scalar(pts, q)) add.push_back(q);
    }
    if (!add.empty()) {
      grew = true;
      pts.insert(pts.end(), add.begin(), add.end());
      sort_unique(pts);
    }
    if (++guard > cap)
      throw UnresolvedComponent("breakpoint orbit closure exceeded the budget");
  }

  struct Atom {
    Scalar left, right;
    int tower = -1;
  };
  std::vector<Atom> atoms;
  for (const auto& iv : U) {
    std::vector<Scalar> local;
    for (const auto& p : pts)
      if (iv.left <= p && p < iv.right) local.push_back(p);
    for (size_t k = 0; k < local.size(); ++k)
      atoms.push_back({local[k], k + 1 < local.size() ? local[k + 1] : iv.right, -1});
  }
  auto atom_at = [&](const Scalar& x) -> int {
    int lo = 0, hi = static_cast<int>(atoms.size()) - 1;
    while (lo < hi) {
      int mid = (lo + hi + 1) / 2;
      if (atoms[static_cast<size_t>(mid)].left <= x) lo = mid;
      else hi = mid - 1;
    }
    if (atoms[static_cast<size_t>(lo)].left != x)
      throw InternalVerificationFailed("orbit closure does not map atoms to atoms");
    return lo;
  };

  std::vector<std::pair<Scalar, Scalar>> pieces;  // (left, translation)
  for (size_t start = 0; start < atoms.size(); ++start) {
    if (atoms[start].tower >= 0) continue;
    std::vector<int> floors;
    int j = static_cast<int>(start);
    do {
      atoms[static_cast<size_t>(j)].tower = static_cast<int>(start);
      floors.push_back(j);
      j = atom_at(evaluate(f, atoms[static_cast<size_t>(j)].left));
    } while (j != static_cast<int>(start));
    int p = static_cast<int>(floors.size());
    for (int k = 0; k < p; ++k) {
      const Atom& src = atoms[static_cast<size_t>(floors[static_cast<size_t>(k)])];
      const Atom& dst = atoms[static_cast<size_t>(floors[static_cast<size_t>(p - 1 - k)])];
      pieces.emplace_back(src.left, dst.left - src.left);
    }
  }
  for (const auto& iv : subtract_intervals(full_interval(), U))
    pieces.emplace_back(iv.left, Scalar());
  std::sort(pieces.begin(), pieces.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Scalar> bps, ts;
  for (auto& [l, t] : pieces) {
    bps.push_back(l);
    ts.push_back(t);
  }
  return Iet(std::move(bps), std::move(ts));
}

long long factor_order(const Iet& g) { return g.is_identity() ? 1 : 2; }

void append_involutions(const FactorizationResult& part, FactorizationResult& out) {
  for (size_t k = 0; k < part.factors.size(); ++k)
    if (!part.factors[k].is_identity()) {
      out.factors.push_back(part.factors[k]);
      out.factor_orders.push_back(part.factor_orders[k]);
    }
}

void verify_recomposition(const Iet& f, FactorizationResult& r) {
  Iet prod = Iet::identity();
  for (const auto& g : r.factors) prod = compose(prod, g);
  if (!equals(prod, f))
    throw InternalVerificationFailed("factors do not recompose to the input");
  r.recomposition_checked = true;
}

}  // namespace

Iet two_restricted_rotation_map(const Scalar& l1, const Scalar& d1, const Scalar& d2) {
  Scalar zero, one(Rational(1));
  if (!(zero < l1 && l1 < one) || d1 < zero || !(d1 < l1) || d2 < zero || !(d2 < one - l1))
    throw BadPartition("restricted rotation data out of range");
  std::vector<Scalar> bps, ts;
  auto add_block = [&](const Scalar& lo, const Scalar& hi, const Scalar& d) {
    bps.push_back(lo);
    if (d == zero) {
      ts.push_back(zero);
      return;
    }
    ts.push_back(d);
    bps.push_back(hi - d);
    ts.push_back(d - (hi - lo));
  };
  add_block(zero, l1, d1);
  add_block(l1, one, d2);
  return Iet(std::move(bps), std::move(ts));
}

FactorizationResult factor_periodic_two_involutions(const Iet& f, long long budget) {
  if (!period(f, budget))
    throw NotPeriodicWithinBudget("no period within the budget");
  Iet i1 = periodic_reversing_involution(f, full_interval(), budget);
  Iet i2 = compose(i1, f);
  if (!power(i1, 2).is_identity() || !power(i2, 2).is_identity())
    throw InternalVerificationFailed("tower factors are not involutions");
  FactorizationResult r;
  r.kind = FactorKind::Involutions;
  r.factors = {i1, i2};
  r.factor_orders = {factor_order(i1), factor_order(i2)};
  verify_recomposition(f, r);
  return r;
}

Iet finite_order_reverser(const Iet& f, const Iet& h, long long budget) {
  Iet finv = inverse(f);
  if (!equals(compose(compose(h, f), inverse(h)), finv))
    throw NotAReverser("h does not reverse f");

  ComponentDecomposition dec = decompose(f, budget);
  std::vector<Interval> periodic_support;
  std::vector<std::vector<Interval>> sup;
  for (const auto& c : dec.components) {
    if (c.kind == ComponentKind::Unresolved)
      throw UnresolvedComponent("decomposition left an unresolved component");
    if (c.kind == ComponentKind::Periodic)
      periodic_support.insert(periodic_support.end(), c.support.begin(), c.support.end());
    else
      sup.push_back(c.support);
  }

  std::vector<Iet> parts;
  std::vector<long long> orders;
  if (!periodic_support.empty()) {
    Iet i1 = periodic_reversing_involution(f, normalize_intervals(periodic_support), budget);
    parts.push_back(i1);
    orders.push_back(factor_order(i1));
  }

  // h permutes the minimal components; handle each cycle of that permutation
  int m = static_cast<int>(sup.size());
  std::vector<int> img(static_cast<size_t>(m), -1);
  Iet hinv = inverse(h);
  for (int i = 0; i < m; ++i) {
    auto image = image_of(h, sup[static_cast<size_t>(i)]);
    for (int j = 0; j < m; ++j)
      if (same_region(image, sup[static_cast<size_t>(j)])) {
        img[static_cast<size_t>(i)] = j;
        break;
      }
    if (img[static_cast<size_t>(i)] < 0)
      throw InternalVerificationFailed("reverser does not permute the minimal components");
  }
  std::vector<char> done(static_cast<size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    if (done[static_cast<size_t>(i)]) continue;
    std::vector<int> cycle;
    for (int j = i; !done[static_cast<size_t>(j)]; j = img[static_cast<size_t>(j)]) {
      done[static_cast<size_t>(j)] = 1;
      cycle.push_back(j);
    }
    int s = static_cast<int>(cycle.size());
    std::vector<Interval> class_support;
    for (int j : cycle) {
      const auto& part = sup[static_cast<size_t>(j)];
      class_support.insert(class_support.end(), part.begin(), part.end());
    }
    class_support = normalize_intervals(std::move(class_support));

    if (s % 2 == 0) {
      // alternate h and h^-1 along the cycle: an involution reversing f here
      std::vector<MapOnRegion> ps;
      for (int k = 0; k < s; ++k)
        ps.push_back({sup[static_cast<size_t>(cycle[static_cast<size_t>(k)])],
                      k % 2 == 0 ? &h : &hinv});
      Iet h0 = assemble(ps);
      if (!power(h0, 2).is_identity())
        throw InternalVerificationFailed("sign-flipped reverser is not an involution");
      parts.push_back(h0);
      orders.push_back(2);
      continue;
    }

    // odd cycle: h^s preserves every component of the family
    Iet hs = power(h, s);
    Iet hc = assemble({{class_support, &hs}});
    if (auto d = period(hc, budget)) {
      if (*d % 2 != 0)
        throw InternalVerificationFailed("finite-order restriction has odd order");
      long long half = *d / 2;
      if (half % 2 == 1) {
        parts.push_back(power(hc, half));
        orders.push_back(2);
      } else {
        parts.push_back(hc);
        orders.push_back(*d);
      }
      continue;
    }

    // free case: pull the family onto the block model and strengthen there
    Iet fc = assemble({{class_support, &f}});
    try {
      NormalizedRestrictedRotations nrr = normalize_restricted_rotations(fc);
      GnElement hg = from_iet(conjugate_by_pl(hc, nrr.R), nrr.F.n());
      Iet back = conjugate_by_pl(to_iet(strengthen_reverser(nrr.F, hg)), nrr.R.inverse());
      if (!equals(back, assemble({{class_support, &back}})))
        throw InternalVerificationFailed("pulled-back reverser leaves its family");
      parts.push_back(back);
      orders.push_back(factor_order(back));
    } catch (const NotOfThisForm&) {
      throw UnresolvedComponent("minimal family does not normalize to the block model");
    } catch (const NotAnIet&) {
      throw UnresolvedComponent("conjugated reverser is not exchange-like");
    } catch (const NotInGn&) {
      throw UnresolvedComponent("conjugated reverser is outside the block group");
    }
  }

  Iet out = Iet::identity();
  long long order = 1;
  for (size_t k = 0; k < parts.size(); ++k) {
    out = compose(out, parts[k]);
    order = std::lcm(order, orders[k]);
  }
  if (!power(out, order).is_identity() ||
      !equals(compose(compose(out, f), inverse(out)), finv))
    throw InternalVerificationFailed("assembled reverser fails verification");
  return out;
}

FactorizationResult factor_reversible_four_involutions(const Iet& f, const Iet& h,
                                                       long long budget) {
  if (!equals(compose(compose(h, f), inverse(h)), inverse(f)))
    throw NotAReverser("h does not reverse f");
  if (power(f, 2).is_identity()) {
    FactorizationResult r;
    r.kind = FactorKind::Involutions;
    r.factors = {f};
    r.factor_orders = {factor_order(f)};
    verify_recomposition(f, r);
    return r;
  }
  Iet hp = finite_order_reverser(f, h, budget);
  auto d = period(hp, budget);
  if (!d) throw NotPeriodicWithinBudget("strengthened reverser order exceeds the budget");
  Iet g = compose(inverse(hp), f);
  if (*d % 2 != 0 || !power(g, *d).is_identity())
    throw InternalVerificationFailed("companion factor is not periodic of the expected order");
  FactorizationResult r;
  r.kind = FactorKind::Involutions;
  append_involutions(factor_periodic_two_involutions(hp, budget), r);
  append_involutions(factor_periodic_two_involutions(g, budget), r);
  if (r.factors.empty()) {
    r.factors = {Iet::identity()};
    r.factor_orders = {1};
  }
  verify_recomposition(f, r);
  return r;
}

ThreeIetAnalysis three_iet_analysis(const Iet& f, long long budget) {
  if (f.pieces() > 3) throw NotAThreeIet("more than 3 canonical pieces");
  ThreeIetAnalysis out;
  out.invariant = saf(f);
  out.saf_zero = out.invariant.is_zero();
  if (!out.saf_zero) return out;
  if (auto p = period(f, budget)) {
    out.periodic = true;
    out.period_found = p;
    out.involution_pair = factor_periodic_two_involutions(f, budget);
  } else {
    out.anomaly = true;  // zero invariant forces periodicity; surface the miss
  }
  return out;
}

NonReversibilityCertificate rr_non_reversibility_certificate(const Iet& f) {
  auto det = detect_restricted_rotation_product(f);
  if (!det || det->size() != 2)
    throw NotApplicable("not a product of exactly two restricted rotations");
  NonReversibilityCertificate cert;
  cert.l1 = (*det)[0].support.right - (*det)[0].support.left;
  cert.d1 = (*det)[0].angle;
  cert.l2 = (*det)[1].support.right - (*det)[1].support.left;
  cert.d2 = (*det)[1].angle;
  if (cert.l1 == cert.l2) throw NotApplicable("the two pieces have equal length");
  cert.lengths_differ = true;
  // d/l is rational iff d lies in the rational line spanned by l
  bool irr1 = q_rank_without_one({cert.l1, cert.d1}) == 2;
  bool irr2 = q_rank_without_one({cert.l2, cert.d2}) == 2;
  if (!irr1 && !irr2)
    throw NotApplicable("both angle/length ratios are rational; the map is periodic");
  cert.irrational_ratio_index = irr1 ? 1 : 2;
  cert.argument =
      "a reverser would preserve the unique shorter invariant piece and reverse "
      "an irrational rotation on it, which is impossible";
  return cert;
}

FactorizationResult six_involutions_rr(int p, const Scalar& d1, const Rational& r,
                                       long long budget) {
  if (p < 1) throw HypothesesViolated("p must be a positive integer");
  Scalar zero, bound(Rational(1, p + 1));
  if (!(zero < d1) || !(d1 < bound))
    throw HypothesesViolated("d1 outside (0, 1/(p+1))");
  Scalar d2 = Scalar(r) - d1.scaled(Rational(p));
  if (d2 < zero || !(d2 < bound))
    throw HypothesesViolated("d2 = -p*d1 + r outside [0, 1/(p+1))");
  Iet f = two_restricted_rotation_map(Scalar(Rational(p, p + 1)), d1, d2);

  // rational q with 0 < (p+1)*d1 - q < 1/p, from the witness enclosure
  Scalar s = d1.scaled(Rational(p + 1));
  Rational lo, hi;
  s.enclosure(lo, hi);
  Rational gap_lo = hi - Rational(1, p);
  if (!(gap_lo < lo))
    throw RationalGapNotFound("witness enclosure too wide to separate a rational");
  Rational q = simplest_rational_between(gap_lo, lo);
  Scalar ap = s - Scalar(q);
  if (!(zero < ap) || !(ap < Scalar(Rational(1, p))))
    throw RationalGapNotFound("located rational misses the target gap");
  Scalar a = ap.scaled(Rational(1, p + 1));

  // periodic twist: rotations by -q mod p and by p*q - (p+1)*r mod 1, rescaled
  Rational ang1 = mod_r(-q, Rational(p));
  Rational ang2 = mod_r(Rational(p) * q - Rational(p + 1) * r, Rational(1));
  Iet rp = two_restricted_rotation_map(Scalar(Rational(p, p + 1)),
                                       Scalar(ang1 * Rational(1, p + 1)),
                                       Scalar(ang2 * Rational(1, p + 1)));
  Iet g = compose(f, rp);

  // the cyclic block element absorbing the residual angle a
  std::vector<int> cyc;
  for (int j = 2; j <= p + 1; ++j) cyc.push_back(j);
  cyc.push_back(1);
  std::vector<CircleValue> alpha;
  Rational mod(1, p + 1);
  for (int j = 0; j < p; ++j) alpha.push_back(reduce_mod(-a, mod));
  alpha.push_back(reduce_mod(a.scaled(Rational(p)), mod));
  Iet blocky = to_iet(GnElement(std::move(alpha), Permutation(cyc)));
  auto pb = period(blocky, budget);
  if (!pb) throw NotPeriodicWithinBudget("cyclic block element order exceeds the budget");
  if (*pb != p + 1)
    throw InternalVerificationFailed("cyclic block element has the wrong period");
  Iet ig = compose(blocky, g);
  if (!period(ig, budget))
    throw NotPeriodicWithinBudget("twisted product order exceeds the budget");

  FactorizationResult out;
  out.kind = FactorKind::Involutions;
  for (const Iet& base : {inverse(blocky), ig, inverse(rp)}) {
    FactorizationResult part = factor_periodic_two_involutions(base, budget);
    out.factors.insert(out.factors.end(), part.factors.begin(), part.factors.end());
    out.factor_orders.insert(out.factor_orders.end(), part.factor_orders.begin(),
                             part.factor_orders.end());
  }
  verify_recomposition(f, out);
  return out;
}

}  // namespace ietlab
