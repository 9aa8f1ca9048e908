#include "ietlab/iet.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace ietlab {

namespace {

Scalar sc(const Rational& q) { return Scalar(q); }

bool scalar_eq(const Scalar& a, const Scalar& b) { return a == b; }

struct ScalarLess {
  bool operator()(const Scalar& a, const Scalar& b) const { return a < b; }
};

void sort_dedup(std::vector<Scalar>& v) {
  std::sort(v.begin(), v.end(), ScalarLess{});
  v.erase(std::unique(v.begin(), v.end(), scalar_eq), v.end());
}

}  // namespace

std::vector<Interval> normalize_intervals(std::vector<Interval> intervals) {
  std::vector<Interval> kept;
  for (auto& iv : intervals)
    if (iv.left < iv.right) kept.push_back(std::move(iv));
  std::sort(kept.begin(), kept.end(),
            [](const Interval& a, const Interval& b) { return a.left < b.left; });
  std::vector<Interval> out;
  for (auto& iv : kept) {
    if (!out.empty() && iv.left < out.back().right)
      throw InternalVerificationFailed("overlapping intervals in union");
    if (!out.empty() && out.back().right == iv.left)
      out.back().right = iv.right;
    else
      out.push_back(std::move(iv));
  }
  return out;
}

std::vector<Interval> subtract_intervals(const std::vector<Interval>& a,
                                         const std::vector<Interval>& b) {
  std::vector<Interval> nb = normalize_intervals(b);
  std::vector<Interval> out;
  for (const Interval& iv : a) {
    Scalar cur = iv.left;
    for (const Interval& cut : nb) {
      if (cut.right <= cur) continue;
      if (iv.right <= cut.left) break;
      if (cur < cut.left) out.push_back({cur, cut.left});
      cur = cut.right;
      if (!(cur < iv.right)) break;
    }
    if (cur < iv.right) out.push_back({cur, iv.right});
  }
  return normalize_intervals(out);
}

Iet::Iet(std::vector<Scalar> breakpoints, std::vector<Scalar> translations) {
  if (breakpoints.empty() || breakpoints.size() != translations.size())
    throw BadPartition("breakpoints and translations must be nonempty and equal length");
  if (breakpoints.front().sign() != Ordering::Equal)
    throw BadPartition("first breakpoint must be 0");
  Scalar one = sc(1);
  for (size_t k = 0; k < breakpoints.size(); ++k) {
    if (k + 1 < breakpoints.size() && !(breakpoints[k] < breakpoints[k + 1]))
      throw BadPartition("breakpoints must be strictly increasing");
    if (!(breakpoints[k] < one)) throw BadPartition("breakpoints must lie in [0,1)");
  }
  // canonical form: merge adjacent pieces with equal translations
  for (size_t k = 0; k < breakpoints.size(); ++k) {
    if (!breakpoints_.empty() && translations_.back() == translations[k]) continue;
    breakpoints_.push_back(breakpoints[k]);
    translations_.push_back(translations[k]);
  }
  // exact tiling check on the image intervals
  size_t r = breakpoints_.size();
  std::vector<size_t> order(r);
  for (size_t k = 0; k < r; ++k) order[k] = k;
  std::vector<Scalar> img_left(r);
  for (size_t k = 0; k < r; ++k) img_left[k] = breakpoints_[k] + translations_[k];
  std::sort(order.begin(), order.end(),
            [&](size_t i, size_t j) { return img_left[i] < img_left[j]; });
  Scalar expect = sc(0);
  for (size_t k = 0; k < r; ++k) {
    size_t i = order[k];
    if (img_left[i] != expect)
      throw BadPartition("image intervals do not tile [0,1)");
    Scalar hi = (i + 1 < r ? breakpoints_[i + 1] : one) + translations_[i];
    expect = hi;
  }
  if (expect != one) throw BadPartition("image intervals do not tile [0,1)");
}

Iet Iet::identity() { return Iet({sc(0)}, {sc(0)}); }

Iet Iet::rotation(const Scalar& angle) {
  Scalar a = reduce_mod(angle, 1).representative();
  if (a.sign() == Ordering::Equal) return identity();
  return Iet({sc(0), sc(1) - a}, {a, a - sc(1)});
}

Iet Iet::from_lengths(const std::vector<Scalar>& lengths, const Permutation& pi) {
  size_t r = lengths.size();
  if (r == 0 || static_cast<size_t>(pi.size()) != r)
    throw BadPartition("lengths and permutation size mismatch");
  Scalar total;
  for (const auto& l : lengths) {
    if (l.sign() != Ordering::Greater) throw BadPartition("lengths must be positive");
    total += l;
  }
  if (total != sc(1)) throw BadPartition("lengths must sum to 1");
  std::vector<Scalar> breakpoints, translations;
  Scalar left;
  for (size_t k = 0; k < r; ++k) {
    Scalar img_left;
    for (size_t j = 0; j < r; ++j)
      if (pi(static_cast<int>(j) + 1) < pi(static_cast<int>(k) + 1)) img_left += lengths[j];
    breakpoints.push_back(left);
    translations.push_back(img_left - left);
    left += lengths[k];
  }
  return Iet(std::move(breakpoints), std::move(translations));
}

Scalar Iet::left(int k) const { return breakpoints_[static_cast<size_t>(k - 1)]; }

Scalar Iet::right(int k) const {
  return static_cast<size_t>(k) < breakpoints_.size() ? breakpoints_[static_cast<size_t>(k)]
                                                      : sc(1);
}

int Iet::piece_containing(const Scalar& x) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x, ScalarLess{});
  return static_cast<int>(it - breakpoints_.begin());
}

const Scalar& Iet::translation_at(const Scalar& x) const {
  return translations_[static_cast<size_t>(piece_containing(x) - 1)];
}

bool Iet::is_identity() const {
  return translations_.size() == 1 && translations_[0].sign() == Ordering::Equal;
}

bool Iet::operator==(const Iet& o) const {
  if (translations_.size() != o.translations_.size()) return false;
  for (size_t k = 0; k < translations_.size(); ++k)
    if (breakpoints_[k] != o.breakpoints_[k] || translations_[k] != o.translations_[k])
      return false;
  return true;
}

std::string Iet::to_string() const {
  std::ostringstream out;
  out << "iet breakpoints= ";
  for (size_t k = 0; k < breakpoints_.size(); ++k) {
    if (k) out << ", ";
    out << breakpoints_[k].to_string();
  }
  out << " translations= ";
  for (size_t k = 0; k < translations_.size(); ++k) {
    if (k) out << ", ";
    out << translations_[k].to_string();
  }
  return out.str();
}

Scalar evaluate(const Iet& f, const Scalar& x) {
  if (x.sign() == Ordering::Less || !(x < sc(1)))
    throw OutOfDomain("point outside [0,1): " + x.to_string());
  return x + f.translation_at(x);
}

Iet compose(const Iet& f, const Iet& g) {
  Iet ginv = inverse(g);
  std::vector<Scalar> pts = g.breakpoints();
  for (const auto& b : f.breakpoints()) pts.push_back(evaluate(ginv, b));
  sort_dedup(pts);
  std::vector<Scalar> translations;
  for (const auto& c : pts) {
    const Scalar& tg = g.translation_at(c);
    translations.push_back(tg + f.translation_at(c + tg));
  }
  return Iet(std::move(pts), std::move(translations));
}

Iet inverse(const Iet& f) {
  size_t r = f.translations().size();
  std::vector<std::pair<Scalar, Scalar>> img;
  for (size_t k = 0; k < r; ++k)
    img.emplace_back(f.breakpoints()[k] + f.translations()[k], -f.translations()[k]);
  std::sort(img.begin(), img.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Scalar> breakpoints, translations;
  for (auto& p : img) {
    breakpoints.push_back(std::move(p.first));
    translations.push_back(std::move(p.second));
  }
  return Iet(std::move(breakpoints), std::move(translations));
}

Iet power(const Iet& f, long long k) {
  if (k < 0) return power(inverse(f), -k);
  Iet acc = Iet::identity();
  Iet base = f;
  while (k > 0) {
    if (k & 1) acc = compose(base, acc);
    base = k > 1 ? compose(base, base) : base;
    k >>= 1;
  }
  return acc;
}

bool equals(const Iet& f, const Iet& g) { return f == g; }

std::optional<long long> period(const Iet& f, long long budget) {
  // If every breakpoint is periodic, f^lcm fixes all continuity-piece
  // endpoints of f^lcm, hence is the identity; and the lcm is minimal.
  Int l = 1;
  for (const auto& b : f.breakpoints()) {
    Scalar y = b;
    long long t = 0;
    do {
      y = evaluate(f, y);
      ++t;
      if (t > budget) return std::nullopt;
    } while (y != b);
    l = int_lcm(l, Int(t));
    if (l > budget) return std::nullopt;
  }
  long long p = l.convert_to<long long>();
  if (p <= 64 && !power(f, p).is_identity())
    throw InternalVerificationFailed("period certificate failed recomposition");
  return p;
}

namespace {

struct ReturnBranch {
  Scalar lo, hi;     // domain subinterval of J
  Scalar shift;      // f^time(x) = x + shift on [lo, hi)
  long long time;
};

struct ReturnMap {
  std::vector<ReturnBranch> branches;
  bool complete = false;
};

// First-return map of f to J, computed by pushing subintervals forward and
// splitting at breakpoint preimages and at the endpoints of J. Each
// translation step costs one unit of budget.
ReturnMap compute_return_map(const Iet& f, const Interval& J, long long& budget) {
  ReturnMap rm;
  std::deque<ReturnBranch> queue{{J.left, J.right, Scalar(), 0}};
  while (!queue.empty()) {
    ReturnBranch br = std::move(queue.front());
    queue.pop_front();
    Scalar u = br.lo + br.shift, v = br.hi + br.shift;
    if (br.time >= 1 && !(u < J.left) && !(J.right < v)) {
      rm.branches.push_back(std::move(br));
      continue;
    }
    if (budget <= 0) return rm;
    --budget;
    // split [u, v) at breakpoints of f, apply f, then split at J's endpoints
    std::vector<Scalar> cuts{u};
    for (const auto& b : f.breakpoints())
      if (u < b && b < v) cuts.push_back(b);
    cuts.push_back(v);
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      const Scalar& t = f.translation_at(cuts[i]);
      Scalar nu = cuts[i] + t, nv = cuts[i + 1] + t;
      std::vector<Scalar> inner{nu};
      for (const Scalar& e : {J.left, J.right})
        if (nu < e && e < nv) inner.push_back(e);
      std::sort(inner.begin(), inner.end(), ScalarLess{});
      inner.push_back(nv);
      Scalar nshift = br.shift + t;
      for (size_t j = 0; j + 1 < inner.size(); ++j)
        queue.push_back({inner[j] - nshift, inner[j + 1] - nshift, nshift, br.time + 1});
    }
  }
  std::sort(rm.branches.begin(), rm.branches.end(),
            [](const ReturnBranch& a, const ReturnBranch& b) { return a.lo < b.lo; });
  // domains must tile J
  Scalar expect = J.left;
  for (const auto& br : rm.branches) {
    if (br.lo != expect) throw InternalVerificationFailed("return branches do not tile");
    expect = br.hi;
  }
  if (expect != J.right) throw InternalVerificationFailed("return branches do not tile");
  rm.complete = true;
  return rm;
}

// Floors f^k(I), 0 <= k < time, of the tower over a return branch. Each
// floor maps to the next by a single translation by construction.
std::vector<Interval> branch_floors(const Iet& f, const ReturnBranch& br) {
  std::vector<Interval> floors;
  Interval cur{br.lo, br.hi};
  for (long long k = 0; k < br.time; ++k) {
    floors.push_back(cur);
    const Scalar& t = f.translation_at(cur.left);
    cur = {cur.left + t, cur.right + t};
  }
  if (cur.left != br.lo + br.shift)
    throw InternalVerificationFailed("tower floors disagree with the return branch");
  return floors;
}

int branch_index_at(const std::vector<ReturnBranch>& branches, const Scalar& x) {
  for (size_t i = 0; i < branches.size(); ++i)
    if (!(x < branches[i].lo) && x < branches[i].hi) return static_cast<int>(i);
  throw InternalVerificationFailed("point escapes the return interval");
}

// Image-order permutation of the return branches.
Permutation branch_permutation(const std::vector<ReturnBranch>& branches) {
  size_t r = branches.size();
  std::vector<size_t> order(r);
  for (size_t i = 0; i < r; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
    return branches[i].lo + branches[i].shift < branches[j].lo + branches[j].shift;
  });
  std::vector<int> img(r);
  for (size_t pos = 0; pos < r; ++pos) img[order[pos]] = static_cast<int>(pos) + 1;
  return Permutation(img);
}

bool is_irreducible(const Permutation& pi) {
  int maxseen = 0;
  for (int j = 1; j < pi.size(); ++j) {
    maxseen = std::max(maxseen, pi(j));
    if (maxseen == j) return false;
  }
  return true;
}

}  // namespace

ComponentDecomposition decompose(const Iet& f, long long budget) {
  long long remaining = budget;
  ComponentDecomposition out;
  std::deque<Interval> work{{sc(0), sc(1)}};

  auto give_up = [&](std::deque<Interval> rest) {
    std::vector<Interval> support(rest.begin(), rest.end());
    Component c;
    c.support = normalize_intervals(std::move(support));
    c.kind = ComponentKind::Unresolved;
    c.budget_spent = budget - std::max<long long>(remaining, 0);
    out.components.push_back(std::move(c));
  };

  while (!work.empty()) {
    Interval J = std::move(work.front());
    work.pop_front();
    if (remaining <= 0) {
      work.push_front(std::move(J));
      give_up(std::move(work));
      break;
    }

    ReturnMap rm = compute_return_map(f, J, remaining);
    if (!rm.complete) {
      work.push_front(std::move(J));
      give_up(std::move(work));
      break;
    }
    const auto& branches = rm.branches;
    size_t r = branches.size();
    Permutation pi = branch_permutation(branches);

    // invariant prefix: process the two halves separately
    if (!is_irreducible(pi) && r > 1) {
      int maxseen = 0, cut_at = 0;
      for (int j = 1; j < static_cast<int>(r); ++j) {
        maxseen = std::max(maxseen, pi(j));
        if (maxseen == j) {
          cut_at = j;
          break;
        }
      }
      Scalar cut = branches[static_cast<size_t>(cut_at - 1)].hi;
      work.push_front({cut, J.right});
      work.push_front({J.left, cut});
      continue;
    }

    std::vector<Interval> floors;
    for (const auto& br : branches) {
      auto fl = branch_floors(f, br);
      floors.insert(floors.end(), fl.begin(), fl.end());
    }
    std::vector<Interval> support = normalize_intervals(std::move(floors));

    Component c;
    c.support = support;

    std::vector<Scalar> lengths;
    for (const auto& br : branches) lengths.push_back(br.hi - br.lo);

    bool keane = r > 1 && q_rank_without_one(lengths) == static_cast<int>(r);
    if (keane) {
      c.kind = ComponentKind::Minimal;
      KeaneCertificate cert;
      cert.induced_lengths = lengths;
      cert.permutation = pi;
      cert.irreducible = true;
      cert.q_rank_value = q_rank(lengths);
      c.certificate = std::move(cert);
    } else {
      // probe periodicity of the return map at the branch endpoints
      bool periodic = true;
      Int l = 1;
      for (const auto& br : branches) {
        Scalar y = br.lo;
        Int ftime = 0;
        while (true) {
          if (remaining <= 0) {
            periodic = false;
            break;
          }
          --remaining;
          int i = branch_index_at(branches, y);
          y = y + branches[static_cast<size_t>(i)].shift;
          ftime += branches[static_cast<size_t>(i)].time;
          if (y == br.lo) break;
        }
        if (!periodic) break;
        l = int_lcm(l, ftime);
      }
      if (periodic && l <= Int(1000000000000LL)) {
        c.kind = ComponentKind::Periodic;
        c.period = l.convert_to<long long>();
      } else {
        c.kind = ComponentKind::Unresolved;
        c.budget_spent = budget - std::max<long long>(remaining, 0);
      }
    }
    out.components.push_back(std::move(c));

    // carve the new support out of the pending work intervals
    std::deque<Interval> next;
    for (auto& w : work)
      for (auto& piece : subtract_intervals({w}, support)) next.push_back(std::move(piece));
    work = std::move(next);
  }

  std::sort(out.components.begin(), out.components.end(),
            [](const Component& a, const Component& b) {
              return a.support.front().left < b.support.front().left;
            });
  return out;
}

BpGrowth bp_growth(const Iet& f, const Scalar& x, int N) {
  std::vector<Scalar> orbit{x};
  Iet finv = inverse(f);
  Scalar fwd = x, bwd = x;
  for (int k = 0; k < N; ++k) {
    fwd = evaluate(f, fwd);
    bwd = evaluate(finv, bwd);
    orbit.push_back(fwd);
    orbit.push_back(bwd);
  }
  sort_dedup(orbit);
  BpGrowth out;
  Iet g = Iet::identity();
  for (int n = 1; n <= N; ++n) {
    g = compose(f, g);
    long long count = 0;
    for (const auto& b : g.breakpoints())
      count += std::binary_search(orbit.begin(), orbit.end(), b, ScalarLess{}) ? 1 : 0;
    out.counts.push_back(count);
  }
  out.slope_estimate = N > 0 ? static_cast<double>(out.counts.back()) / N : 0.0;
  return out;
}

std::optional<std::vector<RestrictedRotationPiece>> detect_restricted_rotation_product(
    const Iet& f) {
  // invariant cuts: breakpoints c with f([0,c)) = [0,c)
  std::vector<Scalar> cuts{sc(0)};
  int r = f.pieces();
  for (int k = 2; k <= r; ++k) {
    Scalar c = f.left(k);
    bool invariant = true;
    for (int j = 1; j < k; ++j)
      if (c < f.right(j) + f.translations()[static_cast<size_t>(j - 1)]) {
        invariant = false;
        break;
      }
    if (invariant) cuts.push_back(c);
  }
  cuts.push_back(sc(1));

  std::vector<RestrictedRotationPiece> pieces;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    Interval J{cuts[i], cuts[i + 1]};
    // restriction of f to J, canonically merged
    std::vector<std::pair<Scalar, Scalar>> sub;  // (left, translation)
    for (int k = 1; k <= r; ++k) {
      if (f.right(k) <= J.left || !(f.left(k) < J.right)) continue;
      Scalar l = f.left(k) < J.left ? J.left : f.left(k);
      if (!sub.empty() && sub.back().second == f.translations()[static_cast<size_t>(k - 1)])
        continue;
      sub.emplace_back(l, f.translations()[static_cast<size_t>(k - 1)]);
    }
    if (sub.size() == 1) {
      if (sub[0].second.sign() != Ordering::Equal) return std::nullopt;
      pieces.push_back({J, Scalar()});
    } else if (sub.size() == 2) {
      const Scalar& t1 = sub[0].second;
      const Scalar& t2 = sub[1].second;
      if (t1.sign() != Ordering::Greater) return std::nullopt;
      if (t1 - t2 != J.right - J.left) return std::nullopt;
      pieces.push_back({J, t1});
    } else {
      return std::nullopt;
    }
  }
  return pieces;
}

PlMap::PlMap(std::vector<Scalar> breakpoints, std::vector<AffinePiece> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.empty() || breakpoints_.size() != pieces_.size())
    throw BadPartition("piecewise affine data size mismatch");
  if (breakpoints_.front().sign() != Ordering::Equal)
    throw BadPartition("first breakpoint must be 0");
  Scalar one = sc(1);
  for (size_t k = 0; k < breakpoints_.size(); ++k) {
    if (k + 1 < breakpoints_.size() && !(breakpoints_[k] < breakpoints_[k + 1]))
      throw BadPartition("breakpoints must be strictly increasing");
    if (!(breakpoints_[k] < one)) throw BadPartition("breakpoints must lie in [0,1)");
    if (pieces_[k].slope <= 0) throw BadPartition("slopes must be positive");
  }
  // image tiling
  size_t r = pieces_.size();
  std::vector<size_t> order(r);
  for (size_t k = 0; k < r; ++k) order[k] = k;
  auto img_left = [&](size_t k) {
    return breakpoints_[k].scaled(pieces_[k].slope) + pieces_[k].offset;
  };
  auto img_right = [&](size_t k) {
    return right(static_cast<int>(k) + 1).scaled(pieces_[k].slope) + pieces_[k].offset;
  };
  std::sort(order.begin(), order.end(),
            [&](size_t i, size_t j) { return img_left(i) < img_left(j); });
  Scalar expect = sc(0);
  for (size_t k = 0; k < r; ++k) {
    if (img_left(order[k]) != expect) throw BadPartition("affine images do not tile [0,1)");
    expect = img_right(order[k]);
  }
  if (expect != one) throw BadPartition("affine images do not tile [0,1)");
}

PlMap PlMap::identity() { return PlMap({sc(0)}, {{Rational(1), Scalar()}}); }

Scalar PlMap::left(int k) const { return breakpoints_[static_cast<size_t>(k - 1)]; }

Scalar PlMap::right(int k) const {
  return static_cast<size_t>(k) < breakpoints_.size() ? breakpoints_[static_cast<size_t>(k)]
                                                      : sc(1);
}

int PlMap::piece_containing(const Scalar& x) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x, ScalarLess{});
  return static_cast<int>(it - breakpoints_.begin());
}

Scalar PlMap::evaluate(const Scalar& x) const {
  if (x.sign() == Ordering::Less || !(x < sc(1)))
    throw OutOfDomain("point outside [0,1): " + x.to_string());
  const AffinePiece& p = pieces_[static_cast<size_t>(piece_containing(x) - 1)];
  return x.scaled(p.slope) + p.offset;
}

PlMap PlMap::inverse() const {
  size_t r = pieces_.size();
  std::vector<std::pair<Scalar, AffinePiece>> img;
  for (size_t k = 0; k < r; ++k) {
    Scalar il = breakpoints_[k].scaled(pieces_[k].slope) + pieces_[k].offset;
    Rational s = Rational(1) / pieces_[k].slope;
    img.emplace_back(std::move(il), AffinePiece{s, -pieces_[k].offset.scaled(s)});
  }
  std::sort(img.begin(), img.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Scalar> breakpoints;
  std::vector<AffinePiece> pieces;
  for (auto& p : img) {
    breakpoints.push_back(std::move(p.first));
    pieces.push_back(std::move(p.second));
  }
  return PlMap(std::move(breakpoints), std::move(pieces));
}

Iet conjugate_by_pl(const Iet& f, const PlMap& R) {
  PlMap rinv = R.inverse();
  Iet finv = inverse(f);
  std::vector<Scalar> cand;
  for (const auto& b : R.breakpoints()) cand.push_back(R.evaluate(b));
  for (const auto& b : f.breakpoints()) cand.push_back(R.evaluate(b));
  for (const auto& b : R.breakpoints()) cand.push_back(R.evaluate(evaluate(finv, b)));
  sort_dedup(cand);
  std::vector<Scalar> translations;
  for (const auto& y : cand) {
    Scalar x = rinv.evaluate(y);
    Scalar fx = evaluate(f, x);
    const Rational& s_in = R.pieces()[static_cast<size_t>(R.piece_containing(x) - 1)].slope;
    const Rational& s_out = R.pieces()[static_cast<size_t>(R.piece_containing(fx) - 1)].slope;
    if (s_in != s_out)
      throw NotAnIet("conjugate has slope " + rational_to_string(s_out / s_in) +
                     " on the piece starting at " + y.to_string());
    translations.push_back(R.evaluate(fx) - y);
  }
  return Iet(std::move(cand), std::move(translations));
}

NormalizedRestrictedRotations normalize_restricted_rotations(const Iet& phi) {
  auto detected = detect_restricted_rotation_product(phi);
  if (!detected)
    throw NotOfThisForm("map is not a product of restricted rotations");
  const auto& rr = *detected;
  int n = static_cast<int>(rr.size());
  std::vector<Scalar> breakpoints;
  std::vector<AffinePiece> plpieces;
  std::vector<CircleValue> alpha;
  for (int i = 0; i < n; ++i) {
    Scalar len = rr[static_cast<size_t>(i)].support.right - rr[static_cast<size_t>(i)].support.left;
    if (!len.is_rational())
      throw NotOfThisForm("piece starting at " +
                          rr[static_cast<size_t>(i)].support.left.to_string() +
                          " has irrational length; the normalizing slope is not rational");
    Rational slope = Rational(1, n) / len.constant();
    Scalar offset = sc(Rational(i, n)) - rr[static_cast<size_t>(i)].support.left.scaled(slope);
    breakpoints.push_back(rr[static_cast<size_t>(i)].support.left);
    plpieces.push_back({slope, offset});
    alpha.push_back(reduce_mod(rr[static_cast<size_t>(i)].angle.scaled(slope), Rational(1, n)));
  }
  PlMap R(std::move(breakpoints), std::move(plpieces));
  GnElement F(std::move(alpha), Permutation::identity(n));
  if (conjugate_by_pl(phi, R) != to_iet(F))
    throw InternalVerificationFailed("normalized conjugate does not recompose");
  return {std::move(R), std::move(F)};
}

Iet to_iet(const GnElement& f) {
  int n = f.n();
  std::vector<Scalar> breakpoints, translations;
  for (int i = 1; i <= n; ++i) {
    Scalar base = sc(Rational(i - 1, n));
    Scalar shift = sc(Rational(f.sigma()(i) - i, n));
    const Scalar& a = f.alpha(i).representative();
    if (a.sign() == Ordering::Equal) {
      breakpoints.push_back(base);
      translations.push_back(shift);
    } else {
      breakpoints.push_back(base);
      translations.push_back(a + shift);
      breakpoints.push_back(base + sc(Rational(1, n)) - a);
      translations.push_back(a - sc(Rational(1, n)) + shift);
    }
  }
  return Iet(std::move(breakpoints), std::move(translations));
}

GnElement from_iet(const Iet& g, int n) {
  if (n < 1) throw NotInGn("block count must be positive");
  std::vector<int> img(static_cast<size_t>(n));
  std::vector<CircleValue> alpha;
  for (int i = 1; i <= n; ++i) {
    Scalar x0 = sc(Rational(i - 1, n));
    Scalar y0 = evaluate(g, x0);
    int j = 1;
    while (j < n && !(y0 < sc(Rational(j, n)))) ++j;
    img[static_cast<size_t>(i - 1)] = j;
    alpha.push_back(reduce_mod(y0 - x0 - sc(Rational(j - i, n)), Rational(1, n)));
  }
  Permutation sigma;
  try {
    sigma = Permutation(img);
  } catch (const Error&) {
    throw NotInGn("blocks are not matched bijectively");
  }
  GnElement f(std::move(alpha), std::move(sigma));
  if (to_iet(f) != g) {
    for (int i = 1; i <= n; ++i) {
      Iet model = to_iet(f);
      Scalar probe = sc(Rational(2 * i - 1, 2 * n));  // block midpoint
      if (evaluate(model, probe) != evaluate(g, probe))
        throw NotInGn("restriction to block " + std::to_string(i) +
                      " is not a one-discontinuity exchange");
    }
    throw NotInGn("map does not preserve the block partition");
  }
  return f;
}

}  // namespace ietlab
