#include "ietlab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ietlab {

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  int n = static_cast<int>(images_.size());
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
      throw Error("image list is not a bijection of {1..n}");
    seen[static_cast<size_t>(v - 1)] = true;
  }
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  for (const auto& cyc : cycles) {
    for (size_t j = 0; j < cyc.size(); ++j) {
      int from = cyc[j], to = cyc[(j + 1) % cyc.size()];
      if (from < 1 || from > n) throw Error("cycle point out of range");
      img[static_cast<size_t>(from - 1)] = to;
    }
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)((*this)(i)) != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 1; i <= size(); ++i) img[static_cast<size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::power(long long k) const {
  long long m = order();
  k %= m;
  if (k < 0) k += m;
  Permutation acc = identity(size()), base = *this;
  while (k > 0) {
    if (k & 1) acc = ietlab::compose(base, acc);
    base = ietlab::compose(base, base);
    k >>= 1;
  }
  return acc;
}

long long Permutation::order() const {
  long long m = 1;
  for (const auto& cyc : cycle_decomposition())
    m = std::lcm(m, static_cast<long long>(cyc.size()));
  return m;
}

std::vector<std::vector<int>> Permutation::cycle_decomposition() const {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 1; i <= size(); ++i) {
    if (seen[static_cast<size_t>(i - 1)]) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[static_cast<size_t>(j - 1)]; j = (*this)(j)) {
      seen[static_cast<size_t>(j - 1)] = true;
      cyc.push_back(j);
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (int i = 1; i <= size(); ++i) {
    if (i > 1) out << ' ';
    out << (*this)(i);
  }
  return out.str();
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  bool any = false;
  for (const auto& cyc : cycle_decomposition()) {
    if (cyc.size() < 2) continue;
    any = true;
    out << '(';
    for (size_t j = 0; j < cyc.size(); ++j) {
      if (j) out << ' ';
      out << cyc[j];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation Permutation::parse(const std::string& text, int n_hint) {
  // Cycle form when it contains '(', else a one-line image list.
  if (text.find('(') != std::string::npos) {
    std::vector<std::vector<int>> cycles;
    int maxpt = n_hint;
    size_t pos = 0;
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
        continue;
      }
      if (c != '(') throw ParseError("expected '(' in permutation: " + text);
      size_t close = text.find(')', pos);
      if (close == std::string::npos) throw ParseError("unbalanced '(' in: " + text);
      std::istringstream in(text.substr(pos + 1, close - pos - 1));
      std::vector<int> cyc;
      int v;
      while (in >> v) {
        cyc.push_back(v);
        maxpt = std::max(maxpt, v);
        if (in.peek() == ',') in.get();
      }
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
      pos = close + 1;
    }
    if (maxpt < 1) throw ParseError("empty permutation: " + text);
    return from_cycles(maxpt, cycles);
  }
  std::istringstream in(text);
  std::vector<int> img;
  int v;
  while (in >> v) img.push_back(v);
  if (img.empty()) throw ParseError("empty permutation: " + text);
  return Permutation(std::move(img));
}

Permutation compose(const Permutation& s, const Permutation& r) {
  if (s.size() != r.size()) throw SizeMismatch("permutation sizes differ");
  std::vector<int> img(static_cast<size_t>(s.size()));
  for (int i = 1; i <= s.size(); ++i) img[static_cast<size_t>(i - 1)] = s(r(i));
  return Permutation(std::move(img));
}

bool is_reverser(const Permutation& tau, const Permutation& sigma) {
  if (tau.size() != sigma.size()) throw SizeMismatch("permutation sizes differ");
  Permutation tinv = tau.inverse(), sinv = sigma.inverse();
  for (int i = 1; i <= sigma.size(); ++i)
    if (tau(sigma(tinv(i))) != sinv(i)) return false;
  return true;
}

Permutation reversing_involution(const Permutation& sigma) {
  std::vector<int> img(static_cast<size_t>(sigma.size()));
  for (const auto& cyc : sigma.cycle_decomposition()) {
    size_t m = cyc.size();
    for (size_t j = 0; j < m; ++j)
      img[static_cast<size_t>(cyc[j] - 1)] = cyc[(m - j) % m];
  }
  return Permutation(std::move(img));
}

namespace {

void involutions_rec(int n, int next, std::vector<int>& img, std::vector<Permutation>& out) {
  while (next <= n && img[static_cast<size_t>(next - 1)] != 0) ++next;
  if (next > n) {
    out.emplace_back(img);
    return;
  }
  // next fixed
  img[static_cast<size_t>(next - 1)] = next;
  involutions_rec(n, next + 1, img, out);
  img[static_cast<size_t>(next - 1)] = 0;
  // next swapped with a later free point
  for (int j = next + 1; j <= n; ++j) {
    if (img[static_cast<size_t>(j - 1)] != 0) continue;
    img[static_cast<size_t>(next - 1)] = j;
    img[static_cast<size_t>(j - 1)] = next;
    involutions_rec(n, next + 1, img, out);
    img[static_cast<size_t>(next - 1)] = 0;
    img[static_cast<size_t>(j - 1)] = 0;
  }
}

}  // namespace

std::vector<Permutation> all_involutions(int n) {
  std::vector<Permutation> out;
  std::vector<int> img(static_cast<size_t>(n), 0);
  involutions_rec(n, 1, img, out);
  std::sort(out.begin(), out.end(),
            [](const Permutation& a, const Permutation& b) { return a.images() < b.images(); });
  return out;
}

}  // namespace ietlab
