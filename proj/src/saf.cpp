#include "ietlab/saf.hpp"

#include "ietlab/errors.hpp"

#include <algorithm>

namespace ietlab {

namespace {

// coefficient vector of a scalar over the basis (1, s_1, ..., s_m)
std::vector<std::pair<int, Rational>> coeff_vector(const Scalar& s) {
  std::vector<std::pair<int, Rational>> v;
  if (s.constant() != 0) v.emplace_back(0, s.constant());
  for (const auto& [idx, q] : s.coefficients()) v.emplace_back(idx + 1, q);
  return v;
}

}  // namespace

void SafTensor::add_entry(int i, int j, const Rational& q) {
  if (q == 0) return;
  auto key = std::make_pair(i, j);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(key, q);
  } else {
    it->second += q;
    if (it->second == 0) entries_.erase(it);
  }
}

void SafTensor::adopt_labels(const Scalar& s) {
  if (!labels_) labels_ = s.table_storage();
}

SafTensor SafTensor::outer(const Scalar& a, const Scalar& b) {
  SafTensor t;
  t.adopt_labels(a);
  t.adopt_labels(b);
  for (const auto& [i, qa] : coeff_vector(a))
    for (const auto& [j, qb] : coeff_vector(b)) t.add_entry(i, j, qa * qb);
  return t;
}

SafTensor SafTensor::wedge(const Scalar& a, const Scalar& b) {
  return outer(a, b) - outer(b, a);
}

SafTensor SafTensor::operator+(const SafTensor& o) const {
  SafTensor t = *this;
  if (!t.labels_) t.labels_ = o.labels_;
  for (const auto& [key, q] : o.entries_) t.add_entry(key.first, key.second, q);
  return t;
}

SafTensor SafTensor::operator-() const {
  SafTensor t = *this;
  for (auto& [key, q] : t.entries_) q = -q;
  return t;
}

SafTensor SafTensor::scaled(const Rational& q) const {
  SafTensor t;
  t.labels_ = labels_;
  if (q == 0) return t;
  t.entries_ = entries_;
  for (auto& [key, v] : t.entries_) v *= q;
  return t;
}

int SafTensor::basis_size() const {
  int m = 0;
  for (const auto& [key, q] : entries_)
    m = std::max({m, key.first, key.second});
  return m + 1;
}

std::vector<std::tuple<int, int, Rational>> SafTensor::triples() const {
  std::vector<std::tuple<int, int, Rational>> out;
  out.reserve(entries_.size());
  for (const auto& [key, q] : entries_) out.emplace_back(key.first, key.second, q);
  return out;
}

SafTensor saf(const Iet& f) {
  SafTensor t;
  for (int k = 1; k <= f.pieces(); ++k)
    t += SafTensor::outer(f.right(k) - f.left(k), f.translations()[static_cast<size_t>(k - 1)]);
  return t;
}

SafTensor wedge_normal_form(const SafTensor& t) {
  SafTensor w;
  w.labels_ = t.labels_;
  for (const auto& [key, q] : t.entries_) {
    auto [i, j] = key;
    if (i == j) throw NotAntisymmetric("nonzero diagonal entry in tensor");
    auto mirror = t.entries_.find(std::make_pair(j, i));
    if (mirror == t.entries_.end() || mirror->second != -q)
      throw NotAntisymmetric("symmetric part of tensor does not vanish");
    if (i < j) w.entries_.emplace(key, q);
  }
  return w;
}

std::string SafTensor::to_string() const {
  if (entries_.empty()) return "0";
  const SafTensor* src = this;
  SafTensor normal;
  const char* op = "(x)";
  try {
    normal = wedge_normal_form(*this);
    src = &normal;
    op = "/\\";
  } catch (const NotAntisymmetric&) {
  }
  auto label = [&](int i) -> std::string {
    if (i == 0) return "1";
    if (labels_ && i - 1 < static_cast<int>(labels_->size()))
      return (*labels_)[static_cast<size_t>(i - 1)].name;
    return "s" + std::to_string(i);
  };
  std::string out;
  for (const auto& [key, q] : src->entries_) {
    Rational mag = q < 0 ? Rational(-q) : q;
    if (out.empty()) {
      if (q < 0) out += "-";
    } else {
      out += q < 0 ? " - " : " + ";
    }
    out += rational_to_string(mag) + " * (" + label(key.first) + op + label(key.second) + ")";
  }
  return out;
}

}  // namespace ietlab
