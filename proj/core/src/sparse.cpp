#include "cyclix/sparse.hpp"

#include <algorithm>

namespace cyclix {

Rational get(const SparseVec& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  if (it != v.end() && it->index == index) return it->value;
  return Rational(0);
}

void axpy(SparseVec& y, const Rational& a, const SparseVec& x, const ScalarDomain& dom) {
  if (a.is_zero() || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->index < ix->index)) {
      out.push_back(std::move(*iy));
      ++iy;
    } else if (iy == y.end() || ix->index < iy->index) {
      out.push_back({ix->index, dom.mul(a, ix->value)});
      ++ix;
    } else {
      Rational sum = dom.add(iy->value, dom.mul(a, ix->value));
      if (!sum.is_zero()) out.push_back({iy->index, std::move(sum)});
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

SparseVec scaled(const SparseVec& v, const Rational& a, const ScalarDomain& dom) {
  SparseVec out;
  if (a.is_zero()) return out;
  out.reserve(v.size());
  for (const auto& e : v) {
    Rational value = dom.mul(a, e.value);
    if (!value.is_zero()) out.push_back({e.index, std::move(value)});
  }
  return out;
}

SparseVec canonicalize(std::vector<Entry> raw, const ScalarDomain& dom) {
  std::sort(raw.begin(), raw.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVec out;
  out.reserve(raw.size());
  for (auto& e : raw) {
    if (!out.empty() && out.back().index == e.index) {
      out.back().value += e.value;
    } else {
      out.push_back(std::move(e));
    }
  }
  SparseVec cleaned;
  cleaned.reserve(out.size());
  for (auto& e : out) {
    Rational value = dom.reduce(e.value);
    if (!value.is_zero()) cleaned.push_back({e.index, std::move(value)});
  }
  return cleaned;
}

SparseVec unit_vector(std::size_t index) { return SparseVec{{index, Rational(1)}}; }

void Accumulator::add(std::size_t index, const Rational& value) {
  if (!touched_flag_[index]) {
    touched_flag_[index] = 1;
    touched_.push_back(index);
    values_[index] = value;
  } else {
    values_[index] += value;
  }
}

void Accumulator::add_scaled(const SparseVec& v, const Rational& a) {
  if (a.is_zero()) return;
  if (a.is_one()) {
    for (const auto& e : v) add(e.index, e.value);
  } else {
    for (const auto& e : v) add(e.index, a * e.value);
  }
}

SparseVec Accumulator::take(const ScalarDomain& dom) {
  std::sort(touched_.begin(), touched_.end());
  SparseVec out;
  out.reserve(touched_.size());
  for (std::size_t i : touched_) {
    Rational value = dom.reduce(values_[i]);
    if (!value.is_zero()) out.push_back({i, std::move(value)});
    values_[i] = Rational(0);
    touched_flag_[i] = 0;
  }
  touched_.clear();
  return out;
}

}  // namespace cyclix
