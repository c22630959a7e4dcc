#include "cantor/natset.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iterator>
#include <string>

#include "cantor/error.hpp"

namespace cantor {

NatSet::NatSet(std::initializer_list<Nat> values) : NatSet(std::vector<Nat>(values)) {}

NatSet::NatSet(std::vector<Nat> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool NatSet::contains(Nat k) const {
  return std::binary_search(values_.begin(), values_.end(), k);
}

void NatSet::insert(Nat k) {
  auto it = std::lower_bound(values_.begin(), values_.end(), k);
  if (it == values_.end() || *it != k) values_.insert(it, k);
}

std::size_t NatSet::count_below(Nat bound) const {
  return static_cast<std::size_t>(
      std::lower_bound(values_.begin(), values_.end(), bound) - values_.begin());
}

NatSet NatSet::restrict(Nat lo, Nat hi) const {
  NatSet out;
  if (lo >= hi) return out;
  auto first = std::lower_bound(values_.begin(), values_.end(), lo);
  auto last = std::lower_bound(first, values_.end(), hi);
  out.values_.assign(first, last);
  return out;
}

NatSet NatSet::at_least(Nat lo) const {
  NatSet out;
  out.values_.assign(std::lower_bound(values_.begin(), values_.end(), lo), values_.end());
  return out;
}

bool NatSet::subset_of(const NatSet& other) const {
  return std::includes(other.values_.begin(), other.values_.end(), values_.begin(),
                       values_.end());
}

std::optional<Nat> NatSet::max() const {
  if (values_.empty()) return std::nullopt;
  return values_.back();
}

NatSet set_union(const NatSet& a, const NatSet& b) {
  std::vector<Nat> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return NatSet(std::move(out));
}

NatSet set_difference(const NatSet& a, const NatSet& b) {
  std::vector<Nat> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return NatSet(std::move(out));
}

NatSet set_intersection(const NatSet& a, const NatSet& b) {
  std::vector<Nat> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return NatSet(std::move(out));
}

NatSet shift_set(const NatSet& a, Nat n) {
  std::vector<Nat> out;
  out.reserve(a.size());
  for (Nat k : a) out.push_back(k + n);
  return NatSet(std::move(out));
}

NatSet unshift_set(const NatSet& a, Nat n) {
  std::vector<Nat> out;
  for (Nat k : a) {
    if (k >= n) out.push_back(k - n);
  }
  return NatSet(std::move(out));
}

SubsetReport eventually_subset(const NatSet& a, const NatSet& b, Nat horizon) {
  auto check = [horizon](const NatSet& s, const char* name) {
    if (auto m = s.max(); m && *m >= horizon) {
      throw InvalidInput(std::string("eventually_subset: element of ") + name +
                         " at or above horizon " + std::to_string(horizon));
    }
  };
  check(a, "a");
  check(b, "b");

  SubsetReport report;
  NatSet excess = set_difference(a, b);
  report.excess = excess.size();
  report.threshold = excess.empty() ? 0 : *excess.max() + 1;
  if (excess.empty() || report.threshold < horizon) {
    report.certificate = EventualCertificate{report.threshold, horizon};
  }
  return report;
}

Nat isqrt(Nat n) {
  auto r = static_cast<Nat>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while (r + 1 <= n / (r + 1)) ++r;
  return r;
}

Nat floor_log2(Nat n) {
  if (n == 0) throw InvalidInput("floor_log2: argument must be positive");
  return static_cast<Nat>(std::bit_width(n)) - 1;
}

}  // namespace cantor
