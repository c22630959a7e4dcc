#include "cantor/slalom.hpp"

#include <string>

#include "cantor/error.hpp"

namespace cantor {

WidthFunction WidthFunction::identity() {
  return {"identity", [](Nat n) { return n; }};
}

WidthFunction WidthFunction::floor_sqrt() {
  return {"sqrt", [](Nat n) { return isqrt(n); }};
}

WidthFunction WidthFunction::constant(Nat c) {
  return {"constant:" + std::to_string(c), [c](Nat) { return c; }};
}

WidthFunction WidthFunction::pair_count() {
  return {"pairs", [](Nat n) { return n == 0 ? 0 : n * (n - 1) / 2; }};
}

WidthFunction WidthFunction::chi() {
  return {"chi", [](Nat n) -> Nat { return n <= 1 ? 0 : floor_log2(isqrt(n - 1)); }};
}

WidthFunction WidthFunction::table(std::vector<Nat> values) {
  return {"table", [values = std::move(values)](Nat n) {
            if (n >= values.size()) {
              throw InvalidInput("width table has no entry for index " + std::to_string(n));
            }
            return values[n];
          }};
}

WidthFunction WidthFunction::doubled(const WidthFunction& base) {
  return {"2*" + base.name(), [base](Nat n) { return 2 * base(n); }};
}

WidthVerdict check_width(const Slalom& s) {
  for (std::size_t n = 0; n < s.cells.size(); ++n) {
    if (s.cells[n].size() > s.width(n)) {
      return {n, "cell " + std::to_string(n) + " has " + std::to_string(s.cells[n].size()) +
                     " elements, width allows " + std::to_string(s.width(n))};
    }
  }
  return {};
}

WidthVerdict check_width(const BinarySlalom& s) {
  const std::size_t intervals = s.partition.intervals();
  for (std::size_t n = 0; n < s.cells.size(); ++n) {
    if (n >= intervals) {
      return {n, "cell " + std::to_string(n) + " lies beyond the partition's " +
                     std::to_string(intervals) + " intervals"};
    }
    if (s.cells[n].size() > s.width(n)) {
      return {n, "cell " + std::to_string(n) + " has " + std::to_string(s.cells[n].size()) +
                     " words, width allows " + std::to_string(s.width(n))};
    }
    for (const Word& w : s.cells[n]) {
      if (w.size() != s.partition.length(n)) {
        return {n, "cell " + std::to_string(n) + " holds '" + w.to_string() +
                       "' but the interval has length " +
                       std::to_string(s.partition.length(n))};
      }
    }
  }
  return {};
}

std::optional<CaptureCertificate> goes_through_seq(const NatSeq& f, const Slalom& s) {
  const std::size_t horizon = f.size();
  if (s.cells.size() < horizon) {
    throw AlignmentError("slalom has " + std::to_string(s.cells.size()) +
                         " cells, sequence has length " + std::to_string(horizon));
  }
  std::size_t k = horizon;
  while (k > 0 && s.cells[k - 1].contains(f[k - 1])) --k;
  if (k == horizon) return std::nullopt;
  return CaptureCertificate{k, horizon};
}

std::optional<CaptureCertificate> goes_through_point(const Word& x, const BinarySlalom& b) {
  const PartitioningPrefix& d = b.partition;
  const std::size_t horizon = d.intervals();
  if (x.size() != d.horizon()) {
    throw AlignmentError("point of length " + std::to_string(x.size()) +
                         " against partition of horizon " + std::to_string(d.horizon()));
  }
  if (b.cells.size() < horizon) {
    throw AlignmentError("binary slalom has fewer cells than the partition has intervals");
  }
  std::size_t k = horizon;
  while (k > 0 && b.cells[k - 1].contains(x.slice(d.begin(k - 1), d.end(k - 1)))) --k;
  if (k == horizon) return std::nullopt;
  return CaptureCertificate{k, horizon};
}

CaptureReport capture_set(const WordSet& points, const BinarySlalom& b) {
  CaptureReport report;
  for (const Word& x : points) {
    if (auto cert = goes_through_point(x, b)) {
      report.certificates.emplace(x, *cert);
    } else {
      report.failures.push_back(x);
    }
  }
  return report;
}

}  // namespace cantor
