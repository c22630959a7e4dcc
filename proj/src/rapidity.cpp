#include "cantor/rapidity.hpp"

#include <string>

#include "cantor/error.hpp"

namespace cantor {

namespace {

void require_strictly_increasing(const NatSeq& f) {
  for (std::size_t n = 1; n < f.size(); ++n) {
    if (f[n] <= f[n - 1]) {
      throw InvalidTarget("target not strictly increasing at index " + std::to_string(n));
    }
  }
}

}  // namespace

RapidityVerdict check_rapidity_witness(const NatSet& a, const NatSeq& f,
                                       const WidthFunction& phi) {
  require_strictly_increasing(f);
  RapidityVerdict verdict;
  verdict.counts.reserve(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    verdict.counts.push_back(a.count_below(f[n]));
    if (!verdict.violation && verdict.counts.back() > phi(n)) verdict.violation = n;
  }
  return verdict;
}

NatSeq reparam_target(const NatSeq& f, const WidthFunction& phi, Nat max_index) {
  require_strictly_increasing(f);
  if (f.empty()) throw InvalidInput("reparam_target: empty target");
  if (phi(0) != 0) throw InvalidInput("reparam_target: width must satisfy phi(0) = 0");

  std::vector<Nat> values(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    values[k] = phi(k);
    if (k > 0 && values[k] < values[k - 1]) {
      throw InvalidInput("reparam_target: width decreases at index " + std::to_string(k));
    }
  }
  if (values.back() <= max_index) {
    if (values.back() == values.front()) {
      throw InvalidInput("reparam_target: width '" + phi.name() +
                         "' is bounded on the target's domain");
    }
    throw InvalidInput("reparam_target: target too short to determine max N_" +
                       std::to_string(max_index));
  }

  // N_m = {k | φ(k) ≤ m} is an initial segment; scan its right end once.
  NatSeq g;
  g.reserve(max_index + 1);
  std::size_t first_above = 0;
  for (Nat m = 0; m <= max_index; ++m) {
    while (values[first_above] <= m) ++first_above;
    g.push_back(f[first_above - 1]);
  }
  return g;
}

Nat chi(Nat n) { return n <= 1 ? 0 : floor_log2(isqrt(n - 1)); }

Nat capture_bound(std::size_t piece, PieceSchedule schedule) {
  const Nat n = piece;
  return schedule == PieceSchedule::kSquareBelow ? n * n + 1 : (n + 1) * (n + 1);
}

BinarySlalom slalom_from_cover(const CoverFamily& cover, const NatSet& a,
                               const PartitioningPrefix& d, PieceSchedule schedule) {
  require_aligned(cover, d.horizon());

  for (std::size_t n = 0; n < cover.pieces.size(); ++n) {
    NatSet splits = split_set(cover.pieces[n]);
    NatSet missing = set_difference(splits, a);
    if (!missing.empty()) {
      throw HypothesisFailure("witness misses splitting point " + std::to_string(missing[0]) +
                                  " of cover piece " + std::to_string(n),
                              n);
    }
  }
  for (std::size_t n = 0; n <= d.intervals(); ++n) {
    const std::size_t count = a.count_below(d.point(n));
    if (count > chi(n)) {
      throw HypothesisFailure("|a ∩ d(" + std::to_string(n) + ")| = " + std::to_string(count) +
                                  " exceeds chi(" + std::to_string(n) +
                                  ") = " + std::to_string(chi(n)),
                              n);
    }
  }

  BinarySlalom b{d, std::vector<WordSet>(d.intervals()), WidthFunction::identity()};
  for (std::size_t m = 1; m < d.intervals(); ++m) {
    for (std::size_t n = 0; n < cover.pieces.size(); ++n) {
      const bool selected = schedule == PieceSchedule::kSquareBelow
                                ? Nat{n} * n < m
                                : Nat{n} < isqrt(m);
      if (!selected) break;
      for (const Word& x : cover.pieces[n]) b.cells[m].insert(x.slice(d.begin(m), d.end(m)));
    }
  }
  return b;
}

bool SlalomCoverRecipe::contains(std::size_t k, const Word& s, const Word& x) const {
  const PartitioningPrefix& d = slalom_.partition;
  if (k > d.intervals() || s.size() != d.point(k) || x.size() != d.horizon()) return false;
  if (!x.starts_with(s)) return false;
  for (std::size_t n = k; n < d.intervals(); ++n) {
    if (!slalom_.cells[n].contains(x.slice(d.begin(n), d.end(n)))) return false;
  }
  return true;
}

WordSet SlalomCoverRecipe::enumerate(std::size_t k, const Word& s, std::size_t cap) const {
  const PartitioningPrefix& d = slalom_.partition;
  if (k > d.intervals() || s.size() != d.point(k)) {
    throw InvalidInput("piece prefix must have length d(k)");
  }
  WordSet current{s};
  for (std::size_t n = k; n < d.intervals(); ++n) {
    const WordSet& cell = slalom_.cells[n];
    if (current.size() * cell.size() > cap) {
      throw ResourceError("piece Y_{" + std::to_string(k) + ",s} has more than " +
                          std::to_string(cap) + " members");
    }
    WordSet next;
    for (const Word& prefix : current) {
      for (const Word& slice : cell) next.insert(prefix + slice);
    }
    current = std::move(next);
  }
  return current;
}

SlalomWitness witness_from_binary_slalom(const BinarySlalom& b) {
  BinarySlalom identity_view{b.partition, b.cells, WidthFunction::identity()};
  if (WidthVerdict v = check_width(identity_view); !v.ok()) {
    throw WidthViolation("witness_from_binary_slalom: " + v.reason, *v.violation);
  }
  const PartitioningPrefix& d = b.partition;
  NatSet witness;
  for (std::size_t m = 0; m < b.cells.size(); ++m) {
    witness = set_union(witness, shift_set(split_set(b.cells[m]), d.begin(m)));
  }
  std::vector<std::size_t> counts;
  counts.reserve(d.intervals() + 1);
  for (std::size_t n = 0; n <= d.intervals(); ++n) counts.push_back(witness.count_below(d.point(n)));

  BinarySlalom padded = b;
  padded.cells.resize(d.intervals());
  return {std::move(witness), std::move(counts), SlalomCoverRecipe(std::move(padded))};
}

}  // namespace cantor
