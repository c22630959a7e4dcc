#include "cantor/pipelines.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cantor/codec.hpp"
#include "cantor/error.hpp"
#include "cantor/rapidity.hpp"

namespace cantor {

PartitioningPrefix partreal(const NatSeq& d) { return make_partition(d); }

ClipResult clip_to_bound(const NatSeq& f, const NatSeq& d) {
  if (f.size() != d.size()) {
    throw AlignmentError("clip_to_bound: sequence length " + std::to_string(f.size()) +
                         " vs bound length " + std::to_string(d.size()));
  }
  std::size_t j = f.size();
  while (j > 0 && f[j - 1] <= d[j - 1]) --j;
  if (!f.empty() && j == f.size()) {
    throw NotDominated("clip_to_bound: f exceeds the bound at the last index " +
                       std::to_string(f.size() - 1));
  }
  ClipResult out{f, j};
  for (std::size_t n = 0; n < j; ++n) {
    if (f[n] > d[n]) out.clipped[n] = 0;
  }
  return out;
}

NatSeq dominate_family(std::span<const NatSeq> family) {
  if (family.empty()) throw InvalidInput("dominate_family: empty family");
  NatSeq d(family.front().size(), 0);
  for (const NatSeq& f : family) {
    if (f.size() != d.size()) throw InvalidInput("dominate_family: sequences of mixed lengths");
    for (std::size_t n = 0; n < f.size(); ++n) d[n] = std::max(d[n], f[n]);
  }
  for (Nat& v : d) {
    if (v == std::numeric_limits<Nat>::max()) throw RangeError("dominate_family: overflow");
    ++v;
  }
  return d;
}

EncodedFamily encode_family(std::span<const NatSeq> family) {
  return encode_family(family, dominate_family(family));
}

EncodedFamily encode_family(std::span<const NatSeq> family, const NatSeq& bound) {
  if (family.empty()) throw InvalidInput("encode_family: empty family");
  EncodedFamily out{bound, partreal(bound), {}, {}, {}, 0};
  out.clipped.reserve(family.size());
  out.points.reserve(family.size());
  for (const NatSeq& f : family) {
    out.clipped.push_back(clip_to_bound(f, bound));
    out.points.push_back(decode_seq(out.clipped.back().clipped, out.partition));
    out.image.insert(out.points.back());
  }
  out.collisions = family.size() - out.image.size();
  return out;
}

PullReport pull_capture_through_encoding(const EncodedFamily& encoded, const Slalom& s) {
  PullReport report;
  report.per_sequence.reserve(encoded.points.size());
  for (std::size_t i = 0; i < encoded.points.size(); ++i) {
    PulledCapture pulled;
    pulled.clip_threshold = encoded.clipped[i].threshold;
    const NatSeq image = encode_point(encoded.points[i], encoded.partition);
    if (auto cert = goes_through_seq(image, s)) {
      pulled.capture_threshold = cert->threshold;
      pulled.threshold = std::max(pulled.clip_threshold, cert->threshold);
    } else {
      report.failures.push_back(i);
    }
    report.per_sequence.push_back(pulled);
  }
  return report;
}

PullReport pull_capture_through_encoding(std::span<const NatSeq> family, const Slalom& s) {
  return pull_capture_through_encoding(encode_family(family), s);
}

SlalomCatalog SlalomCatalog::build(std::vector<NatSeq> bounds,
                                   std::vector<CatalogSource> sources) {
  SlalomCatalog catalog;
  catalog.partitions_.reserve(bounds.size());
  for (const NatSeq& d : bounds) catalog.partitions_.push_back(partreal(d));
  catalog.bounds_ = std::move(bounds);

  for (std::size_t i = 0; i < sources.size(); ++i) {
    const CatalogSource& src = sources[i];
    if (src.bound >= catalog.bounds_.size()) {
      throw InvalidInput("catalog source " + std::to_string(i) + " names bound " +
                         std::to_string(src.bound) + " which does not exist");
    }
    if (!(src.slalom.partition == catalog.partitions_[src.bound])) {
      throw AlignmentError("catalog source " + std::to_string(i) +
                           " uses a partition other than partreal of its bound");
    }
    if (!capture_set(src.points, src.slalom).all_captured()) {
      throw HypothesisFailure(
          "catalog source " + std::to_string(i) + " does not capture its points", i);
    }
    Slalom s = binary_to_slalom(src.slalom);
    auto same = std::find_if(catalog.entries_.begin(), catalog.entries_.end(),
                             [&](const CatalogEntry& e) { return e.slalom.cells == s.cells; });
    if (same != catalog.entries_.end()) {
      catalog.entry_of_source_.push_back(
          static_cast<std::size_t>(same - catalog.entries_.begin()));
    } else {
      catalog.entry_of_source_.push_back(catalog.entries_.size());
      catalog.entries_.push_back({std::move(s), i, src.family, src.bound});
    }
  }
  catalog.sources_ = std::move(sources);
  return catalog;
}

CatalogLookup SlalomCatalog::lookup(const NatSeq& f) const {
  bool dominated = false;
  for (std::size_t j = 0; j < bounds_.size(); ++j) {
    if (bounds_[j].size() != f.size()) continue;
    ClipResult clip;
    try {
      clip = clip_to_bound(f, bounds_[j]);
    } catch (const NotDominated&) {
      continue;
    }
    dominated = true;
    const Word point = decode_seq(clip.clipped, partitions_[j]);
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      const CatalogSource& src = sources_[i];
      if (src.bound != j || !src.points.contains(point)) continue;
      auto capture = goes_through_point(point, src.slalom);
      CatalogHit hit;
      hit.bound = j;
      hit.clip_threshold = clip.threshold;
      hit.source = i;
      hit.family = src.family;
      hit.capture_threshold = capture->threshold;
      hit.entry = entry_of_source_[i];
      hit.certificate = {std::max(clip.threshold, capture->threshold), f.size()};
      return hit;
    }
  }
  if (!dominated) {
    return CatalogMiss{CatalogMiss::Reason::kNotDominated,
                       "no bound dominates the sequence from some index on"};
  }
  return CatalogMiss{CatalogMiss::Reason::kNoFamily,
                     "the decoded point lies in no family of a dominating bound"};
}

SigmaUnion sigma_union_witness(std::span<const NatSet> witnesses, const NatSeq& f) {
  for (std::size_t n = 1; n < f.size(); ++n) {
    if (f[n] <= f[n - 1]) {
      throw InvalidTarget("target not strictly increasing at index " + std::to_string(n));
    }
  }
  if (witnesses.size() < f.size()) {
    throw InvalidInput("sigma_union_witness: " + std::to_string(witnesses.size()) +
                       " witnesses for a target of length " + std::to_string(f.size()));
  }
  SigmaUnion out;
  const std::size_t len = f.size();
  out.tails.reserve(len);
  for (std::size_t n = 0; n < len; ++n) {
    out.tails.push_back(witnesses[n].at_least(f[n]));
    out.united = set_union(out.united, out.tails.back());
  }

  out.square_bound_applies = true;
  for (std::size_t m = 0; m < len && out.square_bound_applies; ++m) {
    out.square_bound_applies =
        check_rapidity_witness(witnesses[m], f, WidthFunction::identity()).ok();
  }
  for (std::size_t n = 0; n < len; ++n) {
    out.counts.push_back(out.united.count_below(f[n]));
    std::size_t sum = 0;
    for (std::size_t m = 0; m < n; ++m) sum += witnesses[m].count_below(f[n]);
    out.sum_bounds.push_back(sum);
    if (out.square_bound_applies && !out.square_bound_violation &&
        out.counts[n] > Nat{n} * n) {
      out.square_bound_violation = n;
    }
  }
  return out;
}

PairUnionVerdict pair_union_bound(const NatSet& a, const NatSet& b, const NatSeq& f,
                                  const WidthFunction& phi) {
  PairUnionVerdict verdict;
  verdict.hypotheses_hold =
      check_rapidity_witness(a, f, phi).ok() && check_rapidity_witness(b, f, phi).ok();
  const NatSet both = set_union(a, b);
  for (std::size_t n = 0; n < f.size(); ++n) {
    verdict.counts.push_back(both.count_below(f[n]));
    if (verdict.hypotheses_hold && !verdict.violation && verdict.counts[n] > 2 * phi(n)) {
      verdict.violation = n;
    }
  }
  return verdict;
}

FailureCorrespondence compare_capture_failures(const WordSet& points,
                                               const PartitioningPrefix& d,
                                               std::span<const BinarySlalom> pool) {
  FailureCorrespondence out;
  for (const BinarySlalom& b : pool) {
    if (!(b.partition == d)) {
      throw AlignmentError("compare_capture_failures: pool slalom on a different partition");
    }
    out.binary_failures.push_back(capture_set(points, b).failures);
    const Slalom s = binary_to_slalom(b);
    std::vector<Word> escaped;
    for (const Word& x : points) {
      if (!goes_through_seq(encode_point(x, d), s)) escaped.push_back(x);
    }
    out.sequence_failures.push_back(std::move(escaped));
    out.matches = out.matches && out.binary_failures.back() == out.sequence_failures.back();
    out.escapes_pool = out.escapes_pool && !out.binary_failures.back().empty() &&
                       !out.sequence_failures.back().empty();
  }
  return out;
}

}  // namespace cantor
