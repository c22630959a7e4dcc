#include "cantor/filter.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cantor/error.hpp"

namespace cantor {

namespace {

std::optional<std::size_t> certificate_length(const FilterCertificate& c) {
  std::optional<std::size_t> length = cover_length(c.cover);
  for (const Word& w : c.subject) {
    if (!length) {
      length = w.size();
    } else if (*length != w.size()) {
      throw AlignmentError("certificate mixes words of length " + std::to_string(*length) +
                           " and " + std::to_string(w.size()));
    }
  }
  return length;
}

}  // namespace

NatSet witness_of_cover(const CoverFamily& cover) {
  cover_length(cover);
  NatSet out;
  for (const WordSet& piece : cover.pieces) out = set_union(out, split_set(piece));
  return out;
}

CertificateVerdict check_certificate(const FilterCertificate& c) {
  CertificateVerdict verdict;
  try {
    certificate_length(c);
  } catch (const AlignmentError& e) {
    verdict.status = CertificateVerdict::Status::kMisaligned;
    verdict.detail = e.what();
    return verdict;
  }
  for (const Word& x : c.subject) {
    bool covered = false;
    for (const WordSet& piece : c.cover.pieces) {
      if (piece.contains(x)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      verdict.status = CertificateVerdict::Status::kUncovered;
      verdict.point = x;
      verdict.detail = "point " + x.to_string() + " lies in no cover piece";
      return verdict;
    }
  }
  for (std::size_t n = 0; n < c.cover.pieces.size(); ++n) {
    NatSet missing = set_difference(split_set(c.cover.pieces[n]), c.witness);
    if (!missing.empty()) {
      verdict.status = CertificateVerdict::Status::kMissingSplit;
      verdict.split = missing[0];
      verdict.piece = n;
      verdict.detail = "splitting point " + std::to_string(missing[0]) + " of piece " +
                       std::to_string(n) + " is not in the witness";
      return verdict;
    }
  }
  return verdict;
}

FilterCertificate union_certificate(std::span<const FilterCertificate> certificates) {
  FilterCertificate out;
  std::optional<std::size_t> length;
  for (const FilterCertificate& c : certificates) {
    auto len = certificate_length(c);
    if (len && length && *len != *length) {
      throw AlignmentError("union_certificate: certificates of horizons " +
                           std::to_string(*length) + " and " + std::to_string(*len));
    }
    if (len) length = len;
    out.subject.insert(c.subject.begin(), c.subject.end());
    out.cover.pieces.insert(out.cover.pieces.end(), c.cover.pieces.begin(),
                            c.cover.pieces.end());
    out.witness = set_union(out.witness, c.witness);
  }
  return out;
}

WordSet powerset_points(const NatSet& a, std::size_t length, std::size_t max_bits) {
  if (auto m = a.max(); m && *m >= length) {
    throw InvalidInput("powerset_points: element " + std::to_string(*m) +
                       " outside length " + std::to_string(length));
  }
  if (a.size() > max_bits) {
    throw ResourceError("powerset_points: 2^" + std::to_string(a.size()) +
                        " points exceed the cap of 2^" + std::to_string(max_bits));
  }
  WordSet out;
  const std::size_t count = std::size_t{1} << a.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    Word w(length);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if ((mask >> i) & 1u) w.set(a[i], true);
    }
    out.insert(std::move(w));
  }
  return out;
}

DiagonalResult diagonalize(const Word& a, const NatSet& aprime, const CoverFamily& cover,
                           std::size_t steps) {
  const std::size_t length = a.size();
  require_aligned(cover, length);
  if (!aprime.subset_of(a.support())) {
    throw InvalidInput("diagonalize: aprime is not contained in the support of a");
  }

  DiagonalResult result;
  result.truncated = steps > aprime.size();
  const std::size_t stages = std::min(steps, aprime.size());

  Word x(length);
  for (std::size_t n = 0; n < stages; ++n) {
    const Nat p = aprime[n];
    const Word prefix = x.prefix(p);

    const Word* with_zero = nullptr;
    const Word* with_one = nullptr;
    if (n < cover.pieces.size()) {
      for (const Word& z : cover.pieces[n]) {
        if (!z.starts_with(prefix)) continue;
        if (z[p] && with_one == nullptr) with_one = &z;
        if (!z[p] && with_zero == nullptr) with_zero = &z;
      }
    }

    DiagonalStage stage{n, p, 0, false};
    if (with_zero != nullptr && with_one != nullptr) {
      result.blocked = BlockedReport{n, p, *with_zero, *with_one};
      result.stages_run = n;
      return result;
    }
    if (with_zero == nullptr && with_one == nullptr) {
      stage.case_taken = 1;
      stage.bit = false;
    } else {
      stage.case_taken = 2;
      stage.bit = with_zero != nullptr;
    }
    x.set(p, stage.bit);
    result.trace.push_back(stage);

    const Nat next = n + 1 < stages ? aprime[n + 1] : length;
    for (Nat k = p + 1; k < next; ++k) x.set(k, a[k]);
  }
  result.stages_run = stages;

  // Re-check the two guarantees before handing the point out.
  for (std::size_t k = 0; k < length; ++k) {
    if (x[k] && !a[k]) throw std::logic_error("diagonalize produced a point outside a");
  }
  for (std::size_t n = 0; n < stages && n < cover.pieces.size(); ++n) {
    const Word stem = x.prefix(aprime[n] + 1);
    for (const Word& z : cover.pieces[n]) {
      if (z.starts_with(stem)) {
        throw std::logic_error("diagonalize produced a point compatible with piece " +
                               std::to_string(n));
      }
    }
  }
  result.point = std::move(x);
  return result;
}

WordSet eventual_closure_cover(const CoverFamily& cover, std::size_t piece, const Word& s,
                               const Word& t, std::size_t length) {
  if (s.size() != t.size()) {
    throw InvalidInput("eventual_closure_cover: |s| = " + std::to_string(s.size()) +
                       " but |t| = " + std::to_string(t.size()));
  }
  if (t.size() > length) throw InvalidInput("eventual_closure_cover: |t| exceeds the horizon");
  if (piece >= cover.pieces.size()) {
    throw InvalidInput("eventual_closure_cover: no piece " + std::to_string(piece));
  }
  require_aligned(cover, length);
  WordSet out;
  for (const Word& y : cover.pieces[piece]) {
    if (y.starts_with(t)) out.insert(s + y.slice(t.size(), length));
  }
  return out;
}

FilterCertificate prepend_cover_transport(const FilterCertificate& c, const Word& s) {
  FilterCertificate out;
  out.subject = prepend_all(s, c.subject);
  out.cover.pieces.reserve(c.cover.pieces.size());
  for (const WordSet& piece : c.cover.pieces) out.cover.pieces.push_back(prepend_all(s, piece));
  out.witness = shift_set(c.witness, s.size());
  return out;
}

FilterCertificate unprepend_cover_transport(const FilterCertificate& c, const Word& s) {
  if (auto length = certificate_length(c); length && s.size() > *length) {
    throw InvalidInput("unprepend_cover_transport: prefix longer than the horizon");
  }
  FilterCertificate out;
  for (const Word& x : c.subject) {
    if (!x.starts_with(s)) {
      throw InvalidInput("unprepend_cover_transport: subject point " + x.to_string() +
                         " does not extend " + s.to_string());
    }
    out.subject.insert(out.subject.end(), x.slice(s.size(), x.size()));
  }
  out.cover.pieces.reserve(c.cover.pieces.size());
  for (const WordSet& piece : c.cover.pieces) {
    WordSet tails;
    for (const Word& y : piece) {
      if (y.starts_with(s)) tails.insert(tails.end(), y.slice(s.size(), y.size()));
    }
    out.cover.pieces.push_back(std::move(tails));
  }
  out.witness = unshift_set(c.witness, s.size());
  return out;
}

std::map<Word, WordSet> shift_decomposition(const WordSet& points, std::size_t n) {
  std::map<Word, WordSet> classes;
  for (const Word& x : points) {
    if (x.size() < n) {
      throw InvalidInput("shift_decomposition: point shorter than prefix length " +
                         std::to_string(n));
    }
    classes[x.prefix(n)].insert(x.slice(n, x.size()));
  }
  return classes;
}

FilterCertificate shift_transport(const WordSet& points, const FilterCertificate& tails,
                                  std::size_t n) {
  std::vector<FilterCertificate> parts;
  for (const auto& [prefix, class_tails] : shift_decomposition(points, n)) {
    for (const Word& t : class_tails) {
      if (!tails.subject.contains(t)) {
        throw InvalidInput("shift_transport: tail " + t.to_string() + " of class " +
                           prefix.to_string() + " is not certified");
      }
    }
    FilterCertificate restricted{class_tails, tails.cover, tails.witness};
    parts.push_back(prepend_cover_transport(restricted, prefix));
  }
  return union_certificate(parts);
}

}  // namespace cantor
