#include "cantor/scenario.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>
#include <vector>

#include "cantor/codec.hpp"
#include "cantor/filter.hpp"
#include "cantor/generate.hpp"
#include "cantor/pipelines.hpp"
#include "cantor/rapidity.hpp"

namespace cantor {

using json_io::Json;
using json_io::field;
using json_io::to_json;

namespace {

constexpr std::array<std::pair<ScenarioKind, std::string_view>, 12> kKinds{{
    {ScenarioKind::kRoundtrip, "roundtrip"},
    {ScenarioKind::kCapture, "capture"},
    {ScenarioKind::kRapidity, "rapidity"},
    {ScenarioKind::kBuildSlalom, "build-slalom"},
    {ScenarioKind::kWitnessFromSlalom, "witness-from-slalom"},
    {ScenarioKind::kCertificate, "certificate"},
    {ScenarioKind::kDiagonalize, "diagonalize"},
    {ScenarioKind::kClosure, "closure"},
    {ScenarioKind::kTransport, "transport"},
    {ScenarioKind::kPipeline, "pipeline"},
    {ScenarioKind::kSigmaUnion, "sigma-union"},
    {ScenarioKind::kCatalog, "catalog"},
}};

bool has(const Json& j, const char* key) { return j.is_object() && j.contains(key); }

template <typename T>
Json list(const std::vector<T>& xs) {
  Json out = Json::array();
  for (const T& x : xs) out.push_back(x);
  return out;
}

Json word_list(const std::vector<Word>& xs) {
  Json out = Json::array();
  for (const Word& x : xs) out.push_back(x.to_string());
  return out;
}

Json optional_index(const std::optional<std::size_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

/// Partition given either as points or as interval lengths.
PartitioningPrefix payload_partition(const Json& p) {
  if (has(p, "partition")) return json_io::read_partition(p["partition"], "partition");
  if (has(p, "deltas")) return make_partition(json_io::read_natseq(p["deltas"], "deltas"));
  throw SchemaError("payload needs 'partition' or 'deltas'");
}

WidthFunction payload_width(const Json& p, WidthFunction fallback) {
  return has(p, "width") ? json_io::read_width(p["width"], "width") : std::move(fallback);
}

Json capture_json(const CaptureReport& r, Nat horizon) {
  Json certs = Json::object();
  for (const auto& [x, c] : r.certificates) certs[x.to_string()] = c.threshold;
  return {{"horizon", horizon}, {"certificates", certs}, {"failures", word_list(r.failures)}};
}

// ---- per-kind runners. Each fills `out` and returns the verdict.

bool run_roundtrip(const Json& p, Json& out) {
  const PartitioningPrefix d = payload_partition(p);
  out["partition"] = to_json(d);
  bool ok = true;
  if (has(p, "point")) {
    const Word x = json_io::read_word(p["point"], "point");
    const NatSeq f = encode_point(x, d);
    const Word back = decode_seq(f, d);
    out["encoded"] = to_json(f);
    out["point_roundtrip"] = back == x;
    ok = ok && back == x;
  }
  if (has(p, "sequence")) {
    const NatSeq f = json_io::read_natseq(p["sequence"], "sequence");
    const Word x = decode_seq(f, d);
    const NatSeq back = encode_point(x, d);
    out["decoded"] = to_json(x);
    Json slices = Json::array();
    for (std::size_t n = 0; n < d.intervals(); ++n) {
      slices.push_back(x.slice(d.begin(n), d.end(n)).to_string());
    }
    out["slices"] = slices;
    out["range_bounded"] = range_bounded(f, d);
    out["sequence_roundtrip"] = back == f;
    ok = ok && back == f;
  }
  if (!has(p, "point") && !has(p, "sequence")) {
    throw SchemaError("roundtrip payload needs 'point' or 'sequence'");
  }
  return ok;
}

bool run_capture(const Json& p, Json& out) {
  if (has(p, "sequence")) {
    const NatSeq f = json_io::read_natseq(p["sequence"], "sequence");
    const Slalom s = json_io::read_slalom(field(p, "cells"), payload_width(p, WidthFunction::identity()), "cells");
    const WidthVerdict w = check_width(s);
    const auto cert = goes_through_seq(f, s);
    out["width"] = s.width.name();
    out["width_ok"] = w.ok();
    out["width_violation"] = optional_index(w.violation);
    out["horizon"] = f.size();
    out["threshold"] = cert ? Json(cert->threshold) : Json(nullptr);
    return w.ok() && cert.has_value();
  }
  const PartitioningPrefix d = payload_partition(p);
  const BinarySlalom b = json_io::read_binary_slalom(
      field(p, "cells"), d, payload_width(p, WidthFunction::identity()), "cells");
  const WordSet points = json_io::read_wordset(field(p, "points"), "points");
  const WidthVerdict w = check_width(b);
  const CaptureReport r = capture_set(points, b);
  out["width"] = b.width.name();
  out["width_ok"] = w.ok();
  out["width_violation"] = optional_index(w.violation);
  out["capture"] = capture_json(r, d.intervals());
  // Every certificate must agree with the sequence side.
  const Slalom s = binary_to_slalom(b);
  bool consistent = true;
  for (const auto& [x, c] : r.certificates) {
    auto seq = goes_through_seq(encode_point(x, d), s);
    consistent = consistent && seq && seq->threshold == c.threshold;
  }
  out["revalidated"] = consistent;
  return w.ok() && r.all_captured() && consistent;
}

bool run_rapidity(const Json& p, Json& out) {
  const NatSet a = json_io::read_natset(field(p, "witness"), "witness");
  const NatSeq f = json_io::read_natseq(field(p, "target"), "target");
  const WidthFunction phi = payload_width(p, WidthFunction::identity());
  const RapidityVerdict v = check_rapidity_witness(a, f, phi);
  out["width"] = phi.name();
  out["counts"] = list(v.counts);
  out["violation"] = optional_index(v.violation);
  return v.ok();
}

PieceSchedule payload_schedule(const Json& p) {
  if (!has(p, "schedule")) return PieceSchedule::kSquareBelow;
  const Json& s = p["schedule"];
  if (s == "square-below") return PieceSchedule::kSquareBelow;
  if (s == "below-floor-root") return PieceSchedule::kBelowFloorRoot;
  throw SchemaError("schedule must be 'square-below' or 'below-floor-root'");
}

bool run_build_slalom(const Json& p, Json& out) {
  const PartitioningPrefix d = payload_partition(p);
  const CoverFamily cover = json_io::read_cover(field(p, "pieces"), "pieces");
  const NatSet a = json_io::read_natset(field(p, "witness"), "witness");
  const PieceSchedule schedule = payload_schedule(p);
  const BinarySlalom b = slalom_from_cover(cover, a, d, schedule);
  out["preconditions"] = true;
  out["cells"] = to_json(b);
  const WidthVerdict w = check_width(b);
  out["width_ok"] = w.ok();
  out["width_violation"] = optional_index(w.violation);
  Json pieces = Json::array();
  bool captured = true;
  for (std::size_t n = 0; n < cover.pieces.size(); ++n) {
    const Nat bound = capture_bound(n, schedule);
    const CaptureReport r = capture_set(cover.pieces[n], b);
    bool within = r.all_captured();
    for (const auto& [x, c] : r.certificates) within = within && c.threshold <= bound;
    captured = captured && (within || bound >= d.intervals());
    Json entry = capture_json(r, d.intervals());
    entry["bound"] = bound;
    entry["within_bound"] = within;
    pieces.push_back(entry);
  }
  out["pieces"] = pieces;
  return w.ok() && captured;
}

bool run_witness_from_slalom(const Json& p, Json& out) {
  const PartitioningPrefix d = payload_partition(p);
  const BinarySlalom b =
      json_io::read_binary_slalom(field(p, "cells"), d, WidthFunction::identity(), "cells");
  const SlalomWitness sw = witness_from_binary_slalom(b);
  out["witness"] = to_json(sw.witness);
  out["counts"] = list(sw.counts);
  bool ok = true;
  for (std::size_t n = 0; n < sw.counts.size(); ++n) {
    ok = ok && sw.counts[n] <= WidthFunction::pair_count()(n);
  }
  out["pair_bound_ok"] = ok;
  if (has(p, "points")) {
    const WordSet points = json_io::read_wordset(p["points"], "points");
    const CaptureReport r = capture_set(points, b);
    Json placed = Json::object();
    for (const auto& [x, c] : r.certificates) {
      const bool in = sw.recipe.contains(c.threshold, x.prefix(d.point(c.threshold)), x);
      placed[x.to_string()] = {{"threshold", c.threshold}, {"in_piece", in}};
      ok = ok && in;
    }
    out["points"] = placed;
    out["uncaptured"] = word_list(r.failures);
  }
  return ok;
}

std::string_view status_name(CertificateVerdict::Status s) {
  switch (s) {
    case CertificateVerdict::Status::kValid: return "valid";
    case CertificateVerdict::Status::kUncovered: return "uncovered";
    case CertificateVerdict::Status::kMissingSplit: return "missing-split";
    case CertificateVerdict::Status::kMisaligned: return "misaligned";
  }
  return "unknown";
}

Json verdict_json(const CertificateVerdict& v) {
  Json out = {{"status", status_name(v.status)}};
  if (v.point) out["point"] = v.point->to_string();
  if (v.split) out["split"] = *v.split;
  if (v.piece) out["piece"] = *v.piece;
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

bool run_certificate(const Json& p, Json& out) {
  const FilterCertificate c = json_io::read_certificate(p, "certificate");
  const CertificateVerdict v = check_certificate(c);
  out["verdict"] = verdict_json(v);
  out["least_witness"] = to_json(witness_of_cover(c.cover));
  return v.ok();
}

bool run_diagonalize(const Json& p, Json& out) {
  const Word a = json_io::read_word(field(p, "a"), "a");
  const NatSet aprime = json_io::read_natset(field(p, "aprime"), "aprime");
  const CoverFamily cover = json_io::read_cover(field(p, "pieces"), "pieces");
  const std::size_t steps =
      has(p, "steps") ? json_io::read_nat(p["steps"], "steps") : aprime.size();
  const DiagonalResult r = diagonalize(a, aprime, cover, steps);
  Json trace = Json::array();
  for (const DiagonalStage& s : r.trace) {
    trace.push_back({{"stage", s.stage}, {"position", s.position}, {"case", s.case_taken},
                     {"bit", s.bit ? 1 : 0}});
  }
  out["trace"] = trace;
  out["stages_run"] = r.stages_run;
  out["truncated"] = r.truncated;
  if (r.blocked) {
    out["blocked"] = {{"stage", r.blocked->stage},
                      {"position", r.blocked->position},
                      {"pair", {r.blocked->first.to_string(), r.blocked->second.to_string()}}};
    return false;
  }
  out["point"] = r.point->to_string();
  return true;
}

bool run_closure(const Json& p, Json& out) {
  const CoverFamily cover = json_io::read_cover(field(p, "pieces"), "pieces");
  const std::size_t piece = json_io::read_nat(field(p, "piece"), "piece");
  const Word s = json_io::read_word(field(p, "s"), "s");
  const Word t = json_io::read_word(field(p, "t"), "t");
  const std::size_t length = json_io::read_nat(field(p, "length"), "length");
  require_aligned(cover, length);
  const WordSet z = eventual_closure_cover(cover, piece, s, t, length);
  const NatSet hz = split_set(z);
  const NatSet hy = split_set(cover.pieces.at(piece));
  out["closure"] = to_json(z);
  out["closure_splits"] = to_json(hz);
  out["piece_splits"] = to_json(hy);
  out["contained"] = hz.subset_of(hy);
  return hz.subset_of(hy);
}

bool run_transport(const Json& p, Json& out) {
  const std::string mode = has(p, "mode") ? p["mode"].get<std::string>() : "roundtrip";
  if (mode == "shift") {
    const WordSet points = json_io::read_wordset(field(p, "points"), "points");
    const FilterCertificate tails = json_io::read_certificate(field(p, "tails"), "tails");
    const std::size_t n = json_io::read_nat(field(p, "n"), "n");
    const FilterCertificate c = shift_transport(points, tails, n);
    const CertificateVerdict v = check_certificate(c);
    out["certificate"] = to_json(c);
    out["verdict"] = verdict_json(v);
    out["witness_is_shift"] = c.witness == shift_set(tails.witness, n);
    return v.ok() && c.witness == shift_set(tails.witness, n);
  }
  const FilterCertificate c = json_io::read_certificate(field(p, "certificate"), "certificate");
  const Word s = json_io::read_word(field(p, "prefix"), "prefix");
  if (mode == "prepend") {
    const FilterCertificate t = prepend_cover_transport(c, s);
    const CertificateVerdict v = check_certificate(t);
    out["certificate"] = to_json(t);
    out["verdict"] = verdict_json(v);
    return v.ok();
  }
  if (mode == "unprepend") {
    const FilterCertificate t = unprepend_cover_transport(c, s);
    const CertificateVerdict v = check_certificate(t);
    out["certificate"] = to_json(t);
    out["verdict"] = verdict_json(v);
    return v.ok();
  }
  if (mode == "roundtrip") {
    const FilterCertificate there = prepend_cover_transport(c, s);
    const FilterCertificate back = unprepend_cover_transport(there, s);
    const CertificateVerdict v = check_certificate(there);
    out["prepended"] = to_json(there);
    out["verdict"] = verdict_json(v);
    out["roundtrip"] = back == c;
    return v.ok() == check_certificate(c).ok() && back == c;
  }
  throw SchemaError("transport mode must be prepend, unprepend, roundtrip or shift");
}

std::vector<NatSeq> read_family(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + ": expected an array");
  std::vector<NatSeq> family;
  for (const Json& f : j) family.push_back(json_io::read_natseq(f, what));
  return family;
}

bool run_pipeline(const Json& p, Json& out) {
  const std::vector<NatSeq> family = read_family(field(p, "family"), "family");
  const EncodedFamily enc = has(p, "bound")
                                ? encode_family(family, json_io::read_natseq(p["bound"], "bound"))
                                : encode_family(family);
  Slalom s;
  if (has(p, "cells")) {
    s = json_io::read_slalom(p["cells"], payload_width(p, WidthFunction::identity()), "cells");
  } else {
    // The slalom of all clipped images; wide enough by construction.
    s.width = WidthFunction::constant(family.size());
    s.cells.resize(enc.bound.size());
    for (const ClipResult& c : enc.clipped) {
      for (std::size_t n = 0; n < c.clipped.size(); ++n) s.cells[n].insert(c.clipped[n]);
    }
  }
  const PullReport pulled = pull_capture_through_encoding(enc, s);
  out["bound"] = to_json(enc.bound);
  out["partition"] = to_json(enc.partition);
  out["points"] = word_list(enc.points);
  out["collisions"] = enc.collisions;
  Json per = Json::array();
  for (const PulledCapture& c : pulled.per_sequence) {
    per.push_back({{"clip_threshold", c.clip_threshold},
                   {"capture_threshold", c.capture_threshold ? Json(*c.capture_threshold) : Json(nullptr)},
                   {"threshold", c.threshold ? Json(*c.threshold) : Json(nullptr)}});
  }
  out["captures"] = per;
  out["failures"] = list(pulled.failures);
  return enc.collisions == 0 && pulled.ok();
}

bool run_sigma_union(const Json& p, Json& out) {
  const std::vector<NatSeq> raw = read_family(field(p, "witnesses"), "witnesses");
  std::vector<NatSet> witnesses;
  for (const NatSeq& w : raw) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] <= w[i - 1]) throw SchemaError("witnesses: sets must be strictly increasing");
    }
    witnesses.emplace_back(w);
  }
  const NatSeq f = json_io::read_natseq(field(p, "target"), "target");
  const SigmaUnion u = sigma_union_witness(witnesses, f);
  Json tails = Json::array();
  for (const NatSet& t : u.tails) tails.push_back(to_json(t));
  out["united"] = to_json(u.united);
  out["tails"] = tails;
  out["counts"] = list(u.counts);
  out["sum_bounds"] = list(u.sum_bounds);
  out["square_bound_applies"] = u.square_bound_applies;
  out["square_bound_violation"] = optional_index(u.square_bound_violation);
  return !u.square_bound_violation.has_value();
}

bool run_catalog(const Json& p, Json& out) {
  const std::vector<NatSeq> bounds = read_family(field(p, "bounds"), "bounds");
  const Json& src_json = field(p, "sources");
  if (!src_json.is_array()) throw SchemaError("sources: expected an array");
  std::vector<CatalogSource> sources;
  for (const Json& sj : src_json) {
    CatalogSource src;
    src.family = json_io::read_nat(field(sj, "family"), "family");
    src.bound = json_io::read_nat(field(sj, "bound"), "bound");
    if (src.bound >= bounds.size()) throw SchemaError("source names a missing bound");
    src.points = json_io::read_wordset(field(sj, "points"), "points");
    src.slalom = json_io::read_binary_slalom(field(sj, "cells"), partreal(bounds[src.bound]),
                                             payload_width(sj, WidthFunction::constant(src.points.size())),
                                             "cells");
    sources.push_back(std::move(src));
  }
  const SlalomCatalog catalog = SlalomCatalog::build(bounds, std::move(sources));
  Json entries = Json::array();
  for (const CatalogEntry& e : catalog.entries()) {
    entries.push_back({{"source", e.source}, {"family", e.family}, {"bound", e.bound},
                       {"cells", to_json(e.slalom)}});
  }
  out["entries"] = entries;
  out["duplicates"] = catalog.duplicates();

  bool ok = true;
  Json results = Json::array();
  for (const NatSeq& f : read_family(field(p, "queries"), "queries")) {
    const CatalogLookup r = catalog.lookup(f);
    if (const auto* hit = std::get_if<CatalogHit>(&r)) {
      // Re-validate the chain: clip against the bound, then capture by the entry.
      const ClipResult clip = clip_to_bound(f, catalog.bounds()[hit->bound]);
      const Slalom& s = catalog.entries()[hit->entry].slalom;
      const auto cert = goes_through_seq(clip.clipped, s);
      const bool valid = clip.threshold == hit->clip_threshold && cert &&
                         cert->threshold <= hit->capture_threshold &&
                         hit->certificate.threshold >= std::max(clip.threshold, cert->threshold);
      ok = ok && valid;
      results.push_back({{"hit", true},
                         {"bound", hit->bound},
                         {"clip_threshold", hit->clip_threshold},
                         {"source", hit->source},
                         {"family", hit->family},
                         {"capture_threshold", hit->capture_threshold},
                         {"entry", hit->entry},
                         {"threshold", hit->certificate.threshold},
                         {"horizon", hit->certificate.horizon},
                         {"revalidated", valid}});
    } else {
      const auto& miss = std::get<CatalogMiss>(r);
      ok = false;
      results.push_back(
          {{"hit", false},
           {"reason", miss.reason == CatalogMiss::Reason::kNotDominated ? "not-dominated" : "no-family"},
           {"detail", miss.detail}});
    }
  }
  out["lookups"] = results;
  return ok;
}

bool dispatch(const Scenario& s, Json& out) {
  const Json& p = s.payload;
  switch (s.kind) {
    case ScenarioKind::kRoundtrip: return run_roundtrip(p, out);
    case ScenarioKind::kCapture: return run_capture(p, out);
    case ScenarioKind::kRapidity: return run_rapidity(p, out);
    case ScenarioKind::kBuildSlalom: return run_build_slalom(p, out);
    case ScenarioKind::kWitnessFromSlalom: return run_witness_from_slalom(p, out);
    case ScenarioKind::kCertificate: return run_certificate(p, out);
    case ScenarioKind::kDiagonalize: return run_diagonalize(p, out);
    case ScenarioKind::kClosure: return run_closure(p, out);
    case ScenarioKind::kTransport: return run_transport(p, out);
    case ScenarioKind::kPipeline: return run_pipeline(p, out);
    case ScenarioKind::kSigmaUnion: return run_sigma_union(p, out);
    case ScenarioKind::kCatalog: return run_catalog(p, out);
  }
  return false;
}

/// Every 0/1 string and every "partition" horizon must stay within `limit`.
void check_horizon(const Json& j, std::uint64_t limit, const char* key = nullptr) {
  if (j.is_string()) {
    const auto& text = j.get_ref<const std::string&>();
    if (text.find_first_not_of("01") == std::string::npos && text.size() > limit) {
      throw SchemaError("word of length " + std::to_string(text.size()) +
                        " exceeds the scenario horizon " + std::to_string(limit));
    }
    return;
  }
  if (key != nullptr && std::string_view(key) == "partition" && j.is_array() && !j.empty() &&
      j.back().is_number_unsigned() && j.back().get<std::uint64_t>() > limit) {
    throw SchemaError("partition horizon exceeds the scenario horizon " + std::to_string(limit));
  }
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) check_horizon(it.value(), limit, it.key().c_str());
  } else if (j.is_array()) {
    for (const Json& v : j) check_horizon(v, limit);
  }
}

// ---- generators

Json cover_of(gen::Rng& rng, std::size_t pieces, std::size_t length, const NatSet& allowed,
              std::size_t max_points) {
  CoverFamily cover;
  for (std::size_t n = 0; n < pieces; ++n) {
    cover.pieces.push_back(gen::random_branching_set(rng, length, allowed, max_points));
  }
  return to_json(cover);
}

NatSet random_subset(gen::Rng& rng, Nat below, Nat num, Nat den) {
  NatSet out;
  for (Nat k = 0; k < below; ++k) {
    if (rng.chance(num, den)) out.insert(k);
  }
  return out;
}

/// Points that follow the slalom from a random threshold on; slices of empty
/// cells are random.
WordSet guided_points(gen::Rng& rng, const BinarySlalom& b, std::size_t count) {
  const PartitioningPrefix& d = b.partition;
  WordSet out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t k = d.intervals() == 0 ? 0 : rng.below(d.intervals());
    Word x;
    for (std::size_t n = 0; n < d.intervals(); ++n) {
      const WordSet& cell = b.cells[n];
      if (n >= k && !cell.empty()) {
        auto it = cell.begin();
        std::advance(it, rng.below(cell.size()));
        x.append(*it);
      } else {
        x.append(gen::random_word(rng, d.length(n)));
      }
    }
    out.insert(std::move(x));
  }
  return out;
}

Json generate_payload(ScenarioKind kind, gen::Rng& rng, std::size_t size) {
  switch (kind) {
    case ScenarioKind::kRoundtrip: {
      const PartitioningPrefix d = gen::random_partition(rng, size, 8);
      return {{"partition", to_json(d)},
              {"point", to_json(gen::random_word(rng, d.horizon()))},
              {"sequence", to_json(gen::random_bounded_sequence(rng, d))}};
    }
    case ScenarioKind::kCapture: {
      const PartitioningPrefix d = gen::random_partition(rng, size, 6);
      const BinarySlalom b = gen::random_binary_slalom(rng, d);
      return {{"partition", to_json(d)},
              {"cells", to_json(b)},
              {"points", to_json(guided_points(rng, b, size))}};
    }
    case ScenarioKind::kRapidity: {
      const NatSeq f = gen::random_increasing(rng, size, 1, 6);
      return {{"target", to_json(f)},
              {"witness", to_json(gen::random_boundary_witness(rng, f, WidthFunction::identity()))},
              {"width", "identity"}};
    }
    case ScenarioKind::kBuildSlalom: {
      const PartitioningPrefix d = gen::random_partition(rng, size, 6);
      const NatSet a = gen::random_chi_witness(rng, d);
      return {{"partition", to_json(d)},
              {"witness", to_json(a)},
              {"pieces", cover_of(rng, rng.between(0, size), d.horizon(), a, 8)}};
    }
    case ScenarioKind::kWitnessFromSlalom: {
      const PartitioningPrefix d = gen::random_partition(rng, size, 5);
      const BinarySlalom b = gen::random_binary_slalom(rng, d);
      return {{"partition", to_json(d)},
              {"cells", to_json(b)},
              {"points", to_json(guided_points(rng, b, size))}};
    }
    case ScenarioKind::kCertificate: {
      const NatSet allowed = random_subset(rng, size, 1, 2);
      CoverFamily cover = json_io::read_cover(cover_of(rng, rng.between(0, 4), size, allowed, 6), "pieces");
      WordSet subject;
      for (const Word& w : cover_points(cover)) {
        if (rng.chance(2, 3)) subject.insert(w);
      }
      FilterCertificate c{subject, cover, set_union(witness_of_cover(cover), random_subset(rng, size, 1, 4))};
      return to_json(c);
    }
    case ScenarioKind::kDiagonalize: {
      const Word a = gen::random_word(rng, size);
      NatSet aprime;
      for (Nat k : a.support()) {
        if (rng.chance(1, 2)) aprime.insert(k);
      }
      const NatSet allowed = set_difference(random_subset(rng, size, 1, 1), aprime);
      return {{"a", to_json(a)},
              {"aprime", to_json(aprime)},
              {"pieces", cover_of(rng, aprime.size(), size, allowed, 6)},
              {"steps", aprime.size()}};
    }
    case ScenarioKind::kClosure: {
      const std::size_t len = rng.between(0, size);
      const Json pieces = cover_of(rng, 1 + rng.below(3), size, random_subset(rng, size, 1, 2), 8);
      // t is the prefix of some member so that the closure is not trivially empty.
      const WordSet first = json_io::read_wordset(pieces[0], "pieces");
      auto member = first.begin();
      std::advance(member, rng.below(first.size()));
      return {{"pieces", pieces},
              {"piece", 0},
              {"s", to_json(gen::random_word(rng, len))},
              {"t", to_json(member->prefix(len))},
              {"length", size}};
    }
    case ScenarioKind::kTransport: {
      CoverFamily cover =
          json_io::read_cover(cover_of(rng, rng.between(1, 3), size, random_subset(rng, size, 1, 2), 6), "pieces");
      FilterCertificate c{cover_points(cover), cover, witness_of_cover(cover)};
      return {{"mode", "roundtrip"},
              {"certificate", to_json(c)},
              {"prefix", to_json(gen::random_word(rng, rng.between(0, 4)))}};
    }
    case ScenarioKind::kPipeline: {
      Json family = Json::array();
      // Sequences need at least one entry: an empty suffix never certifies capture.
      const std::size_t count = std::max<std::size_t>(1, size);
      for (std::size_t i = 0; i < count; ++i) {
        NatSeq f(count);
        for (Nat& v : f) v = rng.below(20);
        family.push_back(to_json(f));
      }
      return {{"family", family}};
    }
    case ScenarioKind::kSigmaUnion: {
      const NatSeq f = gen::random_increasing(rng, size, 1, 6);
      Json witnesses = Json::array();
      for (std::size_t i = 0; i < size; ++i) {
        witnesses.push_back(to_json(gen::random_boundary_witness(rng, f, WidthFunction::identity())));
      }
      return {{"witnesses", witnesses}, {"target", to_json(f)}};
    }
    case ScenarioKind::kCatalog: {
      Json bounds = Json::array();
      Json sources = Json::array();
      Json queries = Json::array();
      if (size == 0) return {{"bounds", bounds}, {"sources", sources}, {"queries", queries}};
      const std::size_t nbounds = rng.between(1, 2);
      std::size_t family_index = 0;
      for (std::size_t j = 0; j < nbounds; ++j) {
        NatSeq bound(size);
        for (Nat& v : bound) v = rng.between(1, 6);
        const PartitioningPrefix d = partreal(bound);
        bounds.push_back(to_json(bound));
        for (std::size_t fam = 0; fam < 2; ++fam) {
          WordSet points;
          BinarySlalom b{d, std::vector<WordSet>(d.intervals()), WidthFunction::identity()};
          const std::size_t members = rng.between(1, 3);
          for (std::size_t i = 0; i < members; ++i) {
            NatSeq f(size);
            for (std::size_t n = 0; n < size; ++n) f[n] = rng.below(bound[n] + 1);
            const Word x = decode_seq(f, d);
            points.insert(x);
            for (std::size_t n = 0; n < size; ++n) b.cells[n].insert(x.slice(d.begin(n), d.end(n)));
            queries.push_back(to_json(f));
          }
          sources.push_back({{"family", family_index++},
                             {"bound", j},
                             {"points", to_json(points)},
                             {"cells", to_json(b)},
                             {"width", {{"constant", points.size()}}}});
        }
      }
      return {{"bounds", bounds}, {"sources", sources}, {"queries", queries}};
    }
  }
  return Json::object();
}

}  // namespace

ScenarioKind parse_kind(std::string_view name) {
  for (const auto& [kind, text] : kKinds) {
    if (text == name) return kind;
  }
  throw SchemaError("unknown scenario kind '" + std::string(name) + "'");
}

std::string_view kind_name(ScenarioKind kind) {
  for (const auto& [k, text] : kKinds) {
    if (k == kind) return text;
  }
  return "unknown";
}

Scenario parse_scenario(const Json& record) {
  if (!record.is_object()) throw SchemaError("scenario record must be a JSON object");
  for (auto it = record.begin(); it != record.end(); ++it) {
    static constexpr std::array<std::string_view, 5> kFields{"kind", "payload", "seed", "horizon", "size"};
    if (std::find(kFields.begin(), kFields.end(), it.key()) == kFields.end()) {
      throw SchemaError("unknown scenario field '" + it.key() + "'");
    }
  }
  if (!has(record, "kind") || !record["kind"].is_string()) {
    throw SchemaError("scenario needs a string 'kind'");
  }
  Scenario s;
  s.kind = parse_kind(record["kind"].get<std::string>());
  try {
    if (has(record, "seed")) s.seed = json_io::read_nat(record["seed"], "seed");
    if (has(record, "horizon")) s.horizon = json_io::read_nat(record["horizon"], "horizon");
  } catch (const InvalidInput& e) {
    throw SchemaError(e.what());
  }
  if (has(record, "payload")) {
    if (!record["payload"].is_object()) throw SchemaError("payload must be an object");
    s.payload = record["payload"];
  } else if (s.seed) {
    std::size_t size = 8;
    if (has(record, "size")) {
      try {
        size = json_io::read_nat(record["size"], "size");
      } catch (const InvalidInput& e) {
        throw SchemaError(e.what());
      }
    }
    s.payload = generate_instance(s.kind, *s.seed, size).payload;
  } else {
    throw SchemaError("scenario needs a 'payload' or a 'seed'");
  }
  if (s.horizon) check_horizon(s.payload, *s.horizon);
  return s;
}

Scenario parse_scenario_line(std::string_view line) {
  Json record;
  try {
    record = Json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  return parse_scenario(record);
}

Json scenario_to_json(const Scenario& s) {
  Json out = {{"kind", kind_name(s.kind)}};
  if (s.seed) out["seed"] = *s.seed;
  if (s.horizon) out["horizon"] = *s.horizon;
  out["payload"] = s.payload;
  return out;
}

Report run_scenario(const Scenario& s) {
  Report r;
  Json details = Json::object();
  r.body = {{"kind", kind_name(s.kind)}};
  if (s.seed) r.body["seed"] = *s.seed;
  try {
    if (s.horizon) check_horizon(s.payload, *s.horizon);
    const bool ok = dispatch(s, details);
    r.exit_code = ok ? 0 : 1;
    r.body["status"] = ok ? "ok" : "fail";
    r.body["result"] = std::move(details);
  } catch (const HypothesisFailure& e) {
    r.exit_code = 1;
    r.body["status"] = "error";
    r.body["error"] = {{"type", "hypothesis"}, {"index", e.index()}, {"message", e.what()}};
  } catch (const WidthViolation& e) {
    r.exit_code = 1;
    r.body["status"] = "error";
    r.body["error"] = {{"type", "width"}, {"index", e.index()}, {"message", e.what()}};
  } catch (const InvalidInput& e) {
    r.exit_code = 2;
    r.body["status"] = "invalid";
    r.body["error"] = {{"type", "input"}, {"message", e.what()}};
  } catch (const nlohmann::json::exception& e) {
    r.exit_code = 2;
    r.body["status"] = "invalid";
    r.body["error"] = {{"type", "input"}, {"message", e.what()}};
  } catch (const Error& e) {
    r.exit_code = 1;
    r.body["status"] = "error";
    r.body["error"] = {{"type", "construction"}, {"message", e.what()}};
  } catch (const std::out_of_range& e) {
    // Indexing a missing piece or cell is a malformed payload.
    r.exit_code = 2;
    r.body["status"] = "invalid";
    r.body["error"] = {{"type", "input"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    r.exit_code = 1;
    r.body["status"] = "error";
    r.body["error"] = {{"type", "internal"}, {"message", e.what()}};
  }
  return r;
}

Scenario generate_instance(ScenarioKind kind, std::uint64_t seed, std::size_t size) {
  gen::Rng rng(seed);
  Scenario s;
  s.kind = kind;
  s.seed = seed;
  s.payload = generate_payload(kind, rng, size);
  return s;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << r.body.value("kind", "?") << ": " << r.body.value("status", "?") << " (exit "
      << r.exit_code << ")\n";
  auto dump = [&](const Json& obj) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      out << "  " << it.key() << ": " << it.value().dump() << "\n";
    }
  };
  if (r.body.contains("result")) dump(r.body["result"]);
  if (r.body.contains("error")) dump(r.body["error"]);
  return out.str();
}

}  // namespace cantor
