#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <variant>

#include "cantor/codec.hpp"
#include "cantor/error.hpp"
#include "cantor/generate.hpp"
#include "cantor/pipelines.hpp"
#include "support/oracles.hpp"

using namespace cantor;

namespace {

Word W(const char* s) { return Word::from_string(s); }

/// Slalom whose cell n is exactly {g(n)} over the given sequences.
Slalom cells_of(const std::vector<NatSeq>& gs, std::size_t length) {
  Slalom s{std::vector<NatSet>(length), WidthFunction::constant(gs.size())};
  for (const NatSeq& g : gs) {
    for (std::size_t n = 0; n < length; ++n) s.cells[n].insert(g[n]);
  }
  return s;
}

/// Catalog source capturing exactly the decoded points of `family` under `bound`.
CatalogSource source_for(const std::vector<NatSeq>& family, const NatSeq& bound,
                         std::size_t family_index, std::size_t bound_index) {
  const PartitioningPrefix d = partreal(bound);
  CatalogSource src{family_index, bound_index, {}, {d, std::vector<WordSet>(d.intervals()),
                                                    WidthFunction::constant(family.size())}};
  for (const NatSeq& f : family) {
    const Word x = decode_seq(clip_to_bound(f, bound).clipped, d);
    src.points.insert(x);
    for (std::size_t n = 0; n < d.intervals(); ++n) src.slalom.cells[n].insert(x.slice(d.begin(n), d.end(n)));
  }
  return src;
}

}  // namespace

TEST_CASE("partreal") {
  CHECK(partreal({4, 2, 3, 5, 1, 3}).points() == std::vector<Nat>{0, 4, 6, 9, 14, 15, 18});
  CHECK(partreal({1, 1, 1, 1}).points() == std::vector<Nat>{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(partreal({3, 0, 2}), InvalidPartition);
}

TEST_CASE("clip_to_bound") {
  auto c = clip_to_bound({1, 2, 3}, {1, 5, 3});
  CHECK(c.clipped == NatSeq{1, 2, 3});
  CHECK(c.threshold == 0);

  c = clip_to_bound({5, 1, 7}, {3, 2, 9});
  CHECK(c.clipped == NatSeq{0, 1, 7});
  CHECK(c.threshold == 1);

  CHECK_THROWS_AS(clip_to_bound({1, 9}, {3, 2}), NotDominated);
  CHECK_THROWS_AS(clip_to_bound({1}, {3, 2}), AlignmentError);
}

TEST_CASE("clip_to_bound properties") {
  gen::Rng rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t len = rng.between(1, 10);
    NatSeq f(len), d(len);
    for (std::size_t n = 0; n < len; ++n) {
      f[n] = rng.below(10);
      d[n] = rng.between(1, 10);
    }
    if (f.back() > d.back()) continue;
    const ClipResult c = clip_to_bound(f, d);
    for (std::size_t n = 0; n < len; ++n) {
      CHECK(c.clipped[n] <= d[n]);
      if (n >= c.threshold) CHECK(c.clipped[n] == f[n]);
    }
    // Least such index: one step earlier would have a violation.
    if (c.threshold > 0) CHECK(f[c.threshold - 1] > d[c.threshold - 1]);
  }
}

TEST_CASE("dominate_family") {
  const std::vector<NatSeq> one{{3, 0, 7}};
  CHECK(dominate_family(one) == NatSeq{4, 1, 8});
  const std::vector<NatSeq> two{{0, 1}, {2, 0}};
  CHECK(dominate_family(two) == NatSeq{3, 2});
  const std::vector<NatSeq> zeros{{0, 0, 0}, {0, 0, 0}};
  CHECK(dominate_family(zeros) == NatSeq{1, 1, 1});
  CHECK_THROWS_AS(dominate_family(std::span<const NatSeq>{}), InvalidInput);
  const std::vector<NatSeq> ragged{{1}, {1, 2}};
  CHECK_THROWS_AS(dominate_family(ragged), InvalidInput);
}

TEST_CASE("encode_family") {
  const std::vector<NatSeq> single{{3, 1, 4}};
  EncodedFamily e = encode_family(single);
  CHECK(e.image.size() == 1);
  CHECK(encode_point(e.points[0], e.partition) == single[0]);

  gen::Rng rng(62);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t len = rng.between(1, 12);
    std::vector<NatSeq> family;
    const std::size_t count = rng.between(1, 16);
    for (std::size_t i = 0; i < count; ++i) {
      NatSeq f(len);
      for (Nat& v : f) v = rng.below(30);
      family.push_back(f);
    }
    e = encode_family(family);
    std::set<NatSeq> distinct(family.begin(), family.end());
    CHECK(e.image.size() == distinct.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
      CHECK(e.clipped[i].threshold == 0);
      CHECK(encode_point(e.points[i], e.partition) == e.clipped[i].clipped);
    }
  }
}

TEST_CASE("encode_family with a tight bound reports collisions") {
  // Both sequences exceed the bound only at index 0, so both clip to (0, 1).
  const std::vector<NatSeq> family{{5, 1}, {7, 1}};
  const EncodedFamily e = encode_family(family, {2, 2});
  CHECK(e.collisions == 1);
  CHECK(e.image.size() == 1);
}

TEST_CASE("pull_capture_through_encoding") {
  const std::vector<NatSeq> family{{1, 2, 3, 4}, {0, 0, 5, 1}};
  const EncodedFamily e = encode_family(family);
  Slalom s = cells_of({e.clipped[0].clipped, e.clipped[1].clipped}, 4);
  PullReport r = pull_capture_through_encoding(e, s);
  CHECK(r.ok());
  for (const PulledCapture& c : r.per_sequence) CHECK(c.threshold == Nat{0});

  s.cells[2] = NatSet{5};
  r = pull_capture_through_encoding(e, s);
  CHECK(r.ok());
  CHECK(r.per_sequence[0].threshold == Nat{3});
  CHECK(r.per_sequence[1].threshold == Nat{0});

  Slalom empty{std::vector<NatSet>(4), WidthFunction::identity()};
  r = pull_capture_through_encoding(e, empty);
  CHECK(r.failures == std::vector<std::size_t>{0, 1});
}

TEST_CASE("pulled thresholds are the max of clip and capture") {
  gen::Rng rng(63);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t len = rng.between(2, 10);
    std::vector<NatSeq> family;
    for (int i = 0; i < 6; ++i) {
      NatSeq f(len);
      for (Nat& v : f) v = rng.below(8);
      family.push_back(f);
    }
    NatSeq bound(len);
    for (Nat& v : bound) v = rng.between(1, 8);
    bound.back() = 8;
    const EncodedFamily e = encode_family(family, bound);
    std::vector<NatSeq> gs;
    for (const ClipResult& c : e.clipped) gs.push_back(c.clipped);
    Slalom s = cells_of(gs, len);
    s.cells[rng.below(len - 1)] = NatSet{};
    const PullReport r = pull_capture_through_encoding(e, s);
    for (std::size_t i = 0; i < family.size(); ++i) {
      const PulledCapture& c = r.per_sequence[i];
      auto direct = goes_through_seq(e.clipped[i].clipped, s);
      REQUIRE(direct);
      CHECK(c.capture_threshold == direct->threshold);
      CHECK(*c.threshold == std::max(c.clip_threshold, direct->threshold));
      // The original f agrees with its clip from the threshold on.
      auto original = goes_through_seq(family[i], s);
      REQUIRE(original);
      CHECK(original->threshold <= *c.threshold);
    }
  }
}

TEST_CASE("slalom catalog") {
  const std::vector<NatSeq> fam{{2, 0, 1}};
  const NatSeq d = dominate_family(fam);
  SlalomCatalog catalog = SlalomCatalog::build({d}, {source_for(fam, d, 0, 0)});
  CatalogLookup r = catalog.lookup(fam[0]);
  REQUIRE(std::holds_alternative<CatalogHit>(r));
  const CatalogHit hit = std::get<CatalogHit>(r);
  CHECK(hit.bound == 0);
  CHECK(hit.family == 0);
  auto cert = goes_through_seq(fam[0], catalog.entries()[hit.entry].slalom);
  REQUIRE(cert);
  CHECK(cert->threshold <= hit.certificate.threshold);

  r = catalog.lookup({9, 9, 9});
  REQUIRE(std::holds_alternative<CatalogMiss>(r));
  CHECK(std::get<CatalogMiss>(r).reason == CatalogMiss::Reason::kNotDominated);

  r = catalog.lookup({0, 0, 0});
  REQUIRE(std::holds_alternative<CatalogMiss>(r));
  CHECK(std::get<CatalogMiss>(r).reason == CatalogMiss::Reason::kNoFamily);
}

TEST_CASE("catalog deduplicates identical slaloms") {
  const std::vector<NatSeq> fam{{1, 1}, {0, 2}};
  const NatSeq d{3, 3};
  const std::vector<NatSeq> other{{2, 0}};
  SlalomCatalog catalog = SlalomCatalog::build(
      {d}, {source_for(fam, d, 0, 0), source_for(fam, d, 1, 0), source_for(other, d, 2, 0)});
  CHECK(catalog.sources().size() == 3);
  CHECK(catalog.entries().size() == 2);
  CHECK(catalog.duplicates() == 1);
  CHECK(catalog.entry_of(1) == catalog.entry_of(0));
  CHECK(catalog.entries()[catalog.entry_of(0)].source == 0);
}

TEST_CASE("catalog rejects a slalom that misses its points") {
  const NatSeq d{3, 3};
  CatalogSource src = source_for({{1, 1}}, d, 0, 0);
  src.slalom.cells[1].clear();
  CHECK_THROWS_AS(SlalomCatalog::build({d}, {src}), HypothesisFailure);
}

TEST_CASE("sigma_union_witness") {
  std::vector<NatSet> empties(3);
  SigmaUnion u = sigma_union_witness(empties, {2, 4, 8});
  CHECK(u.united.empty());

  // b_n keeps the elements of a_n at or above f(n).
  std::vector<NatSet> ws{{0, 1}, {0, 5}, {}};
  u = sigma_union_witness(ws, {2, 4, 8});
  CHECK_FALSE(u.united.empty());
  REQUIRE(u.tails.size() == 3);
  CHECK(u.tails[0].empty());
  CHECK(u.tails[1] == NatSet{5});
  CHECK(u.united == NatSet{5});
  CHECK(u.counts == std::vector<std::size_t>{0, 0, 1});

  std::vector<NatSet> single{{1, 3, 7}};
  u = sigma_union_witness(single, {3});
  CHECK(u.united == NatSet{3, 7});

  CHECK_THROWS_AS(sigma_union_witness(ws, {4, 4}), InvalidTarget);
  CHECK_THROWS_AS(sigma_union_witness(ws, {1, 2, 3, 4}), InvalidInput);
}

TEST_CASE("sigma_union_witness at the boundary") {
  gen::Rng rng(64);
  for (int trial = 0; trial < 200; ++trial) {
    const NatSeq f = gen::random_increasing(rng, rng.between(1, 12), rng.below(3), 8);
    std::vector<NatSet> ws;
    for (std::size_t i = 0; i < f.size(); ++i) {
      ws.push_back(gen::random_boundary_witness(rng, f, WidthFunction::identity()));
    }
    const SigmaUnion u = sigma_union_witness(ws, f);
    CHECK(u.square_bound_applies);
    CHECK_FALSE(u.square_bound_violation);
    for (std::size_t n = 0; n < f.size(); ++n) {
      CHECK(u.counts[n] <= n * n);
      CHECK(u.counts[n] <= u.sum_bounds[n]);
      for (std::size_t m = n; m < f.size(); ++m) CHECK(u.tails[m].count_below(f[n]) == 0);
    }
  }
}

TEST_CASE("pair_union_bound") {
  const NatSeq f{1, 3, 5, 7};
  const WidthFunction id = WidthFunction::identity();
  PairUnionVerdict v = pair_union_bound({1, 3, 5}, {2, 4, 6}, f, id);
  CHECK(v.hypotheses_hold);
  CHECK(v.ok());
  for (std::size_t n = 0; n < f.size(); ++n) CHECK(v.counts[n] == 2 * n);

  v = pair_union_bound({1, 3, 5}, {1, 3, 5}, f, id);
  for (std::size_t n = 0; n < f.size(); ++n) CHECK(v.counts[n] == n);

  v = pair_union_bound({}, {1, 3, 5}, f, id);
  for (std::size_t n = 0; n < f.size(); ++n) CHECK(v.counts[n] <= n);

  v = pair_union_bound({0, 1, 2}, {}, f, id);
  CHECK_FALSE(v.hypotheses_hold);
  CHECK(v.ok());
}

TEST_CASE("capture failures correspond across the codec") {
  gen::Rng rng(65);
  for (int trial = 0; trial < 100; ++trial) {
    const PartitioningPrefix d = gen::random_partition(rng, rng.between(1, 6), 3);
    WordSet points;
    for (int i = 0; i < 6; ++i) points.insert(gen::random_word(rng, d.horizon()));
    std::vector<BinarySlalom> pool;
    for (int i = 0; i < 3; ++i) pool.push_back(gen::random_binary_slalom(rng, d));
    const FailureCorrespondence fc = compare_capture_failures(points, d, pool);
    CHECK(fc.matches);
  }
}
