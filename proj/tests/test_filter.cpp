#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "cantor/error.hpp"
#include "cantor/filter.hpp"
#include "cantor/generate.hpp"
#include "support/oracles.hpp"

using namespace cantor;

namespace {

Word W(const char* s) { return Word::from_string(s); }

WordSet words(std::initializer_list<const char*> list) {
  WordSet out;
  for (const char* s : list) out.insert(W(s));
  return out;
}

std::vector<std::string> strings(const WordSet& ws) {
  std::vector<std::string> out;
  for (const Word& w : ws) out.push_back(w.to_string());
  return out;
}

FilterCertificate random_certificate(gen::Rng& rng, std::size_t length) {
  NatSet allowed;
  for (Nat k = 0; k < length; ++k) {
    if (rng.chance(1, 2)) allowed.insert(k);
  }
  CoverFamily cover;
  const std::size_t pieces = rng.between(1, 4);
  for (std::size_t n = 0; n < pieces; ++n) {
    cover.pieces.push_back(gen::random_branching_set(rng, length, allowed, 6));
  }
  return {cover_points(cover), cover, witness_of_cover(cover)};
}

}  // namespace

TEST_CASE("witness_of_cover") {
  CHECK(witness_of_cover({{words({"00", "01"}), words({"10", "11"})}}) == NatSet{1});
  CHECK(witness_of_cover({{words({"00"}), words({"11"})}}).empty());
  CHECK(witness_of_cover({{words({"00", "11"})}}) == NatSet{0});
}

TEST_CASE("check_certificate") {
  FilterCertificate c{words({"0110"}), {{words({"0110"})}}, {}};
  CHECK(check_certificate(c).ok());

  c.subject.insert(W("1111"));
  auto v = check_certificate(c);
  CHECK(v.status == CertificateVerdict::Status::kUncovered);
  CHECK(v.point == W("1111"));

  FilterCertificate split{words({"000", "010", "011"}), {{words({"000", "010", "011"})}}, {1, 2}};
  CHECK(check_certificate(split).ok());
  split.witness = {1};
  v = check_certificate(split);
  CHECK(v.status == CertificateVerdict::Status::kMissingSplit);
  CHECK(v.split == Nat{2});
  CHECK(v.piece == std::size_t{0});

  FilterCertificate mixed{words({"00", "000"}), {{words({"00"}), words({"000"})}}, {}};
  CHECK(check_certificate(mixed).status == CertificateVerdict::Status::kMisaligned);
}

TEST_CASE("certificates are upward closed and restrict to subsets") {
  gen::Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    FilterCertificate c = random_certificate(rng, rng.between(1, 10));
    REQUIRE(check_certificate(c).ok());
    FilterCertificate bigger = c;
    bigger.witness.insert(rng.below(20));
    CHECK(check_certificate(bigger).ok());
    FilterCertificate smaller = c;
    for (const Word& x : c.subject) {
      if (rng.chance(1, 2)) smaller.subject.erase(x);
    }
    CHECK(check_certificate(smaller).ok());
  }
}

TEST_CASE("union_certificate") {
  const FilterCertificate a{words({"00"}), {{words({"00"})}}, {}};
  const FilterCertificate b{words({"11"}), {{words({"11"})}}, {}};
  std::vector<FilterCertificate> both{a, b};
  FilterCertificate u = union_certificate(both);
  CHECK(u.subject == words({"00", "11"}));
  CHECK(u.witness.empty());
  CHECK(check_certificate(u).ok());

  const WordSet pa = powerset_points({0}, 3);
  const WordSet pb = powerset_points({2}, 3);
  std::vector<FilterCertificate> pair{{pa, {{pa}}, {0}}, {pb, {{pb}}, {2}}};
  u = union_certificate(pair);
  CHECK(u.witness == NatSet{0, 2});
  CHECK(check_certificate(u).ok());

  CHECK(union_certificate(std::span<const FilterCertificate>{}) == FilterCertificate{});

  std::vector<FilterCertificate> ragged{a, {words({"111"}), {{words({"111"})}}, {}}};
  CHECK_THROWS_AS(union_certificate(ragged), AlignmentError);
}

TEST_CASE("powerset_points") {
  CHECK(powerset_points({0, 2}, 3) == words({"000", "001", "100", "101"}));
  CHECK(powerset_points({}, 2) == words({"00"}));
  CHECK(split_set(powerset_points({0, 2}, 3)) == NatSet{0, 2});
  CHECK_THROWS_AS(powerset_points({3}, 3), InvalidInput);
  CHECK_THROWS_AS(powerset_points({0, 1, 2}, 3, 2), ResourceError);

  for (std::uint32_t mask = 0; mask < 256; ++mask) {
    NatSet a;
    for (Nat i = 0; i < 8; ++i) {
      if ((mask >> i) & 1u) a.insert(i);
    }
    const WordSet p = powerset_points(a, 8);
    CHECK(p.size() == (std::size_t{1} << a.size()));
    const std::set<std::uint64_t> h = oracle::split_set(strings(p));
    CHECK(h == std::set<std::uint64_t>(a.begin(), a.end()));
  }
}

TEST_CASE("diagonalize case 2") {
  auto r = diagonalize(W("1111"), {0}, {{words({"1111"})}}, 1);
  REQUIRE(r.point);
  CHECK((*r.point)[0] == false);
  REQUIRE(r.trace.size() == 1);
  CHECK(r.trace[0].case_taken == 2);
  CHECK(r.trace[0].bit == false);
  // After the last stage x copies a.
  CHECK(*r.point == W("0111"));
}

TEST_CASE("diagonalize blocked") {
  auto r = diagonalize(W("1000"), {0}, {{words({"0000", "1000"})}}, 1);
  CHECK_FALSE(r.point);
  REQUIRE(r.blocked);
  CHECK(r.blocked->stage == 0);
  CHECK(r.blocked->position == 0);
  CHECK(split_point(r.blocked->first, r.blocked->second) == 0);
}

TEST_CASE("diagonalize case 1") {
  // Stage 0 sets x(0) = 1 (piece 0 only carries 0 there); no member of piece 1
  // extends "1".
  auto r = diagonalize(W("11"), {0, 1}, {{words({"00"}), words({"00", "01"})}}, 2);
  REQUIRE(r.point);
  REQUIRE(r.trace.size() == 2);
  CHECK(r.trace[0].case_taken == 2);
  CHECK(r.trace[0].bit == true);
  CHECK(r.trace[1].case_taken == 1);
  CHECK(r.trace[1].bit == false);
  CHECK(*r.point == W("10"));
}

TEST_CASE("diagonalize preconditions and truncation") {
  CHECK_THROWS_AS(diagonalize(W("10"), {1}, {}, 1), InvalidInput);
  CHECK_THROWS_AS(diagonalize(W("10"), {0}, {{words({"100"})}}, 1), AlignmentError);
  auto r = diagonalize(W("1010"), {0, 2}, {}, 5);
  REQUIRE(r.point);
  CHECK(r.truncated);
  CHECK(r.stages_run == 2);
}

TEST_CASE("eventual_closure_cover") {
  const CoverFamily y{{words({"1111"})}};
  CHECK(eventual_closure_cover(y, 0, W("00"), W("11"), 4) == words({"0011"}));
  CHECK(eventual_closure_cover(y, 0, W("00"), W("01"), 4).empty());
  CHECK(eventual_closure_cover(y, 0, W(""), W(""), 4) == y.pieces[0]);
  CHECK_THROWS_AS(eventual_closure_cover(y, 0, W("0"), W("11"), 4), InvalidInput);
  CHECK_THROWS_AS(eventual_closure_cover(y, 1, W(""), W(""), 4), InvalidInput);
}

TEST_CASE("closure splits stay inside the piece's splits") {
  gen::Rng rng(52);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t length = rng.between(1, 10);
    const FilterCertificate c = random_certificate(rng, length);
    const std::size_t len = rng.between(0, length);
    const Word& y = *c.cover.pieces[0].begin();
    const WordSet z = eventual_closure_cover(c.cover, 0, gen::random_word(rng, len), y.prefix(len), length);
    CHECK_FALSE(z.empty());
    CHECK(split_set(z).subset_of(split_set(c.cover.pieces[0])));
  }
}

TEST_CASE("prepend and unprepend") {
  const FilterCertificate c{words({"01", "11"}), {{words({"01", "11"})}}, {0}};
  CHECK(prepend_cover_transport(c, W("")) == c);

  const FilterCertificate one{words({"00", "01"}), {{words({"00", "01"})}}, {1}};
  CHECK(prepend_cover_transport(one, W("0")).witness == NatSet{2});

  const FilterCertificate two{words({"000", "011", "110"}),
                              {{words({"000", "011"}), words({"110"})}},
                              {1}};
  const FilterCertificate shifted = prepend_cover_transport(two, W("10"));
  CHECK(split_set(shifted.cover.pieces[0]) == NatSet{3});
  CHECK(shifted.witness == NatSet{3});
  CHECK(check_certificate(shifted).ok());
  CHECK(unprepend_cover_transport(shifted, W("10")) == two);

  // Members not extending s drop out of their piece.
  const FilterCertificate mixed{words({"100"}), {{words({"100", "001"}), words({"010"})}}, {0, 1}};
  const FilterCertificate back = unprepend_cover_transport(mixed, W("1"));
  CHECK(back.cover.pieces[0] == words({"00"}));
  CHECK(back.cover.pieces[1].empty());
  CHECK(check_certificate(back).ok());

  CHECK_THROWS_AS(unprepend_cover_transport(mixed, W("0")), InvalidInput);
  CHECK_THROWS_AS(unprepend_cover_transport(mixed, W("1000")), InvalidInput);
}

TEST_CASE("prepend and unprepend are inverse on random certificates") {
  gen::Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const FilterCertificate c = random_certificate(rng, rng.between(1, 8));
    const Word s = gen::random_word(rng, rng.between(0, 5));
    const FilterCertificate there = prepend_cover_transport(c, s);
    CHECK(check_certificate(there).ok());
    const FilterCertificate back = unprepend_cover_transport(there, s);
    CHECK(back == c);
    CHECK(shift_set(back.witness, s.size()).subset_of(there.witness));
  }
}

TEST_CASE("shift_decomposition") {
  const WordSet x = words({"01", "10", "11"});
  auto classes = shift_decomposition(x, 0);
  REQUIRE(classes.size() == 1);
  CHECK(classes.at(W("")) == x);

  classes = shift_decomposition(powerset_points({0, 1}, 2), 1);
  CHECK(classes.at(W("0")) == words({"0", "1"}));
  CHECK(classes.at(W("1")) == words({"0", "1"}));

  classes = shift_decomposition(x, 2);
  CHECK(classes.size() == 3);
  for (const auto& [prefix, tails] : classes) CHECK(tails == words({""}));
}

TEST_CASE("shift transport on prefix-closed families") {
  gen::Rng rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.between(0, 3);
    const FilterCertificate tails = random_certificate(rng, rng.between(1, 6));
    // X = {s⌢t | s ∈ 2^n, t ∈ tails}.
    WordSet points;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      Word s(n);
      for (std::size_t i = 0; i < n; ++i) s.set(i, (m >> i) & 1u);
      for (const Word& t : tails.subject) points.insert(s + t);
    }
    const FilterCertificate c = shift_transport(points, tails, n);
    CHECK(c.subject == points);
    CHECK(check_certificate(c).ok());
    CHECK(c.witness == shift_set(tails.witness, n));
  }
}
