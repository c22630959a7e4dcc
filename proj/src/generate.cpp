#include "cantor/generate.hpp"

#include <algorithm>
#include <vector>

#include "cantor/rapidity.hpp"

namespace cantor::gen {

namespace {

/// `count` distinct values from [lo, hi), sorted.
std::vector<Nat> sample_distinct(Rng& rng, Nat lo, Nat hi, std::size_t count) {
  std::vector<Nat> pool;
  for (Nat k = lo; k < hi; ++k) pool.push_back(k);
  count = std::min<std::size_t>(count, pool.size());
  for (std::size_t i = 0; i < count; ++i) {
    std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

Word random_word(Rng& rng, std::size_t length) {
  Word w;
  w.reserve(length);
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < length; ++i) {
    if (i % 64 == 0) bits = rng.next();
    w.push_back((bits >> (63 - i % 64)) & 1u);
  }
  return w;
}

PartitioningPrefix random_partition(Rng& rng, std::size_t intervals, Nat max_length) {
  NatSeq deltas(intervals);
  for (Nat& v : deltas) v = rng.between(1, max_length);
  return make_partition(deltas);
}

PartitioningPrefix random_partition_within(Rng& rng, Nat max_horizon, Nat max_length) {
  NatSeq deltas;
  Nat total = 0;
  const Nat target = rng.between(1, max_horizon);
  while (total < target) {
    Nat len = std::min(rng.between(1, max_length), target - total);
    deltas.push_back(len);
    total += len;
  }
  return make_partition(deltas);
}

NatSeq random_bounded_sequence(Rng& rng, const PartitioningPrefix& d) {
  NatSeq f(d.intervals());
  for (std::size_t n = 0; n < f.size(); ++n) {
    const Nat len = d.length(n);
    f[n] = len >= 64 ? rng.next() : rng.next() & ((Nat{1} << len) - 1);
  }
  return f;
}

NatSeq random_increasing(Rng& rng, std::size_t length, Nat first, Nat max_gap) {
  NatSeq f;
  f.reserve(length);
  Nat v = first;
  for (std::size_t i = 0; i < length; ++i) {
    f.push_back(v);
    v += rng.between(1, max_gap);
  }
  return f;
}

WordSet random_branching_set(Rng& rng, std::size_t length, const NatSet& allowed,
                             std::size_t max_points, const Word* mask) {
  WordSet out;
  if (max_points == 0) return out;
  auto fill = [&](Word& w, std::size_t from) {
    for (std::size_t i = from; i < length; ++i) {
      bool bit = (rng.next() >> 63) != 0;
      w.set(i, bit && (mask == nullptr || (*mask)[i]));
    }
  };
  Word base(length);
  fill(base, 0);
  out.insert(base);
  for (Nat p : allowed) {
    if (p >= length) break;
    if (mask != nullptr && !(*mask)[p]) continue;
    // Every split so far lies below p, so forking at p cannot create a split
    // anywhere else.
    std::vector<Word> snapshot(out.begin(), out.end());
    for (const Word& w : snapshot) {
      if (out.size() >= max_points) break;
      if (!rng.chance(1, 2)) continue;
      Word u = w;
      u.set(p, !w[p]);
      fill(u, p + 1);
      out.insert(std::move(u));
    }
  }
  return out;
}

NatSet random_chi_witness(Rng& rng, const PartitioningPrefix& d) {
  std::vector<Nat> elements;
  for (std::size_t n = 0; n < d.intervals(); ++n) {
    // χ is nondecreasing, so the tightest constraint on a point of I^d_n is at n + 1.
    const Nat budget = chi(n + 1) - std::min<Nat>(chi(n + 1), elements.size());
    const Nat take = rng.between(0, budget);
    for (Nat k : sample_distinct(rng, d.begin(n), d.end(n), take)) elements.push_back(k);
  }
  return NatSet(std::move(elements));
}

BinarySlalom random_binary_slalom(Rng& rng, const PartitioningPrefix& d) {
  BinarySlalom b{d, std::vector<WordSet>(d.intervals()), WidthFunction::identity()};
  for (std::size_t m = 1; m < d.intervals(); ++m) {
    const Nat len = d.length(m);
    const Nat room = len >= 20 ? Nat{m} : std::min<Nat>(m, Nat{1} << len);
    const Nat size = rng.between(0, room);
    std::size_t attempts = 0;
    while (b.cells[m].size() < size && attempts++ < 64 * size) {
      b.cells[m].insert(random_word(rng, len));
    }
  }
  return b;
}

NatSet random_boundary_witness(Rng& rng, const NatSeq& f, const WidthFunction& phi) {
  std::vector<Nat> elements;
  Nat lo = 0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    const Nat cap = phi(n);
    const Nat have = elements.size();
    Nat take = cap > have ? cap - have : 0;
    if (take > 0 && rng.chance(1, 5)) take = rng.below(take);
    for (Nat k : sample_distinct(rng, lo, f[n], take)) elements.push_back(k);
    lo = f[n];
  }
  if (!f.empty()) {
    for (Nat k : sample_distinct(rng, f.back(), f.back() + 8, rng.below(4))) elements.push_back(k);
  }
  return NatSet(std::move(elements));
}

}  // namespace cantor::gen
