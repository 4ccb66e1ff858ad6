#pragma once

#include "ammann/dimension.hpp"
#include "ammann/errors.hpp"
#include "ammann/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ammann {

/// The n-step substitution rule relative to a parent tile: children in
/// canonical depth-first order (Big child U before Small child V at every
/// elementary step; the Small->Big relabel step is transparent and
/// contributes no path letter). paths[i] is child i's U/V address string.
struct RuleExpansion {
  int n = 0;
  std::vector<PlacedTile> children;
  std::vector<std::string> paths;
};

namespace detail {

inline void expand_into(int steps_left, Label label, const Similarity& sim,
                        std::string& path, RuleExpansion& out) {
  if (steps_left == 0) {
    out.children.push_back({sim, label});
    out.paths.push_back(path);
    return;
  }
  if (label == Label::Small) {
    expand_into(steps_left - 1, Label::Big, sim, path, out);
    return;
  }
  const auto kids = elementary_children();
  for (const PlacedTile& kid : kids) {
    path.push_back(kid.label == Label::Big ? 'U' : 'V');
    expand_into(steps_left - 1, kid.label, compose(sim, kid.sim), path, out);
    path.pop_back();
  }
}

} // namespace detail

/// Expands the rule n steps from a Small root at the identity. Child counts
/// are (F_{n-1} Small, F_n Big); the guard keeps a typo'd n from exhausting
/// memory.
inline RuleExpansion expand(int n, std::size_t max_children = 5'000'000) {
  if (n < 1) throw InvalidRangeError("expand: n must be >= 1");
  const BigInt projected = fib(n + 1);
  if (projected > max_children)
    throw ResourceLimitError("expand: " + projected.str() + " children exceeds cap " +
                             std::to_string(max_children));
  RuleExpansion out;
  out.n = n;
  out.children.reserve(static_cast<std::size_t>(projected));
  out.paths.reserve(static_cast<std::size_t>(projected));
  std::string path;
  detail::expand_into(n, Label::Small, Similarity{}, path, out);
  return out;
}

/// Closed-form tile counts after n steps from s0 Small and b0 Big tiles:
/// S_n = F_{n-1} s0 + F_n b0, B_n = F_n s0 + F_{n+1} b0.
inline std::pair<BigInt, BigInt> counts(long n, const BigInt& s0, const BigInt& b0) {
  if (n < 0) throw InvalidRangeError("counts: n must be >= 0");
  if (n == 0) return {s0, b0};
  return {fib(n - 1) * s0 + fib(n) * b0, fib(n) * s0 + fib(n + 1) * b0};
}

/// SplitMix64: tiny, seedable, and identical across implementations, so
/// random masks reproduce from the seed alone.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

enum class MaskStrategy { First, Last, Random, Explicit };

inline const char* strategy_name(MaskStrategy s) {
  switch (s) {
    case MaskStrategy::First: return "first";
    case MaskStrategy::Last: return "last";
    case MaskStrategy::Random: return "random";
    default: return "explicit";
  }
}

/// Child indices removed at every composite step: exactly `a` Small-labeled
/// and `b` Big-labeled positions in the canonical order of one RuleExpansion.
struct RemovalMask {
  int n = 0;
  BigInt a, b;
  std::vector<std::size_t> removed; // sorted
  MaskStrategy strategy = MaskStrategy::First;
  std::uint64_t seed = 0;
};

namespace detail {

inline void check_mask_ranges(int n, const BigInt& a, const BigInt& b) {
  const BigInt fn1 = fib(n - 1);
  const BigInt fn = fib(n);
  if (a < 0 || a > fn1)
    throw InvalidRangeError("make_mask: a must be in [0, F_{n-1} = " + fn1.str() + "]");
  if (b < 0 || b > fn)
    throw InvalidRangeError("make_mask: b must be in [0, F_n = " + fn.str() + "]");
  if (a == fn1 && b == fn)
    throw EmptyFractalError("make_mask: all tiles removed (a = F_{n-1} and b = F_n)");
}

/// Draws `want` indices from `pool` without replacement by partial
/// Fisher-Yates, consuming one rng value per draw (index chosen modulo the
/// remaining pool size).
inline void draw_random(std::vector<std::size_t>& pool, std::size_t want, SplitMix64& rng,
                        std::vector<std::size_t>& out) {
  for (std::size_t i = 0; i < want; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.next() % (pool.size() - i));
    std::swap(pool[i], pool[j]);
    out.push_back(pool[i]);
  }
}

} // namespace detail

/// Builds the removal mask for (a Small, b Big) under a strategy:
/// `first`/`last` take the lowest/highest canonical indices per label;
/// `random` draws per label (Smalls then Bigs) from a single SplitMix64
/// stream seeded as given.
inline RemovalMask make_mask(const RuleExpansion& exp, const BigInt& a, const BigInt& b,
                             MaskStrategy strategy = MaskStrategy::First,
                             std::uint64_t seed = 0) {
  if (strategy == MaskStrategy::Explicit)
    throw InvalidRangeError("make_mask: explicit strategy requires an index list");
  detail::check_mask_ranges(exp.n, a, b);

  std::vector<std::size_t> smalls, bigs;
  for (std::size_t i = 0; i < exp.children.size(); ++i)
    (exp.children[i].label == Label::Small ? smalls : bigs).push_back(i);
  const auto na = static_cast<std::size_t>(a);
  const auto nb = static_cast<std::size_t>(b);

  RemovalMask mask{exp.n, a, b, {}, strategy, seed};
  switch (strategy) {
    case MaskStrategy::First:
      mask.removed.assign(smalls.begin(), smalls.begin() + na);
      mask.removed.insert(mask.removed.end(), bigs.begin(), bigs.begin() + nb);
      break;
    case MaskStrategy::Last:
      mask.removed.assign(smalls.end() - na, smalls.end());
      mask.removed.insert(mask.removed.end(), bigs.end() - nb, bigs.end());
      break;
    default: {
      SplitMix64 rng(seed);
      if (na > 0) detail::draw_random(smalls, na, rng, mask.removed);
      if (nb > 0) detail::draw_random(bigs, nb, rng, mask.removed);
      break;
    }
  }
  std::sort(mask.removed.begin(), mask.removed.end());
  return mask;
}

/// Mask from a caller-chosen index list; (a, b) are derived from the labels
/// at those indices.
inline RemovalMask make_explicit_mask(const RuleExpansion& exp,
                                      std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw InvalidRangeError("make_explicit_mask: duplicate index");
  BigInt a = 0, b = 0;
  for (std::size_t i : indices) {
    if (i >= exp.children.size())
      throw InvalidRangeError("make_explicit_mask: index " + std::to_string(i) +
                              " out of range");
    (exp.children[i].label == Label::Small ? a : b) += 1;
  }
  detail::check_mask_ranges(exp.n, a, b);
  return {exp.n, a, b, std::move(indices), MaskStrategy::Explicit, 0};
}

/// How a TileCollection was produced; enough to reproduce it exactly.
struct Provenance {
  int n = 0;
  BigInt a, b;
  int steps = 0;
  MaskStrategy strategy = MaskStrategy::First;
  std::uint64_t seed = 0;
};

struct TileCollection {
  std::vector<PlacedTile> tiles; // canonical expansion-path order
  Provenance provenance;
};

/// Iterates the masked n-step rule `steps` times from the root tile. Every
/// tile, whatever its label, is replaced by the kept children of the same
/// RuleExpansion composed with its own frame, so a Big tile's offspring are
/// exactly the sqrt(phi)-scaled image of a Small tile's. Tile count after k
/// steps is (F_{n+1} - a - b)^k; the cap rejects runs that cannot fit.
inline TileCollection iterate(int n, const BigInt& a, const BigInt& b, int steps,
                              MaskStrategy strategy = MaskStrategy::First,
                              std::uint64_t seed = 0,
                              std::size_t max_tiles = 5'000'000) {
  if (steps < 0) throw InvalidRangeError("iterate: steps must be >= 0");
  const RuleExpansion exp = expand(n, max_tiles);
  const RemovalMask mask = make_mask(exp, a, b, strategy, seed);

  using boost::multiprecision::pow;
  const BigInt branch = fib(n + 1) - a - b;
  const BigInt projected = pow(branch, static_cast<unsigned>(steps));
  if (projected > max_tiles)
    throw ResourceLimitError("iterate: " + projected.str() + " tiles exceeds cap " +
                             std::to_string(max_tiles));

  std::vector<PlacedTile> kept;
  kept.reserve(exp.children.size() - mask.removed.size());
  for (std::size_t i = 0, r = 0; i < exp.children.size(); ++i) {
    if (r < mask.removed.size() && mask.removed[r] == i) {
      ++r;
      continue;
    }
    kept.push_back(exp.children[i]);
  }

  TileCollection out;
  out.provenance = {n, a, b, steps, strategy, seed};
  out.tiles = {PlacedTile{Similarity{}, Label::Small}};
  for (int step = 0; step < steps; ++step) {
    std::vector<PlacedTile> next;
    next.reserve(out.tiles.size() * kept.size());
    for (const PlacedTile& tile : out.tiles)
      for (const PlacedTile& kid : kept)
        next.push_back({compose(tile.sim, kid.sim), kid.label});
    out.tiles = std::move(next);
  }
  return out;
}

/// Exact total area of a collection, in the ring.
inline GoldenNumber total_area(const std::vector<PlacedTile>& tiles) {
  GoldenNumber sum = GoldenNumber::zero();
  for (const PlacedTile& t : tiles) sum = sum + area(t.sim);
  return sum;
}

/// Exact per-step area retention factor 1 - a*phi^{-n} - b*phi^{-(n-1)};
/// after k masked steps the total area is prototile_area() times this to
/// the k-th power.
inline GoldenNumber area_retention(int n, const BigInt& a, const BigInt& b) {
  const GoldenNumber small_part = GoldenNumber{a, 0, 0, 0} * half_power_of_phi(-2 * n);
  const GoldenNumber big_part = GoldenNumber{b, 0, 0, 0} * half_power_of_phi(-2 * (n - 1));
  return GoldenNumber::one() - small_part - big_part;
}

} // namespace ammann
