#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "csineq/rational.hpp"

namespace csineq {

/// SplitMix64: the fixed, platform-independent generator behind every
/// sampled sequence. Same seed, same stream, on any build.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

/// Uniform-ish draw in [lo, hi] by modulo; the tiny modulo bias is
/// irrelevant for test-point generation and keeps the stream portable.
inline std::int64_t draw_in(SplitMix64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng.next() % span);
}

/// Reduced fraction with |numerator| <= height_bound and
/// 1 <= denominator <= height_bound (reduction only shrinks heights).
inline BigRational random_rational(SplitMix64& rng, std::int64_t height_bound) {
  const std::int64_t num = draw_in(rng, -height_bound, height_bound);
  const std::int64_t den = draw_in(rng, 1, height_bound);
  return make_rational(num, den);
}

/// Deterministic description of a sample: same spec, same element sequence.
struct SampleSpec {
  std::uint64_t seed = 0;
  int count = 1000;
  std::int64_t height_bound = 100;
  bool include_special = true;
};

/// Elements of a carrier: documented special prefix first (when enabled),
/// then seeded random elements up to `count` in total.
template <typename C>
std::vector<typename C::Element> sample_elements(const C& carrier, const SampleSpec& spec) {
  if (spec.count < 1) throw DomainError("sample count must be >= 1");
  std::vector<typename C::Element> out;
  if (spec.include_special) {
    for (const auto& s : carrier.specials()) {
      if (static_cast<int>(out.size()) >= spec.count) break;
      out.push_back(s);
    }
  }
  SplitMix64 rng(spec.seed);
  while (static_cast<int>(out.size()) < spec.count) {
    out.push_back(carrier.sample(rng, spec.height_bound));
  }
  return out;
}

/// Deterministic pair stream, prefix-stable in the budget: enlarging the
/// budget only appends pairs. Layout: all ordered pairs over the special
/// prefix, then inverse pairs (x, x^-1) for invertible specials (these cover
/// loci like xy = e that independent sampling essentially never hits), then
/// seeded random pairs.
template <typename C>
std::vector<std::pair<typename C::Element, typename C::Element>> sample_pairs(
    const C& carrier, const SampleSpec& spec, std::int64_t pair_budget) {
  if (pair_budget < 1) throw DomainError("pair budget must be >= 1");
  using Element = typename C::Element;
  std::vector<std::pair<Element, Element>> out;
  out.reserve(static_cast<std::size_t>(pair_budget));

  if (spec.include_special) {
    auto specials = carrier.specials();
    if (specials.size() > 8) specials.resize(8);
    for (const auto& x : specials) {
      for (const auto& y : specials) {
        if (static_cast<std::int64_t>(out.size()) >= pair_budget) return out;
        out.emplace_back(x, y);
      }
    }
    for (const auto& x : specials) {
      if (static_cast<std::int64_t>(out.size()) >= pair_budget) return out;
      if (auto inv = carrier.op_inverse(x)) out.emplace_back(x, *inv);
    }
  }

  SplitMix64 rng(spec.seed);
  while (static_cast<std::int64_t>(out.size()) < pair_budget) {
    Element x = carrier.sample(rng, spec.height_bound);
    Element y = carrier.sample(rng, spec.height_bound);
    if (spec.include_special) {
      if (auto inv = carrier.op_inverse(x)) out.emplace_back(x, *inv);
    }
    out.emplace_back(std::move(x), std::move(y));
  }
  if (static_cast<std::int64_t>(out.size()) > pair_budget) out.resize(static_cast<std::size_t>(pair_budget));
  return out;
}

}  // namespace csineq
