#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "csineq/check_common.hpp"
#include "csineq/function.hpp"
#include "csineq/report.hpp"

namespace csineq {

/// The decomposition shapes of A(x*y) handled by the library:
///   RankN:            A(x*y) = f1(x)f1(y) + ... + fn(x)fn(y)
///   Difference:       A(x*y) = f(x)f(y) - g(x)g(y)
///   Symmetrized:      A(x*y) = f(x)g(y) + g(x)f(y)
///   PairedDifference: A as Difference and B as Symmetrized, same f, g
///   PairedSum:        A(x*y) = f(x)f(y) + g(x)g(y) and B as Symmetrized
enum class RepKind { RankN, Difference, Symmetrized, PairedDifference, PairedSum };

inline std::string to_string(RepKind k) {
  switch (k) {
    case RepKind::RankN: return "rank-n";
    case RepKind::Difference: return "difference";
    case RepKind::Symmetrized: return "symmetrized";
    case RepKind::PairedDifference: return "paired-difference";
    case RepKind::PairedSum: return "paired-sum";
  }
  return "?";
}

inline bool is_paired(RepKind k) {
  return k == RepKind::PairedDifference || k == RepKind::PairedSum;
}

template <GroupoidCarrier C>
struct LeviCivitaRep {
  RepKind kind;
  // RankN: f1..fn (n >= 1). All other kinds: exactly {f, g}.
  std::vector<CarrierFunction<C>> components;
};

template <GroupoidCarrier C>
LeviCivitaRep<C> make_rank_n(std::vector<CarrierFunction<C>> fs) {
  if (fs.empty()) throw DomainError("rank-n representation needs n >= 1 components");
  return {RepKind::RankN, std::move(fs)};
}

template <GroupoidCarrier C>
LeviCivitaRep<C> make_rep(RepKind kind, CarrierFunction<C> f, CarrierFunction<C> g) {
  if (kind == RepKind::RankN) return make_rank_n<C>({std::move(f), std::move(g)});
  return {kind, {std::move(f), std::move(g)}};
}

/// Right-hand side value(s) of a decomposition at (x, y). Paired kinds
/// produce the A-side as `primary` and the B-side as `secondary`.
template <GroupoidCarrier C>
struct RhsValues {
  typename C::Value primary;
  std::optional<typename C::Value> secondary;
};

template <GroupoidCarrier C>
RhsValues<C> rep_rhs(const C& carrier, const LeviCivitaRep<C>& rep,
                     const typename C::Element& x, const typename C::Element& y) {
  const auto& fs = rep.components;
  switch (rep.kind) {
    case RepKind::RankN: {
      auto acc = carrier.v_mul(fs[0](carrier, x), fs[0](carrier, y));
      for (std::size_t i = 1; i < fs.size(); ++i) {
        acc = carrier.v_add(acc, carrier.v_mul(fs[i](carrier, x), fs[i](carrier, y)));
      }
      return {std::move(acc), std::nullopt};
    }
    case RepKind::Difference: {
      auto fv = carrier.v_mul(fs[0](carrier, x), fs[0](carrier, y));
      auto gv = carrier.v_mul(fs[1](carrier, x), fs[1](carrier, y));
      return {carrier.v_sub(fv, gv), std::nullopt};
    }
    case RepKind::Symmetrized: {
      auto fg = carrier.v_mul(fs[0](carrier, x), fs[1](carrier, y));
      auto gf = carrier.v_mul(fs[1](carrier, x), fs[0](carrier, y));
      return {carrier.v_add(fg, gf), std::nullopt};
    }
    case RepKind::PairedDifference:
    case RepKind::PairedSum: {
      const auto fx = fs[0](carrier, x);
      const auto fy = fs[0](carrier, y);
      const auto gx = fs[1](carrier, x);
      const auto gy = fs[1](carrier, y);
      const auto ff = carrier.v_mul(fx, fy);
      const auto gg = carrier.v_mul(gx, gy);
      auto a_side = rep.kind == RepKind::PairedSum ? carrier.v_add(ff, gg) : carrier.v_sub(ff, gg);
      auto b_side = carrier.v_add(carrier.v_mul(fx, gy), carrier.v_mul(gx, fy));
      return {std::move(a_side), std::move(b_side)};
    }
  }
  throw Error("unreachable representation kind");
}

/// Verifies that the claimed decomposition reproduces the target(s) on every
/// sampled pair. On exact carriers equality is decided exactly; on the
/// interval carrier the check is advisory: overlapping enclosures pass,
/// disjoint enclosures are a rigorous refutation.
template <GroupoidCarrier C>
CheckReport check_decomposition(const C& carrier, const LeviCivitaRep<C>& rep,
                                const CarrierFunction<C>& target_a,
                                const CarrierFunction<C>* target_b,
                                std::span<const std::pair<typename C::Element, typename C::Element>> pairs,
                                std::uint64_t seed) {
  if (is_paired(rep.kind) && target_b == nullptr) {
    throw DomainError("paired decomposition needs both target functions");
  }
  CheckReport report;
  report.check_name = "decomposition(" + to_string(rep.kind) + ")";
  report.carrier = carrier.id();
  report.seed = seed;
  report.sample_count = static_cast<std::int64_t>(pairs.size());
  report.verdict = Verdict::Holds;

  detail::CounterexampleRecorder<C> recorder(carrier);
  for (const auto& [x, y] : pairs) {
    const auto xy = carrier.op(x, y);
    const auto rhs = rep_rhs(carrier, rep, x, y);
    const auto check_one = [&](const CarrierFunction<C>& target, const typename C::Value& want,
                               const char* side) {
      const auto got = target(carrier, xy);
      bool ok;
      if constexpr (C::exact) {
        ok = carrier.v_compare(got, want) == Ordering::Equal;
      } else {
        ok = got.overlaps(want);
      }
      if (ok) {
        if constexpr (C::exact) ++report.equality_points;
      } else {
        report.verdict = Verdict::Fails;
        recorder.record(x, y, carrier.format_value(got), carrier.format_value(want),
                        std::string(side) + "(x*y) == rhs");
      }
    };
    check_one(target_a, rhs.primary, "A");
    if (rhs.secondary) check_one(*target_b, *rhs.secondary, "B");
  }
  report.counterexamples = recorder.finish();
  if constexpr (!C::exact) {
    report.precision_digits = carrier.digits();
    report.note = "interval carrier: decomposition equality checked by overlap only (advisory)";
  }
  return report;
}

}  // namespace csineq
