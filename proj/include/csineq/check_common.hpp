#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csineq/carrier.hpp"
#include "csineq/report.hpp"

namespace csineq::detail {

/// Collects violating pairs during a check and emits them in canonical
/// order: lexicographic on (pair height, x key, y key, inequality name).
/// Evaluation order therefore never leaks into reports, which keeps them
/// byte-stable under any future parallel fan-out.
template <GroupoidCarrier C>
class CounterexampleRecorder {
 public:
  explicit CounterexampleRecorder(const C& carrier, std::size_t cap = 16)
      : carrier_(carrier), cap_(cap) {}

  void record(const typename C::Element& x, const typename C::Element& y,
              std::string lhs, std::string rhs, std::string inequality) {
    Entry e{carrier_.element_key(x), carrier_.element_key(y),
            Counterexample{carrier_.format_element(x), carrier_.format_element(y),
                           std::move(lhs), std::move(rhs), std::move(inequality)}};
    found_.push_back(std::move(e));
  }

  bool empty() const { return found_.empty(); }

  /// Sorted, deduplicated, capped list.
  std::vector<Counterexample> finish() {
    std::sort(found_.begin(), found_.end(), [](const Entry& a, const Entry& b) {
      const BigInt ha = std::max(a.kx.height, a.ky.height);
      const BigInt hb = std::max(b.kx.height, b.ky.height);
      if (ha != hb) return ha < hb;
      if (!(a.kx == b.kx)) return a.kx < b.kx;
      if (!(a.ky == b.ky)) return a.ky < b.ky;
      return a.ce.inequality < b.ce.inequality;
    });
    std::vector<Counterexample> out;
    for (auto& e : found_) {
      if (!out.empty() && out.back().x == e.ce.x && out.back().y == e.ce.y &&
          out.back().inequality == e.ce.inequality) {
        continue;
      }
      out.push_back(std::move(e.ce));
      if (out.size() >= cap_) break;
    }
    return out;
  }

 private:
  struct Entry {
    ElementKey kx;
    ElementKey ky;
    Counterexample ce;
  };

  const C& carrier_;
  std::size_t cap_;
  std::vector<Entry> found_;
};

}  // namespace csineq::detail
