#pragma once

#include <functional>
#include <string>

#include "csineq/carrier.hpp"

namespace csineq {

/// A deterministic total function from carrier elements to carrier values,
/// with a short descriptor naming the construction it came from. Evaluators
/// must be pure: same input, same output, no shared mutable state.
template <GroupoidCarrier C>
struct CarrierFunction {
  using Element = typename C::Element;
  using Value = typename C::Value;

  std::string name;
  std::function<Value(const C&, const Element&)> eval;

  Value operator()(const C& carrier, const Element& x) const { return eval(carrier, x); }
};

}  // namespace csineq
