#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace csineq {

enum class Verdict { Holds, HoldsWithinBudget, Fails, Inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::HoldsWithinBudget: return "HOLDS-within-budget";
    case Verdict::Fails: return "FAILS";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

/// FAILS dominates INCONCLUSIVE dominates the two holding verdicts; a
/// certified counterexample stays a counterexample at any precision.
inline Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Fails || b == Verdict::Fails) return Verdict::Fails;
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
  if (a == Verdict::HoldsWithinBudget || b == Verdict::HoldsWithinBudget) {
    return Verdict::HoldsWithinBudget;
  }
  return Verdict::Holds;
}

/// One violating sample, fully serialized (exact scalars, no rounding).
struct Counterexample {
  std::string x;
  std::string y;
  std::string lhs;
  std::string rhs;
  std::string inequality;
};

/// Verdict of one check over a sample set.
struct CheckReport {
  std::string check_name;
  std::string carrier;
  std::int64_t sample_count = 0;
  Verdict verdict = Verdict::Holds;
  std::vector<Counterexample> counterexamples;
  std::int64_t equality_points = 0;
  std::uint64_t seed = 0;
  std::optional<int> precision_digits;  // interval carriers only
  std::vector<std::pair<std::string, Verdict>> sub_verdicts;
  std::optional<std::string> note;
};

inline nlohmann::ordered_json to_json(const Counterexample& c) {
  nlohmann::ordered_json j;
  j["x"] = c.x;
  j["y"] = c.y;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["inequality"] = c.inequality;
  return j;
}

inline nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check_name;
  j["carrier"] = r.carrier;
  j["sample_count"] = r.sample_count;
  j["verdict"] = to_string(r.verdict);
  j["equality_points"] = r.equality_points;
  j["seed"] = r.seed;
  if (r.precision_digits) j["precision_digits"] = *r.precision_digits;
  if (!r.sub_verdicts.empty()) {
    nlohmann::ordered_json sub;
    for (const auto& [name, verdict] : r.sub_verdicts) sub[name] = to_string(verdict);
    j["sub_verdicts"] = sub;
  }
  nlohmann::ordered_json ces = nlohmann::ordered_json::array();
  for (const auto& c : r.counterexamples) ces.push_back(to_json(c));
  j["counterexamples"] = ces;
  if (r.note) j["note"] = *r.note;
  return j;
}

/// Two-sided verdict for an if-and-only-if theorem: the left-hand
/// characterization, the right-hand inequality battery, and whether the
/// sampled evidence agrees with the equivalence.
struct EquivalenceReport {
  std::string theorem;
  std::string left;
  std::string right;
  bool consistent = false;
  std::vector<CheckReport> details;
};

inline nlohmann::ordered_json to_json(const EquivalenceReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem;
  j["left"] = r.left;
  j["right"] = r.right;
  j["consistent"] = r.consistent;
  nlohmann::ordered_json details = nlohmann::ordered_json::array();
  for (const auto& d : r.details) details.push_back(to_json(d));
  j["details"] = details;
  return j;
}

}  // namespace csineq
