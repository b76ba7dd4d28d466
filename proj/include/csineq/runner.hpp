#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "csineq/suites.hpp"
#include "csineq/version.hpp"

namespace csineq {

/// Parsed CLI invocation. Defaults are chosen so every stock verification
/// completes in seconds: samples=1000, height-bound=100,
/// precision-digits=12, budget=10000, seed=0.
struct RunConfig {
  std::string command;  // verify | search | demo | classify | equivalence
  std::string theorem;  // thm1plus|thm1|thm2|thm3|thm4|thm5|thm6|cor4|cor5|cor6|corA1|corA2|thmB|a9
  std::string carrier;  // quad:p | gauss | poly | rational | reals-interval
  std::optional<std::string> alpha;
  std::optional<std::string> beta;
  std::optional<std::string> q;      // selects the unit-perturbed identity on (Q, *)
  std::string target = "auto";       // auto|additive|thmb|gauss|derivation|example-a|example-co
  std::string predicate;             // search only; empty = default for the theorem
  std::string c = "2";               // evaluation point on Q[t]
  bool conjugate = false;
  std::int64_t samples = 1000;
  std::uint64_t seed = 0;
  std::int64_t height_bound = 100;
  int precision_digits = 12;
  std::int64_t budget = 10000;
  int depth = 3;                     // demo: convergent refinement steps past the integer part
  std::string format = "text";      // text | json
};

struct RunResult {
  int exit_code = 0;
  std::string report;
};

namespace detail {

struct ParsedCarrier {
  std::string kind;  // quad | gauss | poly | rational | reals-interval
  std::int64_t p = 0;
};

inline ParsedCarrier parse_carrier(const std::string& carrier) {
  if (carrier.rfind("quad:", 0) == 0) {
    const std::string digits = carrier.substr(5);
    if (digits.empty()) throw ConfigError("carrier quad:p needs a radicand");
    std::int64_t p = 0;
    for (char ch : digits) {
      if (ch < '0' || ch > '9') throw ConfigError("invalid radicand in carrier " + carrier);
      p = p * 10 + (ch - '0');
      if (p > 1000000) throw ConfigError("radicand too large in carrier " + carrier);
    }
    if (!is_valid_radicand(p)) {
      throw ConfigError("carrier " + carrier + ": radicand must be square-free and >= 2");
    }
    return {"quad", p};
  }
  if (carrier == "gauss" || carrier == "poly" || carrier == "rational" ||
      carrier == "reals-interval") {
    return {carrier, 0};
  }
  throw ConfigError("unknown carrier: " + carrier +
                    " (expected quad:p, gauss, poly, rational, or reals-interval)");
}

inline const std::map<std::string, std::vector<std::string>>& theorem_carriers() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"thm1plus", {"quad", "poly", "rational"}},
      {"thm1", {"quad"}},
      {"thm2", {"quad", "rational"}},
      {"thm3", {"gauss"}},
      {"thm4", {"poly", "gauss"}},
      {"thm5", {"gauss", "reals-interval"}},
      {"thm6", {"quad", "reals-interval"}},
      {"cor4", {"poly"}},
      {"cor5", {"reals-interval"}},
      {"cor6", {"reals-interval"}},
      {"corA1", {"gauss"}},
      {"corA2", {"gauss"}},
      {"thmB", {"quad"}},
      {"a9", {"quad"}},
  };
  return table;
}

inline std::string default_carrier(const std::string& theorem) {
  const auto& table = theorem_carriers();
  const auto it = table.find(theorem);
  if (it == table.end()) throw ConfigError("unknown theorem id: " + theorem);
  return it->second.front() == "quad" ? "quad:2" : it->second.front();
}

inline void validate_compatibility(const std::string& theorem, const ParsedCarrier& carrier) {
  const auto& table = theorem_carriers();
  const auto it = table.find(theorem);
  if (it == table.end()) throw ConfigError("unknown theorem id: " + theorem);
  for (const auto& ok : it->second) {
    if (ok == carrier.kind) return;
  }
  std::string allowed;
  for (const auto& ok : it->second) allowed += (allowed.empty() ? "" : ", ") + ok;
  throw ConfigError("theorem " + theorem + " is not defined on carrier kind '" + carrier.kind +
                    "' (supported: " + allowed + ")");
}

inline std::string default_predicate(const std::string& theorem) {
  if (theorem == "thm1plus" || theorem == "thm1") return "1<";
  if (theorem == "thm2" || theorem == "thm3" || theorem == "thm4" || theorem == "cor4") return "2<";
  if (theorem == "thm5" || theorem == "corA1" || theorem == "corA2" || theorem == "cor5") return "xy";
  if (theorem == "thm6" || theorem == "thmB" || theorem == "cor6") return "6xy";
  throw ConfigError("no default search predicate for theorem " + theorem);
}

inline AdditiveMap make_config_additive(const RunConfig& cfg, std::int64_t p,
                                        const char* default_alpha = "1",
                                        const char* default_beta = "0") {
  const QuadField field(p);
  const QuadElem alpha = field.parse(cfg.alpha.value_or(default_alpha));
  const QuadElem beta = field.parse(cfg.beta.value_or(default_beta));
  return AdditiveMap(p, alpha, beta);
}

struct Outcome {
  std::vector<CheckReport> checks;
  Verdict verdict = Verdict::Holds;
  nlohmann::ordered_json extra;  // command-specific detail
  std::vector<std::string> lines;  // extra text-mode lines
};

inline std::vector<std::pair<BigRational, BigRational>> interval_pairs(const RunConfig& cfg) {
  const RealsAddCarrier carrier(cfg.precision_digits);
  SampleSpec spec{cfg.seed, static_cast<int>(cfg.samples), cfg.height_bound, true};
  return sample_pairs(carrier, spec, cfg.samples);
}

inline Outcome run_verify(const RunConfig& cfg, const ParsedCarrier& pc) {
  SampleSpec spec{cfg.seed, static_cast<int>(cfg.samples), cfg.height_bound, true};
  Outcome out;
  const std::string& thm = cfg.theorem;

  if (pc.kind == "quad") {
    const QuadMulCarrier carrier(pc.p);
    if (thm == "thm1plus") {
      const auto pair = thmB_pair(pc.p);
      const auto rep = make_rank_n<QuadMulCarrier>({pair.A_fn, pair.B_fn});
      const auto pairs = sample_pairs(carrier, spec, cfg.samples);
      out.checks.push_back(
          check_decomposition<QuadMulCarrier>(carrier, rep, pair.A_fn, nullptr, pairs, cfg.seed));
      out.checks.push_back(check_cs_forward<QuadMulCarrier>(carrier, pair.A_fn, pairs, cfg.seed));
    } else if (thm == "thm1") {
      const auto map = make_config_additive(cfg, pc.p);
      const auto eq = equivalence_check_thm1(map, spec);
      out.checks = eq.details;
      out.verdict = eq.consistent ? Verdict::Holds : Verdict::Fails;
      out.extra["equivalence"] = to_json(eq);
      out.lines.push_back("left:  " + eq.left);
      out.lines.push_back("right: " + eq.right);
      out.lines.push_back(std::string("consistent: ") + (eq.consistent ? "true" : "false"));
      return out;
    } else if (thm == "thm2") {
      const auto map = make_config_additive(cfg, pc.p);
      const auto eq = equivalence_check_thm2(map, spec);
      out.checks = eq.details;
      out.verdict = eq.consistent ? Verdict::Holds : Verdict::Fails;
      out.extra["equivalence"] = to_json(eq);
      out.lines.push_back("left:  " + eq.left);
      out.lines.push_back("right: " + eq.right);
      out.lines.push_back(std::string("consistent: ") + (eq.consistent ? "true" : "false"));
      return out;
    } else if (thm == "thm6" || thm == "thmB") {
      out.checks = thmB_suite(pc.p, spec, cfg.samples);
    } else if (thm == "a9") {
      const auto map = make_config_additive(cfg, pc.p, "1", std::to_string(pc.p).c_str());
      const auto pairs = sample_pairs(carrier, spec, cfg.samples);
      out.checks.push_back(check_discriminant_A9(carrier, map, pairs, cfg.seed));
    } else {
      throw ConfigError("verify does not support theorem " + thm + " on quad carriers");
    }
  } else if (pc.kind == "gauss") {
    const GaussianMulCarrier carrier;
    const auto pairs = sample_pairs(carrier, spec, cfg.samples);
    const auto pair = gaussian_re_im(cfg.conjugate);
    if (thm == "thm3") {
      const auto rep = make_rep(RepKind::Difference, pair.A, pair.B);
      out.checks.push_back(
          check_decomposition<GaussianMulCarrier>(carrier, rep, pair.A, nullptr, pairs, cfg.seed));
      out.checks.push_back(
          check_cs_reverse<GaussianMulCarrier>(carrier, pair.A, pairs, false, cfg.seed));
    } else if (thm == "thm4") {
      const auto rep = make_rep(RepKind::Symmetrized, pair.A, pair.B);
      out.checks.push_back(
          check_decomposition<GaussianMulCarrier>(carrier, rep, pair.B, nullptr, pairs, cfg.seed));
      out.checks.push_back(
          check_cs_reverse<GaussianMulCarrier>(carrier, pair.B, pairs, false, cfg.seed));
    } else if (thm == "thm5" || thm == "corA1") {
      out.checks = gaussian_suite(cfg.conjugate, spec, cfg.samples, false);
    } else if (thm == "corA2") {
      out.checks = gaussian_suite(cfg.conjugate, spec, cfg.samples, true);
    } else {
      throw ConfigError("verify does not support theorem " + thm + " on the gauss carrier");
    }
  } else if (pc.kind == "poly") {
    const PolyMulCarrier carrier;
    const BigRational point = parse_rational(cfg.c);
    if (thm == "thm1plus") {
      const auto rep = evaluation_rank1(point);
      const auto pairs = sample_pairs(carrier, spec, cfg.samples);
      out.checks.push_back(
          check_decomposition<PolyMulCarrier>(carrier, rep, rep.components[0], nullptr, pairs,
                                              cfg.seed));
      out.checks.push_back(
          check_cs_forward<PolyMulCarrier>(carrier, rep.components[0], pairs, cfg.seed));
    } else if (thm == "thm4" || thm == "cor4") {
      out.checks = derivation_suite(point, spec, cfg.samples);
    } else {
      throw ConfigError("verify does not support theorem " + thm + " on the poly carrier");
    }
  } else if (pc.kind == "rational") {
    const RationalMulCarrier carrier;
    if (thm == "thm1plus") {
      CarrierFunction<RationalMulCarrier> identity{
          "identity", [](const RationalMulCarrier&, const BigRational& x) { return x; }};
      const auto rep = make_rank_n<RationalMulCarrier>({identity});
      const auto pairs = sample_pairs(carrier, spec, cfg.samples);
      out.checks.push_back(
          check_decomposition<RationalMulCarrier>(carrier, rep, identity, nullptr, pairs, cfg.seed));
      out.checks.push_back(check_cs_forward<RationalMulCarrier>(carrier, identity, pairs, cfg.seed));
    } else if (thm == "thm2") {
      // The non-additive counterexample functions: the single-variable bound
      // holds for them even though the product inequality fails.
      const auto fn = cfg.q ? make_unit_perturbed_identity(parse_rational(*cfg.q))
                            : make_distance_from_unit();
      const auto elements = sample_elements(carrier, spec);
      out.checks.push_back(
          check_square_bound_at_unit<RationalMulCarrier>(carrier, fn, elements, false, cfg.seed));
    } else {
      throw ConfigError("verify does not support theorem " + thm + " on the rational carrier");
    }
  } else if (pc.kind == "reals-interval") {
    const auto pairs = interval_pairs(cfg);
    if (thm == "thm5" || thm == "cor5") {
      auto outcome = trig_chain_suite(pairs, cfg.precision_digits, cfg.precision_digits, cfg.seed);
      out.checks = std::move(outcome.checks);
    } else if (thm == "thm6" || thm == "cor6") {
      auto outcome =
          hyperbolic_chain_suite(pairs, cfg.precision_digits, cfg.precision_digits, cfg.seed);
      out.checks = std::move(outcome.checks);
    } else {
      throw ConfigError("verify does not support theorem " + thm + " on the interval carrier");
    }
  }
  out.verdict = aggregate_verdict(out.checks);
  return out;
}

inline Outcome run_search(const RunConfig& cfg, const ParsedCarrier& pc) {
  SampleSpec spec{cfg.seed, static_cast<int>(cfg.samples), cfg.height_bound, true};
  const Predicate predicate =
      parse_predicate(cfg.predicate.empty() ? default_predicate(cfg.theorem) : cfg.predicate);
  Outcome out;

  const auto resolve_target = [&]() -> std::string {
    if (cfg.target != "auto") return cfg.target;
    if (pc.kind == "quad") {
      const bool chain = predicate == Predicate::ChainPairedDifference ||
                         predicate == Predicate::ChainPairedSum ||
                         predicate == Predicate::IdentityDifference ||
                         predicate == Predicate::IdentitySum;
      return chain || !cfg.alpha ? std::string("thmb") : std::string("additive");
    }
    if (pc.kind == "gauss") return "gauss";
    if (pc.kind == "poly") return "derivation";
    if (pc.kind == "rational") return cfg.q ? "example-a" : "example-co";
    throw ConfigError("search is not supported on carrier kind " + pc.kind);
  };
  const std::string target = resolve_target();

  if (pc.kind == "quad") {
    const QuadMulCarrier carrier(pc.p);
    if (target == "thmb") {
      const auto pair = thmB_pair(pc.p);
      out.checks.push_back(search_counterexample<QuadMulCarrier>(carrier, predicate, pair.A_fn,
                                                                 &pair.B_fn, cfg.budget, spec));
    } else if (target == "additive") {
      const auto map = make_config_additive(cfg, pc.p);
      const auto fn = map.as_function("A");
      out.checks.push_back(
          search_counterexample<QuadMulCarrier>(carrier, predicate, fn, nullptr, cfg.budget, spec));
    } else {
      throw ConfigError("unknown search target '" + target + "' for quad carriers");
    }
  } else if (pc.kind == "gauss") {
    const GaussianMulCarrier carrier;
    const auto pair = gaussian_re_im(cfg.conjugate);
    out.checks.push_back(search_counterexample<GaussianMulCarrier>(carrier, predicate, pair.A,
                                                                   &pair.B, cfg.budget, spec));
  } else if (pc.kind == "poly") {
    const PolyMulCarrier carrier;
    const auto witness = derivation_witness(parse_rational(cfg.c));
    out.checks.push_back(search_counterexample<PolyMulCarrier>(carrier, predicate, witness.A,
                                                               &witness.eval_fn, cfg.budget, spec));
  } else if (pc.kind == "rational") {
    const RationalMulCarrier carrier;
    const auto fn = target == "example-a"
                        ? make_unit_perturbed_identity(parse_rational(cfg.q.value_or("1/2")))
                        : make_distance_from_unit();
    out.checks.push_back(
        search_counterexample<RationalMulCarrier>(carrier, predicate, fn, nullptr, cfg.budget, spec));
  } else {
    throw ConfigError("search is not supported on carrier kind " + pc.kind);
  }
  out.verdict = aggregate_verdict(out.checks);
  return out;
}

inline Outcome run_demo(const RunConfig& cfg, const ParsedCarrier& pc) {
  Outcome out;
  if (cfg.theorem == "thmB") {
    if (pc.kind != "quad") throw ConfigError("the discontinuity demo runs on quad:p carriers");
    const auto pair = thmB_pair(pc.p);
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
    for (const AdditiveMap* map : {&pair.A, &pair.B}) {
      const auto w = discontinuity_witness(*map, cfg.depth);
      const QuadField& field = map->field();
      nlohmann::ordered_json j;
      j["map"] = w.map_name;
      j["point_u"] = field.to_string(w.point_u);
      j["approximant"] = fraction_string(w.approximants.back());
      j["approximant_count"] = w.approximants.size();
      j["distance_bound"] = fraction_string(w.distance_bound);
      j["value_gap"] = field.to_string(w.value_gap);
      witnesses.push_back(j);
      out.lines.push_back("map " + w.map_name + ": y = 1 + " +
                          fraction_string(w.approximants.back() - 1) + " satisfies |y - u| < " +
                          fraction_string(w.distance_bound) + " (certified exactly) while |" +
                          w.map_name + "(y) - " + w.map_name + "(u)| = " +
                          field.to_string(w.value_gap));
    }
    out.extra["witnesses"] = witnesses;
    out.verdict = Verdict::Holds;
    return out;
  }
  if (cfg.theorem == "cor5" || cfg.theorem == "cor6") {
    if (pc.kind != "reals-interval") {
      throw ConfigError("the enclosure demo runs on the reals-interval carrier");
    }
    const std::vector<std::pair<BigRational, BigRational>> pairs = {
        {make_rational(1, 2), make_rational(1, 3)}};
    auto outcome = cfg.theorem == "cor5"
                       ? trig_chain_suite(pairs, cfg.precision_digits, cfg.precision_digits, cfg.seed)
                       : hyperbolic_chain_suite(pairs, cfg.precision_digits, cfg.precision_digits,
                                                cfg.seed);
    out.checks = std::move(outcome.checks);
    out.verdict = aggregate_verdict(out.checks);
    out.lines.push_back("chain certified at the pair (1/2, 1/3) with " +
                        std::to_string(cfg.precision_digits) + " digits");
    return out;
  }
  throw ConfigError("demo supports theorems thmB, cor5 and cor6");
}

inline Outcome run_classify(const RunConfig& cfg, const ParsedCarrier& pc) {
  if (pc.kind != "quad") throw ConfigError("classify runs on quad:p carriers");
  const auto map = make_config_additive(cfg, pc.p);
  const auto cls = classify_additive(map);
  Outcome out;
  out.verdict = cls.tag == ClassTag::None ? Verdict::Fails : Verdict::Holds;
  out.extra["classification"] = to_string(cls.tag);
  out.lines.push_back("classification: " + to_string(cls.tag));
  const QuadField& field = map.field();
  if (cls.tag == ClassTag::None) {
    CheckReport witness_report;
    witness_report.check_name = "classification-witnesses";
    witness_report.carrier = "quad:" + std::to_string(pc.p);
    witness_report.seed = cfg.seed;
    witness_report.verdict = Verdict::Fails;
    witness_report.sample_count = 2;
    witness_report.counterexamples = {
        {field.to_string(*cls.negative_witness), "-", field.to_string(map(field.square(*cls.negative_witness))),
         "0/1 + 0/1*sqrt(" + std::to_string(pc.p) + ")", "A(x^2) >= 0"},
        {field.to_string(*cls.positive_witness), "-", field.to_string(map(field.square(*cls.positive_witness))),
         "0/1 + 0/1*sqrt(" + std::to_string(pc.p) + ")", "A(x^2) <= 0"}};
    out.checks.push_back(std::move(witness_report));
    out.lines.push_back("A(x^2) < 0 at x = " + field.to_string(*cls.negative_witness));
    out.lines.push_back("A(x^2) > 0 at x = " + field.to_string(*cls.positive_witness));
  }
  return out;
}

inline Outcome run_equivalence(const RunConfig& cfg, const ParsedCarrier& pc) {
  if (pc.kind != "quad") throw ConfigError("equivalence checks run on quad:p carriers");
  SampleSpec spec{cfg.seed, static_cast<int>(cfg.samples), cfg.height_bound, true};
  const auto map = make_config_additive(cfg, pc.p);
  EquivalenceReport eq;
  if (cfg.theorem == "thm1") {
    eq = equivalence_check_thm1(map, spec);
  } else if (cfg.theorem == "thm2") {
    eq = equivalence_check_thm2(map, spec);
  } else {
    throw ConfigError("equivalence supports theorems thm1 and thm2");
  }
  Outcome out;
  out.checks = eq.details;
  out.verdict = eq.consistent ? Verdict::Holds : Verdict::Fails;
  out.extra["equivalence"] = to_json(eq);
  out.lines.push_back("left:  " + eq.left);
  out.lines.push_back("right: " + eq.right);
  out.lines.push_back(std::string("consistent: ") + (eq.consistent ? "true" : "false"));
  return out;
}

inline int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::Holds:
    case Verdict::HoldsWithinBudget:
      return 0;
    case Verdict::Fails:
      return 1;
    case Verdict::Inconclusive:
      return 2;
  }
  return 3;
}

}  // namespace detail

/// Runs one configured command and renders the report. Exit codes:
/// 0 holds / consistent, 1 counterexample found, 2 inconclusive at the
/// requested precision, 3 usage or configuration error (thrown as
/// ConfigError and mapped by the CLI entry point).
inline RunResult execute(const RunConfig& cfg) {
  const auto started = std::chrono::steady_clock::now();

  std::string carrier_name = cfg.carrier;
  if (carrier_name.empty()) carrier_name = detail::default_carrier(cfg.theorem);
  const auto pc = detail::parse_carrier(carrier_name);
  if (cfg.command != "classify") {
    detail::validate_compatibility(cfg.theorem, pc);
  }

  detail::Outcome outcome;
  if (cfg.command == "verify") {
    outcome = detail::run_verify(cfg, pc);
  } else if (cfg.command == "search") {
    outcome = detail::run_search(cfg, pc);
  } else if (cfg.command == "demo") {
    outcome = detail::run_demo(cfg, pc);
  } else if (cfg.command == "classify") {
    outcome = detail::run_classify(cfg, pc);
  } else if (cfg.command == "equivalence") {
    outcome = detail::run_equivalence(cfg, pc);
  } else {
    throw ConfigError("unknown command: " + cfg.command);
  }

  std::int64_t equality_points = 0;
  std::vector<Counterexample> counterexamples;
  for (const auto& check : outcome.checks) {
    equality_points += check.equality_points;
    for (const auto& ce : check.counterexamples) {
      if (counterexamples.size() >= 16) break;
      counterexamples.push_back(ce);
    }
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();

  RunResult result;
  result.exit_code = detail::exit_code_for(outcome.verdict);

  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = cfg.command;
    j["theorem"] = cfg.theorem;
    j["carrier"] = carrier_name;
    j["seed"] = cfg.seed;
    j["samples"] = cfg.samples;
    j["verdict"] = to_string(outcome.verdict);
    j["equality_points"] = equality_points;
    nlohmann::ordered_json ces = nlohmann::ordered_json::array();
    for (const auto& ce : counterexamples) ces.push_back(to_json(ce));
    j["counterexamples"] = ces;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& check : outcome.checks) checks.push_back(to_json(check));
    j["checks"] = checks;
    for (auto& [key, value] : outcome.extra.items()) j[key] = value;
    j["elapsed_ms"] = elapsed;
    j["version"] = kVersion;
    result.report = j.dump(2) + "\n";
  } else if (cfg.format == "text") {
    std::ostringstream os;
    os << "csineq " << cfg.command << "  theorem: " << cfg.theorem
       << "  carrier: " << carrier_name << "\n";
    os << "seed: " << cfg.seed << "  samples: " << cfg.samples
       << "  height-bound: " << cfg.height_bound << "\n";
    for (const auto& line : outcome.lines) os << line << "\n";
    for (const auto& check : outcome.checks) {
      os << check.check_name << ": " << to_string(check.verdict)
         << "  (samples=" << check.sample_count << ", equalities=" << check.equality_points;
      if (check.precision_digits) os << ", digits=" << *check.precision_digits;
      os << ")\n";
      for (const auto& [name, verdict] : check.sub_verdicts) {
        os << "  - " << name << ": " << to_string(verdict) << "\n";
      }
      for (const auto& ce : check.counterexamples) {
        os << "  ! " << ce.inequality << " violated at x=" << ce.x << ", y=" << ce.y
           << "  lhs=" << ce.lhs << "  rhs=" << ce.rhs << "\n";
      }
      if (check.note) os << "  note: " << *check.note << "\n";
    }
    os << "verdict: " << to_string(outcome.verdict) << "\n";
    os << "equality_points: " << equality_points << "\n";
    os << "elapsed_ms: " << elapsed << "\n";
    result.report = os.str();
  } else {
    throw ConfigError("unknown format: " + cfg.format + " (expected text or json)");
  }
  return result;
}

}  // namespace csineq
