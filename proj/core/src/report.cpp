#include "irrs/report.hpp"

#include <cmath>

#include <json.hpp>

namespace irrs {

using nlohmann::json;

namespace {

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json weighting_json(const EdgeWeighting& w) { return {{"k", w.k}, {"weights", w.w}}; }

json events_json(const EventReport& rep) {
  json fams = json::object();
  auto checks = rep.families();
  for (std::size_t f = 0; f < checks.size(); ++f)
    fams[kEventNames[f]] = {{"pass", checks[f]->pass},
                            {"worst_margin", finite_or_null(checks[f]->worst_margin)},
                            {"worst_index", checks[f]->worst_index}};
  return {{"pass", rep.pass}, {"families", fams}};
}

json config_json(const DenseConfig& cfg) {
  auto opt = [](const auto& o) { return o ? json(*o) : json(nullptr); };
  return {{"override_t", opt(cfg.plan.t)},
          {"override_lambda", opt(cfg.plan.lambda)},
          {"x_const", opt(cfg.sample.x_const)},
          {"y_prob", opt(cfg.sample.y_prob)},
          {"z_prob", opt(cfg.sample.z_prob)},
          {"slacks",
           {{"proxy_gap", cfg.slacks.proxy_gap},
            {"big_interval", cfg.slacks.big_interval},
            {"small_interval", cfg.slacks.small_interval},
            {"big_reserved", cfg.slacks.big_reserved},
            {"small_reserved", cfg.slacks.small_reserved},
            {"small_degree", cfg.slacks.small_degree}}},
          {"max_trials", cfg.max_trials},
          {"order", cfg.order == SmallOrder::ascending_id ? "ascending_id" : "descending_id"}};
}

json plan_json(const IntervalPlan& p) {
  return {{"K", p.K},
          {"n", p.n},
          {"delta", p.delta},
          {"t", p.t},
          {"lambda", p.lambda},
          {"margin", p.margin},
          {"interval_count", p.interval_count},
          {"t_from_formula", p.t_from_formula},
          {"lambda_from_formula", p.lambda_from_formula},
          {"delta_threshold", p.delta_threshold_value},
          {"delta_ok", p.delta_ok},
          {"lambda_ok", p.lambda_ok}};
}

}  // namespace

const char* outcome_name(SolveReport::Outcome o) {
  switch (o) {
    case SolveReport::Outcome::success: return "success";
    case SolveReport::Outcome::phase_failure: return "phase_failure";
    default: return "not_applicable";
  }
}

const char* outcome_name(ExactResult::Outcome o) {
  switch (o) {
    case ExactResult::Outcome::determined: return "determined";
    case ExactResult::Outcome::infinite: return "infinite";
    case ExactResult::Outcome::none_up_to_kmax: return "none_up_to_kmax";
    default: return "budget_exhausted";
  }
}

std::string solve_report_json(const SolveReport& rep, bool include_timing) {
  json j;
  j["outcome"] = outcome_name(rep.outcome);
  j["seed"] = rep.seed;
  j["K"] = rep.K;
  j["config"] = config_json(rep.config);
  j["plan"] = plan_json(rep.plan);
  json failures = json::object();
  for (std::size_t f = 0; f < kEventNames.size(); ++f)
    failures[kEventNames[f]] = rep.trials.family_failures[f];
  j["trials"] = {{"count", rep.trials.trials}, {"family_failures", failures}};
  j["accepted_trial"] = rep.accepted_trial;
  j["events"] = events_json(rep.events);
  if (rep.outcome != SolveReport::Outcome::success)
    j["failure"] = {{"phase", rep.failure.phase},
                    {"kind", rep.failure.kind},
                    {"detail", rep.failure.detail},
                    {"vertex", rep.failure.vertex},
                    {"interval", rep.failure.interval}};
  j["verified"] = rep.verified;
  j["weighting"] = rep.weighting ? weighting_json(*rep.weighting) : json(nullptr);
  j["big_assigned"] = rep.big_assigned;
  j["big_raised"] = rep.big_raised;
  j["small_order"] = rep.small_order;
  j["small_targets"] = rep.small_targets;
  if (include_timing) j["timing"] = {{"wall_ms", rep.wall_ms}};
  return j.dump(2);
}

std::string exact_result_json(const ExactResult& res, bool include_timing) {
  json j;
  j["outcome"] = outcome_name(res.outcome);
  j["strength"] =
      res.outcome == ExactResult::Outcome::determined ? json(res.strength) : json(nullptr);
  j["stopped_at_k"] = res.stopped_at_k;
  j["nodes"] = res.nodes;
  j["witness"] = res.witness ? weighting_json(*res.witness) : json(nullptr);
  if (include_timing) j["timing"] = {{"elapsed_ms", res.elapsed_ms}};
  return j.dump(2);
}

}  // namespace irrs
