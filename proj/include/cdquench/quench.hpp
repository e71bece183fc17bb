#pragma once

#include <optional>
#include <string>

namespace cdq {

/// Where lambda is sampled within Trotter step m of M:
/// left = (m-1)dt/T, mid = (m-1/2)dt/T, right = m dt/T.
enum class EvalPolicy { left, mid, right };

std::string eval_policy_name(EvalPolicy p);
EvalPolicy parse_eval_policy(const std::string& name);

/// Quench parameters. Time is measured in units of 1/J and the schedule is
/// linear, lambda(t) = t/T, so lambda_dot = 1/T.
struct QuenchConfig {
  double g = 1.0;
  double J = 1.0;
  double T = 0.0;
  int steps = 1;        // Trotter step count M
  double dt = 0.0;      // T / M
  bool cd = false;
  EvalPolicy eval_policy = EvalPolicy::mid;
  std::optional<int> step_cap;  // overrides the default cap of 6

  void check() const;  // throws std::invalid_argument on inconsistent fields
};

/// The Methods step policy: M = round(T/dt_requested) (min 1), capped at
/// `cap` (default 6) once T >= 0.8/J; dt = T/M.
struct StepPolicyResult {
  int steps;
  double dt;
};
StepPolicyResult apply_step_policy(double T, double dt_requested, int cap = 6);

QuenchConfig make_quench_config(double g, double J, double T, double dt_requested,
                                bool cd, EvalPolicy policy = EvalPolicy::mid,
                                std::optional<int> step_cap = std::nullopt);

}  // namespace cdq
