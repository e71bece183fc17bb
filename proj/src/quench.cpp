#include "cdquench/quench.hpp"

#include <cmath>
#include <stdexcept>

namespace cdq {

std::string eval_policy_name(EvalPolicy p) {
  switch (p) {
    case EvalPolicy::left: return "left";
    case EvalPolicy::mid: return "mid";
    case EvalPolicy::right: return "right";
  }
  return "?";
}

EvalPolicy parse_eval_policy(const std::string& name) {
  if (name == "left") return EvalPolicy::left;
  if (name == "mid") return EvalPolicy::mid;
  if (name == "right") return EvalPolicy::right;
  throw std::invalid_argument("unknown eval policy \"" + name + "\"");
}

void QuenchConfig::check() const {
  if (g <= 0 || J <= 0) throw std::invalid_argument("quench config: g, J must be positive");
  if (T <= 0) throw std::invalid_argument("quench config: T must be positive");
  if (steps < 1) throw std::invalid_argument("quench config: steps must be >= 1");
  if (std::abs(dt * steps - T) > 1e-12)
    throw std::invalid_argument("quench config: dt * steps != T");
  if (step_cap && steps > *step_cap)
    throw std::invalid_argument("quench config: steps exceed step cap");
}

StepPolicyResult apply_step_policy(double T, double dt_requested, int cap) {
  if (T <= 0 || dt_requested <= 0)
    throw std::invalid_argument("step policy: T and dt_requested must be positive");
  int m = static_cast<int>(std::lround(T / dt_requested));
  if (m < 1) m = 1;
  if (T >= 0.8 && m > cap) m = cap;  // step-count freeze, T in units of 1/J
  return {m, T / m};
}

QuenchConfig make_quench_config(double g, double J, double T, double dt_requested,
                                bool cd, EvalPolicy policy,
                                std::optional<int> step_cap) {
  const auto [m, dt] = apply_step_policy(T, dt_requested, step_cap.value_or(6));
  QuenchConfig cfg;
  cfg.g = g;
  cfg.J = J;
  cfg.T = T;
  cfg.steps = m;
  cfg.dt = dt;
  cfg.cd = cd;
  cfg.eval_policy = policy;
  cfg.step_cap = step_cap;
  cfg.check();
  return cfg;
}

}  // namespace cdq
