#include "peno/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace peno {

namespace {
constexpr double kPi = std::numbers::pi;
}

double wrap_angle(double theta) {
  if (!std::isfinite(theta)) throw std::domain_error("wrap_angle: non-finite angle");
  // remainder() lands in [-pi, pi]; fold the open end onto +pi.
  double w = std::remainder(theta, 2.0 * kPi);
  if (w <= -kPi) w = kPi;
  return w;
}

double social_impact(int node, const NetworkSnapshot& snapshot,
                     const Eigen::Ref<const Eigen::VectorXd>& trends,
                     std::span<const PersonalityProfile> profiles) {
  const int n = snapshot.node_count();
  if (node < 0 || node >= n)
    throw std::domain_error("social_impact: node " + std::to_string(node) + " out of range");
  if (trends.size() != n || std::ssize(profiles) != n)
    throw std::domain_error("social_impact: trends/profiles size mismatch");

  double weight_sum = 0.0;
  double weighted_delta = 0.0;
  for (int k : snapshot.neighbors(node)) {
    const double l = profiles[static_cast<std::size_t>(k)].leadership;
    weight_sum += l;
    weighted_delta += l * wrap_angle(trends[k] - trends[node]);
  }
  if (weight_sum <= 0.0) return 0.0;
  return weighted_delta / weight_sum;
}

double trend_step(double theta, double impact, const PersonalityProfile& profile,
                  double noise) {
  return wrap_angle(theta + profile.agreeableness * impact +
                    profile.neuroticism * noise);
}

Vec2 position_step(const OpinionState& state, const SystemParams& params) {
  return state.position +
         params.velocity * Vec2(std::cos(state.trend), std::sin(state.trend));
}

double tie_log_probability(const Vec2& x_i, const Vec2& x_j, double b_i, double b_j,
                           const SystemParams& params) {
  return -(x_i - x_j).squaredNorm() / (params.xi * params.xi * b_i * b_j);
}

double tie_probability(const Vec2& x_i, const Vec2& x_j, double b_i, double b_j,
                       const SystemParams& params, double openness_floor) {
  if (!(b_i >= openness_floor) || !(b_j >= openness_floor))
    throw std::domain_error("tie_probability: openness below floor");
  return std::exp(tie_log_probability(x_i, x_j, b_i, b_j, params));
}

}  // namespace peno
