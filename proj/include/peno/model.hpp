#pragma once

#include "peno/types.hpp"

#include <span>

namespace peno {

// Normalizes an angle into (-pi, pi]. Throws std::domain_error on
// non-finite input. Idempotent.
double wrap_angle(double theta);

// Leadership-weighted mean of wrapped trend differences to the node's
// neighbors:
//   sum_{(node,k) in G} (l_k / lambda) * wrap(theta_k - theta_node),
//   lambda = sum_{(node,k) in G} l_k.
// Returns 0 for an isolated node or when lambda == 0 (no influence source).
double social_impact(int node, const NetworkSnapshot& snapshot,
                     const Eigen::Ref<const Eigen::VectorXd>& trends,
                     std::span<const PersonalityProfile> profiles);

// One sampled trend update: wrap(theta + r * impact + sigma * noise), i.e.
// the draw of N(theta + r * impact, sigma^2) with the standard-normal
// `noise` injected by the caller.
double trend_step(double theta, double impact, const PersonalityProfile& profile,
                  double noise);

// Advances a position one moment along its trend at fixed speed:
// (z + v cos(theta), c + v sin(theta)).
Vec2 position_step(const OpinionState& state, const SystemParams& params);

// Log of the Gaussian affinity tie probability,
//   -(1/xi^2) * |x_i - x_j|^2 / (b_i * b_j),
// computed directly so extreme distances stay finite in log space.
double tie_log_probability(const Vec2& x_i, const Vec2& x_j, double b_i, double b_j,
                           const SystemParams& params);

// exp of the above; lies in (0, 1], equals 1 iff positions coincide, and is
// symmetric in the two nodes. Openness below `openness_floor` is a domain
// error; callers are expected to clamp first.
double tie_probability(const Vec2& x_i, const Vec2& x_j, double b_i, double b_j,
                       const SystemParams& params,
                       double openness_floor = Clamps{}.b_min);

}  // namespace peno
