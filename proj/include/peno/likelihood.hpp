#pragma once

#include "peno/types.hpp"

#include <vector>

namespace peno {

// Tie probabilities are capped here before log(1 - p) so coincident
// positions stay finite.
inline constexpr double kMaxTieProbability = 1.0 - 1e-12;

// Latent state of the generative model: per-node profiles, free initial
// positions, and the full trend table. Positions at moments >= 1 are never
// free; they are derived from the initial positions and trends through the
// fixed-velocity chain and re-derived on every mutation, so the consistency
// invariant |x^{t+1} - x^t| = v holds at all times.
class ModelParams {
 public:
  ModelParams() = default;
  ModelParams(SystemParams system, std::vector<PersonalityProfile> profiles,
              Eigen::Matrix2Xd initial_positions, Eigen::MatrixXd trends);

  int node_count() const noexcept { return static_cast<int>(profiles_.size()); }
  int moment_count() const noexcept { return static_cast<int>(trends_.cols()); }

  const SystemParams& system() const noexcept { return system_; }
  const std::vector<PersonalityProfile>& profiles() const noexcept { return profiles_; }
  const PersonalityProfile& profile(int node) const {
    return profiles_[static_cast<std::size_t>(node)];
  }
  // Trainer-side mutation; the caller owns clamping.
  PersonalityProfile& profile(int node) { return profiles_[static_cast<std::size_t>(node)]; }

  double trend(int node, int t) const { return trends_(node, t); }
  // N-vector of trends at one moment.
  Eigen::Ref<const Eigen::VectorXd> trends_at(int t) const { return trends_.col(t); }

  Vec2 position(int node, int t) const {
    return positions_[static_cast<std::size_t>(t)].col(node);
  }
  // 2 x N positions at one moment.
  const Eigen::Matrix2Xd& positions(int t) const {
    return positions_[static_cast<std::size_t>(t)];
  }

  // Wraps the angle and re-propagates the node's positions after moment t.
  void set_trend(int node, int t, double theta);
  // Translates the node's whole position chain.
  void shift_initial_position(int node, const Vec2& delta);
  void set_initial_position(int node, const Vec2& p);

 private:
  void repropagate(int node, int from_t);

  SystemParams system_;
  std::vector<PersonalityProfile> profiles_;
  Eigen::MatrixXd trends_;                   // N x T
  std::vector<Eigen::Matrix2Xd> positions_;  // T entries, 2 x N each
};

// Social impact received by `node` during moment t, i.e. over snapshot
// G^t with the trends at t. Feeds the t -> t+1 transition.
double impact_at(const ModelParams& params, const SnapshotSeries& observed, int node, int t);

// Joint log-probability of the observed snapshots under the model:
// Bernoulli tie terms for every pair at every moment plus Gaussian trend
// transition terms from moment 1 on. Trend residuals are taken on the
// nearest branch (wrapped into (-pi, pi]) since trends are circular.
double log_likelihood(const ModelParams& params, const SnapshotSeries& observed,
                      int threads = 1);

// The two addends, exposed for diagnostics and targeted gradient checks.
double tie_log_likelihood(const ModelParams& params, const SnapshotSeries& observed,
                          int threads = 1);
double trend_log_likelihood(const ModelParams& params, const SnapshotSeries& observed);

}  // namespace peno
