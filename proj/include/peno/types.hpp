#pragma once

#include <Eigen/Dense>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace peno {

using Vec2 = Eigen::Vector2d;

// Opinions are planar; the serialized formats reserve a dimension field but
// every operation below assumes 2.
inline constexpr int kOpinionDim = 2;

// Floors applied to personality fields wherever profiles are created or
// updated. The trend-noise density degenerates at sigma = 0 and the tie
// probability divides by openness, hence the strictly positive minima.
struct Clamps {
  double sigma_min = 1e-3;
  double b_min = 1e-3;
};

// Per-node, time-invariant traits:
//   agreeableness  r in [0, 1]   conformity weight on received impact
//   leadership     l >= 0        influence weight exerted on neighbors
//   neuroticism    sigma > 0     standard deviation of trend noise
//   openness       b > 0         willingness to form ties
struct PersonalityProfile {
  double agreeableness = 0.5;
  double leadership = 1.0;
  double neuroticism = 1.0;
  double openness = 1.0;
};

PersonalityProfile clamp_profile(PersonalityProfile p, const Clamps& clamps = {});

// System-wide constants: xi scales the overall tie formation difficulty,
// velocity is the fixed per-moment opinion speed.
struct SystemParams {
  double xi = 0.6;
  double velocity = 3e-3;
};

// One node's opinion at one moment: position and the direction (radians,
// kept in (-pi, pi]) it will move next.
struct OpinionState {
  Vec2 position = Vec2::Zero();
  double trend = 0.0;
};

// Undirected edge, stored with i < j.
struct Edge {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable undirected simple graph over nodes 0..node_count-1.
// Construction normalizes endpoint order, sorts edges, builds a CSR
// adjacency, and rejects self-loops, duplicates, and out-of-range indices.
class NetworkSnapshot {
 public:
  NetworkSnapshot() = default;
  NetworkSnapshot(int node_count, std::vector<Edge> edges);

  int node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const int> neighbors(int node) const;
  int degree(int node) const;
  bool has_edge(int i, int j) const;

  friend bool operator==(const NetworkSnapshot& a, const NetworkSnapshot& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> adjacency_;  // concatenated neighbor lists
  std::vector<int> offsets_;    // size node_count_ + 1
};

// Time series of graphs over a fixed node set, with per-moment labels and
// an optional map from node index to external id.
struct SnapshotSeries {
  int node_count = 0;
  std::vector<std::string> labels;
  std::vector<NetworkSnapshot> snapshots;
  std::vector<std::string> node_ids;  // empty, or one id per node

  int moment_count() const noexcept { return static_cast<int>(snapshots.size()); }
};

// One recorded moment of a simulation.
struct EvolutionFrame {
  std::vector<OpinionState> opinions;
  NetworkSnapshot snapshot;
};

// Full simulation output: fixed profiles plus one frame per moment.
struct EvolutionTrace {
  std::vector<PersonalityProfile> profiles;
  std::vector<EvolutionFrame> frames;

  int node_count() const noexcept { return static_cast<int>(profiles.size()); }
  int moment_count() const noexcept { return static_cast<int>(frames.size()); }
};

}  // namespace peno
