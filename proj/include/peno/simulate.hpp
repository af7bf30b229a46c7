#pragma once

#include "peno/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace peno {

struct NormalSpec {
  double mean = 0.0;
  double stddev = 1.0;
};

// Manual personality assignment for designated nodes, applied after random
// initialization. Unset fields keep their drawn value.
struct LeaderOverride {
  int node = 0;
  std::optional<double> leadership;
  std::optional<double> agreeableness;
  std::optional<double> openness;
};

// Scripted intervention: at `moment`, the listed nodes' trends are replaced
// by wrap(theta + pi).
struct TrendInversion {
  int moment = 0;
  std::vector<int> nodes;
};

struct SimulationConfig {
  int node_count = 300;
  int moments = 200;
  SystemParams system{0.6, 0.03};
  double init_position_mean = 4.0;
  NormalSpec agreeableness{0.6, 1.0};
  NormalSpec leadership{0.3, 1.0};
  NormalSpec neuroticism{1.0, 1.0};
  NormalSpec openness{0.3, 1.0};
  Clamps clamps;
  std::uint64_t seed = 0;
  std::vector<LeaderOverride> leader_overrides;
  std::optional<TrendInversion> trend_inversion;
};

// Throws std::invalid_argument on out-of-range settings.
void validate(const SimulationConfig& config);

// Draws profiles and moment-0 opinions. Positions are per-coordinate
// N(init_position_mean, 1), trends uniform on (-pi, pi], personalities from
// their configured normals and then clamped; leader overrides are applied
// last. Fully determined by config.seed.
std::pair<std::vector<PersonalityProfile>, std::vector<OpinionState>>
init_population(const SimulationConfig& config);

// Samples a fresh snapshot: every unordered pair is an independent
// Bernoulli draw at its affinity probability, addressed by (tie_key, i, j).
// Ties are never inherited from earlier moments.
NetworkSnapshot generate_ties(std::span<const OpinionState> opinions,
                              std::span<const PersonalityProfile> profiles,
                              const SystemParams& system, std::uint64_t tie_key,
                              int threads = 1);

// Advances every node one moment: the new trend mixes the old one with the
// social impact received over `prev_snapshot` plus personal noise, while the
// new position advances along the OLD trend.
std::vector<OpinionState> propagate_opinions(std::span<const OpinionState> prev,
                                             const NetworkSnapshot& prev_snapshot,
                                             std::span<const PersonalityProfile> profiles,
                                             const SystemParams& system,
                                             std::uint64_t noise_key, int threads = 1);

// Full evolution loop: initialize, then per moment propagate opinions (from
// moment 1 on) and regenerate ties, recording every frame.
EvolutionTrace run(const SimulationConfig& config, int threads = 1);

// Writes <stem>.nodes.csv (t,node,z,c,theta,r,l,sigma,b,degree) and
// <stem>.edges.csv (t,i,j), numbers at 9 significant digits.
void export_frames(const EvolutionTrace& trace, const std::string& stem);

}  // namespace peno
