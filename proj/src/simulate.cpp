#include "peno/simulate.hpp"

#include "peno/errors.hpp"
#include "peno/model.hpp"
#include "peno/parallel.hpp"
#include "peno/rng.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <string>

namespace peno {

namespace {

constexpr double kPi = std::numbers::pi;

void check(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("simulate config: " + what);
}

double pair_uniform(std::uint64_t tie_key, int i, int j) {
  return uniform_at(derive_key(tie_key, static_cast<std::uint64_t>(i)),
                    static_cast<std::uint64_t>(j));
}

void apply_inversion(const SimulationConfig& config, int moment,
                     std::vector<OpinionState>& opinions) {
  if (!config.trend_inversion || config.trend_inversion->moment != moment) return;
  for (int node : config.trend_inversion->nodes) {
    auto& state = opinions.at(static_cast<std::size_t>(node));
    state.trend = wrap_angle(state.trend + kPi);
  }
}

}  // namespace

void validate(const SimulationConfig& config) {
  check(config.node_count >= 1, "node_count must be >= 1");
  check(config.moments >= 1, "moments must be >= 1");
  check(std::isfinite(config.system.xi) && config.system.xi > 0, "xi must be > 0");
  check(std::isfinite(config.system.velocity) && config.system.velocity > 0,
        "velocity must be > 0");
  check(std::isfinite(config.init_position_mean), "init_position_mean must be finite");
  for (const NormalSpec* spec :
       {&config.agreeableness, &config.leadership, &config.neuroticism, &config.openness}) {
    check(std::isfinite(spec->mean), "distribution mean must be finite");
    check(std::isfinite(spec->stddev) && spec->stddev >= 0,
          "distribution stddev must be >= 0");
  }
  check(config.clamps.sigma_min > 0, "sigma_min must be > 0");
  check(config.clamps.b_min > 0, "b_min must be > 0");
  for (const auto& o : config.leader_overrides)
    check(o.node >= 0 && o.node < config.node_count, "leader override node out of range");
  if (config.trend_inversion) {
    check(config.trend_inversion->moment >= 0 &&
              config.trend_inversion->moment < config.moments,
          "trend inversion moment out of range");
    for (int node : config.trend_inversion->nodes)
      check(node >= 0 && node < config.node_count, "trend inversion node out of range");
  }
}

std::pair<std::vector<PersonalityProfile>, std::vector<OpinionState>>
init_population(const SimulationConfig& config) {
  validate(config);
  const int n = config.node_count;
  std::vector<PersonalityProfile> profiles(static_cast<std::size_t>(n));
  std::vector<OpinionState> opinions(static_cast<std::size_t>(n));

  for (int node = 0; node < n; ++node) {
    CounterRng rng(stream_key(config.seed, Stream::kInit, static_cast<std::uint64_t>(node)));
    OpinionState& state = opinions[static_cast<std::size_t>(node)];
    state.position.x() = config.init_position_mean + rng.normal();
    state.position.y() = config.init_position_mean + rng.normal();
    state.trend = kPi * (1.0 - 2.0 * rng.uniform01());  // uniform on (-pi, pi]

    PersonalityProfile raw;
    raw.agreeableness = config.agreeableness.mean + config.agreeableness.stddev * rng.normal();
    raw.leadership = config.leadership.mean + config.leadership.stddev * rng.normal();
    raw.neuroticism = config.neuroticism.mean + config.neuroticism.stddev * rng.normal();
    raw.openness = config.openness.mean + config.openness.stddev * rng.normal();
    profiles[static_cast<std::size_t>(node)] = clamp_profile(raw, config.clamps);
  }

  for (const LeaderOverride& o : config.leader_overrides) {
    PersonalityProfile& p = profiles[static_cast<std::size_t>(o.node)];
    if (o.leadership) p.leadership = *o.leadership;
    if (o.agreeableness) p.agreeableness = *o.agreeableness;
    if (o.openness) p.openness = *o.openness;
    p = clamp_profile(p, config.clamps);
  }
  return {std::move(profiles), std::move(opinions)};
}

NetworkSnapshot generate_ties(std::span<const OpinionState> opinions,
                              std::span<const PersonalityProfile> profiles,
                              const SystemParams& system, std::uint64_t tie_key,
                              int threads) {
  if (opinions.size() != profiles.size())
    throw std::domain_error("generate_ties: opinions/profiles size mismatch");
  const int n = static_cast<int>(opinions.size());

  std::vector<std::vector<Edge>> rows(static_cast<std::size_t>(n));
  parallel_for(n, threads, [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      auto& row = rows[static_cast<std::size_t>(i)];
      const Vec2& x_i = opinions[static_cast<std::size_t>(i)].position;
      const double b_i = profiles[static_cast<std::size_t>(i)].openness;
      for (int j = i + 1; j < n; ++j) {
        const double p = tie_probability(x_i, opinions[static_cast<std::size_t>(j)].position,
                                         b_i, profiles[static_cast<std::size_t>(j)].openness,
                                         system, 0.0);
        if (pair_uniform(tie_key, i, j) < p) row.push_back(Edge{i, j});
      }
    }
  });

  std::vector<Edge> edges;
  for (const auto& row : rows) edges.insert(edges.end(), row.begin(), row.end());
  return NetworkSnapshot(n, std::move(edges));
}

std::vector<OpinionState> propagate_opinions(std::span<const OpinionState> prev,
                                             const NetworkSnapshot& prev_snapshot,
                                             std::span<const PersonalityProfile> profiles,
                                             const SystemParams& system,
                                             std::uint64_t noise_key, int threads) {
  const int n = static_cast<int>(prev.size());
  if (prev_snapshot.node_count() != n || std::ssize(profiles) != n)
    throw std::domain_error("propagate_opinions: size mismatch");

  Eigen::VectorXd trends(n);
  for (int i = 0; i < n; ++i) trends[i] = prev[static_cast<std::size_t>(i)].trend;

  std::vector<OpinionState> next(prev.size());
  parallel_for(n, threads, [&](int begin, int end) {
    for (int node = begin; node < end; ++node) {
      const auto& profile = profiles[static_cast<std::size_t>(node)];
      const double impact = social_impact(node, prev_snapshot, trends, profiles);
      CounterRng rng(derive_key(noise_key, static_cast<std::uint64_t>(node)));
      OpinionState& state = next[static_cast<std::size_t>(node)];
      state.trend = trend_step(trends[node], impact, profile, rng.normal());
      state.position = position_step(prev[static_cast<std::size_t>(node)], system);
    }
  });
  return next;
}

EvolutionTrace run(const SimulationConfig& config, int threads) {
  validate(config);
  EvolutionTrace trace;
  auto [profiles, opinions] = init_population(config);
  trace.profiles = std::move(profiles);
  trace.frames.reserve(static_cast<std::size_t>(config.moments));

  apply_inversion(config, 0, opinions);
  for (int t = 0; t < config.moments; ++t) {
    if (t > 0) {
      opinions = propagate_opinions(opinions, trace.frames.back().snapshot, trace.profiles,
                                    config.system,
                                    stream_key(config.seed, Stream::kTrendNoise,
                                               static_cast<std::uint64_t>(t)),
                                    threads);
      apply_inversion(config, t, opinions);
    }
    NetworkSnapshot snapshot = generate_ties(
        opinions, trace.profiles, config.system,
        stream_key(config.seed, Stream::kTies, static_cast<std::uint64_t>(t)), threads);
    trace.frames.push_back(EvolutionFrame{opinions, std::move(snapshot)});
  }
  return trace;
}

void export_frames(const EvolutionTrace& trace, const std::string& stem) {
  const std::string nodes_path = stem + ".nodes.csv";
  const std::string edges_path = stem + ".edges.csv";
  std::ofstream nodes(nodes_path);
  if (!nodes) throw IoError("cannot open " + nodes_path + " for writing");
  std::ofstream edges(edges_path);
  if (!edges) throw IoError("cannot open " + edges_path + " for writing");

  char buf[512];
  nodes << "t,node,z,c,theta,r,l,sigma,b,degree\n";
  edges << "t,i,j\n";
  for (int t = 0; t < trace.moment_count(); ++t) {
    const EvolutionFrame& frame = trace.frames[static_cast<std::size_t>(t)];
    for (int node = 0; node < trace.node_count(); ++node) {
      const auto& s = frame.opinions[static_cast<std::size_t>(node)];
      const auto& p = trace.profiles[static_cast<std::size_t>(node)];
      std::snprintf(buf, sizeof buf, "%d,%d,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%d\n", t,
                    node, s.position.x(), s.position.y(), s.trend, p.agreeableness,
                    p.leadership, p.neuroticism, p.openness, frame.snapshot.degree(node));
      nodes << buf;
    }
    for (const Edge& e : frame.snapshot.edges()) {
      std::snprintf(buf, sizeof buf, "%d,%d,%d\n", t, e.i, e.j);
      edges << buf;
    }
  }
  if (!nodes.good()) throw IoError("write failed: " + nodes_path);
  if (!edges.good()) throw IoError("write failed: " + edges_path);
}

}  // namespace peno
