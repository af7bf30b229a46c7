#include "peno/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace peno {

PersonalityProfile clamp_profile(PersonalityProfile p, const Clamps& clamps) {
  p.agreeableness = std::clamp(p.agreeableness, 0.0, 1.0);
  p.leadership = std::max(p.leadership, 0.0);
  p.neuroticism = std::max(p.neuroticism, clamps.sigma_min);
  p.openness = std::max(p.openness, clamps.b_min);
  return p;
}

NetworkSnapshot::NetworkSnapshot(int node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ < 0) throw std::domain_error("snapshot: negative node count");
  for (Edge& e : edges_) {
    if (e.i == e.j)
      throw std::domain_error("snapshot: self-loop at node " + std::to_string(e.i));
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.i < 0 || e.j >= node_count_)
      throw std::domain_error("snapshot: edge (" + std::to_string(e.i) + "," +
                              std::to_string(e.j) + ") out of range for N=" +
                              std::to_string(node_count_));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::domain_error("snapshot: duplicate edge");

  offsets_.assign(static_cast<std::size_t>(node_count_) + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[static_cast<std::size_t>(e.i) + 1];
    ++offsets_[static_cast<std::size_t>(e.j) + 1];
  }
  for (std::size_t n = 1; n < offsets_.size(); ++n) offsets_[n] += offsets_[n - 1];
  adjacency_.resize(edges_.size() * 2);
  std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(cursor[e.i]++)] = e.j;
    adjacency_[static_cast<std::size_t>(cursor[e.j]++)] = e.i;
  }
}

std::span<const int> NetworkSnapshot::neighbors(int node) const {
  if (node < 0 || node >= node_count_)
    throw std::domain_error("snapshot: node " + std::to_string(node) + " out of range");
  const auto begin = static_cast<std::size_t>(offsets_[node]);
  const auto end = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(node) + 1]);
  return {adjacency_.data() + begin, end - begin};
}

int NetworkSnapshot::degree(int node) const {
  return static_cast<int>(neighbors(node).size());
}

bool NetworkSnapshot::has_edge(int i, int j) const {
  if (i == j) return false;
  Edge probe{std::min(i, j), std::max(i, j)};
  if (probe.i < 0 || probe.j >= node_count_) return false;
  return std::binary_search(edges_.begin(), edges_.end(), probe);
}

}  // namespace peno
