#pragma once

#include "cliquebound/clique.hpp"
#include "cliquebound/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

// Brute-force reference implementations. They enumerate vertex subsets as
// bitmasks and test pairwise adjacency directly; nothing here touches the
// clique-engine recursions. All reject graphs with more than 20 vertices.
namespace cliquebound::oracle {

inline constexpr std::size_t kMaxOracleOrder = 20;

/// Clique flag for every vertex subset of a small graph, filled by a DP over
/// bitmasks: S is a clique iff S minus its lowest vertex v is a clique lying
/// inside N(v).
class SubsetTable {
public:
  explicit SubsetTable(const Graph &g);

  std::size_t n() const { return n_; }
  bool is_clique(std::uint32_t mask) const { return clique_[mask]; }
  /// Masks of all cliques, including the empty set.
  const std::vector<std::uint32_t> &cliques() const { return cliques_; }

  std::uint64_t count(std::size_t t) const;
  CliqueProfile profile() const;
  std::size_t alpha(std::uint32_t copy) const;

private:
  std::size_t n_;
  std::vector<bool> clique_;
  std::vector<std::uint32_t> cliques_;
};

std::uint64_t brute_count_cliques(const Graph &g, std::size_t t);
CliqueProfile brute_vertex_clique_numbers(const Graph &g);
/// Largest |S| over cliques S containing `copy`. `copy` must be a clique.
std::size_t brute_kirsch_nir_alpha(const Graph &g, std::span<const Vertex> copy);

} // namespace cliquebound::oracle
