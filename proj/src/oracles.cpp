#include "cliquebound/oracles.hpp"

#include "cliquebound/errors.hpp"

#include <algorithm>
#include <bit>

namespace cliquebound::oracle {

SubsetTable::SubsetTable(const Graph &g) : n_(g.n()) {
  if (n_ > kMaxOracleOrder)
    throw PreconditionError("oracle limited to n <= 20, got n = " + std::to_string(n_));
  std::vector<std::uint32_t> adj(n_, 0);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = 0; v < n_; ++v)
      if (g.adjacent(u, v)) adj[u] |= std::uint32_t{1} << v;

  const std::uint32_t end = std::uint32_t{1} << n_;
  clique_.assign(end, false);
  clique_[0] = true;
  cliques_.push_back(0);
  for (std::uint32_t mask = 1; mask < end; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::uint32_t rest = mask & (mask - 1);
    if (clique_[rest] && (rest & ~adj[low]) == 0) {
      clique_[mask] = true;
      cliques_.push_back(mask);
    }
  }
}

std::uint64_t SubsetTable::count(std::size_t t) const {
  return static_cast<std::uint64_t>(std::count_if(cliques_.begin(), cliques_.end(), [&](std::uint32_t m) {
    return static_cast<std::size_t>(std::popcount(m)) == t;
  }));
}

CliqueProfile SubsetTable::profile() const {
  CliqueProfile p{std::vector<std::size_t>(n_, 1), n_ ? 1u : 0u};
  for (auto mask : cliques_) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    for (Vertex v = 0; v < n_; ++v)
      if ((mask >> v) & 1u) p.c[v] = std::max(p.c[v], size);
    p.omega = std::max(p.omega, size);
  }
  return p;
}

std::size_t SubsetTable::alpha(std::uint32_t copy) const {
  if (!clique_[copy]) throw PreconditionError("copy is not a clique");
  std::size_t best = 0;
  for (auto mask : cliques_)
    if ((mask & copy) == copy) best = std::max(best, static_cast<std::size_t>(std::popcount(mask)));
  return best;
}

std::uint64_t brute_count_cliques(const Graph &g, std::size_t t) { return SubsetTable(g).count(t); }

CliqueProfile brute_vertex_clique_numbers(const Graph &g) { return SubsetTable(g).profile(); }

std::size_t brute_kirsch_nir_alpha(const Graph &g, std::span<const Vertex> copy) {
  SubsetTable table(g);
  std::uint32_t mask = 0;
  for (auto v : copy) {
    if (v >= g.n()) throw PreconditionError("vertex out of range");
    mask |= std::uint32_t{1} << v;
  }
  return table.alpha(mask);
}

} // namespace cliquebound::oracle
