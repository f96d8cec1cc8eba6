#pragma once

#include "cliquebound/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cliquebound {

struct CorpusEntry {
  std::string name;
  Graph graph;
};

/// Small hand-picked graphs: complete graphs, cycles, paths, paw, star,
/// diamond, bowtie, wheel, Petersen, a triangle plus an isolated vertex, etc.
std::vector<CorpusEntry> named_graphs();

/// K_{s x r} for s in {1,2,3}, r in {2,3,4}, s*r <= 12.
std::vector<CorpusEntry> regular_multipartite_family();

/// `count` seeded G(n, p) graphs. Graph k uses n = 8 + k % 7,
/// p = {1/4, 1/2, 3/4}[(k / 7) % 3] and seed base_seed + k.
std::vector<CorpusEntry> random_sweep(std::size_t count = 200, std::uint64_t base_seed = 20240601);

/// named_graphs + regular_multipartite_family + random_sweep(count, base_seed).
std::vector<CorpusEntry> default_corpus(std::size_t random_count = 200, std::uint64_t base_seed = 20240601);

} // namespace cliquebound
