#pragma once

#include "cliquebound/graph.hpp"

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace cliquebound::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInvariantFailure = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
  /// `phi` only: Phi(uniform) > 0, i.e. the localized bound is strict.
  kStrict = 4,
};

/// A graph read from disk. `index` is the 0-based line for multi-graph .g6 files.
struct LoadedGraph {
  std::string file;
  std::size_t index = 0;
  Graph graph;
};

/// FNV-1a 64 over the canonical graph6 string, as 16 lowercase hex digits.
std::string graph_hash(const Graph &g);

/// Expands directories (non-recursive, *.g6 and *.el, sorted by name) and reads
/// every graph. Files ending in .el are edge lists; anything else is graph6 with
/// one graph per non-empty line. Throws std::runtime_error or ParseError.
std::vector<std::filesystem::path> expand_inputs(const std::vector<std::string> &paths);
std::vector<LoadedGraph> load_graphs(const std::filesystem::path &file);

/// Entry point shared by the executable and the tests.
int run(int argc, char **argv, std::ostream &out, std::ostream &err);
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace cliquebound::cli
