#pragma once

#include "cliquebound/clique.hpp"
#include "cliquebound/graph.hpp"
#include "cliquebound/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace cliquebound {

using LocalizedBoundFn = std::function<Rational(const Graph &, std::size_t, const CliqueProfile &)>;

struct SelfcheckOptions {
  std::uint64_t seed = 1;
  /// Random simplex points per (graph, t) for the Phi checks.
  std::size_t samples = 20;
  /// Seeded G(n, p) graphs added to the named graphs and multipartite family.
  std::size_t random_graphs = 30;
  std::size_t t_max = 5;
  WorkBudget budget = {};
  /// Bound under test; swapping it lets the test suite confirm that a broken
  /// formula is caught.
  LocalizedBoundFn localized_bound;
};

struct SelfcheckResult {
  /// Checks run per invariant name.
  std::map<std::string, std::size_t> checks;
  /// Failure count per invariant name.
  std::map<std::string, std::size_t> failures;
  std::size_t budget_errors = 0;

  bool ok() const { return failures.empty() && budget_errors == 0; }
};

/// Runs the oracle-equivalence and invariant suites over the built-in corpus,
/// logging one line per failure and a PASS/FAIL line per invariant.
SelfcheckResult run_selfcheck(const SelfcheckOptions &options, std::ostream &log);

} // namespace cliquebound
