#pragma once

#include "cliquebound/clique.hpp"
#include "cliquebound/graph.hpp"
#include "cliquebound/rational.hpp"

#include <optional>
#include <vector>

namespace cliquebound {

/// Every bound for one (G, t) next to the true clique count. All values exact.
struct BoundReport {
  std::size_t t = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t omega = 0;
  Integer true_count;

  /// n^{t-1} * sum_v C(c(v), t) / c(v)^t
  Rational localized_zykov;
  /// C(r, t) (n / r)^t with r = omega.
  Rational zykov_classical;
  /// n^2 (r - 1) / (2r) with r = omega; present only for t = 2.
  std::optional<Rational> turan;

  /// sum over edges of w(e) / (w(e) - 1), to be compared with n^2 / 2.
  Rational edge_localized_sum;
  /// (n/2) sum_v (c(v) - 1) / c(v) before and after the floor.
  Rational vertex_localized_turan_value;
  Integer vertex_localized_turan;

  /// sum over t-cliques T of alpha(T)^t / C(alpha(T), t), to be compared with n^t.
  Rational kirsch_nir_sum;
  /// kirsch_nir_sum == n^t. Informational only.
  bool kirsch_nir_equal = false;

  bool is_tight = false;
  /// t > omega: both sides of the localized bound are zero, so tightness
  /// carries no structural information.
  bool degenerate = false;
  std::optional<PartSpec> extremal_certificate;
  /// For non-degenerate t: is_tight == extremal_certificate.has_value().
  bool characterization_consistent = true;
};

/// t >= 2; PreconditionError otherwise.
Rational localized_zykov_bound(const Graph &g, std::size_t t, const CliqueProfile &profile);

/// C(r, t) (n / r)^t. Requires t >= 2 and r >= 1.
Rational zykov_bound(std::size_t n, std::size_t r, std::size_t t);

/// n^2 (r - 1) / (2r). Requires r >= 1.
Rational turan_bound(std::size_t n, std::size_t r);

Rational edge_localized_turan_sum(const Graph &g, WorkBudget budget = {});

Rational vertex_localized_turan_value(const Graph &g, const CliqueProfile &profile);
Integer vertex_localized_turan_bound(const Graph &g, const CliqueProfile &profile);

Rational kirsch_nir_sum(const Graph &g, std::size_t t, WorkBudget budget = {});

/// Part sizes when g is complete multipartite with all parts the same size.
/// K_n gives n parts of size 1; an edgeless graph gives the single part [n].
std::optional<PartSpec> is_regular_complete_multipartite(const Graph &g);

BoundReport bound_report(const Graph &g, std::size_t t, WorkBudget budget = {});

/// Same, reusing a profile computed by the caller.
BoundReport bound_report(const Graph &g, std::size_t t, const CliqueProfile &profile, WorkBudget budget = {});

} // namespace cliquebound
