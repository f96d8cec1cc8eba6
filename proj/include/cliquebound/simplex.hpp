#pragma once

#include "cliquebound/clique.hpp"
#include "cliquebound/graph.hpp"
#include "cliquebound/rational.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace cliquebound {

/// Exact point of the standard simplex: x_v >= 0 and sum x_v = 1.
class SimplexPoint {
public:
  /// Throws PreconditionError unless every coordinate is >= 0 and they sum to 1.
  static SimplexPoint from_coordinates(std::vector<Rational> x);
  static SimplexPoint uniform(std::size_t n);
  /// Uniform on a nonempty subset.
  static SimplexPoint uniform_on(const VertexSet &s);
  /// All mass on vertex v.
  static SimplexPoint concentrated(std::size_t n, Vertex v);

  std::size_t dimension() const { return x_.size(); }
  const Rational &operator[](Vertex v) const { return x_[v]; }
  const std::vector<Rational> &coordinates() const { return x_; }
  const VertexSet &support() const { return support_; }
  std::size_t support_size() const { return support_.count(); }

  friend bool operator==(const SimplexPoint &a, const SimplexPoint &b) { return a.x_ == b.x_; }

private:
  SimplexPoint(std::vector<Rational> x, VertexSet support) : x_(std::move(x)), support_(std::move(support)) {}
  friend SimplexPoint transfer(const SimplexPoint &, Vertex, Vertex, const Rational &);

  std::vector<Rational> x_;
  VertexSet support_;
};

/// A(G,x), B(G,x) and their difference.
struct PhiEvaluation {
  Rational a;
  Rational b;
  Rational phi;
};

/// Sum over k-cliques K inside `within` (restricted to supp(x)) of prod_{v in K} x_v.
/// k = 0 gives 1.
Rational clique_polynomial(const Graph &g, const VertexSet &within, std::size_t k, const SimplexPoint &x);

/// A = sum_v x_v C(c(v), t) / c(v)^t and B = clique_polynomial over all t-cliques.
PhiEvaluation eval_phi(const Graph &g, std::size_t t, const CliqueProfile &profile, const SimplexPoint &x);

/// Rate of change of Phi per unit mass moved from j to i when i and j are not
/// adjacent:
///   (w(c(i)) - w(c(j))) - (P_{t-1}(N(i)) - P_{t-1}(N(j)))
/// where w(c) = C(c, t)/c^t and P_{t-1}(S) is the (t-1)-clique polynomial on S.
Rational delta_ij(const Graph &g, std::size_t t, const CliqueProfile &profile, const SimplexPoint &x, Vertex i,
                  Vertex j);

/// x + epsilon (e_i - e_j). Requires i != j and 0 <= epsilon <= x_j.
SimplexPoint transfer(const SimplexPoint &x, Vertex i, Vertex j, const Rational &epsilon);

struct TransferStep {
  Vertex i = 0; ///< receives mass
  Vertex j = 0; ///< donates all of its mass
  Rational epsilon;
  Rational delta_ij;
  Rational phi_before;
  Rational phi_after;
};

struct DescentTrace {
  SimplexPoint start;
  std::vector<TransferStep> steps;
  SimplexPoint end;
  Rational phi_start;
  Rational phi_end;
  bool end_support_is_clique = false;
  /// Order of the clique induced by the end support.
  std::size_t omega_end = 0;
};

/// Merges non-adjacent support pairs until the support induces a clique.
///
/// Each step takes the lexicographically first non-adjacent pair (a, b), a < b,
/// of the current support. With d = delta_ab, the whole mass of b moves to a
/// when d <= 0, otherwise the whole mass of a moves to b. Phi changes by
/// epsilon * delta for the chosen orientation, which is never positive, and the
/// support loses one vertex per step. phi_after is computed by full evaluation
/// and checked against that linear prediction (InvariantViolation on mismatch).
DescentTrace descend_to_clique_support(const Graph &g, std::size_t t, const CliqueProfile &profile,
                                       const SimplexPoint &x0);

/// Deterministic random points. Each point draws its support by a fair coin per
/// vertex (falling back to one uniformly chosen vertex if the draw is empty),
/// then gives each support vertex weight 1 + (r >> 48) for a fresh 64-bit draw r,
/// and normalizes. The generator is std::mt19937_64.
class SimplexSampler {
public:
  SimplexSampler(std::size_t n, std::uint64_t seed) : n_(n), rng_(seed) {}
  SimplexPoint next();
  /// Uniform integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);

private:
  std::size_t n_;
  std::mt19937_64 rng_;
};

struct NonnegativityReport {
  Rational min_phi;
  /// "uniform", "vertex:<v>" or "sample:<k>".
  std::string argmin;
  Rational phi_uniform;
  std::size_t points_evaluated = 0;
};

/// Minimum of Phi over the uniform point, every vertex-concentrated point and
/// `samples` SimplexSampler points. Throws InvariantViolation if it is negative.
NonnegativityReport verify_nonnegativity(const Graph &g, std::size_t t, const CliqueProfile &profile,
                                         std::size_t samples, std::uint64_t seed);

/// Support structure of a minimizer: G[supp(z)] complete multipartite with
/// omega_z parts, each carrying mass 1/omega_z.
struct PartStructure {
  bool complete_multipartite = false;
  std::size_t omega = 0;
  bool equal_part_masses = false;
  bool passed() const { return complete_multipartite && equal_part_masses; }
};

PartStructure part_structure(const Graph &g, const SimplexPoint &z);

struct MinimizerStructureReport {
  /// Phi(uniform) = 0 with t <= omega(G), so minima are known to be zero.
  bool applicable = false;
  std::string reason;
  PartStructure uniform;
  /// Checked when Phi(end) = 0, which makes the descent end a minimizer too.
  std::optional<PartStructure> end;
  bool passed() const { return applicable && uniform.passed() && (!end || end->passed()); }
};

MinimizerStructureReport check_minimizer_structure(const Graph &g, std::size_t t, const CliqueProfile &profile,
                                                   const DescentTrace &trace);

/// One JSON object per line: {"step":k,"i":..,"j":..,"epsilon":"p/q","delta":"p/q","phi":"p/q"}.
void write_trace(std::ostream &out, const DescentTrace &trace);

} // namespace cliquebound
