#include "cliquebound/bounds.hpp"

#include "cliquebound/errors.hpp"

#include <array>

namespace cliquebound {

namespace {

Integer power(std::size_t base, std::size_t exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

void require_order(std::size_t t) {
  if (t < 2) throw PreconditionError("clique order t must be at least 2, got " + std::to_string(t));
}

} // namespace

Rational localized_zykov_bound(const Graph &g, std::size_t t, const CliqueProfile &profile) {
  require_order(t);
  if (profile.c.size() != g.n()) throw PreconditionError("profile does not match graph order");
  Rational sum = 0;
  for (auto c : profile.c) sum += clique_density_weight(c, t);
  Rational out = sum * power(g.n(), t - 1);
  out.canonicalize();
  return out;
}

Rational zykov_bound(std::size_t n, std::size_t r, std::size_t t) {
  require_order(t);
  if (r == 0) throw PreconditionError("zykov_bound requires r >= 1");
  return ratio(binomial(r, t) * power(n, t), power(r, t));
}

Rational turan_bound(std::size_t n, std::size_t r) {
  if (r == 0) throw PreconditionError("turan_bound requires r >= 1");
  return ratio(power(n, 2) * to_integer(r - 1), to_integer(2 * r));
}

Rational edge_localized_turan_sum(const Graph &g, WorkBudget budget) {
  Rational sum = 0;
  for (auto [u, v] : g.edges()) {
    const std::array<Vertex, 2> e{u, v};
    const auto w = max_clique_containing(g, std::span<const Vertex>(e), budget);
    sum += ratio(to_integer(w), to_integer(w - 1));
  }
  return sum;
}

Rational vertex_localized_turan_value(const Graph &g, const CliqueProfile &profile) {
  if (profile.c.size() != g.n()) throw PreconditionError("profile does not match graph order");
  Rational sum = 0;
  for (auto c : profile.c) {
    sum += ratio(to_integer(c - 1), to_integer(c));
  }
  return sum * ratio(to_integer(g.n()), 2);
}

Integer vertex_localized_turan_bound(const Graph &g, const CliqueProfile &profile) {
  const Rational value = vertex_localized_turan_value(g, profile);
  Integer floor;
  mpz_fdiv_q(floor.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return floor;
}

Rational kirsch_nir_sum(const Graph &g, std::size_t t, WorkBudget budget) {
  require_order(t);
  Rational sum = 0;
  for_each_clique(g, VertexSet::full(g.n()), t, [&](std::span<const Vertex> copy) {
    const auto alpha = max_clique_containing(g, copy, budget);
    sum += ratio(power(alpha, t), binomial(alpha, t));
  });
  return sum;
}

std::optional<PartSpec> is_regular_complete_multipartite(const Graph &g) {
  auto parts = complete_multipartite_parts(g);
  if (!parts) return std::nullopt;
  PartSpec found;
  for (const auto &p : *parts) found.sizes.push_back(p.size());
  if (!found.is_regular()) return std::nullopt;
  return found;
}

BoundReport bound_report(const Graph &g, std::size_t t, WorkBudget budget) {
  return bound_report(g, t, vertex_clique_numbers(g, budget), budget);
}

BoundReport bound_report(const Graph &g, std::size_t t, const CliqueProfile &profile, WorkBudget budget) {
  require_order(t);
  BoundReport r;
  r.t = t;
  r.n = g.n();
  r.m = g.m();
  r.omega = profile.omega;
  r.true_count = count_cliques(g, t, budget).count;
  r.localized_zykov = localized_zykov_bound(g, t, profile);
  r.zykov_classical = profile.omega ? zykov_bound(g.n(), profile.omega, t) : Rational(0);
  if (t == 2) r.turan = profile.omega ? turan_bound(g.n(), profile.omega) : Rational(0);
  r.edge_localized_sum = edge_localized_turan_sum(g, budget);
  r.vertex_localized_turan_value = vertex_localized_turan_value(g, profile);
  r.vertex_localized_turan = vertex_localized_turan_bound(g, profile);
  r.kirsch_nir_sum = kirsch_nir_sum(g, t, budget);
  r.kirsch_nir_equal = r.kirsch_nir_sum == Rational(power(g.n(), t));
  r.is_tight = Rational(r.true_count) == r.localized_zykov;
  r.degenerate = t > profile.omega;
  r.extremal_certificate = is_regular_complete_multipartite(g);
  r.characterization_consistent = r.degenerate || r.is_tight == r.extremal_certificate.has_value();
  return r;
}

} // namespace cliquebound
