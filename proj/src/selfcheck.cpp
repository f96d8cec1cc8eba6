#include "cliquebound/selfcheck.hpp"

#include "cliquebound/bounds.hpp"
#include "cliquebound/corpus.hpp"
#include "cliquebound/oracles.hpp"
#include "cliquebound/simplex.hpp"

#include <bit>

namespace cliquebound {

namespace {

class Checker {
public:
  Checker(SelfcheckResult &result, std::ostream &log) : result_(result), log_(log) {}

  void expect(bool ok, const std::string &invariant, const std::string &where, const std::string &detail = {}) {
    ++result_.checks[invariant];
    if (ok) return;
    ++result_.failures[invariant];
    log_ << "FAIL " << invariant << " " << where << (detail.empty() ? "" : ": " + detail) << '\n';
  }

private:
  SelfcheckResult &result_;
  std::ostream &log_;
};

void check_graph(const CorpusEntry &entry, const SelfcheckOptions &opt, std::uint64_t seed, Checker &check) {
  const Graph &g = entry.graph;
  const auto profile = vertex_clique_numbers(g, opt.budget);
  const std::string name = entry.name;

  if (g.n() <= 16) {
    const oracle::SubsetTable table(g);
    check.expect(profile == table.profile(), "oracle_profile", name);
    for (std::size_t t = 1; t <= g.n(); ++t)
      check.expect(count_cliques(g, t, opt.budget).count == to_integer(table.count(t)), "oracle_count",
                   name + " t=" + std::to_string(t));
    for (auto mask : table.cliques()) {
      if (mask == 0 || std::popcount(mask) > static_cast<int>(opt.t_max)) continue;
      VertexSet s(g.n());
      for (Vertex v = 0; v < g.n(); ++v)
        if ((mask >> v) & 1u) s.set(v);
      check.expect(max_clique_containing(g, s, opt.budget) == table.alpha(mask), "oracle_alpha", name);
    }
  }

  for (Vertex v = 0; v < g.n(); ++v) {
    const bool in_range = profile.c[v] >= 1 && profile.c[v] <= profile.omega;
    check.expect(in_range && ((profile.c[v] == 1) == (g.degree(v) == 0)), "profile_range", name);
  }

  const auto certificate = is_regular_complete_multipartite(g);
  const Rational pre_floor = vertex_localized_turan_value(g, profile);
  const Rational edge_sum = edge_localized_turan_sum(g, opt.budget);
  const Rational half_square = ratio(to_integer(g.n() * g.n()), 2);
  const bool multipartite_with_edges = certificate && certificate->sizes.size() >= 2;
  check.expect(edge_sum <= half_square && ((edge_sum == half_square) == multipartite_with_edges),
               "edge_localized_turan", name, to_string(edge_sum));

  for (std::size_t t = 2; t <= opt.t_max; ++t) {
    const std::string where = name + " t=" + std::to_string(t);
    const Integer count = count_cliques(g, t, opt.budget).count;
    const Rational bound = opt.localized_bound(g, t, profile);

    check.expect(Rational(count) <= bound, "soundness", where, to_string(count) + " > " + to_string(bound));
    if (profile.omega >= 1)
      check.expect(bound <= zykov_bound(g.n(), profile.omega, t), "dominance", where);
    Integer tn = 0;
    for (Vertex v = 0; v < g.n(); ++v) tn += count_cliques_in_neighborhood(g, v, t - 1, opt.budget);
    check.expect(tn == count * to_integer(t), "neighborhood_sum", where);

    const bool tight = Rational(count) == bound;
    if (t <= profile.omega)
      check.expect(tight == certificate.has_value(), "characterization", where);
    if (t == 2) {
      check.expect(pre_floor == bound, "t2_recovery", where);
      check.expect(to_integer(g.m()) <= vertex_localized_turan_bound(g, profile), "t2_recovery", where);
    }
    Integer cap;
    mpz_ui_pow_ui(cap.get_mpz_t(), g.n(), t);
    check.expect(kirsch_nir_sum(g, t, opt.budget) <= Rational(cap), "kirsch_nir", where);

    if (g.n() == 0) continue;
    const auto nonneg = [&] {
      try {
        return std::optional(verify_nonnegativity(g, t, profile, opt.samples, seed + t));
      } catch (const InvariantViolation &e) {
        check.expect(false, "phi_nonnegative", where, e.what());
        return std::optional<NonnegativityReport>{};
      }
    }();
    if (!nonneg) continue;
    check.expect(true, "phi_nonnegative", where);
    check.expect((nonneg->phi_uniform == 0) == tight, "equality_bridge", where);

    SimplexSampler sampler(g.n(), seed ^ (0x9e3779b97f4a7c15ull * t));
    for (std::size_t k = 0; k < 4; ++k) {
      const auto x = sampler.next();
      const auto members = x.support().to_vector();
      for (std::size_t p = 0; p < members.size(); ++p)
        for (std::size_t q = p + 1; q < members.size(); ++q) {
          const Vertex i = members[p], j = members[q];
          if (g.adjacent(i, j)) continue;
          const Rational d = delta_ij(g, t, profile, x, i, j);
          check.expect(d == -delta_ij(g, t, profile, x, j, i), "delta_antisymmetry", where);
          const Rational eps = x[j] * ratio(to_integer(sampler.below(8) + 1), 8);
          const Rational lhs = eval_phi(g, t, profile, transfer(x, i, j, eps)).phi - eval_phi(g, t, profile, x).phi;
          check.expect(lhs == eps * d, "linear_response", where);
        }
      const auto trace = descend_to_clique_support(g, t, profile, x);
      bool monotone = true;
      for (const auto &s : trace.steps) monotone = monotone && s.phi_after <= s.phi_before;
      check.expect(monotone && trace.end_support_is_clique && trace.steps.size() + 1 <= x.support_size() &&
                       trace.phi_end <= trace.phi_start,
                   "descent_contract", where);
      check.expect(sgn(trace.phi_end) >= 0, "phi_nonnegative", where + " (descent end)");
      const auto structure = check_minimizer_structure(g, t, profile, trace);
      if (structure.applicable) check.expect(structure.passed(), "minimizer_structure", where);
    }
  }
}

} // namespace

SelfcheckResult run_selfcheck(const SelfcheckOptions &options, std::ostream &log) {
  SelfcheckOptions opt = options;
  if (!opt.localized_bound) opt.localized_bound = [](const Graph &g, std::size_t t, const CliqueProfile &p) {
    return localized_zykov_bound(g, t, p);
  };
  SelfcheckResult result;
  Checker check(result, log);
  const auto corpus = default_corpus(opt.random_graphs, opt.seed);
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    try {
      check_graph(corpus[k], opt, opt.seed * 1000003 + k, check);
    } catch (const BudgetExceeded &e) {
      ++result.budget_errors;
      log << "BUDGET " << corpus[k].name << ": " << e.what() << '\n';
    }
  }
  for (const auto &[name, count] : result.checks) {
    auto it = result.failures.find(name);
    if (it == result.failures.end())
      log << "PASS " << name << " (" << count << " checks)\n";
    else
      log << "FAIL " << name << " (" << it->second << " of " << count << " checks failed)\n";
  }
  log << (result.ok() ? "selfcheck: ok" : "selfcheck: FAILED") << " graphs=" << corpus.size()
      << " budget_errors=" << result.budget_errors << '\n';
  return result;
}

} // namespace cliquebound
