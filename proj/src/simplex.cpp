#include "cliquebound/simplex.hpp"

#include "cliquebound/errors.hpp"

namespace cliquebound {

namespace {

void require_order(std::size_t t) {
  if (t < 2) throw PreconditionError("clique order t must be at least 2, got " + std::to_string(t));
}

void require_match(const Graph &g, const SimplexPoint &x) {
  if (x.dimension() != g.n())
    throw PreconditionError("point has dimension " + std::to_string(x.dimension()) + " but graph has " +
                            std::to_string(g.n()) + " vertices");
}

void require_profile(const Graph &g, const CliqueProfile &profile) {
  if (profile.c.size() != g.n()) throw PreconditionError("profile does not match graph order");
}

VertexSet support_of(const std::vector<Rational> &x) {
  VertexSet s(x.size());
  for (Vertex v = 0; v < x.size(); ++v)
    if (sgn(x[v]) > 0) s.set(v);
  return s;
}

} // namespace

SimplexPoint SimplexPoint::from_coordinates(std::vector<Rational> x) {
  if (x.empty()) throw PreconditionError("the simplex needs at least one coordinate");
  Rational total = 0;
  for (auto &xv : x) {
    xv.canonicalize();
    if (sgn(xv) < 0) throw PreconditionError("simplex coordinates must be non-negative");
    total += xv;
  }
  if (total != 1) throw PreconditionError("simplex coordinates must sum to 1, got " + to_string(total));
  auto s = support_of(x);
  return SimplexPoint(std::move(x), std::move(s));
}

SimplexPoint SimplexPoint::uniform(std::size_t n) {
  if (n == 0) throw PreconditionError("the simplex needs at least one coordinate");
  return uniform_on(VertexSet::full(n));
}

SimplexPoint SimplexPoint::uniform_on(const VertexSet &s) {
  const auto k = s.count();
  if (k == 0) throw PreconditionError("uniform_on needs a nonempty set");
  std::vector<Rational> x(s.universe(), Rational(0));
  const Rational share = ratio(1, to_integer(k));
  s.for_each([&](Vertex v) { x[v] = share; });
  return SimplexPoint(std::move(x), s);
}

SimplexPoint SimplexPoint::concentrated(std::size_t n, Vertex v) {
  if (v >= n) throw PreconditionError("vertex out of range");
  std::vector<Rational> x(n, Rational(0));
  x[v] = 1;
  VertexSet s(n);
  s.set(v);
  return SimplexPoint(std::move(x), std::move(s));
}

Rational clique_polynomial(const Graph &g, const VertexSet &within, std::size_t k, const SimplexPoint &x) {
  require_match(g, x);
  if (k == 0) return 1;
  const VertexSet active = within & x.support();
  if (active.count() < k) return 0;

  // Scale to a common denominator so the inner loop multiplies integers.
  Integer common = 1;
  active.for_each([&](Vertex v) { mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x[v].get_den_mpz_t()); });
  std::vector<Integer> scaled(g.n());
  active.for_each([&](Vertex v) { scaled[v] = x[v].get_num() * (common / x[v].get_den()); });

  Integer sum = 0, term;
  for_each_clique(g, active, k, [&](std::span<const Vertex> clique) {
    term = scaled[clique[0]];
    for (std::size_t q = 1; q < clique.size(); ++q) term *= scaled[clique[q]];
    sum += term;
  });
  Integer denom;
  mpz_pow_ui(denom.get_mpz_t(), common.get_mpz_t(), k);
  return ratio(sum, denom);
}

PhiEvaluation eval_phi(const Graph &g, std::size_t t, const CliqueProfile &profile, const SimplexPoint &x) {
  require_order(t);
  require_match(g, x);
  require_profile(g, profile);
  PhiEvaluation e;
  e.a = 0;
  x.support().for_each([&](Vertex v) { e.a += x[v] * clique_density_weight(profile.c[v], t); });
  e.b = clique_polynomial(g, VertexSet::full(g.n()), t, x);
  e.phi = e.a - e.b;
  return e;
}

Rational delta_ij(const Graph &g, std::size_t t, const CliqueProfile &profile, const SimplexPoint &x, Vertex i,
                  Vertex j) {
  require_order(t);
  require_match(g, x);
  require_profile(g, profile);
  if (i >= g.n() || j >= g.n()) throw PreconditionError("vertex out of range");
  if (i == j) throw PreconditionError("delta_ij needs distinct vertices");
  const Rational weights = clique_density_weight(profile.c[i], t) - clique_density_weight(profile.c[j], t);
  const Rational links = clique_polynomial(g, g.neighbors(i), t - 1, x) - clique_polynomial(g, g.neighbors(j), t - 1, x);
  return weights - links;
}

SimplexPoint transfer(const SimplexPoint &x, Vertex i, Vertex j, const Rational &epsilon) {
  if (i >= x.dimension() || j >= x.dimension()) throw PreconditionError("vertex out of range");
  if (i == j) throw PreconditionError("transfer needs distinct vertices");
  if (sgn(epsilon) < 0) throw PreconditionError("transfer amount must be non-negative");
  if (epsilon > x[j]) throw PreconditionError("transfer amount exceeds the donor's mass");
  auto coords = x.coordinates();
  coords[i] += epsilon;
  coords[j] -= epsilon;
  VertexSet s = x.support();
  if (sgn(coords[i]) > 0) s.set(i);
  if (sgn(coords[j]) == 0) s.reset(j);
  return SimplexPoint(std::move(coords), std::move(s));
}

DescentTrace descend_to_clique_support(const Graph &g, std::size_t t, const CliqueProfile &profile,
                                       const SimplexPoint &x0) {
  DescentTrace trace{x0, {}, x0, eval_phi(g, t, profile, x0).phi, 0, false, 0};
  SimplexPoint x = x0;
  Rational phi = trace.phi_start;
  while (true) {
    const auto members = x.support().to_vector();
    std::optional<std::pair<Vertex, Vertex>> pair;
    for (std::size_t p = 0; p < members.size() && !pair; ++p)
      for (std::size_t q = p + 1; q < members.size(); ++q)
        if (!g.adjacent(members[p], members[q])) {
          pair.emplace(members[p], members[q]);
          break;
        }
    if (!pair) break;

    auto [a, b] = *pair;
    const Rational d = delta_ij(g, t, profile, x, a, b);
    TransferStep step;
    if (sgn(d) <= 0) {
      step.i = a;
      step.j = b;
      step.delta_ij = d;
    } else {
      step.i = b;
      step.j = a;
      step.delta_ij = -d;
    }
    step.epsilon = x[step.j];
    step.phi_before = phi;
    x = transfer(x, step.i, step.j, step.epsilon);
    step.phi_after = eval_phi(g, t, profile, x).phi;
    if (step.phi_after != phi + step.epsilon * step.delta_ij)
      throw InvariantViolation("transfer changed Phi by something other than epsilon * delta");
    phi = step.phi_after;
    trace.steps.push_back(std::move(step));
  }
  trace.end = x;
  trace.phi_end = phi;
  trace.end_support_is_clique = g.is_clique(x.support());
  trace.omega_end = x.support_size();
  return trace;
}

std::uint64_t SimplexSampler::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t r;
  do r = rng_();
  while (r < threshold);
  return r % bound;
}

SimplexPoint SimplexSampler::next() {
  if (n_ == 0) throw PreconditionError("cannot sample from an empty simplex");
  VertexSet s(n_);
  for (Vertex v = 0; v < n_; ++v)
    if (rng_() >> 63) s.set(v);
  if (s.none()) s.set(below(n_));
  std::vector<Rational> x(n_, Rational(0));
  unsigned long total = 0;
  s.for_each([&](Vertex v) {
    const auto w = 1 + static_cast<unsigned long>(rng_() >> 48);
    x[v] = w;
    total += w;
  });
  for (auto &xv : x) {
    xv /= total;
    xv.canonicalize();
  }
  return SimplexPoint::from_coordinates(std::move(x));
}

NonnegativityReport verify_nonnegativity(const Graph &g, std::size_t t, const CliqueProfile &profile,
                                         std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw PreconditionError("verify_nonnegativity needs at least one sample");
  NonnegativityReport report;
  auto consider = [&](const SimplexPoint &x, std::string label) {
    const Rational phi = eval_phi(g, t, profile, x).phi;
    if (report.points_evaluated == 0 || phi < report.min_phi) {
      report.min_phi = phi;
      report.argmin = std::move(label);
    }
    ++report.points_evaluated;
    return phi;
  };
  report.phi_uniform = consider(SimplexPoint::uniform(g.n()), "uniform");
  for (Vertex v = 0; v < g.n(); ++v) consider(SimplexPoint::concentrated(g.n(), v), "vertex:" + std::to_string(v));
  SimplexSampler sampler(g.n(), seed);
  for (std::size_t k = 0; k < samples; ++k) consider(sampler.next(), "sample:" + std::to_string(k));
  if (sgn(report.min_phi) < 0)
    throw InvariantViolation("Phi is negative at " + report.argmin + ": " + to_string(report.min_phi));
  return report;
}

PartStructure part_structure(const Graph &g, const SimplexPoint &z) {
  require_match(g, z);
  PartStructure out;
  const auto members = z.support().to_vector();
  const Graph sub = g.induced(members);
  const auto parts = complete_multipartite_parts(sub);
  if (!parts) return out;
  out.complete_multipartite = true;
  out.omega = parts->size();
  const Rational target = ratio(1, to_integer(out.omega));
  out.equal_part_masses = true;
  for (const auto &part : *parts) {
    Rational mass = 0;
    for (auto local : part) mass += z[members[local]];
    if (mass != target) out.equal_part_masses = false;
  }
  return out;
}

MinimizerStructureReport check_minimizer_structure(const Graph &g, std::size_t t, const CliqueProfile &profile,
                                                   const DescentTrace &trace) {
  MinimizerStructureReport report;
  if (t > profile.omega) {
    report.reason = "not a certified minimizer: t exceeds the clique number, Phi vanishes identically";
    return report;
  }
  const auto uniform = SimplexPoint::uniform(g.n());
  if (eval_phi(g, t, profile, uniform).phi != 0) {
    report.reason = "not a certified minimizer: Phi(uniform) > 0";
    return report;
  }
  report.applicable = true;
  report.uniform = part_structure(g, uniform);
  if (trace.phi_end == 0) report.end = part_structure(g, trace.end);
  report.reason = report.passed() ? "minimizer structure holds" : "minimizer structure violated";
  return report;
}

void write_trace(std::ostream &out, const DescentTrace &trace) {
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const auto &s = trace.steps[k];
    out << "{\"step\":" << k << ",\"i\":" << s.i << ",\"j\":" << s.j << ",\"epsilon\":\"" << to_string(s.epsilon)
        << "\",\"delta\":\"" << to_string(s.delta_ij) << "\",\"phi\":\"" << to_string(s.phi_after) << "\"}\n";
  }
}

} // namespace cliquebound
