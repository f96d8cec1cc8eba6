// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include "cliquebound/bounds.hpp"
#include "cliquebound/clique.hpp"
#include "cliquebound/corpus.hpp"
#include "cliquebound/oracles.hpp"
#include "cliquebound/simplex.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

using namespace cliquebound;

namespace {

struct Outcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::function<std::string()> &what) {
    ++checks;
    if (!ok && failures.size() < 10) failures.push_back(what());
    else if (!ok) failures.emplace_back();
  }
};

Integer power(std::size_t n, std::size_t t) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), n, t);
  return r;
}

// Runs body(k) for k in [0, count) on a few threads; results must be
// accumulated by the caller under its own lock.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body) {
  const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < count;) body(k);
    });
  for (auto &th : pool) th.join();
}

Outcome tight_case_reproduction() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const auto &e : regular_multipartite_family()) {
    const auto &g = e.graph;
    const auto profile = vertex_clique_numbers(g);
    const std::size_t r = profile.omega, s = g.n() / r;
    const auto parts = is_regular_complete_multipartite(g);
    o.expect(parts && parts->sizes == std::vector<std::size_t>(r, s), [&] { return e.name + ": wrong parts"; });
    for (std::size_t t = 2; t <= r; ++t) {
      const auto report = bound_report(g, t, profile);
      o.expect(Rational(report.true_count) == report.localized_zykov, [&] {
        return e.name + " t=" + std::to_string(t) + ": N=" + to_string(report.true_count) +
               " bound=" + to_string(report.localized_zykov);
      });
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(secs < 10.0, [&] { return "took " + std::to_string(secs) + " s (limit 10 s)"; });
  return o;
}

Outcome soundness_sweep(const std::vector<CorpusEntry> &sweep) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const auto &e : sweep) {
    const auto &g = e.graph;
    const auto profile = vertex_clique_numbers(g);
    for (std::size_t t = 2; t <= 5; ++t) {
      const auto r = bound_report(g, t, profile);
      const Rational classical = zykov_bound(g.n(), profile.omega, t);
      o.expect(Rational(r.true_count) <= r.localized_zykov && r.localized_zykov <= classical, [&] {
        return e.name + " t=" + std::to_string(t) + ": N=" + to_string(r.true_count) + " localized=" +
               to_string(r.localized_zykov) + " classical=" + to_string(classical);
      });
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(secs < 120.0, [&] { return "took " + std::to_string(secs) + " s (limit 120 s)"; });
  return o;
}

// Tightness is only informative for t <= omega; above it both sides are 0.
Outcome strictness_direction(const std::vector<CorpusEntry> &sweep) {
  Outcome o;
  std::size_t non_regular = 0, tight_cases = 0;
  for (const auto &e : sweep) {
    const auto &g = e.graph;
    const auto profile = vertex_clique_numbers(g);
    const bool regular = is_regular_complete_multipartite(g).has_value();
    bool some_strict = false;
    for (std::size_t t = 2; t <= profile.omega; ++t) {
      const auto r = bound_report(g, t, profile);
      if (!r.is_tight) some_strict = true;
      if (r.is_tight) {
        ++tight_cases;
        o.expect(r.extremal_certificate.has_value(),
                 [&] { return e.name + " t=" + std::to_string(t) + ": tight without certificate"; });
      }
    }
    if (!regular) {
      ++non_regular;
      o.expect(some_strict, [&] { return e.name + ": not regular multipartite yet tight for every t <= omega"; });
    }
  }
  o.note = std::to_string(non_regular) + " non-regular graphs, " + std::to_string(tight_cases) + " tight cases";
  return o;
}

Outcome t2_recovery(const std::vector<CorpusEntry> &corpus) {
  Outcome o;
  for (const auto &e : corpus) {
    const auto &g = e.graph;
    if (g.n() == 0) continue;
    const auto profile = vertex_clique_numbers(g);
    const Rational value = vertex_localized_turan_value(g, profile);
    const Rational localized = localized_zykov_bound(g, 2, profile);
    o.expect(value == localized,
             [&] { return e.name + ": pre-floor " + to_string(value) + " vs localized " + to_string(localized); });
    const Integer floor = vertex_localized_turan_bound(g, profile);
    o.expect(to_integer(g.m()) <= floor,
             [&] { return e.name + ": m=" + std::to_string(g.m()) + " > floor " + to_string(floor); });
  }
  return o;
}

Outcome phi_nonnegativity(const std::vector<CorpusEntry> &corpus) {
  Outcome o;
  std::mutex lock;
  std::size_t tight_uniform = 0;
  parallel_for(corpus.size(), [&](std::size_t k) {
    const auto &e = corpus[k];
    const auto &g = e.graph;
    if (g.n() == 0) return;
    const auto profile = vertex_clique_numbers(g);
    const bool regular = is_regular_complete_multipartite(g).has_value();
    for (std::size_t t = 2; t <= 5; ++t) {
      const auto r = verify_nonnegativity(g, t, profile, 500, 1000 + k * 16 + t);
      std::lock_guard guard(lock);
      o.expect(sgn(r.min_phi) >= 0 && r.points_evaluated == 1 + g.n() + 500, [&] {
        return e.name + " t=" + std::to_string(t) + ": min " + to_string(r.min_phi) + " at " + r.argmin;
      });
      if (t <= profile.omega) {
        if (r.phi_uniform == 0) ++tight_uniform;
        o.expect((r.phi_uniform == 0) == regular, [&] {
          return e.name + " t=" + std::to_string(t) + ": Phi(uniform)=" + to_string(r.phi_uniform) +
                 (regular ? " on a regular multipartite graph" : " on a non-regular graph");
        });
      }
    }
  });
  o.note = std::to_string(tight_uniform) + " (graph, t <= omega) pairs with Phi(uniform) = 0";
  return o;
}

Outcome linear_response(const std::vector<CorpusEntry> &corpus) {
  Outcome o;
  std::vector<const CorpusEntry *> usable;
  for (const auto &e : corpus)
    if (e.graph.m() < e.graph.n() * (e.graph.n() - 1) / 2) usable.push_back(&e);
  std::mt19937_64 rng(424242);
  std::size_t done = 0;
  while (done < 1000) {
    const auto &e = *usable[rng() % usable.size()];
    const auto &g = e.graph;
    const auto profile = vertex_clique_numbers(g);
    SimplexSampler sampler(g.n(), rng());
    const auto x = sampler.next();
    const Vertex i = rng() % g.n(), j = rng() % g.n();
    if (i == j || g.adjacent(i, j)) continue;
    const std::size_t t = 2 + rng() % 4;
    // eps = x_j * a / b with 0 <= a <= b.
    const std::uint64_t b = 1 + rng() % 1000, a = rng() % (b + 1);
    const Rational eps = x[j] * ratio(to_integer(a), to_integer(b));
    const auto before = eval_phi(g, t, profile, x).phi;
    const auto after = eval_phi(g, t, profile, transfer(x, i, j, eps)).phi;
    const auto d = delta_ij(g, t, profile, x, i, j);
    o.expect(after - before == eps * d, [&] {
      return e.name + " t=" + std::to_string(t) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
    });
    ++done;
  }
  return o;
}

Outcome descent_contract(const std::vector<CorpusEntry> &corpus) {
  Outcome o;
  std::mutex lock;
  parallel_for(corpus.size(), [&](std::size_t k) {
    const auto &e = corpus[k];
    const auto &g = e.graph;
    if (g.n() == 0) return;
    const auto profile = vertex_clique_numbers(g);
    SimplexSampler sampler(g.n(), 7000 + k);
    for (std::size_t s = 0; s < 50; ++s) {
      const auto x0 = sampler.next();
      const std::size_t t = 2 + s % 4;
      const auto trace = descend_to_clique_support(g, t, profile, x0);
      bool monotone = true;
      Rational prev = trace.phi_start;
      for (const auto &step : trace.steps) {
        if (step.phi_after > prev) monotone = false;
        prev = step.phi_after;
      }
      std::lock_guard guard(lock);
      const auto where = [&] { return e.name + " start " + std::to_string(s) + " t=" + std::to_string(t); };
      o.expect(trace.steps.size() + 1 <= x0.support_size(), [&] { return where() + ": too many steps"; });
      o.expect(monotone, [&] { return where() + ": Phi increased"; });
      o.expect(trace.end_support_is_clique, [&] { return where() + ": end support is not a clique"; });
    }
  });
  return o;
}

Outcome oracle_equivalence(const std::vector<CorpusEntry> &corpus) {
  Outcome o;
  std::mutex lock;
  parallel_for(corpus.size(), [&](std::size_t k) {
    const auto &e = corpus[k];
    const auto &g = e.graph;
    if (g.n() > 16) return;
    const oracle::SubsetTable table(g);
    const auto fast_profile = vertex_clique_numbers(g);
    const auto slow_profile = table.profile();
    std::vector<std::pair<bool, std::string>> results;
    results.emplace_back(fast_profile == slow_profile, e.name + ": c(v) profile differs");
    for (std::size_t t = 1; t <= g.n(); ++t)
      results.emplace_back(count_cliques(g, t).count == to_integer(table.count(t)),
                           e.name + " t=" + std::to_string(t) + ": clique count differs");
    for (auto mask : table.cliques()) {
      if (mask == 0) continue;
      std::vector<Vertex> copy;
      for (Vertex v = 0; v < g.n(); ++v)
        if (mask >> v & 1u) copy.push_back(v);
      results.emplace_back(max_clique_containing(g, std::span<const Vertex>(copy)) == table.alpha(mask),
                           e.name + ": alpha differs on mask " + std::to_string(mask));
    }
    std::lock_guard guard(lock);
    for (auto &[ok, what] : results) o.expect(ok, [&] { return what; });
  });
  return o;
}

Outcome comparison_bounds(const std::vector<CorpusEntry> &corpus) {
  Outcome o;
  for (const auto &e : corpus) {
    const auto &g = e.graph;
    const Rational edge_sum = edge_localized_turan_sum(g);
    const Rational half_square = ratio(to_integer(g.n() * g.n()), 2);
    o.expect(edge_sum <= half_square, [&] { return e.name + ": edge-localized sum exceeds n^2/2"; });
    const auto parts = is_regular_complete_multipartite(g);
    const bool extremal = parts && parts->sizes.size() >= 2;
    o.expect((edge_sum == half_square) == extremal, [&] {
      return e.name + ": edge-localized sum " + to_string(edge_sum) + " vs n^2/2 " + to_string(half_square) +
             (extremal ? " (regular multipartite)" : "");
    });
    for (std::size_t t = 2; t <= 5; ++t) {
      const Rational kn = kirsch_nir_sum(g, t);
      o.expect(kn <= Rational(power(g.n(), t)),
               [&] { return e.name + " t=" + std::to_string(t) + ": Kirsch-Nir sum exceeds n^t"; });
    }
  }
  return o;
}

} // namespace

int main() {
  const auto sweep = random_sweep(200);
  const auto corpus = default_corpus(200);

  struct Criterion {
    const char *name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"tight-case reproduction", [] { return tight_case_reproduction(); }},
      {"soundness sweep", [&] { return soundness_sweep(sweep); }},
      {"strictness direction", [&] { return strictness_direction(sweep); }},
      {"t=2 recovery", [&] { return t2_recovery(corpus); }},
      {"Phi nonnegativity", [&] { return phi_nonnegativity(corpus); }},
      {"linear-response identity", [&] { return linear_response(corpus); }},
      {"descent contract", [&] { return descent_contract(corpus); }},
      {"oracle equivalence", [&] { return oracle_equivalence(corpus); }},
      {"comparison bounds", [&] { return comparison_bounds(corpus); }},
  };

  bool all_ok = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].run();
    } catch (const std::exception &e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.failures.empty() && o.checks > 0;
    all_ok = all_ok && ok;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].name << " (" << o.checks
         << " checks";
    if (!o.failures.empty()) line << ", " << o.failures.size() << " failed";
    line.precision(2);
    line << std::fixed << ", " << secs << " s)";
    if (!o.note.empty()) line << " " << o.note;
    std::cout << line.str() << std::endl;
    for (const auto &f : o.failures)
      if (!f.empty()) std::cout << "    " << f << '\n';
  }
  std::cout << (all_ok ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
  return all_ok ? 0 : 1;
}
