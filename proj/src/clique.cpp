#include "cliquebound/clique.hpp"

#include <algorithm>

namespace cliquebound {

namespace {

class NodeMeter {
public:
  explicit NodeMeter(WorkBudget budget) : limit_(budget.max_nodes) {}
  void charge() {
    if (++used_ > limit_)
      throw BudgetExceeded("clique search exceeded budget of " + std::to_string(limit_) + " nodes");
  }

private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Rows restricted to vertices later in a degeneracy ordering.
std::vector<VertexSet> forward_rows(const Graph &g) {
  const auto order = degeneracy_order(g);
  std::vector<std::size_t> pos(g.n());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
  std::vector<VertexSet> fwd(g.n(), VertexSet(g.n()));
  for (Vertex u = 0; u < g.n(); ++u)
    g.neighbors(u).for_each([&](Vertex v) {
      if (pos[v] > pos[u]) fwd[u].set(v);
    });
  return fwd;
}

void count_from(const std::vector<VertexSet> &fwd, const VertexSet &candidates, std::size_t remaining,
                CountAccumulator &tally, NodeMeter &meter) {
  meter.charge();
  if (remaining == 1) {
    tally.add(candidates.count());
    return;
  }
  if (remaining == 2) {
    candidates.for_each([&](Vertex v) { tally.add(fwd[v].intersection_count(candidates)); });
    return;
  }
  // A candidate set that is already a clique contributes C(k, remaining) at once.
  const std::size_t k = candidates.count();
  std::size_t inner = 0;
  candidates.for_each([&](Vertex v) { inner += fwd[v].intersection_count(candidates); });
  if (inner == k * (k - 1) / 2) {
    tally.add(binomial(k, remaining));
    return;
  }
  candidates.for_each([&](Vertex v) {
    VertexSet next = candidates & fwd[v];
    if (next.count() + 1 >= remaining) count_from(fwd, next, remaining - 1, tally, meter);
  });
}

Integer count_restricted(const Graph &g, const VertexSet &within, std::size_t t, WorkBudget budget) {
  if (t == 0) return 1;
  if (t == 1) return to_integer(within.count());
  if (t > within.count()) return 0;
  const auto fwd = forward_rows(g);
  NodeMeter meter(budget);
  CountAccumulator tally;
  count_from(fwd, within, t, tally, meter);
  return tally.value();
}

// Pivoted Bron-Kerbosch; `visit` receives every maximal clique of the search.
class MaximalCliques {
public:
  MaximalCliques(const Graph &g, NodeMeter &meter) : g_(g), meter_(meter) {}

  template <typename Visit>
  void run(std::vector<Vertex> &r, VertexSet p, VertexSet x, Visit &visit) {
    meter_.charge();
    if (p.none()) {
      if (x.none()) visit(r);
      return;
    }
    // Pivot: vertex of P u X with the most neighbours in P.
    Vertex pivot = 0;
    std::size_t best = 0;
    bool have = false;
    auto consider = [&](Vertex u) {
      std::size_t k = g_.neighbors(u).intersection_count(p);
      if (!have || k > best) {
        pivot = u;
        best = k;
        have = true;
      }
    };
    p.for_each(consider);
    x.for_each(consider);
    const VertexSet branch = p - g_.neighbors(pivot);
    branch.for_each([&](Vertex v) {
      r.push_back(v);
      run(r, p & g_.neighbors(v), x & g_.neighbors(v), visit);
      r.pop_back();
      p.reset(v);
      x.set(v);
    });
  }

private:
  const Graph &g_;
  NodeMeter &meter_;
};

// Branch and bound with a greedy colouring bound over candidate bitsets.
class MaxCliqueSearch {
public:
  MaxCliqueSearch(const Graph &g, NodeMeter &meter) : g_(g), meter_(meter) {}

  std::size_t run(const VertexSet &candidates) {
    best_ = 0;
    expand(0, candidates);
    return best_;
  }

private:
  void expand(std::size_t depth, VertexSet p) {
    meter_.charge();
    if (p.none()) {
      best_ = std::max(best_, depth);
      return;
    }
    std::vector<Vertex> order;
    std::vector<std::size_t> colour;
    order.reserve(p.count());
    colour.reserve(p.count());
    VertexSet uncoloured = p;
    std::size_t k = 0;
    while (uncoloured.any()) {
      ++k;
      VertexSet open = uncoloured;
      while (open.any()) {
        Vertex v = open.first();
        open.reset(v);
        open -= g_.neighbors(v);
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(k);
      }
    }
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (depth + colour[idx] <= best_) return;
      Vertex v = order[idx];
      expand(depth + 1, p & g_.neighbors(v));
      p.reset(v);
    }
  }

  const Graph &g_;
  NodeMeter &meter_;
  std::size_t best_ = 0;
};

} // namespace

std::vector<Vertex> degeneracy_order(const Graph &g) {
  const std::size_t n = g.n();
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<bool> removed(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = n;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && (pick == n || deg[v] < deg[pick])) pick = v;
    removed[pick] = true;
    order.push_back(pick);
    g.neighbors(pick).for_each([&](Vertex u) {
      if (!removed[u]) --deg[u];
    });
  }
  return order;
}

CliqueCount count_cliques(const Graph &g, std::size_t t, WorkBudget budget) {
  return {t, count_restricted(g, VertexSet::full(g.n()), t, budget)};
}

Integer count_cliques_within(const Graph &g, const VertexSet &within, std::size_t t, WorkBudget budget) {
  return count_restricted(g, within, t, budget);
}

Integer count_cliques_in_neighborhood(const Graph &g, Vertex v, std::size_t t, WorkBudget budget) {
  if (v >= g.n()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  return count_restricted(g, g.neighbors(v), t, budget);
}

CliqueProfile vertex_clique_numbers(const Graph &g, WorkBudget budget) {
  const std::size_t n = g.n();
  CliqueProfile profile{std::vector<std::size_t>(n, 1), n ? 1u : 0u};
  NodeMeter meter(budget);
  MaximalCliques search(g, meter);
  auto record = [&](const std::vector<Vertex> &clique) {
    for (auto v : clique) profile.c[v] = std::max(profile.c[v], clique.size());
    profile.omega = std::max(profile.omega, clique.size());
  };
  VertexSet later = VertexSet::full(n), earlier(n);
  std::vector<Vertex> r;
  for (Vertex v : degeneracy_order(g)) {
    later.reset(v);
    r.assign(1, v);
    search.run(r, later & g.neighbors(v), earlier & g.neighbors(v), record);
    earlier.set(v);
  }
  return profile;
}

std::size_t max_clique_containing(const Graph &g, const VertexSet &seed, WorkBudget budget) {
  if (seed.universe() != g.n()) throw PreconditionError("seed set has the wrong universe");
  if (!g.is_clique(seed)) throw PreconditionError("seed set does not induce a clique");
  VertexSet common = VertexSet::full(g.n());
  seed.for_each([&](Vertex v) { common &= g.neighbors(v); });
  NodeMeter meter(budget);
  MaxCliqueSearch search(g, meter);
  return seed.count() + search.run(common);
}

std::size_t max_clique_containing(const Graph &g, std::span<const Vertex> seed, WorkBudget budget) {
  VertexSet s(g.n());
  for (auto v : seed) {
    if (v >= g.n()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    s.set(v);
  }
  return max_clique_containing(g, s, budget);
}

} // namespace cliquebound
