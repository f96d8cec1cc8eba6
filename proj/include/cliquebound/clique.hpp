#pragma once

#include "cliquebound/errors.hpp"
#include "cliquebound/graph.hpp"
#include "cliquebound/rational.hpp"

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace cliquebound {

/// Cap on recursion nodes for a single clique-engine call. Running out throws
/// BudgetExceeded.
struct WorkBudget {
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();

  static WorkBudget unlimited() { return {}; }
  static WorkBudget nodes(std::uint64_t n) { return {n}; }
};

/// Unsigned counter that runs in a machine word and spills into an
/// arbitrary-precision integer whenever an addition would overflow.
class CountAccumulator {
public:
  void add(std::uint64_t v) {
    if (__builtin_add_overflow(small_, v, &small_)) {
      big_ += to_integer(small_ - v);
      small_ = v;
    }
  }
  void add(const Integer &v) {
    if (v.fits_ulong_p()) add(v.get_ui());
    else big_ += v;
  }
  Integer value() const { return big_ + to_integer(small_); }

private:
  std::uint64_t small_ = 0;
  Integer big_ = 0;
};

/// Per-vertex largest-containing-clique orders c(v) and the clique number.
/// Isolated vertices have c(v) = 1; the empty graph has omega = 0.
struct CliqueProfile {
  std::vector<std::size_t> c;
  std::size_t omega = 0;

  friend bool operator==(const CliqueProfile &, const CliqueProfile &) = default;
};

struct CliqueCount {
  std::size_t t = 0;
  Integer count;
};

/// Orders vertices by repeatedly removing one of minimum remaining degree
/// (lowest index on ties).
std::vector<Vertex> degeneracy_order(const Graph &g);

/// N(G, K_t): number of t-vertex cliques. t = 0 counts the empty clique.
CliqueCount count_cliques(const Graph &g, std::size_t t, WorkBudget budget = {});

/// Number of t-cliques of the subgraph induced by `within`.
Integer count_cliques_within(const Graph &g, const VertexSet &within, std::size_t t,
                             WorkBudget budget = {});

/// Number of t-cliques inside the induced neighbourhood N(v).
Integer count_cliques_in_neighborhood(const Graph &g, Vertex v, std::size_t t, WorkBudget budget = {});

/// c(v) for every vertex via pivoted Bron-Kerbosch over a degeneracy ordering.
CliqueProfile vertex_clique_numbers(const Graph &g, WorkBudget budget = {});

/// Order of the largest clique of g containing `seed`. The seed must be a
/// clique (PreconditionError otherwise); the empty seed yields omega(g).
std::size_t max_clique_containing(const Graph &g, const VertexSet &seed, WorkBudget budget = {});
std::size_t max_clique_containing(const Graph &g, std::span<const Vertex> seed, WorkBudget budget = {});

/// Calls visit(std::span<const Vertex>) once per t-clique of g[within], each
/// clique listed in increasing vertex order. t = 0 visits the empty clique once.
template <typename Visit>
void for_each_clique(const Graph &g, const VertexSet &within, std::size_t t, Visit &&visit);

// ---------------------------------------------------------------------------

namespace detail {

template <typename Visit>
void extend_cliques(const Graph &g, std::vector<Vertex> &stack, const VertexSet &candidates,
                    std::size_t remaining, Visit &visit) {
  if (remaining == 0) {
    visit(std::span<const Vertex>(stack));
    return;
  }
  for (Vertex v = candidates.first(); v < g.n(); v = candidates.next(v)) {
    stack.push_back(v);
    if (remaining == 1) {
      visit(std::span<const Vertex>(stack));
    } else {
      VertexSet next = candidates & g.neighbors(v);
      // Only extend upward so every clique is produced once, in sorted order.
      next.reset_through(v);
      if (next.count() + 1 >= remaining) extend_cliques(g, stack, next, remaining - 1, visit);
    }
    stack.pop_back();
  }
}

} // namespace detail

template <typename Visit>
void for_each_clique(const Graph &g, const VertexSet &within, std::size_t t, Visit &&visit) {
  std::vector<Vertex> stack;
  stack.reserve(t);
  detail::extend_cliques(g, stack, within, t, visit);
}

} // namespace cliquebound
