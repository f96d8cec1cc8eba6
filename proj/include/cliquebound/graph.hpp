#pragma once

#include "cliquebound/rational.hpp"
#include "cliquebound/vertex_set.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cliquebound {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
/// Immutable once built; every constructor path runs validate().
class Graph {
public:
  Graph() = default;

  /// Duplicate edges collapse; self-loops and out-of-range endpoints throw
  /// PreconditionError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const { return rows_.size(); }
  std::size_t m() const { return m_; }

  const VertexSet &neighbors(Vertex v) const { return rows_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `vertices`; vertex k of the result is vertices[k].
  Graph induced(std::span<const Vertex> vertices) const;
  Graph complement() const;

  bool is_clique(const VertexSet &s) const;
  bool is_independent(const VertexSet &s) const;

  /// Checks symmetry, loop-freeness and the cached edge count.
  void validate() const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  std::vector<VertexSet> rows_;
  std::size_t m_ = 0;
};

/// Parts of g if g is complete multipartite (non-adjacency is an equivalence
/// relation), listed by lowest member. Part sizes may differ. Empty optional
/// for non-multipartite graphs and for n = 0.
std::optional<std::vector<std::vector<Vertex>>> complete_multipartite_parts(const Graph &g);

/// Part sizes n_1..n_r of a complete multipartite graph. All sizes >= 1.
struct PartSpec {
  std::vector<std::size_t> sizes;

  void validate() const;
  std::size_t total() const;
  bool is_regular() const;
  friend bool operator==(const PartSpec &, const PartSpec &) = default;
};

/// Parses "2,2,2".
PartSpec parse_part_spec(std::string_view text);
std::string to_string(const PartSpec &parts);

// Edge-list text: one "u v" pair per line, '#' starts a comment, and the
// first data line may be an "n m" header. That line is taken as a header iff
// every later endpoint is < n and m equals the number of distinct later edges.
// Without a header, n = max endpoint + 1.
Graph parse_edge_list(std::string_view text);
/// Always writes the header line.
std::string to_edge_list(const Graph &g);

/// Canonical graph6, no ">>graph6<<" header. Supports 0 <= n < 2^18.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph &g);

inline constexpr std::size_t kMaxGraph6Order = std::size_t{1} << 18;

/// Vertices numbered part by part; u ~ v iff they lie in different parts.
Graph generate_complete_multipartite(const PartSpec &parts);

/// G(n, p) with exact rational p = a/b (b must fit in 64 bits). PRNG is
/// std::mt19937_64 seeded with `seed`; pairs (i, j), i < j, are visited with
/// i outer and j inner, and each is kept iff a uniform integer drawn from
/// [0, b) by rejection sampling is < a.
Graph generate_random(std::size_t n, const Rational &p, std::uint64_t seed);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph empty_graph(std::size_t n);

} // namespace cliquebound
