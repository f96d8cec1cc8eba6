#include "cliquebound/graph.hpp"

#include "cliquebound/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace cliquebound {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.rows_.assign(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw PreconditionError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") out of range for n = " + std::to_string(n));
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    if (!g.rows_[u].test(v)) {
      g.rows_[u].set(v);
      g.rows_[v].set(u);
      ++g.m_;
    }
  }
  g.validate();
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v = rows_[u].next(u); v < n(); v = rows_[u].next(v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<Edge> sub;
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (adjacent(vertices[a], vertices[b])) sub.emplace_back(a, b);
  return from_edges(vertices.size(), sub);
}

Graph Graph::complement() const {
  std::vector<Edge> comp;
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v = u + 1; v < n(); ++v)
      if (!adjacent(u, v)) comp.emplace_back(u, v);
  return from_edges(n(), comp);
}

bool Graph::is_clique(const VertexSet &s) const {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && (s - rows_[v]).count() != 1) ok = false;
  });
  return ok;
}

bool Graph::is_independent(const VertexSet &s) const {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && rows_[v].intersection_count(s) != 0) ok = false;
  });
  return ok;
}

void Graph::validate() const {
  std::size_t degree_sum = 0;
  for (Vertex u = 0; u < n(); ++u) {
    if (rows_[u].universe() != n()) throw InvariantViolation("adjacency row has wrong width");
    if (rows_[u].test(u)) throw InvariantViolation("self-loop at vertex " + std::to_string(u));
    rows_[u].for_each([&](Vertex v) {
      if (!rows_[v].test(u))
        throw InvariantViolation("asymmetric adjacency between " + std::to_string(u) + " and " +
                                 std::to_string(v));
    });
    degree_sum += rows_[u].count();
  }
  if (degree_sum != 2 * m_) throw InvariantViolation("cached edge count disagrees with adjacency");
}

std::optional<std::vector<std::vector<Vertex>>> complete_multipartite_parts(const Graph &g) {
  const std::size_t n = g.n();
  if (n == 0) return std::nullopt;
  const VertexSet all = VertexSet::full(n);
  VertexSet assigned(n);
  std::vector<std::vector<Vertex>> parts;
  for (Vertex v = 0; v < n; ++v) {
    if (assigned.test(v)) continue;
    const VertexSet part = all - g.neighbors(v);
    bool closed = true;
    part.for_each([&](Vertex u) {
      if (assigned.test(u) || !((all - g.neighbors(u)) == part)) closed = false;
    });
    if (!closed) return std::nullopt;
    assigned |= part;
    parts.push_back(part.to_vector());
  }
  return parts;
}

void PartSpec::validate() const {
  if (sizes.empty()) throw PreconditionError("part list is empty");
  for (auto s : sizes)
    if (s == 0) throw PreconditionError("part sizes must be positive");
}

std::size_t PartSpec::total() const { return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}); }

bool PartSpec::is_regular() const {
  return !sizes.empty() && std::all_of(sizes.begin(), sizes.end(), [&](auto s) { return s == sizes.front(); });
}

PartSpec parse_part_spec(std::string_view text) {
  PartSpec parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
      throw PreconditionError("bad part size '" + std::string(token) + "'");
    parts.sizes.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  parts.validate();
  return parts;
}

std::string to_string(const PartSpec &parts) {
  std::string out;
  for (std::size_t k = 0; k < parts.sizes.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts.sizes[k]);
  }
  return out;
}

namespace {

struct EdgeLine {
  std::size_t line;
  std::size_t a, b;
};

bool parse_index(std::string_view tok, std::size_t &out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<EdgeLine> lines;
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    EdgeLine e{line_no, 0, 0};
    if (tokens.size() != 2 || !parse_index(tokens[0], e.a) || !parse_index(tokens[1], e.b))
      throw ParseError("line " + std::to_string(line_no) + ": expected two non-negative integers",
                       line_no);
    lines.push_back(e);
  }
  if (lines.empty()) return Graph{};

  bool header = true;
  {
    const auto &h = lines.front();
    std::set<Edge> distinct;
    for (std::size_t k = 1; k < lines.size() && header; ++k) {
      auto [a, b] = std::minmax(lines[k].a, lines[k].b);
      if (b >= h.a) header = false;
      distinct.emplace(a, b);
    }
    if (header && distinct.size() != h.b) header = false;
  }

  std::size_t n = 0;
  std::vector<Edge> edges;
  for (std::size_t k = header ? 1 : 0; k < lines.size(); ++k) {
    const auto &e = lines[k];
    if (e.a == e.b)
      throw ParseError("line " + std::to_string(e.line) + ": self-loop at vertex " + std::to_string(e.a),
                       e.line);
    n = std::max({n, e.a + 1, e.b + 1});
    edges.emplace_back(e.a, e.b);
  }
  if (header) n = lines.front().a;
  return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph &g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  std::size_t offset = 0;
  if (text.starts_with(">>graph6<<")) offset = 10;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto byte = [&](std::size_t at) -> unsigned {
    if (at >= text.size()) throw ParseError("graph6 truncated at byte " + std::to_string(at), at);
    auto ch = static_cast<unsigned char>(text[at]);
    if (ch < 63 || ch > 126)
      throw ParseError("graph6 invalid character at byte " + std::to_string(at), at);
    return ch - 63u;
  };

  std::size_t n = 0;
  if (offset >= text.size()) throw ParseError("graph6 input is empty", offset);
  if (byte(offset) != 63) {
    n = byte(offset);
    offset += 1;
  } else if (byte(offset + 1) != 63) {
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | byte(offset + k);
    offset += 4;
  } else {
    for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | byte(offset + k);
    offset += 8;
  }
  if (n >= kMaxGraph6Order) throw ParseError("graph6 order exceeds 2^18 - 1", offset);

  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() - offset < groups)
    throw ParseError("graph6 truncated: expected " + std::to_string(groups) + " data bytes", text.size());
  if (text.size() - offset > groups)
    throw ParseError("graph6 has trailing bytes", offset + groups);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      unsigned group = byte(offset + k / 6);
      if ((group >> (5 - k % 6)) & 1u) edges.emplace_back(i, j);
    }
  for (std::size_t g = 0; g < groups; ++g) byte(offset + g);
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph &g) {
  const std::size_t n = g.n();
  if (n >= kMaxGraph6Order) throw PreconditionError("graph6 supports n < 2^18");
  std::string out;
  auto put = [&](unsigned v) { out.push_back(static_cast<char>(v + 63)); };
  if (n < 63) {
    put(static_cast<unsigned>(n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) put(static_cast<unsigned>((n >> s) & 63));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) put(static_cast<unsigned>((n >> s) & 63));
  }
  unsigned acc = 0, filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        put(acc);
        acc = filled = 0;
      }
    }
  if (filled) put(acc << (6 - filled));
  return out;
}

Graph generate_complete_multipartite(const PartSpec &parts) {
  parts.validate();
  std::vector<std::size_t> part_of;
  for (std::size_t k = 0; k < parts.sizes.size(); ++k) part_of.insert(part_of.end(), parts.sizes[k], k);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < part_of.size(); ++u)
    for (Vertex v = u + 1; v < part_of.size(); ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return Graph::from_edges(part_of.size(), edges);
}

Graph generate_random(std::size_t n, const Rational &p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw PreconditionError("edge probability must lie in [0, 1]");
  if (!p.get_den().fits_ulong_p() || !p.get_num().fits_ulong_p())
    throw PreconditionError("edge probability denominator must fit in 64 bits");
  const std::uint64_t num = p.get_num().get_ui(), den = p.get_den().get_ui();

  std::mt19937_64 rng(seed);
  // 2^64 mod den: draws below it are rejected so r % den is unbiased.
  const std::uint64_t threshold = (0 - den) % den;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      std::uint64_t r;
      do r = rng();
      while (r < threshold);
      if (r % den < num) edges.emplace_back(i, j);
    }
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  return n ? generate_complete_multipartite(PartSpec{std::vector<std::size_t>(n, 1)}) : Graph{};
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  if (n >= 3) edges.emplace_back(n - 1, 0);
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph empty_graph(std::size_t n) { return Graph::from_edges(n, {}); }

} // namespace cliquebound
