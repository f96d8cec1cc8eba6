#include "cliquebound/corpus.hpp"

namespace cliquebound {

namespace {

Graph from(std::size_t n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return from(10, e);
}

Graph wheel(std::size_t rim) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < rim; ++i) {
    e.emplace_back(i, (i + 1) % rim);
    e.emplace_back(i, rim);
  }
  return from(rim + 1, e);
}

} // namespace

std::vector<CorpusEntry> named_graphs() {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 1; n <= 6; ++n) out.push_back({"K" + std::to_string(n), complete_graph(n)});
  for (std::size_t n = 4; n <= 7; ++n) out.push_back({"C" + std::to_string(n), cycle_graph(n)});
  out.push_back({"P3", path_graph(3)});
  out.push_back({"P5", path_graph(5)});
  out.push_back({"empty3", empty_graph(3)});
  out.push_back({"paw", from(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}})});
  out.push_back({"star_K1_3", from(4, {{0, 1}, {0, 2}, {0, 3}})});
  out.push_back({"diamond", from(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})});
  out.push_back({"bowtie", from(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}})});
  out.push_back({"K3_plus_K1", from(4, {{0, 1}, {0, 2}, {1, 2}})});
  out.push_back({"house", from(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}})});
  out.push_back({"wheel_W5", wheel(5)});
  out.push_back({"petersen", petersen()});
  out.push_back({"K_1_2_3", generate_complete_multipartite(PartSpec{{1, 2, 3}})});
  out.push_back({"K4_minus_edge_plus_K4", from(8, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {4, 7},
                                                  {5, 6}, {5, 7}, {6, 7}, {3, 4}})});
  return out;
}

std::vector<CorpusEntry> regular_multipartite_family() {
  std::vector<CorpusEntry> out;
  for (std::size_t s = 1; s <= 3; ++s)
    for (std::size_t r = 2; r <= 4; ++r) {
      if (s * r > 12) continue;
      out.push_back({"K_" + std::to_string(s) + "x" + std::to_string(r),
                     generate_complete_multipartite(PartSpec{std::vector<std::size_t>(r, s)})});
    }
  return out;
}

std::vector<CorpusEntry> random_sweep(std::size_t count, std::uint64_t base_seed) {
  static const char *const labels[] = {"1/4", "1/2", "3/4"};
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = 8 + k % 7;
    const char *p = labels[(k / 7) % 3];
    const std::uint64_t seed = base_seed + k;
    out.push_back({"gnp_n" + std::to_string(n) + "_p" + p + "_s" + std::to_string(seed),
                   generate_random(n, parse_rational(p), seed)});
  }
  return out;
}

std::vector<CorpusEntry> default_corpus(std::size_t random_count, std::uint64_t base_seed) {
  auto out = named_graphs();
  for (auto &e : regular_multipartite_family()) out.push_back(std::move(e));
  for (auto &e : random_sweep(random_count, base_seed)) out.push_back(std::move(e));
  return out;
}

} // namespace cliquebound
