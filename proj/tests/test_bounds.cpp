#include "cliquebound/bounds.hpp"
#include "cliquebound/corpus.hpp"

#include <gtest/gtest.h>

using namespace cliquebound;

namespace {

Graph named(const std::string &name) {
  for (auto &e : named_graphs())
    if (e.name == name) return e.graph;
  throw std::runtime_error("no corpus graph " + name);
}

Graph octahedron() { return generate_complete_multipartite(PartSpec{{2, 2, 2}}); }

Integer power(std::size_t n, std::size_t t) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), n, t);
  return r;
}

Rational localized(const Graph &g, std::size_t t) { return localized_zykov_bound(g, t, vertex_clique_numbers(g)); }

} // namespace

// Reference values from tests/oracle_gen/freeze_values.py.
TEST(LocalizedBound, Examples) {
  EXPECT_EQ(localized(octahedron(), 3), 8);
  EXPECT_EQ(localized(cycle_graph(5), 2), ratio(25, 4));
  EXPECT_EQ(localized(complete_graph(4), 2), 6);
  EXPECT_EQ(localized(named("paw"), 2), 5);
  EXPECT_EQ(localized(named("paw"), 3), ratio(16, 9));
  EXPECT_EQ(localized(named("petersen"), 2), 25);
  EXPECT_EQ(localized(named("petersen"), 3), 0);
}

TEST(LocalizedBound, RejectsSmallT) {
  EXPECT_THROW(localized(complete_graph(3), 1), PreconditionError);
  EXPECT_THROW(localized(complete_graph(3), 0), PreconditionError);
}

TEST(ClassicalBounds, Examples) {
  EXPECT_EQ(zykov_bound(6, 3, 3), 8);
  EXPECT_EQ(zykov_bound(4, 4, 2), 6);
  EXPECT_EQ(zykov_bound(7, 2, 3), 0);
  EXPECT_EQ(turan_bound(6, 3), 12);
  EXPECT_EQ(turan_bound(9, 1), 0);
}

TEST(EdgeLocalizedSum, Examples) {
  EXPECT_EQ(edge_localized_turan_sum(complete_graph(4)), 8);
  EXPECT_EQ(edge_localized_turan_sum(cycle_graph(5)), 10);
  EXPECT_EQ(edge_localized_turan_sum(named("paw")), ratio(13, 2));
  EXPECT_EQ(edge_localized_turan_sum(empty_graph(4)), 0);
}

TEST(VertexLocalizedTuran, Examples) {
  auto c5 = cycle_graph(5);
  EXPECT_EQ(vertex_localized_turan_value(c5, vertex_clique_numbers(c5)), ratio(25, 4));
  EXPECT_EQ(vertex_localized_turan_bound(c5, vertex_clique_numbers(c5)), 6);
  auto k4 = complete_graph(4);
  EXPECT_EQ(vertex_localized_turan_bound(k4, vertex_clique_numbers(k4)), 6);
}

TEST(KirschNir, Examples) {
  EXPECT_EQ(kirsch_nir_sum(complete_graph(4), 2), 16);
  EXPECT_EQ(kirsch_nir_sum(cycle_graph(5), 2), 20);
  EXPECT_EQ(kirsch_nir_sum(octahedron(), 3), 216);
  EXPECT_EQ(kirsch_nir_sum(named("paw"), 2), 13);
  EXPECT_EQ(kirsch_nir_sum(named("petersen"), 3), 0);
}

TEST(RegularMultipartite, Recognition) {
  auto octa = is_regular_complete_multipartite(octahedron());
  ASSERT_TRUE(octa);
  EXPECT_EQ(octa->sizes, (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_FALSE(is_regular_complete_multipartite(cycle_graph(5)));
  EXPECT_FALSE(is_regular_complete_multipartite(path_graph(3)));
  auto k4 = is_regular_complete_multipartite(complete_graph(4));
  ASSERT_TRUE(k4);
  EXPECT_EQ(k4->sizes, (std::vector<std::size_t>{1, 1, 1, 1}));
  auto independent = is_regular_complete_multipartite(empty_graph(3));
  ASSERT_TRUE(independent);
  EXPECT_EQ(independent->sizes, (std::vector<std::size_t>{3}));
  EXPECT_TRUE(is_regular_complete_multipartite(cycle_graph(4)));
}

TEST(BoundReport, Octahedron) {
  auto r = bound_report(octahedron(), 3);
  EXPECT_EQ(r.true_count, 8);
  EXPECT_EQ(r.localized_zykov, 8);
  EXPECT_EQ(r.zykov_classical, 8);
  EXPECT_TRUE(r.is_tight);
  EXPECT_FALSE(r.degenerate);
  ASSERT_TRUE(r.extremal_certificate);
  EXPECT_EQ(r.extremal_certificate->sizes, (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_TRUE(r.characterization_consistent);
  EXPECT_FALSE(r.turan);
}

TEST(BoundReport, CycleIsStrict) {
  auto r = bound_report(cycle_graph(5), 2);
  EXPECT_EQ(r.true_count, 5);
  EXPECT_FALSE(r.is_tight);
  EXPECT_FALSE(r.extremal_certificate);
  ASSERT_TRUE(r.turan);
  EXPECT_EQ(*r.turan, ratio(25, 4));
  EXPECT_TRUE(r.characterization_consistent);
}

TEST(BoundReport, EdgelessIsDegenerate) {
  auto r = bound_report(empty_graph(3), 2);
  EXPECT_EQ(r.true_count, 0);
  EXPECT_EQ(r.localized_zykov, 0);
  EXPECT_TRUE(r.is_tight);
  EXPECT_TRUE(r.degenerate);
}

TEST(BoundReport, PetersenValues) {
  auto r2 = bound_report(named("petersen"), 2);
  EXPECT_EQ(r2.true_count, 15);
  EXPECT_EQ(r2.localized_zykov, 25);
  auto r3 = bound_report(named("petersen"), 3);
  EXPECT_EQ(r3.true_count, 0);
  EXPECT_EQ(r3.localized_zykov, 0);
  EXPECT_TRUE(r3.degenerate);
}

// Octahedron at t = 4: the localized bound is tight at 0 while the Kirsch-Nir
// sum (empty) stays strictly below n^4, so neither bound dominates the other.
TEST(BoundReport, LocalizedAndKirschNirAreIncomparable) {
  auto r = bound_report(octahedron(), 4);
  EXPECT_TRUE(r.is_tight);
  EXPECT_EQ(r.kirsch_nir_sum, 0);
  EXPECT_FALSE(r.kirsch_nir_equal);
  auto c5 = bound_report(cycle_graph(5), 2);
  EXPECT_FALSE(c5.is_tight);
  EXPECT_FALSE(c5.kirsch_nir_equal);
}

TEST(BoundReport, SoundnessAndCharacterizationOnCorpus) {
  for (const auto &e : default_corpus(60)) {
    const auto &g = e.graph;
    const auto profile = vertex_clique_numbers(g);
    const bool regular = is_regular_complete_multipartite(g).has_value();
    for (std::size_t t = 2; t <= 5; ++t) {
      auto r = bound_report(g, t, profile);
      EXPECT_LE(Rational(r.true_count), r.localized_zykov) << e.name << " t=" << t;
      if (r.omega > 0) {
        EXPECT_LE(r.localized_zykov, r.zykov_classical) << e.name << " t=" << t;
      }
      EXPECT_TRUE(r.characterization_consistent) << e.name << " t=" << t;
      if (!r.degenerate) {
        EXPECT_EQ(r.is_tight, regular) << e.name << " t=" << t;
      }
      if (t == 2) {
        EXPECT_EQ(r.vertex_localized_turan_value, r.localized_zykov);
        EXPECT_LE(Integer(to_integer(g.m())), r.vertex_localized_turan);
      }
      EXPECT_LE(r.kirsch_nir_sum, Rational(power(g.n(), t)));
    }
    Rational half_square = ratio(to_integer(g.n() * g.n()), 2);
    EXPECT_LE(edge_localized_turan_sum(g), half_square);
  }
}
