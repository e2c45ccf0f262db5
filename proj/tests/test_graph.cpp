#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "graphent/graph.hpp"

using namespace graphent;
using Catch::Matchers::WithinAbs;

static LoadResult load_edges_str(const std::string& s) {
  std::istringstream is(s);
  return load_edge_list(is);
}

TEST_CASE("edge list loader basics") {
  auto r = load_edges_str("0 1\n1 2\n");
  REQUIRE(r.graph.vertex_count() == 3);
  REQUIRE(r.graph.edge_count() == 2);
  REQUIRE(r.graph.has_edge(0, 1));
  REQUIRE(r.graph.has_edge(1, 2));
  REQUIRE_FALSE(r.graph.has_edge(0, 2));
}

TEST_CASE("edge list remaps labels by first appearance") {
  auto r = load_edges_str("# comment\n% another\n10 20\n20 30\n10 30\n");
  REQUIRE(r.graph.vertex_count() == 3);
  REQUIRE(r.labels == std::vector<long long>{10, 20, 30});
  REQUIRE(r.graph.edge_count() == 3);
}

TEST_CASE("edge list drops duplicates and self-loops with counters") {
  auto r = load_edges_str("0 1\n0 1\n1 1\n");
  REQUIRE(r.graph.vertex_count() == 2);
  REQUIRE(r.graph.edge_count() == 1);
  REQUIRE(r.dropped_duplicates == 1);
  REQUIRE(r.dropped_self_loops == 1);
}

TEST_CASE("edge list reports parse errors with line numbers") {
  std::istringstream bad("0 1\nnot numbers\n");
  try {
    load_edge_list(bad);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    REQUIRE(e.line() == 2);
  }
  std::istringstream empty("# nothing\n");
  REQUIRE_THROWS_AS(load_edge_list(empty), format_error);
  std::istringstream trailing("0 1 junk\n");
  REQUIRE_THROWS_AS(load_edge_list(trailing), parse_error);
}

TEST_CASE("matrix market loader") {
  std::istringstream ok(
      "%%MatrixMarket matrix coordinate pattern symmetric\n"
      "% triangle\n"
      "3 3 3\n"
      "2 1\n3 1\n3 2\n");
  auto r = load_matrix_market(ok);
  REQUIRE(r.graph.vertex_count() == 3);
  REQUIRE(r.graph.edge_count() == 3);

  std::istringstream wrong("%%MatrixMarket matrix coordinate real general\n3 3 1\n1 2 0.5\n");
  REQUIRE_THROWS_AS(load_matrix_market(wrong), format_error);
}

TEST_CASE("edge list writer round-trips") {
  auto er = generate_er(25, 0.3, 42);
  std::ostringstream os;
  write_edge_list(os, er.graph);
  auto back = load_edges_str(os.str());
  REQUIRE(back.graph.vertex_count() == er.graph.vertex_count());
  REQUIRE(back.graph.edges() == er.graph.edges());
}

TEST_CASE("degree sequence") {
  REQUIRE(degree_sequence(make_star(4)).values() == std::vector<int>{4, 1, 1, 1, 1});
  REQUIRE(degree_sequence(make_cycle(6)).values() == std::vector<int>(6, 2));
}

TEST_CASE("degree sum is twice the edge count") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto er = generate_er(40, 0.15, seed);
    REQUIRE(degree_sequence(er.graph).sum() == 2LL * er.graph.edge_count());
  }
}

TEST_CASE("connectivity") {
  REQUIRE(is_connected(make_path(4)));
  Graph two_edges(4, {{0, 1}, {2, 3}});
  REQUIRE_FALSE(is_connected(two_edges));
  REQUIRE(is_connected(Graph(1)));
}

TEST_CASE("degree stats") {
  auto s = degree_stats(make_cycle(7));
  REQUIRE(s.d_min == 2);
  REQUIRE(s.d_max == 2);
  REQUIRE_THAT(s.d_avg(), WithinAbs(2.0, 0.0));
  auto p = degree_stats(make_path(3));
  REQUIRE(p.format_avg(3) == "1.333");
}

TEST_CASE("generate_er determinism and edge cases") {
  auto a = generate_er(50, 0.2, 7);
  auto b = generate_er(50, 0.2, 7);
  REQUIRE(a.graph.edges() == b.graph.edges());
  REQUIRE(a.seed_used == b.seed_used);
  REQUIRE(is_connected(a.graph));

  auto k5 = generate_er(5, 1.0, 123);
  REQUIRE(k5.graph.edge_count() == 10);

  REQUIRE_THROWS(generate_er(30, 0.0, 1));
}

TEST_CASE("generate_er binomial mean over 100 seeds") {
  double total = 0;
  for (std::uint64_t s = 1; s <= 100; ++s) total += generate_er(50, 0.2, 1000 + s * 7919).graph.edge_count();
  double mean = total / 100.0;
  // sigma of the mean = sqrt(1225 * .2 * .8) / 10 = 1.4
  REQUIRE_THAT(mean, WithinAbs(245.0, 3 * 1.4));
}

TEST_CASE("er graphs are graphical (loader sanity)") {
  for (std::uint64_t s : {5u, 6u}) {
    auto er = generate_er(30, 0.2, s);
    REQUIRE(is_graphical(degree_sequence(er.graph)));
  }
}

TEST_CASE("is_graphical") {
  REQUIRE(is_graphical(DegreeSequence({4, 4, 3, 3, 2, 2, 2, 2, 2})));
  REQUIRE_FALSE(is_graphical(DegreeSequence({3, 1, 1})));       // odd sum
  REQUIRE_FALSE(is_graphical(DegreeSequence({5, 1, 1, 1, 1})));  // reduction goes negative
}

TEST_CASE("is_tree_sequence") {
  REQUIRE(is_tree_sequence(DegreeSequence({4, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1})));
  REQUIRE_FALSE(is_tree_sequence(DegreeSequence({2, 2, 2})));
  REQUIRE(is_tree_sequence(DegreeSequence({1, 1})));
}

TEST_CASE("family constructors") {
  REQUIRE(make_complete(5).edge_count() == 10);
  REQUIRE(make_complete_bipartite(2, 3).edge_count() == 6);
  REQUIRE(make_star(6).edge_count() == 6);
  REQUIRE(degree_stats(make_complete_bipartite(2, 3)).d_max == 3);
}
