#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>

#include "graphent/oracle.hpp"
#include "graphent/spectral.hpp"
#include "test_util.hpp"

using namespace graphent;
using Catch::Matchers::WithinAbs;

static Graph load_karate() {
  std::ifstream in(GRAPHENT_DATA_DIR "/soc-karate.mtx");
  REQUIRE(in.good());
  return load_matrix_market(in).graph;
}

TEST_CASE("spectral radius closed forms") {
  for (int n : {3, 5, 10, 24}) REQUIRE_THAT(spectral_radius(make_cycle(n)).lambda, WithinAbs(2.0, 1e-10));
  REQUIRE_THAT(spectral_radius(make_complete_bipartite(2, 3)).lambda,
               WithinAbs(std::sqrt(6.0), 1e-10));
  auto p3 = spectral_radius(make_path(3));
  REQUIRE_THAT(p3.lambda, WithinAbs(std::sqrt(2.0), 1e-10));
  REQUIRE_THAT(p3.perron[0], WithinAbs(0.2928932188134524, 1e-9));
  REQUIRE_THAT(p3.perron[1], WithinAbs(0.4142135623730951, 1e-9));
  REQUIRE_THAT(p3.perron[2], WithinAbs(0.2928932188134524, 1e-9));
}

TEST_CASE("spectral radius rejects disconnected input") {
  Graph g(4, {{0, 1}, {2, 3}});
  REQUIRE_THROWS_AS(spectral_radius(g), std::invalid_argument);
}

TEST_CASE("eigenpair residual and degree sandwich") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    auto g = generate_er(40, 0.15, seed).graph;
    auto sp = spectral_radius(g);
    REQUIRE(sp.residual / sp.lambda <= 1e-10);
    for (double f : sp.perron) REQUIRE(f > 0.0);
    auto st = degree_stats(g);
    REQUIRE(st.d_min <= st.d_avg() + 1e-12);
    REQUIRE(st.d_avg() <= sp.lambda + 1e-9);
    REQUIRE(sp.lambda <= st.d_max + 1e-9);
  }
}

TEST_CASE("lambda never decreases when an edge is added") {
  std::mt19937_64 rng(2024);
  int trials = 0;
  while (trials < 50) {
    auto g = generate_er(18, 0.2, rng()).graph;
    int u = static_cast<int>(rng() % 18), v = static_cast<int>(rng() % 18);
    if (u == v || g.has_edge(u, v)) continue;
    ++trials;
    auto e = g.edges();
    e.emplace_back(std::min(u, v), std::max(u, v));
    Graph g2(18, e);
    REQUIRE(spectral_radius(g2).lambda >= spectral_radius(g).lambda - 1e-11);
  }
}

TEST_CASE("topological entropy") {
  REQUIRE_THAT(topological_entropy(make_cycle(8)), WithinAbs(1.0, 1e-12));
  REQUIRE_THAT(topological_entropy(make_path(3)), WithinAbs(0.5, 1e-10));
  REQUIRE_THAT(topological_entropy(load_karate()), WithinAbs(2.7497, 1e-3));
}

TEST_CASE("schwarz constants are exact walk counts") {
  auto p3 = make_path(3);
  REQUIRE(schwarz_constant(p3, 0) == 3);
  REQUIRE(schwarz_constant(p3, 1) == 4);
  REQUIRE(schwarz_constant(p3, 3) == 8);
  REQUIRE(schwarz_constant(make_cycle(5), 1) == 10);
  // 2-regular: N_k = n 2^k
  mpz_class expect = 5;
  expect <<= 20;
  REQUIRE(schwarz_constant(make_cycle(5), 20) == expect);
  REQUIRE(schwarz_constant(make_complete(4), 0) == 4);
}

TEST_CASE("schwarz estimate converges to lambda") {
  auto p3 = make_path(3);
  REQUIRE_THAT(schwarz_estimate(p3, 1), WithinAbs(4.0, 1e-12));
  REQUIRE_THAT(schwarz_estimate(p3, 4), WithinAbs(std::pow(12.0, 0.25), 1e-12));
  REQUIRE_THAT(schwarz_estimate(make_cycle(5), 20), WithinAbs(2.0 * std::pow(5.0, 0.05), 1e-12));
  // |estimate - lambda| eventually decreasing in k
  auto g = generate_er(20, 0.25, 11).graph;
  double lam = spectral_radius(g).lambda;
  double prev = std::abs(schwarz_estimate(g, 16) - lam);
  for (unsigned k = 32; k <= 128; k *= 2) {
    double cur = std::abs(schwarz_estimate(g, k) - lam);
    REQUIRE(cur <= prev + 1e-12);
    prev = cur;
  }
}

TEST_CASE("max entropy chain on K_n is uniform") {
  auto c = max_entropy_chain(make_complete(5));
  for (const auto& row : c.rows)
    for (double p : row) REQUIRE_THAT(p, WithinAbs(0.25, 1e-12));
  for (double pi : c.stationary) REQUIRE_THAT(pi, WithinAbs(0.2, 1e-12));
}

TEST_CASE("max entropy chain on P_3") {
  auto g = make_path(3);
  auto c = max_entropy_chain(g);
  // endpoint rows are deterministic, the middle row is (1/2, 1/2)
  REQUIRE_THAT(c.rows[0][0], WithinAbs(1.0, 1e-12));
  REQUIRE_THAT(c.rows[1][0], WithinAbs(0.5, 1e-10));
  REQUIRE_THAT(c.rows[1][1], WithinAbs(0.5, 1e-10));
  REQUIRE_THAT(c.stationary[0], WithinAbs(0.25, 1e-10));
  REQUIRE_THAT(c.stationary[1], WithinAbs(0.5, 1e-10));
  REQUIRE_THAT(dynamical_entropy(c), WithinAbs(0.5, 1e-10));
}

TEST_CASE("raw P* rows on karate are stochastic and stationary") {
  auto g = load_karate();
  auto sp = spectral_radius(g);
  // raw closed-form rows, before any normalization
  for (int u = 0; u < g.vertex_count(); ++u) {
    double sum = 0.0;
    for (int v : g.neighbors(u)) sum += sp.perron[v] / (sp.lambda * sp.perron[u]);
    REQUIRE_THAT(sum, WithinAbs(1.0, 1e-12));
  }
  auto c = max_entropy_chain(g);
  // pi P = pi
  std::vector<double> next(c.stationary.size(), 0.0);
  for (int u = 0; u < g.vertex_count(); ++u) {
    const auto& nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) next[nb[i]] += c.stationary[u] * c.rows[u][i];
  }
  for (std::size_t i = 0; i < next.size(); ++i)
    REQUIRE_THAT(next[i], WithinAbs(c.stationary[i], 1e-10));
  REQUIRE_THAT(dynamical_entropy(c), WithinAbs(std::log2(sp.lambda), 1e-9));
}

TEST_CASE("detailed balance of P*") {
  auto g = generate_er(30, 0.2, 77).graph;
  auto sp = spectral_radius(g);
  auto c = max_entropy_chain(g);
  for (int u = 0; u < g.vertex_count(); ++u) {
    const auto& nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      int v = nb[i];
      const auto& nbv = g.neighbors(v);
      std::size_t back =
          std::lower_bound(nbv.begin(), nbv.end(), u) - nbv.begin();
      double ratio = c.rows[u][i] / c.rows[v][back];
      double expect = (sp.perron[v] / sp.perron[u]) * (sp.perron[v] / sp.perron[u]);
      REQUIRE_THAT(ratio, WithinAbs(expect, 1e-10 * expect));
    }
  }
}

TEST_CASE("deterministic cycle chain has zero entropy") {
  auto g = make_cycle(6);
  std::vector<std::vector<double>> rows(6);
  for (int u = 0; u < 6; ++u) {
    rows[u].assign(g.neighbors(u).size(), 0.0);
    // always step to the larger neighbor mod n: a deterministic rotation
    int target = (u + 1) % 6;
    for (std::size_t i = 0; i < g.neighbors(u).size(); ++i)
      if (g.neighbors(u)[i] == target) rows[u][i] = 1.0;
  }
  auto c = markov_chain_on(g, rows);
  REQUIRE_THAT(dynamical_entropy(c), WithinAbs(0.0, 1e-12));
}

TEST_CASE("variational principle: h(P) <= log2 lambda with equality at P*") {
  std::mt19937_64 rng(4242);
  for (std::uint64_t seed : {10u, 11u, 12u}) {
    auto g = generate_er(25, 0.2, seed).graph;
    double H = std::log2(spectral_radius(g).lambda);
    REQUIRE_THAT(dynamical_entropy(max_entropy_chain(g)), WithinAbs(H, 1e-9));
    for (int rep = 0; rep < 100; ++rep) {
      auto rows = testutil::random_compatible_rows(g, rng);
      auto pi = testutil::stationary_by_linear_solve(g, rows);
      MarkovChain c{rows, pi};
      REQUIRE(dynamical_entropy(c) <= H + 1e-9);
    }
  }
}

TEST_CASE("iterative stationary matches the linear-solve oracle") {
  std::mt19937_64 rng(555);
  auto g = generate_er(20, 0.25, 31).graph;
  auto rows = testutil::random_compatible_rows(g, rng);
  auto c = markov_chain_on(g, rows);
  auto pi = testutil::stationary_by_linear_solve(g, rows);
  for (std::size_t i = 0; i < pi.size(); ++i) REQUIRE_THAT(c.stationary[i], WithinAbs(pi[i], 1e-9));
}

TEST_CASE("rayleigh lower bound") {
  // equality for regular graphs at any alpha
  for (double a : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
    REQUIRE_THAT(rayleigh_lower_bound(make_cycle(9), a), WithinAbs(2.0, 1e-12));
    REQUIRE_THAT(rayleigh_lower_bound(make_complete(6), a), WithinAbs(5.0, 1e-12));
  }
  // equality for K_{s,t} at alpha = 1/2
  REQUIRE_THAT(rayleigh_lower_bound(make_complete_bipartite(2, 3), 0.5),
               WithinAbs(std::sqrt(6.0), 1e-12));
  // alpha = 0 gives the average degree
  auto g = generate_er(30, 0.2, 9).graph;
  REQUIRE_THAT(rayleigh_lower_bound(g, 0.0), WithinAbs(degree_stats(g).d_avg(), 1e-12));
  // and the bound holds generally
  double lam = spectral_radius(g).lambda;
  for (double a : {-1.5, -0.5, 0.3, 0.9, 2.5})
    REQUIRE(rayleigh_lower_bound(g, a) <= lam + 1e-9);
}
