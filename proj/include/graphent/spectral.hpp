#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "graphent/graph.hpp"
#include "graphent/randic.hpp"

namespace graphent {

/// Raised when power iteration does not reach the target residual.
class convergence_error : public std::runtime_error {
public:
  convergence_error(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

private:
  double residual_;
};

/// Dominant eigenpair of the adjacency matrix.
struct SpectralResult {
  double lambda = 0.0;          // spectral radius of A
  std::vector<double> perron;   // positive, sums to 1
  std::size_t iterations = 0;
  double residual = 0.0;        // final ||A f - lambda f||_inf
};

/// Power iteration on A + I. The shift makes the operator primitive on a
/// connected graph, so bipartite period-2 oscillation cannot occur; the
/// reported eigenvalue is lambda(A) = lambda(A+I) - 1.
/// Stops when the relative infinity-norm residual on the shifted operator
/// drops below tol (default 1e-13), starting from the all-ones vector.
inline SpectralResult spectral_radius(const Graph& g, double tol = 1e-13,
                                      std::size_t max_iter = 1000000) {
  const int n = g.vertex_count();
  if (!is_connected(g)) throw std::invalid_argument("spectral_radius requires a connected graph");
  if (n == 1) return {0.0, {1.0}, 0, 0.0};

  std::vector<double> x(static_cast<std::size_t>(n), 1.0 / n), y(static_cast<std::size_t>(n));
  double mu = 0.0, res = std::numeric_limits<double>::infinity();
  std::size_t it = 0;
  for (; it < max_iter; ++it) {
    // y = (A + I) x
    for (int u = 0; u < n; ++u) {
      double acc = x[static_cast<std::size_t>(u)];
      for (int v : g.neighbors(u)) acc += x[static_cast<std::size_t>(v)];
      y[static_cast<std::size_t>(u)] = acc;
    }
    double xy = 0.0, xx = 0.0;
    for (int i = 0; i < n; ++i) {
      xy += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
      xx += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    }
    mu = xy / xx;  // Rayleigh quotient of A + I
    res = 0.0;
    for (int i = 0; i < n; ++i)
      res = std::max(res, std::abs(y[static_cast<std::size_t>(i)] - mu * x[static_cast<std::size_t>(i)]));
    double ysum = 0.0;
    for (double v : y) ysum += v;
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] / ysum;
    if (res <= tol * mu) break;
  }
  if (res > tol * mu)
    throw convergence_error("spectral_radius: no convergence after " + std::to_string(max_iter) +
                                " iterations (residual " + std::to_string(res) + ")",
                            res);
  SpectralResult out;
  out.lambda = mu - 1.0;
  out.perron = std::move(x);
  out.iterations = it + 1;
  out.residual = res;  // identical for A and A+I since the shift cancels
  return out;
}

/// H(G) = log2 lambda(G), the growth rate of the walk count.
inline double topological_entropy(const Graph& g) { return std::log2(spectral_radius(g).lambda); }

/// Schwarz constant N_k = <1, A^k 1>, the number of walks of length k.
/// Exact arbitrary-precision count via k matrix-vector products.
inline mpz_class schwarz_constant(const Graph& g, unsigned k) {
  const int n = g.vertex_count();
  std::vector<mpz_class> x(static_cast<std::size_t>(n), 1), y(static_cast<std::size_t>(n));
  for (unsigned step = 0; step < k; ++step) {
    for (int u = 0; u < n; ++u) {
      mpz_class acc = 0;
      for (int v : g.neighbors(u)) acc += x[static_cast<std::size_t>(v)];
      y[static_cast<std::size_t>(u)] = acc;
    }
    std::swap(x, y);
  }
  mpz_class total = 0;
  for (const auto& v : x) total += v;
  return total;
}

/// (N_k)^(1/k) -> lambda(G) as k grows.
inline double schwarz_estimate(const Graph& g, unsigned k) {
  if (k < 1) throw std::invalid_argument("schwarz_estimate requires k >= 1");
  mpz_class nk = schwarz_constant(g, k);
  signed long exp2part = 0;
  double mant = mpz_get_d_2exp(&exp2part, nk.get_mpz_t());
  // N_k = mant * 2^exp2part, so N_k^(1/k) = 2^((log2 mant + exp2part)/k)
  return std::exp2((std::log2(mant) + static_cast<double>(exp2part)) / k);
}

/// Row-stochastic matrix supported on the host graph's edges, stored as
/// per-vertex probability lists aligned with the adjacency lists.
struct MarkovChain {
  std::vector<std::vector<double>> rows;  // rows[u][i] = P(u -> neighbors(u)[i])
  std::vector<double> stationary;
};

/// The entropy-maximizing chain P*: p*_uv = f_v / (lambda f_u) on edges,
/// with the closed-form stationary distribution pi_v = f_v^2 / sum f^2
/// (P* is reversible with respect to f^2).
inline MarkovChain max_entropy_chain(const Graph& g, double row_tol = 1e-9) {
  SpectralResult sp = spectral_radius(g);
  const int n = g.vertex_count();
  MarkovChain c;
  c.rows.resize(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    const auto& nb = g.neighbors(u);
    auto& row = c.rows[static_cast<std::size_t>(u)];
    row.resize(nb.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      row[i] = sp.perron[static_cast<std::size_t>(nb[i])] /
               (sp.lambda * sp.perron[static_cast<std::size_t>(u)]);
      sum += row[i];
    }
    if (std::abs(sum - 1.0) > row_tol)
      throw convergence_error("max_entropy_chain: row sum off by " + std::to_string(sum - 1.0),
                              std::abs(sum - 1.0));
    for (auto& p : row) p /= sum;
  }
  double fsq = 0.0;
  for (double f : sp.perron) fsq += f * f;
  c.stationary.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    double f = sp.perron[static_cast<std::size_t>(v)];
    c.stationary[static_cast<std::size_t>(v)] = f * f / fsq;
  }
  return c;
}

/// Build a chain from explicit row distributions over the adjacency lists:
/// rows are normalized and the stationary distribution is computed by lazy
/// power iteration (deterministic; works for periodic supports too).
inline MarkovChain markov_chain_on(const Graph& g, std::vector<std::vector<double>> rows,
                                   double tol = 1e-12, std::size_t max_iter = 2000000) {
  const int n = g.vertex_count();
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("row count mismatch");
  for (int u = 0; u < n; ++u) {
    if (rows[static_cast<std::size_t>(u)].size() != g.neighbors(u).size())
      throw std::invalid_argument("row length mismatch at vertex " + std::to_string(u));
    double sum = 0.0;
    for (double p : rows[static_cast<std::size_t>(u)]) {
      if (p < 0.0) throw std::invalid_argument("negative transition probability");
      sum += p;
    }
    if (sum <= 0.0) throw std::invalid_argument("empty row at vertex " + std::to_string(u));
    for (auto& p : rows[static_cast<std::size_t>(u)]) p /= sum;
  }
  MarkovChain c;
  c.rows = std::move(rows);
  std::vector<double> pi(static_cast<std::size_t>(n), 1.0 / n), nxt(static_cast<std::size_t>(n));
  double err = 1.0;
  for (std::size_t it = 0; it < max_iter; ++it) {
    // nxt = pi P
    std::fill(nxt.begin(), nxt.end(), 0.0);
    for (int u = 0; u < n; ++u) {
      const auto& nb = g.neighbors(u);
      for (std::size_t i = 0; i < nb.size(); ++i)
        nxt[static_cast<std::size_t>(nb[i])] +=
            pi[static_cast<std::size_t>(u)] * c.rows[static_cast<std::size_t>(u)][i];
    }
    err = 0.0;
    for (int i = 0; i < n; ++i)
      err = std::max(err, std::abs(nxt[static_cast<std::size_t>(i)] - pi[static_cast<std::size_t>(i)]));
    // lazy step kills periodicity
    for (int i = 0; i < n; ++i)
      pi[static_cast<std::size_t>(i)] =
          0.5 * (pi[static_cast<std::size_t>(i)] + nxt[static_cast<std::size_t>(i)]);
    if (err <= tol) break;
  }
  if (err > tol) throw convergence_error("markov_chain_on: stationary iteration stalled", err);
  double sum = 0.0;
  for (double v : pi) sum += v;
  for (auto& v : pi) v /= sum;
  c.stationary = std::move(pi);
  return c;
}

/// h(P) = -sum_i pi_i sum_j p_ij log2 p_ij, with 0 log 0 = 0.
inline double dynamical_entropy(const MarkovChain& c) {
  detail::KahanSum h;
  for (std::size_t u = 0; u < c.rows.size(); ++u) {
    double inner = 0.0;
    for (double p : c.rows[u])
      if (p > 0.0) inner -= p * std::log2(p);
    h.add(c.stationary[u] * inner);
  }
  return h.value();
}

/// Rayleigh-quotient lower bound lambda(G) >= 2 Rbar_alpha(G), which is an
/// equality for regular graphs (any alpha) and for K_{s,t} at alpha = 1/2.
inline double rayleigh_lower_bound(const Graph& g, double alpha) {
  return 2.0 * normalized_randic(g, alpha);
}

}  // namespace graphent
