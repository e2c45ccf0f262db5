#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "graphent/graph.hpp"

namespace graphent {

namespace detail {

/// Compensated (Kahan) summation; keeps ratio-type identities such as
/// 2*Rbar = d for regular graphs accurate to a few ulp.
struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double value() const { return s; }
};

/// base^alpha for integer base >= 1. Integer exponents use exact repeated
/// multiplication (so R_1, R_2, ... stay integer-valued); everything else
/// goes through exp2(alpha * log2(base)).
inline double int_pow_real(long long base, double alpha) {
  if (alpha == 0.0) return 1.0;
  double r = std::round(alpha);
  if (r == alpha && std::abs(r) <= 64.0) {
    double acc = 1.0, b = static_cast<double>(base);
    for (long long k = static_cast<long long>(std::abs(r)); k > 0; --k) acc *= b;
    return r > 0 ? acc : 1.0 / acc;
  }
  return std::exp2(alpha * std::log2(static_cast<double>(base)));
}

inline void check_min_degree_one(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) < 1) throw std::invalid_argument("all degrees must be >= 1");
}

}  // namespace detail

/// R_alpha(G) = sum over edges of (d_u d_v)^alpha.
inline double randic_index(const Graph& g, double alpha) {
  detail::check_min_degree_one(g);
  detail::KahanSum s;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) s.add(detail::int_pow_real(1LL * g.degree(u) * g.degree(v), alpha));
  return s.value();
}

/// sum over vertices of (d_v^2)^alpha, the normalizer of Rbar and p_V.
inline double vertex_power_sum(const Graph& g, double alpha) {
  detail::check_min_degree_one(g);
  detail::KahanSum s;
  for (int v = 0; v < g.vertex_count(); ++v)
    s.add(detail::int_pow_real(1LL * g.degree(v) * g.degree(v), alpha));
  return s.value();
}

/// Rbar_alpha = R_alpha / sum_v d_v^(2 alpha); bounded by lambda/2.
inline double normalized_randic(const Graph& g, double alpha) {
  return randic_index(g, alpha) / vertex_power_sum(g, alpha);
}

struct EdgeMeasure {
  std::vector<double> p;  // aligned with Graph::edges() order
  double alpha = 0.0;
};

struct VertexMeasure {
  std::vector<double> p;  // indexed by vertex
  double alpha = 0.0;
};

inline EdgeMeasure edge_measure(const Graph& g, double alpha) {
  detail::check_min_degree_one(g);
  EdgeMeasure m;
  m.alpha = alpha;
  auto es = g.edges();
  m.p.resize(es.size());
  detail::KahanSum tot;
  for (std::size_t i = 0; i < es.size(); ++i) {
    m.p[i] = detail::int_pow_real(1LL * g.degree(es[i].first) * g.degree(es[i].second), alpha);
    tot.add(m.p[i]);
  }
  for (auto& x : m.p) x /= tot.value();
  return m;
}

inline VertexMeasure vertex_measure(const Graph& g, double alpha) {
  detail::check_min_degree_one(g);
  VertexMeasure m;
  m.alpha = alpha;
  m.p.resize(static_cast<std::size_t>(g.vertex_count()));
  detail::KahanSum tot;
  for (int v = 0; v < g.vertex_count(); ++v) {
    m.p[static_cast<std::size_t>(v)] = detail::int_pow_real(1LL * g.degree(v) * g.degree(v), alpha);
    tot.add(m.p[static_cast<std::size_t>(v)]);
  }
  for (auto& x : m.p) x /= tot.value();
  return m;
}

/// Shannon entropy in bits with the 0 log 0 = 0 convention.
inline double shannon_bits(const std::vector<double>& p) {
  detail::KahanSum h;
  for (double x : p)
    if (x > 0.0) h.add(-x * std::log2(x));
  return h.value();
}

/// (H_E^alpha, H_V^alpha) in bits.
inline std::pair<double, double> edge_vertex_entropies(const Graph& g, double alpha) {
  return {shannon_bits(edge_measure(g, alpha).p), shannon_bits(vertex_measure(g, alpha).p)};
}

/// Renyi entropy of the degree-product edge measure p_E^1,
/// H_alpha = log2(R_alpha / R_1^alpha) / (1 - alpha); Shannon at alpha -> 1.
inline double renyi_edge_entropy(const Graph& g, double alpha) {
  if (std::abs(alpha - 1.0) < 1e-8) return shannon_bits(edge_measure(g, 1.0).p);
  double r1 = randic_index(g, 1.0);
  double ra = randic_index(g, alpha);
  return (std::log2(ra) - alpha * std::log2(r1)) / (1.0 - alpha);
}

/// Tsallis q-entropy of p_E^1, S_q = (1 - R_q / R_1^q) / (q - 1).
/// The q -> 1 limit is the Shannon entropy in nats (divide by ln 2 for bits).
inline double tsallis_edge_entropy(const Graph& g, double q) {
  if (std::abs(q - 1.0) < 1e-8) {
    detail::KahanSum h;
    for (double x : edge_measure(g, 1.0).p)
      if (x > 0.0) h.add(-x * std::log(x));
    return h.value();
  }
  double r1 = randic_index(g, 1.0);
  double rq = randic_index(g, q);
  return (1.0 - rq * std::exp2(-q * std::log2(r1))) / (q - 1.0);
}

/// Closed form of d/dalpha log2 Rbar_alpha:
/// (log2 Rbar_alpha + H_V^alpha - H_E^alpha) / alpha. Undefined at alpha = 0.
inline double log_randic_derivative(const Graph& g, double alpha) {
  if (alpha == 0.0) throw std::domain_error("log_randic_derivative is undefined at alpha = 0");
  auto [he, hv] = edge_vertex_entropies(g, alpha);
  return (std::log2(normalized_randic(g, alpha)) + hv - he) / alpha;
}

struct AlphaStar {
  double alpha = 0.0;
  double rbar = 0.0;
  bool flat = false;  // Rbar constant over the scan grid (regular graphs)
};

namespace detail {

/// Golden-section maximization of f on [a, b] to x-tolerance tol.
inline double golden_max(const std::function<double(double)>& f, double a, double b, double tol) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace detail

/// Locate the maximizer of Rbar_alpha: coarse 0.01 grid scan, then
/// golden-section refinement around the best grid point.
inline AlphaStar find_alpha_star(const Graph& g, double lo = -2.0, double hi = 4.0, double tol = 1e-8) {
  if (!(lo < hi)) throw std::invalid_argument("find_alpha_star: need lo < hi");
  if (tol <= 0.0) throw std::invalid_argument("find_alpha_star: need tol > 0");
  const double step = 0.01;
  const int steps = static_cast<int>(std::round((hi - lo) / step));
  std::vector<double> alphas, vals;
  alphas.reserve(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) {
    double a = lo + k * step;
    if (std::abs(a) < 1e-9) a = 0.0;  // snap fp drift at zero
    alphas.push_back(a);
    vals.push_back(normalized_randic(g, a));
  }
  std::size_t best = 0;
  double vmin = vals[0], vmax = vals[0];
  for (std::size_t i = 1; i < vals.size(); ++i) {
    if (vals[i] > vals[best]) best = i;
    vmin = std::min(vmin, vals[i]);
    vmax = std::max(vmax, vals[i]);
  }
  if (vmax - vmin <= 1e-12 * std::max(1.0, std::abs(vmax)))
    return {alphas.front(), vals.front(), true};
  if (best == 0 || best + 1 == alphas.size())
    throw std::runtime_error("find_alpha_star: maximum at interval boundary, widen [lo, hi]");
  double a = detail::golden_max([&](double x) { return normalized_randic(g, x); },
                                alphas[best - 1], alphas[best + 1], tol);
  return {a, normalized_randic(g, a), false};
}

struct AlphaRecord {
  double alpha, R, Rbar, logRbar, HE, HV, renyi, tsallis;
};

struct AlphaProfile {
  std::vector<AlphaRecord> grid;
  double alpha_star = 0.0;
  double rbar_star = 0.0;
  bool flat = false;
  std::vector<double> local_maxima;  // alphas of strict grid-local maxima
};

inline AlphaRecord alpha_record(const Graph& g, double alpha) {
  AlphaRecord r{};
  r.alpha = alpha;
  r.R = randic_index(g, alpha);
  r.Rbar = r.R / vertex_power_sum(g, alpha);
  r.logRbar = std::log2(r.Rbar);
  auto [he, hv] = edge_vertex_entropies(g, alpha);
  r.HE = he;
  r.HV = hv;
  r.renyi = renyi_edge_entropy(g, alpha);
  r.tsallis = tsallis_edge_entropy(g, alpha);
  return r;
}

/// Tabulate the alpha profile on [lo, hi] with the given step. Grid points
/// are independent; with threads > 1 they are computed in parallel and
/// assembled in grid order, so the output does not depend on thread count.
inline AlphaProfile alpha_sweep(const Graph& g, double lo, double hi, double step,
                                unsigned threads = 1) {
  if (step <= 0.0) throw std::invalid_argument("alpha_sweep: need step > 0");
  const int steps = static_cast<int>(std::round((hi - lo) / step));
  std::vector<double> alphas;
  for (int k = 0; k <= steps; ++k) {
    double a = lo + k * step;
    if (std::abs(a) < 1e-9) a = 0.0;
    alphas.push_back(a);
  }
  AlphaProfile prof;
  prof.grid.resize(alphas.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) prof.grid[i] = alpha_record(g, alphas[i]);
  };
  if (threads <= 1 || alphas.size() < 2 * threads) {
    work(0, alphas.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (alphas.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::size_t b = t * chunk, e = std::min(alphas.size(), b + chunk);
      if (b >= e) break;
      pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 1; i + 1 < prof.grid.size(); ++i)
    if (prof.grid[i].Rbar > prof.grid[i - 1].Rbar && prof.grid[i].Rbar > prof.grid[i + 1].Rbar)
      prof.local_maxima.push_back(prof.grid[i].alpha);
  auto star = find_alpha_star(g, lo, hi);
  prof.alpha_star = star.alpha;
  prof.rbar_star = star.rbar;
  prof.flat = star.flat;
  return prof;
}

inline void write_alpha_csv(std::ostream& os, const AlphaProfile& prof) {
  os << "alpha,R,Rbar,logRbar,HE,HV,renyi,tsallis\n";
  char buf[256];
  for (const auto& r : prof.grid) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", r.alpha, r.R,
                  r.Rbar, r.logRbar, r.HE, r.HV, r.renyi, r.tsallis);
    os << buf;
  }
}

}  // namespace graphent
