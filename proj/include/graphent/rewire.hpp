#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphent/graph.hpp"
#include "graphent/randic.hpp"

namespace graphent {

/// Degree-preserving switch: edges xy and ab are replaced by xa and yb.
struct Switch {
  int x, y, a, b;
};

/// Throws naming the first violated validity condition.
inline void check_switch(const Graph& g, const Switch& s) {
  const int n = g.vertex_count();
  for (int v : {s.x, s.y, s.a, s.b})
    if (v < 0 || v >= n) throw std::invalid_argument("switch vertex out of range");
  if (s.x == s.y || s.x == s.a || s.x == s.b || s.y == s.a || s.y == s.b || s.a == s.b)
    throw std::invalid_argument("switch vertices must be distinct");
  if (!g.has_edge(s.x, s.y)) throw std::invalid_argument("xy is not an edge");
  if (!g.has_edge(s.a, s.b)) throw std::invalid_argument("ab is not an edge");
  if (g.has_edge(s.x, s.a)) throw std::invalid_argument("xa is already an edge");
  if (g.has_edge(s.y, s.b)) throw std::invalid_argument("yb is already an edge");
}

/// Closed-form change of R_alpha under the switch:
/// (d_b^alpha - d_x^alpha)(d_y^alpha - d_a^alpha). Degrees are unchanged,
/// so this equals R_alpha(after) - R_alpha(before) exactly.
inline double delta_randic(const Graph& g, const Switch& s, double alpha) {
  check_switch(g, s);
  auto dp = [&](int v) { return detail::int_pow_real(g.degree(v), alpha); };
  return (dp(s.b) - dp(s.x)) * (dp(s.y) - dp(s.a));
}

/// Apply a switch, returning the rewired graph. With require_connected the
/// result is checked by BFS and a disconnecting switch is rejected.
inline Graph apply_switch(const Graph& g, const Switch& s, bool require_connected = true) {
  check_switch(g, s);
  auto edges = g.edges();
  std::erase_if(edges, [&](const std::pair<int, int>& e) {
    auto norm = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    return e == norm(s.x, s.y) || e == norm(s.a, s.b);
  });
  edges.emplace_back(std::min(s.x, s.a), std::max(s.x, s.a));
  edges.emplace_back(std::min(s.y, s.b), std::max(s.y, s.b));
  Graph out(g.vertex_count(), edges);
  if (require_connected && !is_connected(out))
    throw std::invalid_argument("switch would disconnect the graph");
  return out;
}

struct ClimbStep {
  Switch sw;
  double delta;
  double randic_after;
};

struct ClimbResult {
  Graph graph;
  std::vector<ClimbStep> trace;
  bool budget_exhausted = false;
  bool local_optimum = false;  // no strictly improving connectivity-preserving switch remains
};

namespace detail {

/// All candidate switches of g in lexicographic (x, y, a, b) order.
/// For every ordered pair of disjoint edges both pairings are visited.
template <typename Fn>
inline void for_each_switch(const Graph& g, Fn&& fn) {
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [x, y] = edges[i];
      auto [a, b] = edges[j];
      if (x == a || x == b || y == a || y == b) continue;
      if (!g.has_edge(x, a) && !g.has_edge(y, b)) fn(Switch{x, y, a, b});
      if (!g.has_edge(x, b) && !g.has_edge(y, a)) fn(Switch{x, y, b, a});
    }
}

}  // namespace detail

/// Steepest-ascent hill climb on R_alpha over connectivity-preserving
/// switches. Each round scans the whole switch neighborhood, ranks the
/// strictly improving candidates by (delta desc, tuple lex asc) and applies
/// the best one that keeps the graph connected. Deterministic; the seed is
/// reserved for optional randomized restarts.
inline ClimbResult maximize_randic(const Graph& g, double alpha, std::size_t budget = 10000,
                                   std::uint64_t /*seed*/ = 0) {
  if (!(alpha > 0.0)) throw std::invalid_argument("maximize_randic requires alpha > 0");
  if (!is_connected(g)) throw std::invalid_argument("maximize_randic requires a connected graph");
  ClimbResult out;
  out.graph = g;
  double r = randic_index(g, alpha);
  for (std::size_t round = 0; round < budget; ++round) {
    std::vector<std::pair<double, Switch>> improving;
    detail::for_each_switch(out.graph, [&](const Switch& s) {
      auto dp = [&](int v) { return detail::int_pow_real(out.graph.degree(v), alpha); };
      double d = (dp(s.b) - dp(s.x)) * (dp(s.y) - dp(s.a));
      if (d > 0.0) improving.emplace_back(d, s);
    });
    std::sort(improving.begin(), improving.end(), [](const auto& l, const auto& r2) {
      if (l.first != r2.first) return l.first > r2.first;
      return std::make_tuple(l.second.x, l.second.y, l.second.a, l.second.b) <
             std::make_tuple(r2.second.x, r2.second.y, r2.second.a, r2.second.b);
    });
    bool applied = false;
    for (const auto& [d, s] : improving) {
      Graph next = [&]() -> Graph {
        try {
          return apply_switch(out.graph, s, true);
        } catch (const std::invalid_argument&) {
          return Graph();
        }
      }();
      if (next.vertex_count() == 0) continue;  // disconnecting, try next best
      out.graph = std::move(next);
      r += d;
      out.trace.push_back({s, d, r});
      applied = true;
      break;
    }
    if (!applied) {
      out.local_optimum = true;
      return out;
    }
  }
  out.budget_exhausted = true;
  return out;
}

/// CSV trace: "step,dx,dy,da,db,deltaR,R" (degrees of the switch tuple).
inline void write_climb_csv(std::ostream& os, const Graph& start, const ClimbResult& res) {
  os << "step,dx,dy,da,db,deltaR,R\n";
  char buf[192];
  for (std::size_t i = 0; i < res.trace.size(); ++i) {
    const auto& st = res.trace[i];
    std::snprintf(buf, sizeof(buf), "%zu,%d,%d,%d,%d,%.12g,%.12g\n", i + 1, start.degree(st.sw.x),
                  start.degree(st.sw.y), start.degree(st.sw.a), start.degree(st.sw.b), st.delta,
                  st.randic_after);
    os << buf;
  }
}

/// Newman's degree assortativity: Pearson correlation of end degrees over
/// the 2m directed edge orientations. Undefined on regular graphs.
inline double assortativity_r(const Graph& g) {
  if (g.edge_count() < 2) throw std::invalid_argument("assortativity needs at least 2 edges");
  detail::KahanSum sx, sxx, sxy;
  for (auto [u, v] : g.edges()) {
    double du = g.degree(u), dv = g.degree(v);
    sx.add(du);
    sx.add(dv);
    sxx.add(du * du);
    sxx.add(dv * dv);
    sxy.add(2.0 * du * dv);
  }
  const double inv = 1.0 / (2.0 * g.edge_count());
  double mean = sx.value() * inv;
  double var = sxx.value() * inv - mean * mean;
  double cov = sxy.value() * inv - mean * mean;
  if (var <= 1e-12 * std::max(1.0, mean * mean))
    throw std::invalid_argument("assortativity undefined: constant degrees");
  return cov / var;
}

}  // namespace graphent
