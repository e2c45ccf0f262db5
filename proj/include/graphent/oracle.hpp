#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "graphent/graph.hpp"

namespace graphent {

/// Number of labeled trees with degree vector pi: (n-2)! / prod (d_i - 1)!.
inline mpz_class labeled_tree_count(const DegreeSequence& pi) {
  if (!is_tree_sequence(pi)) throw std::invalid_argument("not a tree sequence");
  const int n = static_cast<int>(pi.size());
  if (n == 2) return 1;
  mpz_class c;
  mpz_fac_ui(c.get_mpz_t(), static_cast<unsigned long>(n - 2));
  for (int d : pi) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(d - 1));
    c /= f;
  }
  return c;
}

namespace detail {

inline Graph tree_from_pruefer(const std::vector<int>& code, int n) {
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int v : code) ++deg[static_cast<std::size_t>(v)];
  std::vector<std::pair<int, int>> edges;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int v : code) {
    int leaf = -1;
    for (int u = 0; u < n; ++u)
      if (!used[static_cast<std::size_t>(u)] && deg[static_cast<std::size_t>(u)] == 1) {
        leaf = u;
        break;
      }
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    used[static_cast<std::size_t>(leaf)] = 1;
    --deg[static_cast<std::size_t>(leaf)];
    --deg[static_cast<std::size_t>(v)];
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (!used[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == 1) {
      (a == -1 ? a : b) = v;
    }
  edges.emplace_back(std::min(a, b), std::max(a, b));
  return Graph(n, edges);
}

}  // namespace detail

/// Every labeled tree whose degree vector is pi (vertex i has degree pi[i]),
/// via the multiset permutations of the Pruefer code in which label i
/// appears pi[i] - 1 times. The visitor returns false to stop early.
inline void enumerate_trees(const DegreeSequence& pi, const std::function<bool(const Graph&)>& visit,
                            int max_n = 12) {
  if (!is_tree_sequence(pi)) throw std::invalid_argument("enumerate_trees: not a tree sequence");
  const int n = static_cast<int>(pi.size());
  if (n > max_n) throw std::invalid_argument("enumerate_trees: n exceeds the guard");
  if (n == 2) {
    visit(Graph(2, {{0, 1}}));
    return;
  }
  std::vector<int> code;
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < pi[static_cast<std::size_t>(v)] - 1; ++k) code.push_back(v);
  std::sort(code.begin(), code.end());
  do {
    if (!visit(detail::tree_from_pruefer(code, n))) return;
  } while (std::next_permutation(code.begin(), code.end()));
}

/// Every connected labeled simple graph with degree vector pi, by
/// backtracking over the C(n,2) vertex pairs in lexicographic order with
/// residual-degree pruning. Guarded to n <= 7.
inline void enumerate_connected_graphs(const DegreeSequence& pi,
                                       const std::function<bool(const Graph&)>& visit, int max_n = 7) {
  const int n = static_cast<int>(pi.size());
  if (n > max_n) throw std::invalid_argument("enumerate_connected_graphs: n exceeds the guard");
  if (!is_graphical(pi)) throw std::invalid_argument("enumerate_connected_graphs: not graphical");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<int> res = pi.values();
  std::vector<std::pair<int, int>> chosen;
  bool stop = false;

  // slack[i][k] = how many of the pairs k.. touch vertex i
  std::vector<std::vector<int>> slack(static_cast<std::size_t>(n),
                                      std::vector<int>(pairs.size() + 1, 0));
  for (int i = 0; i < n; ++i)
    for (std::size_t k = pairs.size(); k-- > 0;)
      slack[static_cast<std::size_t>(i)][k] = slack[static_cast<std::size_t>(i)][k + 1] +
                                              (pairs[k].first == i || pairs[k].second == i ? 1 : 0);

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (stop) return;
    for (int i = 0; i < n; ++i)
      if (res[static_cast<std::size_t>(i)] > slack[static_cast<std::size_t>(i)][k]) return;
    if (k == pairs.size()) {
      Graph g(n, chosen);
      if (is_connected(g) && !visit(g)) stop = true;
      return;
    }
    auto [i, j] = pairs[k];
    if (res[static_cast<std::size_t>(i)] > 0 && res[static_cast<std::size_t>(j)] > 0) {
      --res[static_cast<std::size_t>(i)];
      --res[static_cast<std::size_t>(j)];
      chosen.push_back(pairs[k]);
      rec(k + 1);
      chosen.pop_back();
      ++res[static_cast<std::size_t>(i)];
      ++res[static_cast<std::size_t>(j)];
    }
    rec(k + 1);
  };
  rec(0);
}

enum class GraphFamily { path, cycle, star, complete, complete_bipartite };

/// Closed-form spectral radii of the standard families.
/// star takes the leaf count k (graph K_{1,k}); complete_bipartite takes (s, t).
inline double closed_form_lambda(GraphFamily family, int a, int b = 0) {
  constexpr double pi = 3.14159265358979323846;
  switch (family) {
    case GraphFamily::path:
      if (a < 1) throw std::invalid_argument("path needs n >= 1");
      return 2.0 * std::cos(pi / (a + 1));
    case GraphFamily::cycle:
      if (a < 3) throw std::invalid_argument("cycle needs n >= 3");
      return 2.0;
    case GraphFamily::star:
      if (a < 1) throw std::invalid_argument("star needs k >= 1");
      return std::sqrt(static_cast<double>(a));
    case GraphFamily::complete:
      if (a < 1) throw std::invalid_argument("complete needs n >= 1");
      return static_cast<double>(a - 1);
    case GraphFamily::complete_bipartite:
      if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite needs s, t >= 1");
      return std::sqrt(static_cast<double>(a) * static_cast<double>(b));
  }
  throw std::invalid_argument("unknown family");
}

/// Backtracking isomorphism test with degree pruning; meant for the small
/// maximizer sets of the extremal-theorem checks.
inline bool is_isomorphic(const Graph& g, const Graph& h) {
  const int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  if (!(degree_sequence(g) == degree_sequence(h))) return false;
  std::vector<int> map(static_cast<std::size_t>(n), -1), used(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> rec = [&](int u) -> bool {
    if (u == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || h.degree(w) != g.degree(u)) continue;
      bool ok = true;
      for (int v : g.neighbors(u)) {
        if (v < u && !h.has_edge(w, map[static_cast<std::size_t>(v)])) {
          ok = false;
          break;
        }
      }
      // also reject mapped non-edges turning into edges
      if (ok)
        for (int v = 0; v < u; ++v)
          if (!g.has_edge(u, v) && h.has_edge(w, map[static_cast<std::size_t>(v)])) {
            ok = false;
            break;
          }
      if (!ok) continue;
      map[static_cast<std::size_t>(u)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      if (rec(u + 1)) return true;
      used[static_cast<std::size_t>(w)] = 0;
      map[static_cast<std::size_t>(u)] = -1;
    }
    return false;
  };
  return rec(0);
}

}  // namespace graphent
