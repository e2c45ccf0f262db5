#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "graphent/graph.hpp"

namespace graphent {

/// Raised when bfd_order_search exceeds its node budget.
class budget_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Witness for a breadth-first-search ordering with decreasing degrees:
/// order[k] is the vertex of rank k, layer[v] its BFS distance from the
/// root, parent[v] its rank-least neighbor in the previous layer (-1 at
/// the root).
struct BfdOrdering {
  std::vector<int> order;
  std::vector<int> layer;
  std::vector<int> parent;
};

/// True iff ord is a valid BFD ordering of g:
///  - order is a permutation rooted at a maximum-degree vertex,
///  - layer[] equals BFS distance and is non-decreasing along the order,
///  - parent[] is the rank-least previous-layer neighbor,
///  - children of earlier parents precede children of later parents,
///  - degrees are non-increasing along the order.
inline bool bfd_verify(const Graph& g, const BfdOrdering& ord) {
  const int n = g.vertex_count();
  if (n == 0 || static_cast<int>(ord.order.size()) != n) return false;
  if (static_cast<int>(ord.layer.size()) != n || static_cast<int>(ord.parent.size()) != n) return false;
  std::vector<int> rank(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < n; ++k) {
    int v = ord.order[static_cast<std::size_t>(k)];
    if (v < 0 || v >= n || rank[static_cast<std::size_t>(v)] != -1) return false;
    rank[static_cast<std::size_t>(v)] = k;
  }
  const int root = ord.order[0];
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > g.degree(root)) return false;

  // layer[] must be the true BFS distance from the root
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  dist[static_cast<std::size_t>(root)] = 0;
  std::vector<int> queue{root};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int u = queue[h];
    for (int v : g.neighbors(u))
      if (dist[static_cast<std::size_t>(v)] == -1) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
  }
  for (int v = 0; v < n; ++v)
    if (ord.layer[static_cast<std::size_t>(v)] != dist[static_cast<std::size_t>(v)]) return false;

  if (ord.parent[static_cast<std::size_t>(root)] != -1) return false;
  for (int v = 0; v < n; ++v) {
    if (v == root) continue;
    int best = -1;
    for (int w : g.neighbors(v))
      if (ord.layer[static_cast<std::size_t>(w)] == ord.layer[static_cast<std::size_t>(v)] - 1)
        if (best == -1 || rank[static_cast<std::size_t>(w)] < rank[static_cast<std::size_t>(best)])
          best = w;
    if (best == -1 || ord.parent[static_cast<std::size_t>(v)] != best) return false;
  }

  for (int k = 0; k + 1 < n; ++k) {
    int a = ord.order[static_cast<std::size_t>(k)], b = ord.order[static_cast<std::size_t>(k + 1)];
    if (g.degree(a) < g.degree(b)) return false;  // property 2
    if (ord.layer[static_cast<std::size_t>(a)] > ord.layer[static_cast<std::size_t>(b)]) return false;
  }
  // property 1: children inherit their parents' relative order
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == root || v == root || u == v) continue;
      int pu = ord.parent[static_cast<std::size_t>(u)], pv = ord.parent[static_cast<std::size_t>(v)];
      if (rank[static_cast<std::size_t>(pu)] < rank[static_cast<std::size_t>(pv)] &&
          rank[static_cast<std::size_t>(u)] > rank[static_cast<std::size_t>(v)])
        return false;
    }
  return true;
}

/// Connected Havel-Hakimi realization laid out in BFD order. Vertex k
/// carries the k-th degree of pi. Each vertex in turn attaches its open
/// stubs to the candidates of largest residual degree; among equal
/// residuals, vertices not yet in the BFD list come first (this keeps the
/// result connected), then lower rank.
inline std::pair<Graph, BfdOrdering> bfd_realize(const DegreeSequence& pi) {
  const int n = static_cast<int>(pi.size());
  if (n == 0) throw std::invalid_argument("bfd_realize: empty sequence");
  if (!is_graphical(pi)) throw std::invalid_argument("bfd_realize: sequence is not graphical");
  if (n == 1) {
    if (pi[0] != 0) throw std::invalid_argument("bfd_realize: not graphical");
    return {Graph(1), {{0}, {0}, {-1}}};
  }
  for (int i = 0; i < n; ++i)
    if (pi[static_cast<std::size_t>(i)] < 1)
      throw std::invalid_argument("bfd_realize: connected realization needs all degrees >= 1");
  if (pi.sum() < 2LL * (n - 1))
    throw std::invalid_argument("bfd_realize: degree sum too small for a connected realization");

  std::vector<int> res = pi.values();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  BfdOrdering ord;
  ord.layer.assign(static_cast<std::size_t>(n), -1);
  ord.parent.assign(static_cast<std::size_t>(n), -1);
  ord.order.push_back(0);
  placed[0] = 1;
  ord.layer[0] = 0;
  for (std::size_t k = 0; k < ord.order.size(); ++k) {
    const int u = ord.order[k];
    while (res[static_cast<std::size_t>(u)] > 0) {
      int pick = -1;
      for (int v = 0; v < n; ++v) {
        if (v == u || res[static_cast<std::size_t>(v)] == 0) continue;
        if (std::find(adj[static_cast<std::size_t>(u)].begin(), adj[static_cast<std::size_t>(u)].end(),
                      v) != adj[static_cast<std::size_t>(u)].end())
          continue;
        if (pick == -1) {
          pick = v;
          continue;
        }
        auto key = [&](int w) {
          return std::make_tuple(-res[static_cast<std::size_t>(w)],
                                 static_cast<int>(placed[static_cast<std::size_t>(w)]), w);
        };
        if (key(v) < key(pick)) pick = v;
      }
      if (pick == -1) throw std::logic_error("bfd_realize: stuck (sequence not graphical?)");
      adj[static_cast<std::size_t>(u)].push_back(pick);
      adj[static_cast<std::size_t>(pick)].push_back(u);
      --res[static_cast<std::size_t>(u)];
      --res[static_cast<std::size_t>(pick)];
      if (!placed[static_cast<std::size_t>(pick)]) {
        placed[static_cast<std::size_t>(pick)] = 1;
        ord.order.push_back(pick);
        ord.layer[static_cast<std::size_t>(pick)] = ord.layer[static_cast<std::size_t>(u)] + 1;
        ord.parent[static_cast<std::size_t>(pick)] = u;
      }
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v : adj[static_cast<std::size_t>(u)])
      if (u < v) edges.emplace_back(u, v);
  Graph g(n, edges);
  if (!is_connected(g)) throw std::logic_error("bfd_realize: construction lost connectivity");
  return {std::move(g), std::move(ord)};
}

/// Search for any valid BFD ordering of an existing graph by backtracking
/// over root choices and the orderings of equal-degree sibling groups.
/// Absence is a definite "no BFD ordering exists".
inline std::optional<BfdOrdering> bfd_order_search(const Graph& g,
                                                   std::size_t node_budget = 1000000) {
  const int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  int dmax = 0;
  for (int v = 0; v < n; ++v) dmax = std::max(dmax, g.degree(v));
  std::size_t nodes = 0;

  BfdOrdering ord;
  ord.layer.assign(static_cast<std::size_t>(n), -1);
  ord.parent.assign(static_cast<std::size_t>(n), -1);
  std::vector<char> placed(static_cast<std::size_t>(n), 0);

  // depth-first over BFS queue states; order doubles as the queue
  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (++nodes > node_budget) throw budget_exceeded("bfd_order_search: node budget exceeded");
    if (static_cast<int>(ord.order.size()) == n && k == ord.order.size()) return true;
    if (k == ord.order.size()) return false;  // queue exhausted with vertices missing
    const int u = ord.order[k];
    std::vector<int> children;
    for (int v : g.neighbors(u))
      if (!placed[static_cast<std::size_t>(v)]) children.push_back(v);
    if (children.empty()) return extend(k + 1);
    std::sort(children.begin(), children.end(),
              [&](int a, int b) { return std::make_pair(-g.degree(a), a) < std::make_pair(-g.degree(b), b); });
    // property 2 across the appended block
    int prev_tail = ord.order.back();
    if (g.degree(prev_tail) < g.degree(children.front())) return false;

    // branch over permutations of equal-degree runs
    std::function<bool(std::size_t)> place_run = [&](std::size_t i) -> bool {
      if (i == children.size()) return extend(k + 1);
      std::size_t j = i;
      while (j < children.size() && g.degree(children[j]) == g.degree(children[i])) ++j;
      std::vector<int> block(children.begin() + static_cast<long>(i),
                             children.begin() + static_cast<long>(j));
      std::sort(block.begin(), block.end());
      do {
        for (int v : block) {
          placed[static_cast<std::size_t>(v)] = 1;
          ord.order.push_back(v);
          ord.layer[static_cast<std::size_t>(v)] = ord.layer[static_cast<std::size_t>(u)] + 1;
          ord.parent[static_cast<std::size_t>(v)] = u;
        }
        if (place_run(j)) return true;
        for (std::size_t t = 0; t < block.size(); ++t) {
          int v = ord.order.back();
          ord.order.pop_back();
          placed[static_cast<std::size_t>(v)] = 0;
          ord.layer[static_cast<std::size_t>(v)] = -1;
          ord.parent[static_cast<std::size_t>(v)] = -1;
        }
      } while (std::next_permutation(block.begin(), block.end()));
      return false;
    };
    return place_run(0);
  };

  for (int root = 0; root < n; ++root) {
    if (g.degree(root) != dmax) continue;
    ord.order.assign(1, root);
    std::fill(ord.layer.begin(), ord.layer.end(), -1);
    std::fill(ord.parent.begin(), ord.parent.end(), -1);
    std::fill(placed.begin(), placed.end(), 0);
    placed[static_cast<std::size_t>(root)] = 1;
    ord.layer[static_cast<std::size_t>(root)] = 0;
    if (extend(0)) {
      if (!bfd_verify(g, ord)) continue;  // parent rule can reject a candidate
      return ord;
    }
  }
  return std::nullopt;
}

/// The unique (up to isomorphism) BFD tree of a tree sequence: degrees are
/// assigned level by level in rank order; every non-root vertex gets
/// degree - 1 children.
inline std::pair<Graph, BfdOrdering> bfd_tree(const DegreeSequence& pi) {
  if (!is_tree_sequence(pi)) throw std::invalid_argument("bfd_tree: not a tree sequence");
  const int n = static_cast<int>(pi.size());
  BfdOrdering ord;
  ord.layer.assign(static_cast<std::size_t>(n), 0);
  ord.parent.assign(static_cast<std::size_t>(n), -1);
  ord.order.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ord.order[static_cast<std::size_t>(i)] = i;
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int u = 0; u < n && next < n; ++u) {
    int want = pi[static_cast<std::size_t>(u)] - (u == 0 ? 0 : 1);
    for (int c = 0; c < want && next < n; ++c) {
      edges.emplace_back(u, next);
      ord.parent[static_cast<std::size_t>(next)] = u;
      ord.layer[static_cast<std::size_t>(next)] = ord.layer[static_cast<std::size_t>(u)] + 1;
      ++next;
    }
  }
  Graph g(n, edges);
  return {std::move(g), std::move(ord)};
}

/// Majorization: pi < pi' iff every prefix sum of pi is bounded by the
/// corresponding prefix sum of pi' and the sequences differ.
inline bool majorizes(const DegreeSequence& pi, const DegreeSequence& pi_prime) {
  if (pi.size() != pi_prime.size()) throw std::invalid_argument("majorizes: length mismatch");
  if (pi == pi_prime) return false;
  long long a = 0, b = 0;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    a += pi[i];
    b += pi_prime[i];
    if (a > b) return false;
  }
  return true;
}

/// Bondy's printed sufficient condition for a forcibly connected sequence:
/// d_i >= n - i for every i >= d_0 + 2 (0-based, non-increasing order).
/// This is the literal condition, not a connectivity decision.
inline bool forcibly_connected_bondy(const DegreeSequence& pi) {
  const int n = static_cast<int>(pi.size());
  if (n == 0) return true;
  for (int i = pi[0] + 2; i < n; ++i)
    if (pi[static_cast<std::size_t>(i)] < n - i) return false;
  return true;
}

}  // namespace graphent
