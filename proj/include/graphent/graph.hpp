#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace graphent {

/// Raised when an input file cannot be tokenized. Carries the 1-based line.
class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Raised when a file is well-formed but of an unsupported kind.
class format_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph with sorted adjacency lists.
/// Immutable after construction; invariants (no loops, no parallel
/// edges, symmetry) are enforced by the constructor.
class Graph {
public:
  Graph() = default;

  explicit Graph(int n) : adj_(static_cast<std::size_t>(check_n(n))) {}

  Graph(int n, const std::vector<std::pair<int, int>>& edges)
      : adj_(static_cast<std::size_t>(check_n(n))) {
    for (auto [u, v] : edges) add_edge_checked(u, v);
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }

  int degree(int v) const { return static_cast<int>(adj_.at(static_cast<std::size_t>(v)).size()); }

  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }

  bool has_edge(int u, int v) const {
    const auto& nb = adj_.at(static_cast<std::size_t>(u));
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Edges as (u, v) pairs with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < vertex_count(); ++u)
      for (int v : adj_[static_cast<std::size_t>(u)])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

private:
  static int check_n(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    return n;
  }

  void add_edge_checked(int u, int v) {
    const int n = vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop not allowed");
    for (int w : adj_[static_cast<std::size_t>(u)])
      if (w == v) throw std::invalid_argument("parallel edge not allowed");
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
    ++m_;
  }

  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

/// Non-increasing multiset of vertex degrees.
class DegreeSequence {
public:
  DegreeSequence() = default;

  explicit DegreeSequence(std::vector<int> degrees) : d_(std::move(degrees)) {
    std::sort(d_.begin(), d_.end(), std::greater<int>());
  }

  std::size_t size() const { return d_.size(); }
  int operator[](std::size_t i) const { return d_.at(i); }
  const std::vector<int>& values() const { return d_; }
  auto begin() const { return d_.begin(); }
  auto end() const { return d_.end(); }

  long long sum() const { return std::accumulate(d_.begin(), d_.end(), 0LL); }

  bool operator==(const DegreeSequence& o) const { return d_ == o.d_; }

private:
  std::vector<int> d_;
};

inline DegreeSequence degree_sequence(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
  return DegreeSequence(std::move(d));
}

inline bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u))
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == n;
}

/// d_min, d_max exact; d_avg kept as the exact rational 2m/n.
struct DegreeStats {
  int d_min = 0;
  int d_max = 0;
  long long avg_num = 0;  // 2m
  long long avg_den = 1;  // n

  double d_avg() const { return static_cast<double>(avg_num) / static_cast<double>(avg_den); }

  std::string format_avg(int decimals) const {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(decimals);
    os << d_avg();
    return os.str();
  }
};

inline DegreeStats degree_stats(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("degree_stats requires n >= 1");
  DegreeStats s;
  s.d_min = g.degree(0);
  s.d_max = g.degree(0);
  for (int v = 1; v < n; ++v) {
    s.d_min = std::min(s.d_min, g.degree(v));
    s.d_max = std::max(s.d_max, g.degree(v));
  }
  s.avg_num = 2LL * g.edge_count();
  s.avg_den = n;
  return s;
}

/// Havel–Hakimi test. True iff the sequence is realizable by a simple graph.
inline bool is_graphical(const DegreeSequence& pi) {
  std::vector<int> d = pi.values();
  if (d.empty()) return true;
  if (d.front() >= static_cast<int>(d.size())) return false;
  for (int x : d)
    if (x < 0) return false;
  if (pi.sum() % 2 != 0) return false;
  // repeatedly lay off the largest entry against the next-largest ones
  while (true) {
    std::sort(d.begin(), d.end(), std::greater<int>());
    if (d.front() == 0) return true;
    int k = d.front();
    d.front() = 0;
    if (k >= static_cast<int>(d.size())) return false;
    for (int i = 1; i <= k; ++i) {
      if (--d[static_cast<std::size_t>(i)] < 0) return false;
    }
  }
}

inline bool is_tree_sequence(const DegreeSequence& pi) {
  const auto n = static_cast<long long>(pi.size());
  if (n < 2) return false;
  for (int x : pi)
    if (x < 1) return false;
  return pi.sum() == 2 * (n - 1);
}

// ---------------------------------------------------------------------------
// File ingestion

/// A loaded graph plus the original vertex labels (index = internal id)
/// and counts of silently dropped input lines.
struct LoadResult {
  Graph graph;
  std::vector<long long> labels;
  std::size_t dropped_duplicates = 0;
  std::size_t dropped_self_loops = 0;
};

namespace detail {

inline bool parse_two_ints(const std::string& line, long long& a, long long& b) {
  std::istringstream is(line);
  if (!(is >> a >> b)) return false;
  std::string rest;
  if (is >> rest) return false;  // trailing garbage
  return true;
}

inline std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline Graph build_simple(int n, std::vector<std::pair<int, int>>& raw, LoadResult& out) {
  std::vector<std::pair<int, int>> kept;
  kept.reserve(raw.size());
  for (auto [u, v] : raw) {
    if (u == v) {
      ++out.dropped_self_loops;
      continue;
    }
    kept.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(kept.begin(), kept.end());
  auto last = std::unique(kept.begin(), kept.end());
  out.dropped_duplicates = static_cast<std::size_t>(std::distance(last, kept.end()));
  kept.erase(last, kept.end());
  return Graph(n, kept);
}

}  // namespace detail

/// Whitespace-separated "u v" pairs, one per line; '%' or '#' starts a comment.
/// Vertex labels are remapped to 0..n-1 in order of first appearance.
inline LoadResult load_edge_list(std::istream& in) {
  LoadResult out;
  std::unordered_map<long long, int> id;
  std::vector<std::pair<int, int>> raw;
  std::string line;
  std::size_t lineno = 0;
  auto intern = [&](long long label) {
    auto [it, fresh] = id.emplace(label, static_cast<int>(out.labels.size()));
    if (fresh) out.labels.push_back(label);
    return it->second;
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = detail::trimmed(line);
    if (t.empty() || t[0] == '%' || t[0] == '#') continue;
    long long a, b;
    if (!detail::parse_two_ints(t, a, b)) throw parse_error(lineno, "expected two integers");
    raw.emplace_back(intern(a), intern(b));
  }
  if (raw.empty()) throw format_error("edge list is empty");
  out.graph = detail::build_simple(static_cast<int>(out.labels.size()), raw, out);
  return out;
}

/// Matrix Market reader restricted to "matrix coordinate pattern symmetric".
inline LoadResult load_matrix_market(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw parse_error(1, "empty file");
  ++lineno;
  {
    std::istringstream hs(line);
    std::string banner, object, fmt, field, symmetry;
    hs >> banner >> object >> fmt >> field >> symmetry;
    auto lower = [](std::string s) {
      std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
      return s;
    };
    if (lower(banner) != "%%matrixmarket") throw format_error("missing MatrixMarket banner");
    if (lower(object) != "matrix" || lower(fmt) != "coordinate" || lower(field) != "pattern" ||
        lower(symmetry) != "symmetric")
      throw format_error("unsupported Matrix Market kind: " + object + " " + fmt + " " + field + " " +
                         symmetry + " (need matrix coordinate pattern symmetric)");
  }
  long long rows = 0, cols = 0, nnz = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = detail::trimmed(line);
    if (t.empty() || t[0] == '%') continue;
    std::istringstream is(t);
    if (!(is >> rows >> cols >> nnz)) throw parse_error(lineno, "expected size line: rows cols nnz");
    break;
  }
  if (rows <= 0 || rows != cols) throw format_error("matrix must be square and non-empty");
  LoadResult out;
  std::vector<std::pair<int, int>> raw;
  raw.reserve(static_cast<std::size_t>(nnz));
  long long seen = 0;
  while (seen < nnz && std::getline(in, line)) {
    ++lineno;
    std::string t = detail::trimmed(line);
    if (t.empty() || t[0] == '%') continue;
    long long a, b;
    if (!detail::parse_two_ints(t, a, b)) throw parse_error(lineno, "expected two integers");
    if (a < 1 || b < 1 || a > rows || b > rows) throw parse_error(lineno, "index out of range");
    raw.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    ++seen;
  }
  if (seen < nnz) throw parse_error(lineno, "fewer entries than declared");
  if (raw.empty()) throw format_error("edge list is empty");
  out.labels.resize(static_cast<std::size_t>(rows));
  std::iota(out.labels.begin(), out.labels.end(), 1LL);
  out.graph = detail::build_simple(static_cast<int>(rows), raw, out);
  return out;
}

/// Writer counterpart of load_edge_list: sorted "u v" lines with u < v.
inline void write_edge_list(std::ostream& os, const Graph& g) {
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

// ---------------------------------------------------------------------------
// Random generation

struct ErResult {
  Graph graph;
  std::uint64_t seed_used = 0;
  int retries = 0;
};

/// G(n, p) with the 64-bit Mersenne Twister; pairs are scanned in row-major
/// order and a draw u < p includes the pair, so an edge set is a pure
/// function of (n, p, seed). Disconnected draws retry with seed+1.
inline ErResult generate_er(int n, double p, std::uint64_t seed, int max_retries = 64) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0, 1]");
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    std::mt19937_64 rng(s);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < p) edges.emplace_back(i, j);
      }
    Graph g(n, edges);
    if (is_connected(g)) return {std::move(g), s, attempt};
  }
  throw std::runtime_error("generate_er: no connected graph after " + std::to_string(max_retries + 1) +
                           " seeds; consider a larger p");
}

// ---------------------------------------------------------------------------
// Small standard families (used throughout the tests and the CLI)

inline Graph make_path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

/// Star K_{1,k}: vertex 0 is the center.
inline Graph make_star(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
  return Graph(k + 1, e);
}

inline Graph make_complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph make_complete_bipartite(int s, int t) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < t; ++j) e.emplace_back(i, s + j);
  return Graph(s + t, e);
}

}  // namespace graphent
