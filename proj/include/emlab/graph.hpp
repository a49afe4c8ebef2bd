#pragma once

// Graph and digraph value types for (super) edge-magic work.
//
// Vertices are always named 1..p. Edges and arcs are addressed by their
// 0-based position in the edge list; parallel edges and loops are allowed,
// so the position is the only unambiguous handle on an edge.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace emlab {

/// Unordered pair {u, v}; u == v is a loop.
struct Edge {
  int u = 0;
  int v = 0;

  [[nodiscard]] bool is_loop() const noexcept { return u == v; }
  [[nodiscard]] Edge normalized() const noexcept { return u <= v ? Edge{u, v} : Edge{v, u}; }
  [[nodiscard]] int other(int w) const noexcept { return w == u ? v : u; }

  friend bool operator==(const Edge& a, const Edge& b) noexcept {
    return a.normalized().u == b.normalized().u && a.normalized().v == b.normalized().v;
  }
  friend bool operator<(const Edge& a, const Edge& b) noexcept {
    auto x = a.normalized(), y = b.normalized();
    return std::pair{x.u, x.v} < std::pair{y.u, y.v};
  }
};

/// Ordered pair (from, to).
struct Arc {
  int from = 0;
  int to = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

namespace detail {
inline void check_endpoint(int p, int w) {
  if (w < 1 || w > p) throw std::out_of_range("endpoint " + std::to_string(w) + " outside [1," + std::to_string(p) + "]");
}
}  // namespace detail

/// Finite multigraph with loops; a (p,q)-graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int p, std::vector<Edge> edges = {}) : p_(p), edges_(std::move(edges)) {
    if (p < 0) throw std::invalid_argument("negative vertex count");
    for (const auto& e : edges_) {
      detail::check_endpoint(p_, e.u);
      detail::check_endpoint(p_, e.v);
    }
  }

  [[nodiscard]] int order() const noexcept { return p_; }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] const Edge& edge(std::size_t i) const { return edges_.at(i); }

  /// Number of incident edge-ends; a loop counts twice.
  [[nodiscard]] int degree(int v) const {
    detail::check_endpoint(p_, v);
    int d = 0;
    for (const auto& e : edges_) d += (e.u == v) + (e.v == v);
    return d;
  }

  /// Degrees indexed by vertex - 1.
  [[nodiscard]] std::vector<int> degrees() const {
    std::vector<int> d(static_cast<std::size_t>(p_), 0);
    for (const auto& e : edges_) {
      ++d[static_cast<std::size_t>(e.u - 1)];
      ++d[static_cast<std::size_t>(e.v - 1)];
    }
    return d;
  }

  [[nodiscard]] bool has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
  }

  /// No loops and no parallel edges.
  [[nodiscard]] bool is_simple() const {
    if (has_loops()) return false;
    auto sorted = sorted_edges();
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  /// Edge multiset in canonical (normalized, sorted) form.
  [[nodiscard]] std::vector<Edge> sorted_edges() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back(e.normalized());
    std::sort(out.begin(), out.end());
    return out;
  }

  [[nodiscard]] std::vector<std::vector<int>> adjacency_counts() const {
    std::vector<std::vector<int>> a(static_cast<std::size_t>(p_), std::vector<int>(static_cast<std::size_t>(p_), 0));
    for (const auto& e : edges_) {
      ++a[static_cast<std::size_t>(e.u - 1)][static_cast<std::size_t>(e.v - 1)];
      if (!e.is_loop()) ++a[static_cast<std::size_t>(e.v - 1)][static_cast<std::size_t>(e.u - 1)];
    }
    return a;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.p_ == b.p_ && a.sorted_edges() == b.sorted_edges();
  }

 private:
  int p_ = 0;
  std::vector<Edge> edges_;
};

/// Finite directed multigraph with loops.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int p, std::vector<Arc> arcs = {}) : p_(p), arcs_(std::move(arcs)) {
    if (p < 0) throw std::invalid_argument("negative vertex count");
    for (const auto& a : arcs_) {
      detail::check_endpoint(p_, a.from);
      detail::check_endpoint(p_, a.to);
    }
  }

  [[nodiscard]] int order() const noexcept { return p_; }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(arcs_.size()); }
  [[nodiscard]] const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  [[nodiscard]] const Arc& arc(std::size_t i) const { return arcs_.at(i); }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int p_ = 0;
  std::vector<Arc> arcs_;
};

/// und(D): forget orientation; arc i becomes edge i.
inline Graph underlying(const Digraph& d) {
  std::vector<Edge> edges;
  edges.reserve(d.arcs().size());
  for (const auto& a : d.arcs()) edges.push_back({a.from, a.to});
  return Graph(d.order(), std::move(edges));
}

/// Orient edge i as (u, v) in stored order.
inline Digraph orient_as_listed(const Graph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.edges().size());
  for (const auto& e : g.edges()) arcs.push_back({e.u, e.v});
  return Digraph(g.order(), std::move(arcs));
}

// ---------------------------------------------------------------------------
// Named families

/// C_m with edges {i,i+1} and {m,1}.
inline Graph mk_cycle(int m) {
  if (m < 3) throw std::invalid_argument("cycle needs m >= 3");
  std::vector<Edge> edges;
  for (int i = 1; i < m; ++i) edges.push_back({i, i + 1});
  edges.push_back({m, 1});
  return Graph(m, std::move(edges));
}

/// K_{1,n} with a loop at the centre. Vertex 1 is the centre; edges {1,k+1}
/// for k = 1..n come first, the loop {1,1} last.
inline Graph mk_star_with_loop(int n) {
  if (n < 1) throw std::invalid_argument("star needs n >= 1");
  std::vector<Edge> edges;
  for (int k = 1; k <= n; ++k) edges.push_back({1, k + 1});
  edges.push_back({1, 1});
  return Graph(n + 1, std::move(edges));
}

/// Corona C_m ⊙ K̄_n: cycle on 1..m, vertex m + (i-1)n + j is the j-th
/// pendant of cycle vertex i. Cycle edges first, then pendants by (i, j).
inline Graph mk_crown(int m, int n) {
  if (m < 3) throw std::invalid_argument("crown needs m >= 3");
  if (n < 1) throw std::invalid_argument("crown needs n >= 1");
  auto cycle = mk_cycle(m);
  std::vector<Edge> edges = cycle.edges();
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) edges.push_back({i, m + (i - 1) * n + j});
  return Graph(m * (n + 1), std::move(edges));
}

/// K_{s,t} with X = [1,s], Y = [s+1,s+t]; edges ordered by (x, y).
inline Graph mk_complete_bipartite(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("complete bipartite needs s,t >= 1");
  std::vector<Edge> edges;
  for (int x = 1; x <= s; ++x)
    for (int y = s + 1; y <= s + t; ++y) edges.push_back({x, y});
  return Graph(s + t, std::move(edges));
}

/// Path on n vertices 1-2-...-n.
inline Graph mk_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

/// Strong orientation of mk_cycle(m): arcs (i,i+1) and (m,1).
inline Digraph mk_directed_cycle(int m) { return orient_as_listed(mk_cycle(m)); }

// ---------------------------------------------------------------------------
// Bipartitions

enum class Side { X, Y };

struct Bipartition {
  std::vector<int> X;
  std::vector<int> Y;

  [[nodiscard]] Side side(int v) const {
    if (std::binary_search(X.begin(), X.end(), v)) return Side::X;
    if (std::binary_search(Y.begin(), Y.end(), v)) return Side::Y;
    throw std::out_of_range("vertex " + std::to_string(v) + " not in bipartition");
  }

  /// Disjoint cover of [1,p] with every edge crossing sides.
  [[nodiscard]] bool valid_for(const Graph& g) const {
    std::vector<int> seen(static_cast<std::size_t>(g.order()) + 1, 0);
    for (int v : X) {
      if (v < 1 || v > g.order() || seen[static_cast<std::size_t>(v)]++) return false;
    }
    for (int v : Y) {
      if (v < 1 || v > g.order() || seen[static_cast<std::size_t>(v)]++) return false;
    }
    if (X.size() + Y.size() != static_cast<std::size_t>(g.order())) return false;
    if (!std::is_sorted(X.begin(), X.end()) || !std::is_sorted(Y.begin(), Y.end())) return false;
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return !e.is_loop() && side(e.u) != side(e.v); });
  }
};

/// 2-colouring by BFS. Components are started in vertex order and the
/// smallest vertex of each component goes to X. Result is re-checked.
inline std::optional<Bipartition> bipartition(const Graph& g) {
  if (g.has_loops()) return std::nullopt;
  const auto p = static_cast<std::size_t>(g.order());
  std::vector<std::vector<int>> adj(p + 1);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<int> colour(p + 1, -1);
  for (int s = 1; s <= g.order(); ++s) {
    if (colour[static_cast<std::size_t>(s)] != -1) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::queue<int> todo;
    todo.push(s);
    while (!todo.empty()) {
      int u = todo.front();
      todo.pop();
      for (int w : adj[static_cast<std::size_t>(u)]) {
        auto& cw = colour[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - colour[static_cast<std::size_t>(u)];
          todo.push(w);
        } else if (cw == colour[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (int v = 1; v <= g.order(); ++v) (colour[static_cast<std::size_t>(v)] == 0 ? b.X : b.Y).push_back(v);
  if (!b.valid_for(g)) return std::nullopt;
  return b;
}

// ---------------------------------------------------------------------------
// Isomorphism for small graphs

/// Finds a vertex bijection phi (phi[v-1] = image of v) carrying a onto b
/// with matching edge multiplicities, or nullopt. Plain backtracking with
/// degree filtering; meant for certification of small instances only.
inline std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  const auto p = static_cast<std::size_t>(a.order());
  auto da = a.degrees(), db = b.degrees();
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  const auto ma = a.adjacency_counts(), mb = b.adjacency_counts();

  // Visit vertices of a so that each new vertex is adjacent to an earlier one
  // where possible, highest degree first.
  std::vector<std::size_t> order;
  std::vector<char> placed(p, 0);
  while (order.size() < p) {
    std::size_t best = p;
    int best_links = -1;
    for (std::size_t v = 0; v < p; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (auto w : order) links += ma[v][w] > 0;
      if (links > best_links || (links == best_links && da[v] > da[best])) {
        best = v;
        best_links = links;
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }

  std::vector<int> image(p, -1);
  std::vector<char> taken(p, 0);
  auto extend = [&](auto&& self, std::size_t t) -> bool {
    if (t == p) return true;
    const auto v = order[t];
    for (std::size_t w = 0; w < p; ++w) {
      if (taken[w] || da[v] != db[w] || ma[v][v] != mb[w][w]) continue;
      bool ok = true;
      for (std::size_t s = 0; s < t && ok; ++s) {
        const auto u = order[s];
        ok = ma[v][u] == mb[w][static_cast<std::size_t>(image[u])];
      }
      if (!ok) continue;
      image[v] = static_cast<int>(w);
      taken[w] = 1;
      if (self(self, t + 1)) return true;
      taken[w] = 0;
    }
    image[v] = -1;
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  std::vector<int> phi(p);
  for (std::size_t v = 0; v < p; ++v) phi[v] = image[v] + 1;
  return phi;
}

/// For a vertex bijection phi from a onto b, the matching edge bijection:
/// result[i] is the index in b of the image of edge i of a. Parallel edges are
/// paired in list order. nullopt if phi is not an isomorphism.
inline std::optional<std::vector<std::size_t>> edge_correspondence(const Graph& a, const Graph& b,
                                                                   const std::vector<int>& phi) {
  if (a.order() != b.order() || a.size() != b.size() || phi.size() != static_cast<std::size_t>(a.order()))
    return std::nullopt;
  std::vector<std::pair<Edge, std::size_t>> targets;
  for (std::size_t j = 0; j < b.edges().size(); ++j) targets.push_back({b.edge(j).normalized(), j});
  std::sort(targets.begin(), targets.end(), [](const auto& x, const auto& y) {
    return x.first < y.first || (!(y.first < x.first) && x.second < y.second);
  });
  std::vector<char> used(targets.size(), 0);
  std::vector<std::size_t> out(a.edges().size());
  for (std::size_t i = 0; i < a.edges().size(); ++i) {
    const auto& e = a.edge(i);
    Edge img = Edge{phi[static_cast<std::size_t>(e.u - 1)], phi[static_cast<std::size_t>(e.v - 1)]}.normalized();
    auto it = std::lower_bound(targets.begin(), targets.end(), img,
                               [](const auto& t, const Edge& x) { return t.first < x; });
    while (it != targets.end() && it->first == img && used[static_cast<std::size_t>(it - targets.begin())]) ++it;
    if (it == targets.end() || !(it->first == img)) return std::nullopt;
    used[static_cast<std::size_t>(it - targets.begin())] = 1;
    out[i] = it->second;
  }
  return out;
}

}  // namespace emlab
