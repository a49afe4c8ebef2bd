#pragma once

// Naive reference implementations. Nothing here calls into the library's
// verifier, interval or search code; they only share the Graph type.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "emlab/graph.hpp"

namespace oracle {

using emlab::Digraph;
using emlab::Graph;

/// Sums f(u) + f(e) + f(v) over every edge for labels laid out as
/// [vertex 1..p, edge 1..q]; returns the common value or 0.
inline long long constant_sum(const Graph& g, const std::vector<int>& lab) {
  const auto p = static_cast<std::size_t>(g.order());
  long long k = 0;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    const long long s = lab[static_cast<std::size_t>(e.u - 1)] + lab[p + i] + lab[static_cast<std::size_t>(e.v - 1)];
    if (i == 0) k = s;
    else if (s != k) return 0;
  }
  return k;
}

/// Every valence reached by some bijection onto [1, p+q]; with super set,
/// only bijections whose vertex labels are [1, p].
inline std::set<long long> brute_spectrum(const Graph& g, bool super) {
  const int p = g.order(), n = g.order() + g.size();
  std::vector<int> lab(static_cast<std::size_t>(n));
  std::iota(lab.begin(), lab.end(), 1);
  std::set<long long> out;
  do {
    if (super && *std::max_element(lab.begin(), lab.begin() + p) > p) continue;
    if (auto k = constant_sum(g, lab)) out.insert(k);
  } while (std::next_permutation(lab.begin(), lab.end()));
  return out;
}

/// Min and max of Σ_e (f(u) + f(e) + f(v)) over all bijections (the
/// numerators of the interval endpoints; divide by q).
inline std::pair<long long, long long> brute_extremes(const Graph& g, bool super) {
  const int p = g.order(), q = g.size();
  const int n = super ? p : p + q;
  std::vector<int> lab(static_cast<std::size_t>(n));
  std::iota(lab.begin(), lab.end(), 1);
  long long lo = 0, hi = 0;
  bool first = true;
  do {
    long long total = 0;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const auto& e = g.edges()[i];
      total += lab[static_cast<std::size_t>(e.u - 1)] + lab[static_cast<std::size_t>(e.v - 1)];
      total += super ? p + 1 + static_cast<long long>(i) : lab[static_cast<std::size_t>(p) + i];
    }
    lo = first ? total : std::min(lo, total);
    hi = first ? total : std::max(hi, total);
    first = false;
  } while (std::next_permutation(lab.begin(), lab.end()));
  return {lo, hi};
}

using Matrix = std::vector<std::vector<int>>;

inline Matrix adjacency(const Digraph& d) {
  Matrix m(static_cast<std::size_t>(d.order()), std::vector<int>(static_cast<std::size_t>(d.order()), 0));
  for (const auto& a : d.arcs()) ++m[static_cast<std::size_t>(a.from - 1)][static_cast<std::size_t>(a.to - 1)];
  return m;
}

/// Kronecker product of adjacency matrices.
inline Matrix kronecker(const Matrix& a, const Matrix& b) {
  const auto n = a.size(), m = b.size();
  Matrix out(n * m, std::vector<int>(n * m, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out[x * m + i][y * m + j] = a[x][y] * b[i][j];
  return out;
}

/// Simple graphs with p + q <= limit, q >= 1, no isolated vertices, one per
/// isomorphism class, in a fixed order.
inline std::vector<Graph> small_simple_graphs(int limit) {
  std::vector<Graph> out;
  for (int p = 2; p < limit; ++p) {
    std::vector<emlab::Edge> all;
    for (int u = 1; u <= p; ++u)
      for (int v = u + 1; v <= p; ++v) all.push_back({u, v});
    const auto m = all.size();
    if (m >= 63) continue;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      const int q = __builtin_popcountll(mask);
      if (p + q > limit) continue;
      std::vector<emlab::Edge> edges;
      for (std::size_t i = 0; i < m; ++i)
        if ((mask >> i) & 1U) edges.push_back(all[i]);
      Graph g(p, edges);
      const auto deg = g.degrees();
      if (std::find(deg.begin(), deg.end(), 0) != deg.end()) continue;
      const bool dup = std::any_of(out.begin(), out.end(), [&](const Graph& h) {
        return h.order() == p && h.size() == q && emlab::find_isomorphism(h, g).has_value();
      });
      if (!dup) out.push_back(std::move(g));
    }
  }
  return out;
}

/// The small corpus: simple graphs plus graphs with loops, parallel edges
/// and an isolated vertex.
inline std::vector<Graph> small_corpus(int limit = 8) {
  auto out = small_simple_graphs(limit);
  for (int n = 1; 2 * (n + 1) <= limit; ++n) out.push_back(emlab::mk_star_with_loop(n));
  out.push_back(Graph(2, {{1, 2}, {1, 2}}));
  out.push_back(Graph(3, {{1, 2}, {1, 2}, {2, 3}}));
  out.push_back(Graph(2, {{1, 1}, {2, 2}, {1, 2}}));
  out.push_back(Graph(1, {{1, 1}}));
  out.push_back(Graph(3, {{1, 2}}));
  return out;
}

}  // namespace oracle
