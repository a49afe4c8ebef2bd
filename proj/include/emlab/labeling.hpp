#pragma once

// Total labelings and the (super) edge-magic predicates.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "emlab/graph.hpp"

namespace emlab {

using Valence = long long;

/// Raised when a labeling is not a bijection onto the required range. This
/// is distinct from "not magic", which is reported as std::nullopt.
class InvalidLabeling : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bijection V ∪ E -> [1, p+q]. vertex_labels[v-1] is f(v), edge_labels[i]
/// is f(edge i).
struct TotalLabeling {
  std::vector<int> vertex_labels;
  std::vector<int> edge_labels;

  [[nodiscard]] int vertex(int v) const { return vertex_labels.at(static_cast<std::size_t>(v - 1)); }
  [[nodiscard]] int edge(std::size_t i) const { return edge_labels.at(i); }

  friend bool operator==(const TotalLabeling&, const TotalLabeling&) = default;
};

/// Bijection V -> [1, p]; vertex_labels[v-1] is g(v).
struct VertexLabeling {
  std::vector<int> vertex_labels;

  [[nodiscard]] int vertex(int v) const { return vertex_labels.at(static_cast<std::size_t>(v - 1)); }

  friend bool operator==(const VertexLabeling&, const VertexLabeling&) = default;
};

namespace detail {

inline bool is_permutation_of_range(const std::vector<int>& values, int n) {
  if (values.size() != static_cast<std::size_t>(n)) return false;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int x : values) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

}  // namespace detail

/// Throws InvalidLabeling unless f is a bijection onto [1, p+q] shaped for g.
inline void require_valid(const Graph& g, const TotalLabeling& f) {
  if (f.vertex_labels.size() != static_cast<std::size_t>(g.order()) ||
      f.edge_labels.size() != static_cast<std::size_t>(g.size()))
    throw InvalidLabeling("labeling has " + std::to_string(f.vertex_labels.size()) + " vertex and " +
                          std::to_string(f.edge_labels.size()) + " edge labels, graph is (" +
                          std::to_string(g.order()) + "," + std::to_string(g.size()) + ")");
  std::vector<int> all = f.vertex_labels;
  all.insert(all.end(), f.edge_labels.begin(), f.edge_labels.end());
  if (!detail::is_permutation_of_range(all, g.order() + g.size()))
    throw InvalidLabeling("labels are not a bijection onto [1," + std::to_string(g.order() + g.size()) + "]");
}

inline void require_valid(const Graph& g, const VertexLabeling& lab) {
  if (!detail::is_permutation_of_range(lab.vertex_labels, g.order()))
    throw InvalidLabeling("vertex labels are not a bijection onto [1," + std::to_string(g.order()) + "]");
}

/// f(u) + f(e) + f(v) for edge i; a loop contributes 2 f(v) + f(e).
inline Valence edge_sum(const Graph& g, const TotalLabeling& f, std::size_t i) {
  const auto& e = g.edge(i);
  return Valence{f.vertex(e.u)} + f.vertex(e.v) + f.edge(i);
}

/// The common edge sum if f is edge-magic on g. nullopt when the sums differ
/// or g has no edges.
inline std::optional<Valence> valence_of(const Graph& g, const TotalLabeling& f) {
  require_valid(g, f);
  if (g.size() == 0) return std::nullopt;
  const Valence k = edge_sum(g, f, 0);
  for (std::size_t i = 1; i < g.edges().size(); ++i)
    if (edge_sum(g, f, i) != k) return std::nullopt;
  return k;
}

/// Valence of f if it is edge-magic and f(V) = [1, p].
inline std::optional<Valence> is_super_edge_magic(const Graph& g, const TotalLabeling& f) {
  auto k = valence_of(g, f);
  if (!k) return std::nullopt;
  const bool vertices_low = std::all_of(f.vertex_labels.begin(), f.vertex_labels.end(),
                                        [&](int x) { return x <= g.order(); });
  return vertices_low ? k : std::nullopt;
}

/// Multiset {g(u) + g(v) : uv ∈ E}, in edge order; a loop gives 2 g(v).
inline std::vector<Valence> induced_sums(const Graph& g, const VertexLabeling& lab) {
  require_valid(g, lab);
  std::vector<Valence> sums;
  sums.reserve(g.edges().size());
  for (const auto& e : g.edges()) sums.push_back(Valence{lab.vertex(e.u)} + lab.vertex(e.v));
  return sums;
}

/// Super edge-magic extension of a vertex labeling. Succeeds iff the induced
/// sums are q distinct consecutive integers; the edge with sum s then gets
/// p + q + min S - s and the valence is p + q + min S.
inline std::optional<TotalLabeling> extend_vertex_labeling(const Graph& g, const VertexLabeling& lab) {
  auto sums = induced_sums(g, lab);
  if (sums.empty()) return std::nullopt;
  auto sorted = sums;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] != sorted[i - 1] + 1) return std::nullopt;
  const Valence k = Valence{g.order()} + g.size() + sorted.front();
  TotalLabeling f{lab.vertex_labels, {}};
  f.edge_labels.reserve(sums.size());
  for (auto s : sums) f.edge_labels.push_back(static_cast<int>(k - s));
  return f;
}

/// x -> p + q + 1 - f(x). Maps valence k to 3(p+q+1) - k.
inline TotalLabeling complement(const Graph& g, const TotalLabeling& f) {
  require_valid(g, f);
  const int top = g.order() + g.size() + 1;
  TotalLabeling out = f;
  for (auto& x : out.vertex_labels) x = top - x;
  for (auto& x : out.edge_labels) x = top - x;
  return out;
}

inline Valence complement_valence(const Graph& g, Valence k) { return 3 * (Valence{g.order()} + g.size() + 1) - k; }

/// Vertex part of a super edge-magic labeling.
inline VertexLabeling vertex_part(const TotalLabeling& f) { return VertexLabeling{f.vertex_labels}; }

/// Carries f on a over to b along the isomorphism phi (phi[v-1] = image of
/// v). nullopt if phi is not an isomorphism.
inline std::optional<TotalLabeling> transport(const Graph& a, const Graph& b, const std::vector<int>& phi,
                                              const TotalLabeling& f) {
  auto edges = edge_correspondence(a, b, phi);
  if (!edges) return std::nullopt;
  TotalLabeling out;
  out.vertex_labels.resize(f.vertex_labels.size());
  out.edge_labels.resize(f.edge_labels.size());
  for (std::size_t v = 0; v < phi.size(); ++v) out.vertex_labels[static_cast<std::size_t>(phi[v] - 1)] = f.vertex_labels[v];
  for (std::size_t i = 0; i < edges->size(); ++i) out.edge_labels[(*edges)[i]] = f.edge_labels[i];
  return out;
}

}  // namespace emlab
