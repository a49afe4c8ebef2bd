#pragma once

// Bipartite 2-decompositions G = H1 ⊕ H2 and the S_{2n}(G; H1, H2) graphs
// built from them.
//
// S_{2n} is realized two ways: directly from its definition (build_s2n) and
// as und(G⃗ ⊗ K⃗_{1,n}^l) where H1 is oriented X -> Y and H2 is oriented
// Y -> X. verify_s2n_iso compares the two through the explicit map
// (v,1) -> v, (v,k+1) -> v^k.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "emlab/graph.hpp"
#include "emlab/labeling.hpp"
#include "emlab/product.hpp"
#include "emlab/search.hpp"

namespace emlab {

/// Ordered pair (H1, H2) of edge-index sets (0-based) of a base graph.
struct Decomposition {
  std::vector<std::size_t> part1;
  std::vector<std::size_t> part2;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// True iff part1 and part2 partition the edge indices of g.
inline bool check_decomposition(const Graph& g, std::span<const std::size_t> part1, std::span<const std::size_t> part2) {
  std::vector<int> hits(g.edges().size(), 0);
  for (auto span : {part1, part2})
    for (auto i : span) {
      if (i >= hits.size()) return false;
      ++hits[i];
    }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

inline bool check_decomposition(const Graph& g, const Decomposition& d) { return check_decomposition(g, d.part1, d.part2); }

/// (H1, E \ H1).
inline Decomposition decomposition_from_part1(const Graph& g, std::vector<std::size_t> part1) {
  std::sort(part1.begin(), part1.end());
  part1.erase(std::unique(part1.begin(), part1.end()), part1.end());
  Decomposition d{std::move(part1), {}};
  for (std::size_t i = 0; i < g.edges().size(); ++i)
    if (!std::binary_search(d.part1.begin(), d.part1.end(), i)) d.part2.push_back(i);
  return d;
}

/// Arc i is (x, y) when edge i lies in H1 and (y, x) when it lies in H2.
inline Digraph orient_for_decomposition(const Graph& g, const Bipartition& bip, const Decomposition& d) {
  if (!bip.valid_for(g)) throw std::invalid_argument("graph is not bipartite under the given sides");
  if (!check_decomposition(g, d)) throw std::invalid_argument("not a decomposition of the graph");
  std::vector<Arc> arcs(g.edges().size());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edge(i);
    const int x = bip.side(e.u) == Side::X ? e.u : e.v;
    const int y = e.other(x);
    const bool forward = std::find(d.part1.begin(), d.part1.end(), i) != d.part1.end();
    arcs[i] = forward ? Arc{x, y} : Arc{y, x};
  }
  return Digraph(g.order(), std::move(arcs));
}

/// Where a vertex of S_{2n} comes from: its side, block (0 = G itself,
/// k >= 1 = the k-th copy) and the vertex of G it copies.
struct VertexRole {
  Side side = Side::X;
  int block = 0;
  int base = 0;

  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

struct S2nGraph {
  Graph graph;
  int n = 0;
  std::vector<VertexRole> roles;  // roles[v-1]
};

/// Vertex number of the block-k copy of v: G keeps 1..p, block k occupies
/// kp+1 .. kp+p with the X copies (ascending) before the Y copies.
inline int s2n_vertex(const Graph& g, const Bipartition& bip, int v, int block) {
  if (block == 0) return v;
  int rank = 0;
  if (auto it = std::lower_bound(bip.X.begin(), bip.X.end(), v); it != bip.X.end() && *it == v) {
    rank = static_cast<int>(it - bip.X.begin()) + 1;
  } else {
    auto jt = std::lower_bound(bip.Y.begin(), bip.Y.end(), v);
    if (jt == bip.Y.end() || *jt != v) throw std::out_of_range("vertex not in bipartition");
    rank = static_cast<int>(bip.X.size()) + static_cast<int>(jt - bip.Y.begin()) + 1;
  }
  return g.order() * block + rank;
}

namespace detail {
inline void require_s2n_input(const Graph& g, const Bipartition& bip, const Decomposition& d, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!g.is_simple()) throw std::invalid_argument("S_2n needs a simple graph");
  if (!bip.valid_for(g)) throw std::invalid_argument("graph is not bipartite under the given sides");
  if (!check_decomposition(g, d)) throw std::invalid_argument("not a decomposition of the graph");
}
}  // namespace detail

/// S_{2n}(G; H1, H2): E(G), then for each k = 1..n and each edge x y of G in
/// order, x y^k if it lies in H1 or x^k y if it lies in H2.
inline S2nGraph build_s2n(const Graph& g, const Bipartition& bip, const Decomposition& d, int n) {
  detail::require_s2n_input(g, bip, d, n);
  const int p = g.order();
  S2nGraph out;
  out.n = n;
  out.roles.resize(static_cast<std::size_t>(p * (n + 1)));
  for (int k = 0; k <= n; ++k)
    for (int v = 1; v <= p; ++v)
      out.roles[static_cast<std::size_t>(s2n_vertex(g, bip, v, k) - 1)] = {bip.side(v), k, v};

  std::vector<Edge> edges = g.edges();
  for (int k = 1; k <= n; ++k)
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const auto& e = g.edge(i);
      const int x = bip.side(e.u) == Side::X ? e.u : e.v;
      const int y = e.other(x);
      const bool in_h1 = std::find(d.part1.begin(), d.part1.end(), i) != d.part1.end();
      edges.push_back(in_h1 ? Edge{x, s2n_vertex(g, bip, y, k)} : Edge{s2n_vertex(g, bip, x, k), y});
    }
  out.graph = Graph(p * (n + 1), std::move(edges));
  return out;
}

/// The map from vertices of G⃗ ⊗ K⃗_{1,n}^l, linearized as (n+1)(v-1) + i,
/// onto S_{2n}: (v,1) -> v and (v,k+1) -> v^k. phi[x-1] is the image of x.
inline std::vector<int> s2n_product_map(const Graph& g, const Bipartition& bip, int n) {
  std::vector<int> phi(static_cast<std::size_t>(g.order() * (n + 1)));
  for (int v = 1; v <= g.order(); ++v)
    for (int i = 1; i <= n + 1; ++i) phi[static_cast<std::size_t>((n + 1) * (v - 1) + i - 1)] = s2n_vertex(g, bip, v, i - 1);
  return phi;
}

/// True iff the explicit map carries und(G⃗ ⊗ K⃗_{1,n}^l) edge-for-edge onto
/// the candidate graph.
inline bool product_matches_s2n(const Graph& candidate, const Graph& g, const Bipartition& bip, const Decomposition& d,
                                int n) {
  auto oriented = orient_for_decomposition(g, bip, d);
  const auto star = star_loop_digraph(n);
  const std::vector<Digraph> family{star};
  const std::vector<std::size_t> assign(oriented.arcs().size(), 0);
  const auto product = tensor_h(oriented, family, assign);
  if (product.order() != candidate.order() || product.size() != candidate.size()) return false;
  const auto phi = s2n_product_map(g, bip, n);
  std::vector<Edge> mapped;
  for (const auto& a : product.arcs())
    mapped.push_back(Edge{phi[static_cast<std::size_t>(a.from - 1)], phi[static_cast<std::size_t>(a.to - 1)]}.normalized());
  std::sort(mapped.begin(), mapped.end());
  return mapped == candidate.sorted_edges();
}

inline bool verify_s2n_iso(const Graph& g, const Bipartition& bip, const Decomposition& d, int n) {
  return product_matches_s2n(build_s2n(g, bip, d, n).graph, g, bip, d, n);
}

/// A labeling of S_{2n} obtained from a labeling f of G through the product
/// with f_r on K⃗_{1,n}^l and the explicit isomorphism.
struct S2nLabeling {
  S2nGraph s2n;
  TotalLabeling labeling;
  Valence predicted = 0;  ///< (n+1)(val(f) - 2) + r + 1
  std::optional<Valence> verified;
  bool super = false;
};

inline S2nLabeling induced_s2n_labeling(const Graph& g, const Bipartition& bip, const Decomposition& d, int n,
                                        const TotalLabeling& f, int r = 1) {
  S2nLabeling out;
  out.s2n = build_s2n(g, bip, d, n);
  const LabeledDigraph first(orient_for_decomposition(g, bip, d), f);
  const auto star = star_loop_labeling(n, r);
  const auto induced = induced_labeling_spk(first, ArcAssignment::constant(star, first.digraph().arcs().size()));

  // The induced product names star vertices by label; route each product
  // vertex back through the unnormalized star before applying phi.
  const auto renamed = normalize_by_labels(star).new_name;
  const auto phi = s2n_product_map(g, bip, n);
  std::vector<int> map(phi.size());
  for (int v = 1; v <= g.order(); ++v)
    for (int i = 1; i <= n + 1; ++i) {
      const auto from = static_cast<std::size_t>((n + 1) * (v - 1) + renamed[static_cast<std::size_t>(i - 1)] - 1);
      map[from] = phi[static_cast<std::size_t>((n + 1) * (v - 1) + i - 1)];
    }
  auto moved = transport(underlying(induced.product), out.s2n.graph, map, induced.labeling);
  if (!moved) throw std::logic_error("product does not map onto S_2n");
  out.labeling = std::move(*moved);
  out.predicted = induced.predicted;
  out.verified = valence_of(out.s2n.graph, out.labeling);
  out.super = is_super_edge_magic(out.s2n.graph, out.labeling).has_value();
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

struct EnumerateOptions {
  bool include_empty = false;  ///< also yield splits with an empty part
  int cap = 20;                ///< largest q enumerated
};

/// All ordered 2-decompositions in binary-counting order: split number m puts
/// edge i in H1 iff bit i of m is set.
class DecompositionRange {
 public:
  class iterator {
   public:
    using value_type = Decomposition;
    using difference_type = std::ptrdiff_t;
    using reference = Decomposition;
    using pointer = void;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(const DecompositionRange* owner, std::uint64_t mask) : owner_(owner), mask_(mask) { skip(); }

    Decomposition operator*() const {
      Decomposition d;
      for (std::size_t i = 0; i < owner_->q_; ++i) ((mask_ >> i) & 1U ? d.part1 : d.part2).push_back(i);
      return d;
    }
    iterator& operator++() {
      ++mask_;
      skip();
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    void skip() {
      if (owner_->include_empty_) return;
      while (mask_ < owner_->end_ && (mask_ == 0 || mask_ == owner_->end_ - 1)) ++mask_;
    }
    const DecompositionRange* owner_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  DecompositionRange(std::size_t q, bool include_empty) : q_(q), end_(std::uint64_t{1} << q), include_empty_(include_empty) {}

  [[nodiscard]] iterator begin() const { return {this, 0}; }
  [[nodiscard]] iterator end() const { return {this, end_}; }

 private:
  std::size_t q_;
  std::uint64_t end_;
  bool include_empty_;
};

inline DecompositionRange enumerate_2_decompositions(const Graph& g, const EnumerateOptions& opt = {}) {
  if (g.size() > opt.cap || g.size() > 62)
    throw BudgetExceeded("q = " + std::to_string(g.size()) + " exceeds enumeration cap " + std::to_string(opt.cap));
  return {static_cast<std::size_t>(g.size()), opt.include_empty};
}

// ---------------------------------------------------------------------------
// Obstructions

enum class Verdict { no_obstruction, obstruction, not_applicable, inconclusive };

inline const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::no_obstruction: return "no_obstruction";
    case Verdict::obstruction: return "obstruction";
    case Verdict::not_applicable: return "not_applicable";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct TestOutcome {
  Verdict verdict = Verdict::not_applicable;
  std::string detail;
};

struct ObstructionReport {
  bool instance = false;  ///< G* has the S_{2n} shape under the guessed partition
  std::string reason;     ///< why not, when instance is false
  std::vector<Edge> h1, h2;  ///< cross edges read back onto G's vertices
  bool decomposes = false;   ///< h1, h2 partition E(G); required for instance
  std::optional<std::size_t> sigma_g, tau_g, sigma_star, tau_star;  ///< nullopt = over budget
  TestOutcome magic_transfer;  ///< G (super) edge-magic but G* not
  TestOutcome sem_count;       ///< |sigma_{G*}| < (n+1)|sigma_G|
  TestOutcome em_count;        ///< |tau_{G*}| < (n+1)|tau_G| + 2
};

namespace detail {

inline std::optional<std::size_t> spectrum_size(const Graph& g, Kind kind, const SearchOptions& opt) {
  try {
    return spectrum(g, kind, opt).achieved.size();
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

inline TestOutcome count_test(std::optional<std::size_t> base, std::optional<std::size_t> star, std::size_t factor,
                              std::size_t extra, const char* what) {
  if (!base) return {Verdict::inconclusive, std::string("budget: spectrum of G for ") + what};
  if (*base == 0) return {Verdict::not_applicable, std::string("G has no ") + what + " labeling"};
  if (!star) return {Verdict::inconclusive, std::string("budget: spectrum of G* for ") + what};
  const auto need = factor * *base + extra;
  const auto msg = std::to_string(*star) + (*star < need ? " < " : " >= ") + std::to_string(need);
  return {*star < need ? Verdict::obstruction : Verdict::no_obstruction, msg};
}

}  // namespace detail

/// Reads G* against a guessed partition X ∪ Y ∪ X_k ∪ Y_k (roles[v-1] for
/// each vertex of G*, copies identified with G's vertices by index) and
/// applies the three spectral obstructions to G = H1 ⊕ H2. Throws
/// std::invalid_argument if the guess itself is malformed.
inline ObstructionReport obstruction_report(const Graph& gstar, std::span<const VertexRole> roles, const Graph& g, int n,
                                            const SearchOptions& opt = {}) {
  const int p = g.order();
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (roles.size() != static_cast<std::size_t>(gstar.order()))
    throw std::invalid_argument("partition guess must give a role to every vertex of G*");
  if (gstar.order() != p * (n + 1)) throw std::invalid_argument("G* must have (n+1)|V(G)| vertices");
  std::vector<char> seen(static_cast<std::size_t>(p * (n + 1)), 0);
  std::vector<int> side_of(static_cast<std::size_t>(p) + 1, -1);
  for (const auto& r : roles) {
    if (r.block < 0 || r.block > n || r.base < 1 || r.base > p)
      throw std::invalid_argument("role out of range");
    auto& s = seen[static_cast<std::size_t>(r.block * p + r.base - 1)];
    if (s) throw std::invalid_argument("two vertices claim the same role");
    s = 1;
    auto& side = side_of[static_cast<std::size_t>(r.base)];
    const int this_side = r.side == Side::X ? 0 : 1;
    if (side != -1 && side != this_side) throw std::invalid_argument("copies of one vertex disagree on side");
    side = this_side;
  }

  ObstructionReport rep;
  auto fail = [&](std::string why) {
    rep.reason = std::move(why);
    return rep;
  };
  if (!g.is_simple()) return fail("G is not simple");
  Bipartition bip;
  for (int v = 1; v <= p; ++v) (side_of[static_cast<std::size_t>(v)] == 0 ? bip.X : bip.Y).push_back(v);
  if (!bip.valid_for(g)) return fail("guessed sides are not a bipartition of G");

  std::vector<Edge> base_edges;
  std::vector<std::vector<Edge>> h1(static_cast<std::size_t>(n) + 1), h2(static_cast<std::size_t>(n) + 1);
  for (const auto& e : gstar.edges()) {
    auto ru = roles[static_cast<std::size_t>(e.u - 1)], rv = roles[static_cast<std::size_t>(e.v - 1)];
    if (ru.side == rv.side) return fail("edge inside one side of the partition");
    if (ru.side == Side::Y) std::swap(ru, rv);  // ru on X
    if (ru.block == 0 && rv.block == 0) {
      base_edges.push_back(Edge{ru.base, rv.base}.normalized());
    } else if (ru.block == 0) {
      h1[static_cast<std::size_t>(rv.block)].push_back(Edge{ru.base, rv.base}.normalized());
    } else if (rv.block == 0) {
      h2[static_cast<std::size_t>(ru.block)].push_back(Edge{ru.base, rv.base}.normalized());
    } else {
      return fail("edge between two copy blocks");
    }
  }
  std::sort(base_edges.begin(), base_edges.end());
  if (base_edges != g.sorted_edges()) return fail("G*[X ∪ Y] is not G under the identity correspondence");
  for (int k = 1; k <= n; ++k) {
    std::sort(h1[static_cast<std::size_t>(k)].begin(), h1[static_cast<std::size_t>(k)].end());
    std::sort(h2[static_cast<std::size_t>(k)].begin(), h2[static_cast<std::size_t>(k)].end());
  }
  for (int k = 2; k <= n; ++k)
    if (h1[static_cast<std::size_t>(k)] != h1[1] || h2[static_cast<std::size_t>(k)] != h2[1])
      return fail("copy blocks do not agree on H1 and H2");

  rep.h1 = h1[1];
  rep.h2 = h2[1];
  {
    auto both = rep.h1;
    both.insert(both.end(), rep.h2.begin(), rep.h2.end());
    std::sort(both.begin(), both.end());
    rep.decomposes = both == g.sorted_edges();
  }
  if (!rep.decomposes) return fail("cross edges do not split E(G) into H1 and H2");
  rep.instance = true;

  rep.sigma_g = detail::spectrum_size(g, Kind::sem, opt);
  rep.tau_g = detail::spectrum_size(g, Kind::em, opt);
  if (gstar.size() > 0) {
    rep.sigma_star = detail::spectrum_size(gstar, Kind::sem, opt);
    rep.tau_star = detail::spectrum_size(gstar, Kind::em, opt);
  } else {
    rep.sigma_star = rep.tau_star = 0;
  }

  const auto nn = static_cast<std::size_t>(n);
  rep.sem_count = detail::count_test(rep.sigma_g, rep.sigma_star, nn + 1, 0, "super edge-magic");
  rep.em_count = detail::count_test(rep.tau_g, rep.tau_star, nn + 1, 2, "edge-magic");

  // (super) edge-magic G with G* lacking that property.
  auto transfer = [](std::optional<std::size_t> base, std::optional<std::size_t> star) -> Verdict {
    if (!base) return Verdict::inconclusive;
    if (*base == 0) return Verdict::not_applicable;
    if (!star) return Verdict::inconclusive;
    return *star == 0 ? Verdict::obstruction : Verdict::no_obstruction;
  };
  const auto em = transfer(rep.tau_g, rep.tau_star);
  const auto sem = transfer(rep.sigma_g, rep.sigma_star);
  auto& mt = rep.magic_transfer;
  if (em == Verdict::obstruction || sem == Verdict::obstruction) mt.verdict = Verdict::obstruction;
  else if (em == Verdict::inconclusive || sem == Verdict::inconclusive) mt.verdict = Verdict::inconclusive;
  else if (em == Verdict::not_applicable && sem == Verdict::not_applicable) mt.verdict = Verdict::not_applicable;
  else mt.verdict = Verdict::no_obstruction;
  mt.detail = std::string("em: ") + to_string(em) + ", sem: " + to_string(sem);
  return rep;
}

}  // namespace emlab
