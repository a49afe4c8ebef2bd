#pragma once

// The ⊗_h product of a digraph with a family of labeled digraphs, and the
// labelings it induces from labelings of the factors.
//
// Product vertex (a, i) is linearized as p_Γ (a - 1) + i. Product arcs are
// listed by the arc index of D, then by the arc index of the assigned member.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "emlab/graph.hpp"
#include "emlab/labeling.hpp"

namespace emlab {

/// A digraph together with a total labeling of its underlying graph.
class LabeledDigraph {
 public:
  LabeledDigraph(Digraph d, TotalLabeling f) : digraph_(std::move(d)), labeling_(std::move(f)) {
    require_valid(underlying(digraph_), labeling_);
  }

  [[nodiscard]] const Digraph& digraph() const noexcept { return digraph_; }
  [[nodiscard]] const TotalLabeling& labeling() const noexcept { return labeling_; }
  [[nodiscard]] Graph graph() const { return underlying(digraph_); }

 private:
  Digraph digraph_;
  TotalLabeling labeling_;
};

/// The map h : E(D) -> Γ, stored as a member index per arc of D.
struct ArcAssignment {
  std::vector<LabeledDigraph> family;
  std::vector<std::size_t> member_of_arc;

  static ArcAssignment constant(LabeledDigraph member, std::size_t arcs) {
    return {{std::move(member)}, std::vector<std::size_t>(arcs, 0)};
  }
};

/// F ∈ S_p^k.
struct SpkClass {
  int p = 0;
  Valence k = 0;
  friend bool operator==(const SpkClass&, const SpkClass&) = default;
};

/// F ∈ T_σ^q on a vertex set of size p.
struct TqClass {
  int q = 0;
  Valence sigma = 0;
  int p = 0;
  friend bool operator==(const TqClass&, const TqClass&) = default;
};

/// D ⊗_h Γ for a plain digraph family. Throws if an arc is unassigned or the
/// members do not share one vertex count.
inline Digraph tensor_h(const Digraph& d, std::span<const Digraph> family, std::span<const std::size_t> member_of_arc) {
  if (member_of_arc.size() != d.arcs().size())
    throw std::invalid_argument("assignment covers " + std::to_string(member_of_arc.size()) + " of " +
                                std::to_string(d.arcs().size()) + " arcs");
  if (family.empty()) {
    if (d.arcs().empty()) return Digraph(0);
    throw std::invalid_argument("empty family");
  }
  const int pg = family.front().order();
  for (const auto& m : family)
    if (m.order() != pg) throw std::invalid_argument("family members differ in vertex count");

  std::vector<Arc> arcs;
  for (std::size_t e = 0; e < d.arcs().size(); ++e) {
    const auto idx = member_of_arc[e];
    if (idx >= family.size()) throw std::invalid_argument("arc " + std::to_string(e + 1) + " assigned to missing member");
    const auto& ab = d.arc(e);
    for (const auto& ij : family[idx].arcs())
      arcs.push_back({pg * (ab.from - 1) + ij.from, pg * (ab.to - 1) + ij.to});
  }
  return Digraph(d.order() * pg, std::move(arcs));
}

inline Digraph tensor_h(const Digraph& d, const ArcAssignment& h) {
  std::vector<Digraph> plain;
  plain.reserve(h.family.size());
  for (const auto& m : h.family) plain.push_back(m.digraph());
  return tensor_h(d, plain, h.member_of_arc);
}

/// (p, k) when F is super edge-magic with |V| = |E| = p; k is the minimum
/// induced endpoint-label sum.
inline std::optional<SpkClass> in_Spk(const LabeledDigraph& f) {
  const auto g = f.graph();
  if (g.order() != g.size() || g.size() == 0) return std::nullopt;
  if (!is_super_edge_magic(g, f.labeling())) return std::nullopt;
  auto sums = induced_sums(g, vertex_part(f.labeling()));
  return SpkClass{g.order(), *std::min_element(sums.begin(), sums.end())};
}

/// (q, σ, p) when F is edge-magic with valence σ.
inline std::optional<TqClass> in_Tqsigma(const LabeledDigraph& f) {
  const auto g = f.graph();
  auto sigma = valence_of(g, f.labeling());
  if (!sigma) return std::nullopt;
  return TqClass{g.size(), *sigma, g.order()};
}

/// Renumbers the vertices of F in ascending order of their labels, so that
/// for a super edge-magic F each vertex is named by its label. Arc order and
/// all labels are kept. new_name[v-1] is the new number of old vertex v.
struct NormalizedDigraph {
  LabeledDigraph digraph;
  std::vector<int> new_name;
};

inline NormalizedDigraph normalize_by_labels(const LabeledDigraph& f) {
  const auto p = static_cast<std::size_t>(f.digraph().order());
  std::vector<int> by_label(p);
  for (std::size_t v = 0; v < p; ++v) by_label[v] = static_cast<int>(v) + 1;
  std::sort(by_label.begin(), by_label.end(),
            [&](int a, int b) { return f.labeling().vertex(a) < f.labeling().vertex(b); });
  std::vector<int> new_name(p);
  for (std::size_t r = 0; r < p; ++r) new_name[static_cast<std::size_t>(by_label[r] - 1)] = static_cast<int>(r) + 1;

  std::vector<Arc> arcs;
  for (const auto& a : f.digraph().arcs())
    arcs.push_back({new_name[static_cast<std::size_t>(a.from - 1)], new_name[static_cast<std::size_t>(a.to - 1)]});
  TotalLabeling lab;
  lab.vertex_labels.resize(p);
  for (std::size_t v = 0; v < p; ++v)
    lab.vertex_labels[static_cast<std::size_t>(new_name[v] - 1)] = f.labeling().vertex_labels[v];
  lab.edge_labels = f.labeling().edge_labels;
  return {LabeledDigraph(Digraph(f.digraph().order(), std::move(arcs)), std::move(lab)), std::move(new_name)};
}

/// K⃗_{1,n}^l: vertex 1 is the centre, arcs (1,k) for k = 1..n+1 (the loop first).
inline Digraph star_loop_digraph(int n) {
  if (n < 1) throw std::invalid_argument("star needs n >= 1");
  std::vector<Arc> arcs;
  for (int k = 1; k <= n + 1; ++k) arcs.push_back({1, k});
  return Digraph(n + 1, std::move(arcs));
}

/// f_r on K⃗_{1,n}^l: centre labelled r, leaves take [1,n+1] \ {r} in
/// ascending vertex order, edges completed by the super edge-magic
/// extension. Lies in S_{n+1}^{r+1}.
inline LabeledDigraph star_loop_labeling(int n, int r) {
  if (n < 1) throw std::invalid_argument("star needs n >= 1");
  if (r < 1 || r > n + 1) throw std::invalid_argument("centre label must lie in [1, n+1]");
  auto d = star_loop_digraph(n);
  VertexLabeling g;
  g.vertex_labels.push_back(r);
  for (int x = 1; x <= n + 1; ++x)
    if (x != r) g.vertex_labels.push_back(x);
  auto f = extend_vertex_labeling(underlying(d), g);
  if (!f) throw std::logic_error("star labeling failed to extend");
  return LabeledDigraph(std::move(d), std::move(*f));
}

/// A labeled product together with the valence the construction predicts
/// and the valence measured on the result.
struct InducedProduct {
  Digraph product;
  TotalLabeling labeling;
  Valence predicted = 0;
  std::optional<Valence> verified;
  bool super = false;  ///< labeling is super edge-magic on und(product)
};

namespace detail {

inline void check_assignment(const Digraph& d, const ArcAssignment& h) {
  if (h.member_of_arc.size() != d.arcs().size())
    throw std::invalid_argument("assignment does not cover every arc");
  for (auto m : h.member_of_arc)
    if (m >= h.family.size()) throw std::invalid_argument("assignment refers to a missing member");
}

inline void measure(InducedProduct& out) {
  const auto g = underlying(out.product);
  out.verified = valence_of(g, out.labeling);
  out.super = is_super_edge_magic(g, out.labeling).has_value();
}

}  // namespace detail

/// Labeling of und(D ⊗_h Γ) induced by an edge-magic labeling f of D and
/// members in a single S_p^k. Vertex (a,i) gets p(f(a)-1) + i and the arc
/// from ((a,i),(b,j)) over arc e gets p(f(e)-1) + (k+p) - (i+j), with member
/// vertices named by their labels. Valence p(val(f)-3) + k + p.
inline InducedProduct induced_labeling_spk(const LabeledDigraph& d, const ArcAssignment& h) {
  detail::check_assignment(d.digraph(), h);
  const auto val = valence_of(d.graph(), d.labeling());
  if (!val) throw std::invalid_argument("first factor is not edge-magic");
  if (h.family.empty()) throw std::invalid_argument("empty family");

  std::optional<SpkClass> cls;
  std::vector<Digraph> members;
  for (const auto& m : h.family) {
    auto c = in_Spk(m);
    if (!c) throw std::invalid_argument("family member is not in any S_p^k");
    if (cls && *c != *cls) throw std::invalid_argument("family mixes S_p^k classes");
    cls = c;
    members.push_back(normalize_by_labels(m).digraph.digraph());
  }
  const int p = cls->p;
  const Valence k = cls->k;

  InducedProduct out;
  out.product = tensor_h(d.digraph(), members, h.member_of_arc);
  const auto& f = d.labeling();
  out.labeling.vertex_labels.resize(static_cast<std::size_t>(out.product.order()));
  for (int a = 1; a <= d.digraph().order(); ++a)
    for (int i = 1; i <= p; ++i)
      out.labeling.vertex_labels[static_cast<std::size_t>(p * (a - 1) + i - 1)] = p * (f.vertex(a) - 1) + i;
  for (std::size_t e = 0; e < d.digraph().arcs().size(); ++e)
    for (const auto& ij : members[h.member_of_arc[e]].arcs())
      out.labeling.edge_labels.push_back(static_cast<int>(p * (f.edge(e) - 1) + (k + p) - (ij.from + ij.to)));
  out.predicted = p * (*val - 3) + k + p;
  detail::measure(out);
  return out;
}

/// Labeling of und(D ⊗_h Γ) for D ∈ S_n^k and members in a single T_σ^q that
/// share one vertex-label set V (|V| = p). Vertex (i,a) gets (p+q)(i-1) + a and
/// the arc ((i,a),(j,b)) gets (p+q)(k+n-(i+j)-1) + (σ-(a+b)), with vertices of
/// every factor named by their labels. Valence (p+q)(k+n-3) + σ.
inline InducedProduct induced_labeling_tq(const LabeledDigraph& d, const ArcAssignment& h) {
  detail::check_assignment(d.digraph(), h);
  const auto dcls = in_Spk(d);
  if (!dcls) throw std::invalid_argument("first factor is not in any S_n^k");
  if (h.family.empty()) throw std::invalid_argument("empty family");

  std::optional<TqClass> cls;
  std::vector<int> common_labels;
  std::vector<NormalizedDigraph> members;
  for (const auto& m : h.family) {
    auto c = in_Tqsigma(m);
    if (!c) throw std::invalid_argument("family member is not edge-magic");
    if (cls && *c != *cls) throw std::invalid_argument("family mixes T_sigma^q classes");
    cls = c;
    auto labels = m.labeling().vertex_labels;
    std::sort(labels.begin(), labels.end());
    if (!common_labels.empty() && labels != common_labels)
      throw std::invalid_argument("family members do not share a vertex label set");
    common_labels = std::move(labels);
    members.push_back(normalize_by_labels(m));
  }
  const int n = dcls->p;
  const Valence k = dcls->k;
  const int pq = cls->p + cls->q;
  const Valence sigma = cls->sigma;
  auto label_of = [&](int i) { return common_labels[static_cast<std::size_t>(i - 1)]; };

  std::vector<Digraph> plain;
  for (const auto& m : members) plain.push_back(m.digraph.digraph());

  InducedProduct out;
  out.product = tensor_h(d.digraph(), plain, h.member_of_arc);
  const auto& f = d.labeling();
  const int pm = cls->p;
  out.labeling.vertex_labels.resize(static_cast<std::size_t>(out.product.order()));
  for (int a = 1; a <= d.digraph().order(); ++a)
    for (int i = 1; i <= pm; ++i)
      out.labeling.vertex_labels[static_cast<std::size_t>(pm * (a - 1) + i - 1)] = pq * (f.vertex(a) - 1) + label_of(i);
  for (std::size_t e = 0; e < d.digraph().arcs().size(); ++e) {
    const auto& ab = d.digraph().arc(e);
    const Valence ij = Valence{f.vertex(ab.from)} + f.vertex(ab.to);
    for (const auto& arc : plain[h.member_of_arc[e]].arcs())
      out.labeling.edge_labels.push_back(
          static_cast<int>(pq * (k + n - ij - 1) + (sigma - (label_of(arc.from) + label_of(arc.to)))));
  }
  out.predicted = pq * (k + n - 3) + sigma;
  detail::measure(out);
  return out;
}

/// Valences of G⃗ ⊗ K⃗_{1,n}^l that the two product constructions produce from
/// a known magic set tau of G, with the counting bounds they guarantee.
struct PredictedValences {
  std::vector<Valence> via_spk;  ///< (n+1)(v-2) + r + 1, r in [1, n+1]
  std::vector<Valence> via_tq;   ///< (p+q)(n+r-1) + v
  std::vector<Valence> all;      ///< sorted union
  std::size_t lower_bound = 0;   ///< (n+1)|tau| + 2
  bool strong_condition = false; ///< beta - alpha < (alpha - (p+q+2)) n
  std::size_t strong_bound = 0;  ///< (n+3)|tau|, meaningful when strong_condition
};

/// all_r = false uses r ∈ {1, n+1} for the second rule; true uses every r.
inline PredictedValences predicted_valences_report(const Graph& g, int n, std::span<const Valence> tau,
                                                   bool all_r = false) {
  if (tau.empty()) throw std::invalid_argument("magic set unavailable");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const Valence pq = Valence{g.order()} + g.size();
  PredictedValences out;
  std::set<Valence> all;
  for (auto v : tau) {
    for (int r = 1; r <= n + 1; ++r) {
      out.via_spk.push_back((n + 1) * (v - 2) + r + 1);
      all.insert(out.via_spk.back());
    }
    for (int r = 1; r <= n + 1; ++r) {
      if (!all_r && r != 1 && r != n + 1) continue;
      out.via_tq.push_back(pq * (n + r - 1) + v);
      all.insert(out.via_tq.back());
    }
  }
  out.all.assign(all.begin(), all.end());
  out.lower_bound = static_cast<std::size_t>(n + 1) * tau.size() + 2;
  const auto [alpha_it, beta_it] = std::minmax_element(tau.begin(), tau.end());
  out.strong_condition = *beta_it - *alpha_it < (*alpha_it - (pq + 2)) * n;
  out.strong_bound = static_cast<std::size_t>(n + 3) * tau.size();
  return out;
}

}  // namespace emlab
