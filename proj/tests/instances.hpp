#pragma once

// Labeled product instances shared by the product tests and the acceptance
// suite. Every instance is deterministic.

#include <numeric>
#include <string>
#include <vector>

#include "emlab/product.hpp"
#include "emlab/repro.hpp"
#include "emlab/search.hpp"

namespace instances {

using namespace emlab;

struct ProductCase {
  std::string name;
  bool tq = false;  ///< false: spk rule, true: tq rule
  LabeledDigraph first;
  ArcAssignment h;
};

inline Digraph reversed(const Digraph& d) {
  std::vector<Arc> arcs;
  for (const auto& a : d.arcs()) arcs.push_back({a.to, a.from});
  return Digraph(d.order(), arcs);
}

/// C⃗_4 with each of the four named labelings.
inline std::vector<LabeledDigraph> labeled_c4() {
  std::vector<LabeledDigraph> out;
  for (const auto& [name, f] : repro::c4_labelings()) out.emplace_back(mk_directed_cycle(4), f);
  return out;
}

/// C⃗_3 with one edge-magic labeling per valence.
inline std::vector<LabeledDigraph> labeled_c3() {
  std::vector<LabeledDigraph> out;
  for (const auto& [k, f] : em_spectrum(mk_cycle(3)).witnesses) out.emplace_back(mk_directed_cycle(3), f);
  return out;
}

/// The super edge-magic labeling of C⃗_3 with vertex labels 1, 2, 3; in S_3^3.
inline LabeledDigraph sem_c3() {
  return LabeledDigraph(mk_directed_cycle(3), *extend_vertex_labeling(mk_cycle(3), VertexLabeling{{1, 2, 3}}));
}

/// alpha on C⃗_4 with its vertices rotated by one step: same vertex labels,
/// same valence, different arcs between them.
inline LabeledDigraph rotated_alpha() {
  const auto alpha = repro::c4_labelings()[0].labeling;
  TotalLabeling f;
  f.vertex_labels = {alpha.vertex_labels[3], alpha.vertex_labels[0], alpha.vertex_labels[1], alpha.vertex_labels[2]};
  // edge i joins i and i+1; after rotation it joins the old vertices i-1 and i
  f.edge_labels = {alpha.edge_labels[3], alpha.edge_labels[0], alpha.edge_labels[1], alpha.edge_labels[2]};
  return LabeledDigraph(mk_directed_cycle(4), f);
}

inline std::vector<std::size_t> alternating(std::size_t arcs, std::size_t members) {
  std::vector<std::size_t> out(arcs);
  for (std::size_t i = 0; i < arcs; ++i) out[i] = i % members;
  return out;
}

inline std::vector<ProductCase> product_suite() {
  std::vector<ProductCase> out;
  auto add = [&](std::string name, bool tq, const LabeledDigraph& first, ArcAssignment h) {
    out.push_back({std::move(name), tq, first, std::move(h)});
  };

  // spk, constant h: C⃗_4 and C⃗_3 against every f_r on K⃗_{1,n}^l.
  int idx = 0;
  for (const auto& g : labeled_c4()) {
    ++idx;
    for (int n = 1; n <= 3; ++n)
      for (int r = 1; r <= n + 1; ++r)
        add("spk C4#" + std::to_string(idx) + " n=" + std::to_string(n) + " r=" + std::to_string(r), false, g,
            ArcAssignment::constant(star_loop_labeling(n, r), 4));
  }
  idx = 0;
  for (const auto& g : labeled_c3()) {
    ++idx;
    for (int n = 1; n <= 2; ++n)
      for (int r = 1; r <= n + 1; ++r)
        add("spk C3#" + std::to_string(idx) + " n=" + std::to_string(n) + " r=" + std::to_string(r), false, g,
            ArcAssignment::constant(star_loop_labeling(n, r), 3));
  }

  // spk, non-constant h inside S_3^3: C⃗_3, its reverse, and f_2 on K⃗_{1,2}^l.
  const auto c3 = sem_c3();
  const LabeledDigraph c3_rev(reversed(c3.digraph()), c3.labeling());
  const auto f2 = star_loop_labeling(2, 2);
  idx = 0;
  for (const auto& g : labeled_c4()) {
    ++idx;
    add("spk C4#" + std::to_string(idx) + " mixed S_3^3", false, g, ArcAssignment{{c3, f2}, alternating(4, 2)});
    add("spk C4#" + std::to_string(idx) + " mixed S_3^3 x3", false, g, ArcAssignment{{c3, c3_rev, f2}, {2, 0, 1, 2}});
  }
  add("spk C3 self", false, labeled_c3().front(), ArcAssignment::constant(c3, 3));

  // tq, constant h: f_r on K⃗_{1,n}^l against each labeled C⃗_4.
  for (int n = 1; n <= 2; ++n)
    for (int r = 1; r <= n + 1; ++r) {
      idx = 0;
      for (const auto& g : labeled_c4()) {
        ++idx;
        add("tq n=" + std::to_string(n) + " r=" + std::to_string(r) + " C4#" + std::to_string(idx), true,
            star_loop_labeling(n, r), ArcAssignment::constant(g, static_cast<std::size_t>(n + 1)));
      }
    }
  for (const auto& g : labeled_c4()) add("tq SEM C3 x C4", true, c3, ArcAssignment::constant(g, 3));

  // tq, non-constant h inside one T_12^4 with vertex labels {1,2,3,6}.
  const auto alpha = labeled_c4().front();
  const LabeledDigraph alpha_rev(reversed(alpha.digraph()), alpha.labeling());
  const auto alpha_rot = rotated_alpha();
  for (int r = 1; r <= 3; ++r)
    add("tq n=2 r=" + std::to_string(r) + " mixed alpha", true, star_loop_labeling(2, r),
        ArcAssignment{{alpha, alpha_rev, alpha_rot}, {0, 1, 2}});
  add("tq SEM C3 mixed alpha", true, c3, ArcAssignment{{alpha_rot, alpha}, {1, 0, 0}});
  return out;
}

inline InducedProduct run(const ProductCase& c) {
  return c.tq ? induced_labeling_tq(c.first, c.h) : induced_labeling_spk(c.first, c.h);
}

/// The valence the construction's formula gives, computed from the classes
/// directly rather than from InducedProduct::predicted.
inline Valence formula(const ProductCase& c) {
  if (!c.tq) {
    const auto cls = *in_Spk(c.h.family.front());
    return cls.p * (*valence_of(c.first.graph(), c.first.labeling()) - 3) + cls.k + cls.p;
  }
  const auto d = *in_Spk(c.first);
  const auto m = *in_Tqsigma(c.h.family.front());
  return (m.p + m.q) * (d.k + d.p - 3) + m.sigma;
}

}  // namespace instances
