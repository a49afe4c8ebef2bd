#pragma once

// Scripted constructions on small named instances: the magic set of C_4,
// the twenty crown valences of C_4 ⊙ K̄_2, the stars with a loop, and S_2 of
// K_{3,3}. Each pipeline re-verifies every labeling it produces.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "emlab/decomp.hpp"
#include "emlab/graph.hpp"
#include "emlab/intervals.hpp"
#include "emlab/labeling.hpp"
#include "emlab/product.hpp"
#include "emlab/search.hpp"

namespace emlab::repro {

struct NamedLabeling {
  std::string name;
  TotalLabeling labeling;
};

/// Four edge-magic labelings of C_4 (vertices 1..4 around the cycle, edge i
/// joins i and i+1) with valences 12, 13, 14 and 15.
inline std::vector<NamedLabeling> c4_labelings() {
  return {
      {"alpha", {{1, 6, 2, 3}, {5, 4, 7, 8}}},
      {"beta", {{1, 5, 2, 8}, {7, 6, 3, 4}}},
      {"gamma", {{1, 8, 4, 7}, {5, 2, 3, 6}}},
      {"delta", {{8, 3, 7, 6}, {4, 5, 2, 1}}},
  };
}

/// One labeled product landing on the crown.
struct CrownEntry {
  std::string rule;  ///< "spk": C⃗_4 ⊗ K⃗_{1,n}^l, "tq": K⃗_{1,n}^l ⊗ C⃗_4
  std::string base;  ///< name of the C_4 labeling
  int r = 0;         ///< centre label of the star
  Valence base_valence = 0;
  Valence predicted = 0;
  std::optional<Valence> on_product;  ///< measured on und(product)
  bool isomorphic = false;            ///< und(product) ≅ C_4 ⊙ K̄_n
  std::optional<Valence> on_crown;    ///< measured after transport to mk_crown
  TotalLabeling crown_labeling;
};

struct CrownRun {
  int n = 2;
  Graph crown;
  IntervalReport interval;
  std::vector<CrownEntry> entries;
  std::vector<Valence> valences;  ///< distinct verified crown valences
  bool perfect = false;
  bool all_verified = false;
};

namespace detail {

inline void land_on_crown(CrownEntry& entry, const InducedProduct& ip, const Graph& crown) {
  entry.predicted = ip.predicted;
  entry.on_product = ip.verified;
  const auto und = underlying(ip.product);
  if (auto phi = find_isomorphism(und, crown)) {
    entry.isomorphic = true;
    if (auto moved = transport(und, crown, *phi, ip.labeling)) {
      entry.on_crown = valence_of(crown, *moved);
      entry.crown_labeling = std::move(*moved);
    }
  }
}

}  // namespace detail

/// Builds labelings of C_4 ⊙ K̄_n from the four C_4 labelings: every centre
/// label r through C⃗_4 ⊗ K⃗_{1,n}^l, and r ∈ {1, n+1} (or all r) through
/// K⃗_{1,n}^l ⊗ C⃗_4. Each product is mapped onto mk_crown(4, n) by an explicit
/// isomorphism and verified there.
inline CrownRun c4_crown(int n = 2, bool all_r_for_tq = false) {
  CrownRun run;
  run.n = n;
  run.crown = mk_crown(4, n);
  run.interval = em_interval(run.crown);
  const auto cycle = mk_directed_cycle(4);
  std::set<Valence> seen;
  bool ok = true;
  auto entry = [](std::string rule, const std::string& base, int r, Valence val) {
    CrownEntry e;
    e.rule = std::move(rule);
    e.base = base;
    e.r = r;
    e.base_valence = val;
    return e;
  };
  for (const auto& [name, lab] : c4_labelings()) {
    const LabeledDigraph g(cycle, lab);
    const auto val = *valence_of(g.graph(), lab);
    for (int r = 1; r <= n + 1; ++r) {
      auto e = entry("spk", name, r, val);
      const auto star = star_loop_labeling(n, r);
      detail::land_on_crown(e, induced_labeling_spk(g, ArcAssignment::constant(star, cycle.arcs().size())), run.crown);
      run.entries.push_back(std::move(e));
    }
    for (int r = 1; r <= n + 1; ++r) {
      if (!all_r_for_tq && r != 1 && r != n + 1) continue;
      auto e = entry("tq", name, r, val);
      const auto star = star_loop_labeling(n, r);
      detail::land_on_crown(e, induced_labeling_tq(star, ArcAssignment::constant(g, star.digraph().arcs().size())),
                            run.crown);
      run.entries.push_back(std::move(e));
    }
  }
  for (const auto& e : run.entries) {
    const bool good = e.isomorphic && e.on_crown && e.on_product == e.predicted && e.on_crown == e.predicted;
    ok = ok && good;
    if (good) seen.insert(*e.on_crown);
  }
  run.valences.assign(seen.begin(), seen.end());
  run.perfect = !run.interval.empty && run.valences.size() == static_cast<std::size_t>(run.interval.width()) &&
                run.valences.front() == run.interval.lo && run.valences.back() == run.interval.hi;
  run.all_verified = ok;
  return run;
}

struct StarRow {
  int n = 0;
  IntervalReport interval;
  SpectrumReport spectrum;
  bool matches = false;  ///< sigma == I and |sigma| = n + 1
};

/// sigma and I of K_{1,n}^l for n = 1..max_n.
inline std::vector<StarRow> star_loop_perfect(int max_n = 6, const SearchOptions& opt = {}) {
  std::vector<StarRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    const auto g = mk_star_with_loop(n);
    StarRow row{n, sem_interval(g), sem_spectrum(g, opt)};
    row.matches = row.spectrum.perfect && row.spectrum.achieved.size() == static_cast<std::size_t>(n + 1) &&
                  spectrum_violations(g, row.spectrum).empty();
    rows.push_back(std::move(row));
  }
  return rows;
}

struct S2Run {
  Graph base;
  Bipartition bip;
  Decomposition split;
  TotalLabeling base_labeling;
  Valence base_valence = 0;
  S2nLabeling result;
  bool iso = false;
  bool verified = false;
};

/// S_2(K_{3,3}; H1, H2) with H2 the matching x_i y_i and H1 the rest, labelled
/// from the smallest-valence edge-magic labeling of K_{3,3} the search finds.
inline S2Run s2_k33(const SearchOptions& opt = {}) {
  S2Run run;
  run.base = mk_complete_bipartite(3, 3);
  run.bip = *bipartition(run.base);
  // Edge (x, y) sits at index 3(x-1) + (y-4); the matching x -> x+3 is 0, 4, 8.
  run.split = decomposition_from_part1(run.base, {1, 2, 3, 5, 6, 7});
  const auto j = em_interval(run.base);
  std::optional<TotalLabeling> f;
  for (auto k = j.lo; k <= j.hi && !f; ++k) {
    f = find_labeling(run.base, Kind::em, k, opt);
    if (f) run.base_valence = k;
  }
  if (!f) throw std::logic_error("no edge-magic labeling of K_{3,3} found");
  run.base_labeling = *f;
  run.iso = verify_s2n_iso(run.base, run.bip, run.split, 1);
  run.result = induced_s2n_labeling(run.base, run.bip, run.split, 1, *f);
  run.verified = run.iso && run.result.verified == run.result.predicted;
  return run;
}

}  // namespace emlab::repro
