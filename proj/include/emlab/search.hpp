#pragma once

// Exhaustive certification of valence spectra.
//
// tau_G (edge-magic) and sigma_G (super edge-magic) are decided one candidate
// valence k at a time. Vertices are labelled in a fixed order; as soon as
// both ends of an edge carry labels, the edge label is forced to
// k - f(u) - f(v) and the branch dies if that label is out of range or
// already taken.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "emlab/graph.hpp"
#include "emlab/intervals.hpp"
#include "emlab/labeling.hpp"

namespace emlab {

enum class Kind { sem, em };

inline const char* to_string(Kind k) noexcept { return k == Kind::sem ? "sem" : "em"; }

inline Kind parse_kind(const std::string& s) {
  if (s == "sem") return Kind::sem;
  if (s == "em") return Kind::em;
  throw std::invalid_argument("unknown kind '" + s + "' (expected sem or em)");
}

/// Search refused because p + q exceeds the configured cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchOptions {
  int cap = 16;  ///< largest p + q searched
  /// Force the first vertex of the search order to carry the smallest vertex
  /// label. Only sound when the automorphism group is vertex-transitive.
  bool symmetry_break = false;
  unsigned threads = 0;  ///< 0 = hardware concurrency
};

struct SpectrumReport {
  Kind kind = Kind::em;
  IntervalReport interval;
  std::vector<Valence> achieved;  // ascending
  std::map<Valence, TotalLabeling> witnesses;
  bool perfect = false;
};

namespace detail {

class ValenceSearch {
 public:
  ValenceSearch(const Graph& g, Kind kind, Valence k, bool symmetry_break)
      : g_(g), k_(k), symmetry_break_(symmetry_break) {
    const int p = g.order(), q = g.size();
    vertex_max_ = kind == Kind::sem ? p : p + q;
    edge_min_ = kind == Kind::sem ? p + 1 : 1;
    edge_max_ = p + q;

    auto deg = g.degrees();
    order_.resize(static_cast<std::size_t>(p));
    std::iota(order_.begin(), order_.end(), 1);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return deg[static_cast<std::size_t>(a - 1)] > deg[static_cast<std::size_t>(b - 1)];
    });
    std::vector<std::size_t> position(static_cast<std::size_t>(p) + 1);
    for (std::size_t t = 0; t < order_.size(); ++t) position[static_cast<std::size_t>(order_[t])] = t;

    closing_.resize(order_.size());
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const auto& e = g.edge(i);
      const auto t = std::max(position[static_cast<std::size_t>(e.u)], position[static_cast<std::size_t>(e.v)]);
      closing_[t].push_back(i);
    }
    used_.assign(static_cast<std::size_t>(p + q) + 1, 0);
    label_.vertex_labels.assign(static_cast<std::size_t>(p), 0);
    label_.edge_labels.assign(static_cast<std::size_t>(q), 0);
  }

  std::optional<TotalLabeling> run() {
    if (g_.size() == 0) return std::nullopt;
    if (descend(0)) return label_;
    return std::nullopt;
  }

 private:
  bool descend(std::size_t t) {
    if (t == order_.size()) return true;
    const int v = order_[t];
    const int floor_label = (symmetry_break_ && t > 0) ? label_.vertex(order_[0]) + 1 : 1;
    for (int x = floor_label; x <= vertex_max_; ++x) {
      if (used_[static_cast<std::size_t>(x)]) continue;
      used_[static_cast<std::size_t>(x)] = 1;
      label_.vertex_labels[static_cast<std::size_t>(v - 1)] = x;
      std::size_t forced = 0;
      bool ok = true;
      for (auto i : closing_[t]) {
        const auto& e = g_.edge(i);
        const Valence y = k_ - label_.vertex(e.u) - label_.vertex(e.v);
        if (y < edge_min_ || y > edge_max_ || used_[static_cast<std::size_t>(y)]) {
          ok = false;
          break;
        }
        used_[static_cast<std::size_t>(y)] = 1;
        label_.edge_labels[i] = static_cast<int>(y);
        ++forced;
      }
      if (ok && descend(t + 1)) return true;
      for (std::size_t j = 0; j < forced; ++j) used_[static_cast<std::size_t>(label_.edge_labels[closing_[t][j]])] = 0;
      used_[static_cast<std::size_t>(x)] = 0;
    }
    label_.vertex_labels[static_cast<std::size_t>(v - 1)] = 0;
    return false;
  }

  const Graph& g_;
  Valence k_;
  bool symmetry_break_;
  int vertex_max_ = 0, edge_min_ = 0, edge_max_ = 0;
  std::vector<int> order_;
  std::vector<std::vector<std::size_t>> closing_;
  std::vector<char> used_;
  TotalLabeling label_;
};

inline void check_budget(const Graph& g, const SearchOptions& opt) {
  if (g.order() + g.size() > opt.cap)
    throw BudgetExceeded("p+q = " + std::to_string(g.order() + g.size()) + " exceeds search cap " +
                         std::to_string(opt.cap));
}

/// Runs body(i) for i in [0, n) over a small worker pool.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace detail

/// A labeling of the given kind with valence k, or nullopt if none exists.
inline std::optional<TotalLabeling> find_labeling(const Graph& g, Kind kind, Valence k, const SearchOptions& opt = {}) {
  detail::check_budget(g, opt);
  return detail::ValenceSearch(g, kind, k, opt.symmetry_break).run();
}

/// Spectrum of the requested kind over the matching interval.
inline SpectrumReport spectrum(const Graph& g, Kind kind, const SearchOptions& opt = {}) {
  if (g.size() == 0) throw std::invalid_argument("spectrum undefined for a graph without edges");
  detail::check_budget(g, opt);
  SpectrumReport rep;
  rep.kind = kind;
  rep.interval = kind == Kind::sem ? sem_interval(g) : em_interval(g);
  if (rep.interval.empty) return rep;

  const auto n = static_cast<std::size_t>(rep.interval.width());
  std::vector<std::optional<TotalLabeling>> found(n);
  detail::parallel_for(n, opt.threads, [&](std::size_t i) {
    found[i] = detail::ValenceSearch(g, kind, rep.interval.lo + static_cast<Valence>(i), opt.symmetry_break).run();
  });
  for (std::size_t i = 0; i < n; ++i) {
    if (!found[i]) continue;
    const Valence k = rep.interval.lo + static_cast<Valence>(i);
    rep.achieved.push_back(k);
    rep.witnesses.emplace(k, std::move(*found[i]));
  }
  rep.perfect = rep.achieved.size() == n;
  return rep;
}

inline SpectrumReport em_spectrum(const Graph& g, const SearchOptions& opt = {}) { return spectrum(g, Kind::em, opt); }
inline SpectrumReport sem_spectrum(const Graph& g, const SearchOptions& opt = {}) {
  return spectrum(g, Kind::sem, opt);
}

inline bool is_perfect_em(const Graph& g, const SearchOptions& opt = {}) { return em_spectrum(g, opt).perfect; }
inline bool is_perfect_sem(const Graph& g, const SearchOptions& opt = {}) { return sem_spectrum(g, opt).perfect; }

/// Valence of the partner labeling that keeps a spectrum closed: the
/// complement 3(p+q+1) - k for edge-magic, and for super edge-magic the
/// vertex reversal g -> p+1-g, which sends k to 4p + q + 3 - k.
inline Valence dual_valence(const Graph& g, Kind kind, Valence k) {
  const Valence p = g.order(), q = g.size();
  return kind == Kind::em ? 3 * (p + q + 1) - k : 4 * p + q + 3 - k;
}

/// Whether [p+q+3, 2(p+q)] must contain every valence. The bound needs the
/// largest label to sit in a sum with two other distinct labels, which fails
/// for loops (K_{1,n}^l reaches 2n+4) and for isolated vertices.
inline bool trivial_bounds_apply(const Graph& g) {
  if (g.has_loops()) return false;
  const auto deg = g.degrees();
  return std::none_of(deg.begin(), deg.end(), [](int d) { return d == 0; });
}

/// Every broken invariant of a computed spectrum, as readable messages.
inline std::vector<std::string> spectrum_violations(const Graph& g, const SpectrumReport& rep) {
  std::vector<std::string> out;
  const auto [low, high] = trivial_valence_bounds(g);
  const bool bounded = trivial_bounds_apply(g);
  for (auto k : rep.achieved) {
    const auto ks = std::to_string(k);
    if (bounded && (k < low || k > high)) out.push_back("valence " + ks + " outside trivial bounds");
    if (!rep.interval.contains(k)) out.push_back("valence " + ks + " outside interval");
    if (!std::binary_search(rep.achieved.begin(), rep.achieved.end(), dual_valence(g, rep.kind, k)))
      out.push_back("valence " + ks + " has no dual partner");
    auto it = rep.witnesses.find(k);
    if (it == rep.witnesses.end()) {
      out.push_back("valence " + ks + " has no witness");
      continue;
    }
    auto verified = rep.kind == Kind::sem ? is_super_edge_magic(g, it->second) : valence_of(g, it->second);
    if (verified != k) out.push_back("witness for " + ks + " does not verify");
  }
  if (!std::is_sorted(rep.achieved.begin(), rep.achieved.end())) out.push_back("achieved not sorted");
  if (rep.witnesses.size() != rep.achieved.size()) out.push_back("witness count mismatch");
  if (rep.perfect != (!rep.interval.empty && rep.achieved.size() == static_cast<std::size_t>(rep.interval.width())))
    out.push_back("perfect flag inconsistent");
  return out;
}

}  // namespace emlab
