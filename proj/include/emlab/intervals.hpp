#pragma once

// Super edge-magic interval I_G and magic interval J_G.
//
// Both are [ceil(min), floor(max)] of an average edge sum taken over all
// bijective labelings. The extremes come from the rearrangement inequality:
// the weighted sum sum_i w_i x_i over permutations x of a fixed label set is
// smallest when the largest weights meet the smallest labels.

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "emlab/graph.hpp"
#include "emlab/labeling.hpp"

namespace emlab {

/// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational(long long num = 0, long long den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long d = std::gcd(num_, den_);
    if (d > 1) {
      num_ /= d;
      den_ /= d;
    }
  }

  [[nodiscard]] long long num() const noexcept { return num_; }
  [[nodiscard]] long long den() const noexcept { return den_; }

  [[nodiscard]] long long floor() const noexcept {
    return num_ >= 0 ? num_ / den_ : -((-num_ + den_ - 1) / den_);
  }
  [[nodiscard]] long long ceil() const noexcept {
    return num_ >= 0 ? (num_ + den_ - 1) / den_ : -((-num_) / den_);
  }

  [[nodiscard]] std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) { return a.num_ * b.den_ < b.num_ * a.den_; }

 private:
  long long num_;
  long long den_;
};

struct IntervalReport {
  long long lo = 0;
  long long hi = -1;
  Rational raw_min;
  Rational raw_max;
  bool empty = true;

  [[nodiscard]] bool contains(long long k) const noexcept { return !empty && lo <= k && k <= hi; }
  [[nodiscard]] long long width() const noexcept { return empty ? 0 : hi - lo + 1; }
};

namespace detail {

inline IntervalReport make_report(long long min_total, long long max_total, int q) {
  IntervalReport r;
  r.raw_min = Rational(min_total, q);
  r.raw_max = Rational(max_total, q);
  r.lo = r.raw_min.ceil();
  r.hi = r.raw_max.floor();
  r.empty = r.lo > r.hi;
  return r;
}

/// min and max of sum_i weights[i] * x_i over permutations x of labels.
inline std::pair<long long, long long> rearrangement_extremes(std::vector<int> weights, std::vector<int> labels) {
  std::stable_sort(weights.begin(), weights.end(), std::greater<>());
  std::sort(labels.begin(), labels.end());
  long long lo = 0, hi = 0;
  const auto n = weights.size();
  for (std::size_t i = 0; i < n; ++i) {
    lo += static_cast<long long>(weights[i]) * labels[i];
    hi += static_cast<long long>(weights[i]) * labels[n - 1 - i];
  }
  return {lo, hi};
}

inline void require_edges(const Graph& g) {
  if (g.size() == 0) throw std::invalid_argument("interval undefined for a graph without edges");
}

}  // namespace detail

/// I_G: vertex labels range over [1,p], edges take the fixed block [p+1,p+q].
inline IntervalReport sem_interval(const Graph& g) {
  detail::require_edges(g);
  const int p = g.order(), q = g.size();
  std::vector<int> labels(static_cast<std::size_t>(p));
  std::iota(labels.begin(), labels.end(), 1);
  auto [lo, hi] = detail::rearrangement_extremes(g.degrees(), labels);
  long long edge_block = 0;
  for (int i = p + 1; i <= p + q; ++i) edge_block += i;
  return detail::make_report(lo + edge_block, hi + edge_block, q);
}

/// J_G: weight deg(u) per vertex and 1 per edge against labels [1,p+q].
inline IntervalReport em_interval(const Graph& g) {
  detail::require_edges(g);
  const int p = g.order(), q = g.size();
  auto weights = g.degrees();
  weights.insert(weights.end(), static_cast<std::size_t>(q), 1);
  std::vector<int> labels(static_cast<std::size_t>(p + q));
  std::iota(labels.begin(), labels.end(), 1);
  auto [lo, hi] = detail::rearrangement_extremes(std::move(weights), std::move(labels));
  return detail::make_report(lo, hi, q);
}

/// [p+q+3, 2(p+q)]. Holds for every edge-magic valence of a graph without
/// loops or isolated vertices; see trivial_bounds_apply.
inline std::pair<Valence, Valence> trivial_valence_bounds(const Graph& g) {
  detail::require_edges(g);
  const Valence n = Valence{g.order()} + g.size();
  return {n + 3, 2 * n};
}

}  // namespace emlab
