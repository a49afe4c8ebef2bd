#pragma once

// Plain-text formats.
//
//   graph:     "p <order>" then one "e <u> <v>" per edge (u = v is a loop)
//   digraph:   "p <order>" then one "a <u> <v>" per arc
//   labeling:  "v <vertex> <label>" and "e <edge-index> <label>"
//   labeled digraph: a digraph file followed by labeling lines
//   assignment: "<arc-index> <member-index>" per line
//
// Indices in files are 1-based; lines starting with '#' and blank lines are
// ignored.

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "emlab/graph.hpp"
#include "emlab/labeling.hpp"
#include "emlab/product.hpp"

namespace emlab::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] int line() const noexcept { return line_; }

 private:
  int line_;
};

namespace detail {

struct Line {
  int number = 0;
  std::string tag;
  std::vector<long long> args;
};

inline std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ss(raw);
    Line line{number, {}, {}};
    if (!(ss >> line.tag) || line.tag[0] == '#') continue;
    std::string tok;
    while (ss >> tok) {
      if (tok[0] == '#') break;
      try {
        std::size_t used = 0;
        line.args.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(number, "expected an integer, got '" + tok + "'");
      }
    }
    out.push_back(std::move(line));
  }
  return out;
}

inline void expect_args(const Line& l, std::size_t n) {
  if (l.args.size() != n)
    throw ParseError(l.number, "'" + l.tag + "' takes " + std::to_string(n) + " integers, got " + std::to_string(l.args.size()));
}

inline int as_int(const Line& l, std::size_t i) {
  const auto x = l.args[i];
  if (x < -1'000'000'000LL || x > 1'000'000'000LL) throw ParseError(l.number, "integer out of range");
  return static_cast<int>(x);
}

template <typename Endpoints>
int read_header_and(std::vector<Line>& lines, const char* item_tag, Endpoints& items, const char* skip_tags = "") {
  int p = -1;
  for (const auto& l : lines) {
    if (l.tag == "p") {
      expect_args(l, 1);
      if (p != -1) throw ParseError(l.number, "duplicate 'p' line");
      p = as_int(l, 0);
      if (p < 0) throw ParseError(l.number, "negative order");
    } else if (l.tag == item_tag) {
      if (p == -1) throw ParseError(l.number, "'" + l.tag + "' before 'p'");
      expect_args(l, 2);
      const int u = as_int(l, 0), v = as_int(l, 1);
      if (u < 1 || u > p || v < 1 || v > p) throw ParseError(l.number, "endpoint outside [1," + std::to_string(p) + "]");
      items.push_back({u, v});
    } else if (std::string(skip_tags).find(l.tag) == std::string::npos || l.tag.size() != 1) {
      throw ParseError(l.number, "unexpected '" + l.tag + "'");
    }
  }
  if (p == -1) throw ParseError(lines.empty() ? 0 : lines.back().number, "missing 'p' line");
  return p;
}

inline TotalLabeling read_labels(const std::vector<Line>& lines, int p, int q, const char* skip_tags) {
  TotalLabeling f;
  f.vertex_labels.assign(static_cast<std::size_t>(p), 0);
  f.edge_labels.assign(static_cast<std::size_t>(q), 0);
  for (const auto& l : lines) {
    if (l.tag != "v" && l.tag != "e") {
      if (std::string(skip_tags).find(l.tag) == std::string::npos || l.tag.size() != 1)
        throw ParseError(l.number, "unexpected '" + l.tag + "'");
      continue;
    }
    expect_args(l, 2);
    const bool vertex = l.tag == "v";
    const int idx = as_int(l, 0), label = as_int(l, 1);
    const int limit = vertex ? p : q;
    if (idx < 1 || idx > limit) throw ParseError(l.number, l.tag + " index outside [1," + std::to_string(limit) + "]");
    auto& slot = (vertex ? f.vertex_labels : f.edge_labels)[static_cast<std::size_t>(idx - 1)];
    if (slot != 0) throw ParseError(l.number, "label given twice");
    if (label == 0) throw ParseError(l.number, "label 0 is not allowed");
    slot = label;
  }
  for (std::size_t i = 0; i < f.vertex_labels.size(); ++i)
    if (f.vertex_labels[i] == 0) throw ParseError(0, "vertex " + std::to_string(i + 1) + " has no label");
  for (std::size_t i = 0; i < f.edge_labels.size(); ++i)
    if (f.edge_labels[i] == 0) throw ParseError(0, "edge " + std::to_string(i + 1) + " has no label");
  return f;
}

}  // namespace detail

inline Graph parse_graph(std::istream& in) {
  auto lines = detail::tokenize(in);
  std::vector<Edge> edges;
  const int p = detail::read_header_and(lines, "e", edges);
  return Graph(p, std::move(edges));
}

inline Digraph parse_digraph(std::istream& in) {
  auto lines = detail::tokenize(in);
  std::vector<Arc> arcs;
  const int p = detail::read_header_and(lines, "a", arcs);
  return Digraph(p, std::move(arcs));
}

/// Labels for a (p,q)-graph. Every vertex and edge must be labelled once;
/// whether the labels form a bijection is left to the verifier.
inline TotalLabeling parse_labeling(std::istream& in, int p, int q) {
  return detail::read_labels(detail::tokenize(in), p, q, "");
}

/// Digraph lines ("p", "a") and labeling lines ("v", "e") in one file.
inline LabeledDigraph parse_labeled_digraph(std::istream& in) {
  auto lines = detail::tokenize(in);
  std::vector<Arc> arcs;
  const int p = detail::read_header_and(lines, "a", arcs, "ve");
  auto f = detail::read_labels(lines, p, static_cast<int>(arcs.size()), "pa");
  try {
    return LabeledDigraph(Digraph(p, std::move(arcs)), std::move(f));
  } catch (const InvalidLabeling& e) {
    throw ParseError(0, e.what());
  }
}

/// Member index (0-based) for each of `arcs` arcs. Lines are
/// "<arc> <member>", 1-based.
inline std::vector<std::size_t> parse_assignment(std::istream& in, std::size_t arcs, std::size_t members) {
  std::vector<std::optional<std::size_t>> got(arcs);
  for (const auto& l : detail::tokenize(in)) {
    std::vector<long long> args;
    try {
      args.push_back(std::stoll(l.tag));
    } catch (const std::exception&) {
      throw ParseError(l.number, "expected '<arc> <member>'");
    }
    args.insert(args.end(), l.args.begin(), l.args.end());
    if (args.size() != 2) throw ParseError(l.number, "expected '<arc> <member>'");
    if (args[0] < 1 || static_cast<std::size_t>(args[0]) > arcs) throw ParseError(l.number, "arc index out of range");
    if (args[1] < 1 || static_cast<std::size_t>(args[1]) > members) throw ParseError(l.number, "member index out of range");
    auto& slot = got[static_cast<std::size_t>(args[0] - 1)];
    if (slot) throw ParseError(l.number, "arc assigned twice");
    slot = static_cast<std::size_t>(args[1] - 1);
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arcs; ++i) {
    if (!got[i]) throw ParseError(0, "arc " + std::to_string(i + 1) + " is not assigned");
    out.push_back(*got[i]);
  }
  return out;
}

/// Comma- or space-separated 1-based indices, returned 0-based.
inline std::vector<std::size_t> parse_index_list(const std::string& text, std::size_t limit) {
  std::string s = text;
  for (auto& c : s)
    if (c == ',') c = ' ';
  std::istringstream ss(s);
  std::vector<std::size_t> out;
  std::string tok;
  while (ss >> tok) {
    long long x = 0;
    try {
      std::size_t used = 0;
      x = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError(0, "bad index '" + tok + "'");
    }
    if (x < 1 || static_cast<std::size_t>(x) > limit) throw ParseError(0, "index " + tok + " outside [1," + std::to_string(limit) + "]");
    out.push_back(static_cast<std::size_t>(x - 1));
  }
  return out;
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.order() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

inline void write_digraph(std::ostream& out, const Digraph& d) {
  out << "p " << d.order() << '\n';
  for (const auto& a : d.arcs()) out << "a " << a.from << ' ' << a.to << '\n';
}

inline void write_labeling(std::ostream& out, const TotalLabeling& f) {
  for (std::size_t v = 0; v < f.vertex_labels.size(); ++v) out << "v " << v + 1 << ' ' << f.vertex_labels[v] << '\n';
  for (std::size_t i = 0; i < f.edge_labels.size(); ++i) out << "e " << i + 1 << ' ' << f.edge_labels[i] << '\n';
}

/// Whole file as a string; throws std::runtime_error if unreadable.
inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace emlab::io
