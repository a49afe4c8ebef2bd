#pragma once

// Command-line front end. Every command that emits a labeling re-verifies it
// before reporting "verified": true.
//
// Exit codes: 0 success / property holds, 1 property fails, 2 input error.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "emlab/decomp.hpp"
#include "emlab/graph.hpp"
#include "emlab/intervals.hpp"
#include "emlab/io.hpp"
#include "emlab/labeling.hpp"
#include "emlab/product.hpp"
#include "emlab/repro.hpp"
#include "emlab/search.hpp"

namespace emlab::cli {

using nlohmann::json;

enum Exit : int { ok = 0, fails = 1, input_error = 2 };

// ---------------------------------------------------------------------------
// JSON views

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"p", g.order()}, {"q", g.size()}, {"edges", edges}};
}

inline json to_json(const Digraph& d) {
  json arcs = json::array();
  for (const auto& a : d.arcs()) arcs.push_back({a.from, a.to});
  return {{"p", d.order()}, {"arcs", arcs}};
}

inline json to_json(const TotalLabeling& f) { return {{"vertices", f.vertex_labels}, {"edges", f.edge_labels}}; }

inline json to_json(const IntervalReport& r) {
  return {{"lo", r.lo}, {"hi", r.hi}, {"raw_min", r.raw_min.str()}, {"raw_max", r.raw_max.str()}};
}

inline json to_json(const SpectrumReport& r, bool with_witnesses = true) {
  json j{{"kind", to_string(r.kind)}, {"interval", to_json(r.interval)}, {"achieved", r.achieved}, {"perfect", r.perfect}};
  if (with_witnesses) {
    json w = json::object();
    for (const auto& [k, f] : r.witnesses) w[std::to_string(k)] = to_json(f);
    j["witnesses"] = w;
  }
  return j;
}

inline json to_json(const std::optional<Valence>& v) { return v ? json(*v) : json(nullptr); }

inline json to_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

inline json to_json(const TestOutcome& t) { return {{"verdict", to_string(t.verdict)}, {"detail", t.detail}}; }

inline json to_json(const std::vector<VertexRole>& roles) {
  json out = json::array();
  for (const auto& r : roles) out.push_back({{"side", r.side == Side::X ? "X" : "Y"}, {"block", r.block}, {"base", r.base}});
  return out;
}

inline json one_based(const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

// ---------------------------------------------------------------------------
// Certificates

/// FNV-1a, 64 bit.
inline std::uint64_t fnv1a(const std::string& data, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct Inputs {
  std::uint64_t hash = 0xcbf29ce484222325ULL;

  std::string read(const std::string& path) {
    auto text = io::slurp(path);
    hash = fnv1a(text, hash);
    return text;
  }
  [[nodiscard]] std::string digest() const {
    std::ostringstream ss;
    ss << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << hash;
    return ss.str();
  }
};

inline json certificate(const std::string& command, const Inputs& in, json result, bool verified) {
  return {{"command", command}, {"input_digest", in.digest()}, {"result", std::move(result)}, {"verified", verified}};
}

inline Graph read_graph(Inputs& in, const std::string& path) {
  std::istringstream ss(in.read(path));
  return io::parse_graph(ss);
}

inline TotalLabeling read_labeling(Inputs& in, const std::string& path, const Graph& g) {
  std::istringstream ss(in.read(path));
  return io::parse_labeling(ss, g.order(), g.size());
}

inline LabeledDigraph read_labeled_digraph(Inputs& in, const std::string& path) {
  std::istringstream ss(in.read(path));
  return io::parse_labeled_digraph(ss);
}

// ---------------------------------------------------------------------------
// Commands

inline int cmd_verify(const std::string& graph_file, const std::string& labeling_file, Kind kind, bool as_json,
                      const std::string& echo, std::ostream& out) {
  Inputs in;
  const auto g = read_graph(in, graph_file);
  const auto f = read_labeling(in, labeling_file, g);
  const auto k = kind == Kind::sem ? is_super_edge_magic(g, f) : valence_of(g, f);
  // Independent re-check: every edge sum equals k.
  bool rechecked = k.has_value();
  for (std::size_t i = 0; k && i < g.edges().size(); ++i) rechecked = rechecked && edge_sum(g, f, i) == *k;
  if (as_json) {
    out << certificate(echo, in, {{"kind", to_string(kind)}, {"valence", to_json(k)}}, rechecked).dump(2) << '\n';
  } else if (k) {
    out << "valence " << *k << '\n';
  } else {
    out << "not magic\n";
  }
  return k && rechecked ? ok : fails;
}

inline int cmd_interval(const std::string& graph_file, Kind kind, std::ostream& out) {
  Inputs in;
  const auto g = read_graph(in, graph_file);
  const auto r = kind == Kind::sem ? sem_interval(g) : em_interval(g);
  out << to_json(r).dump() << '\n';
  return ok;
}

inline int cmd_spectrum(const std::string& graph_file, Kind kind, const SearchOptions& opt,
                        const std::string& witnesses_file, const std::string& echo, std::ostream& out) {
  Inputs in;
  const auto g = read_graph(in, graph_file);
  const auto rep = spectrum(g, kind, opt);
  const bool verified = spectrum_violations(g, rep).empty();
  if (!witnesses_file.empty()) {
    std::ofstream w(witnesses_file);
    if (!w) throw std::runtime_error("cannot write '" + witnesses_file + "'");
    w << to_json(rep)["witnesses"].dump(2) << '\n';
  }
  out << certificate(echo, in, to_json(rep, witnesses_file.empty()), verified).dump(2) << '\n';
  return verified ? ok : fails;
}

inline int cmd_product(const std::string& d_file, const std::vector<std::string>& member_files,
                       const std::string& assign_file, const std::string& mode, const std::string& echo,
                       std::ostream& out) {
  Inputs in;
  const auto d = read_labeled_digraph(in, d_file);
  ArcAssignment h;
  for (const auto& m : member_files) h.family.push_back(read_labeled_digraph(in, m));
  if (assign_file.empty()) {
    if (h.family.size() != 1) throw std::invalid_argument("--assign is required with more than one member");
    h.member_of_arc.assign(d.digraph().arcs().size(), 0);
  } else {
    std::istringstream ss(in.read(assign_file));
    h.member_of_arc = io::parse_assignment(ss, d.digraph().arcs().size(), h.family.size());
  }
  InducedProduct ip;
  if (mode == "spk") ip = induced_labeling_spk(d, h);
  else if (mode == "tq") ip = induced_labeling_tq(d, h);
  else throw std::invalid_argument("mode must be spk or tq");

  const auto und = underlying(ip.product);
  const auto recheck = valence_of(und, ip.labeling);
  const bool verified = recheck && recheck == ip.verified && *recheck == ip.predicted;
  json result{{"mode", mode},
              {"product", to_json(ip.product)},
              {"labeling", to_json(ip.labeling)},
              {"predicted_valence", ip.predicted},
              {"verified_valence", to_json(ip.verified)},
              {"super", ip.super}};
  out << certificate(echo, in, std::move(result), verified).dump(2) << '\n';
  return verified ? ok : fails;
}

inline int cmd_s2n(const std::string& graph_file, const std::string& h1_list, int n, const std::string& labeling_file,
                   int r, const std::string& echo, std::ostream& out) {
  Inputs in;
  const auto g = read_graph(in, graph_file);
  const auto bip = bipartition(g);
  if (!bip) throw std::invalid_argument("graph is not bipartite");
  const auto split = decomposition_from_part1(g, io::parse_index_list(h1_list, static_cast<std::size_t>(g.size())));
  const auto s = build_s2n(g, *bip, split, n);
  const bool iso = verify_s2n_iso(g, *bip, split, n);
  json result{{"n", n},
              {"h1", one_based(split.part1)},
              {"h2", one_based(split.part2)},
              {"graph", to_json(s.graph)},
              {"roles", to_json(s.roles)},
              {"product_isomorphism", iso}};
  bool verified = iso;
  if (!labeling_file.empty()) {
    const auto f = read_labeling(in, labeling_file, g);
    if (!valence_of(g, f)) throw std::invalid_argument("supplied labeling of G is not edge-magic");
    const auto lab = induced_s2n_labeling(g, *bip, split, n, f, r);
    const auto recheck = valence_of(s.graph, lab.labeling);
    verified = verified && recheck && *recheck == lab.predicted;
    result["labeling"] = to_json(lab.labeling);
    result["predicted_valence"] = lab.predicted;
    result["verified_valence"] = to_json(recheck);
    result["super"] = lab.super;
  }
  out << certificate(echo, in, std::move(result), verified).dump(2) << '\n';
  return verified ? ok : fails;
}

inline int cmd_decompose(const std::string& graph_file, bool enumerate, const std::string& h1_list, int n,
                         bool include_empty, const std::string& labeling_file, const SearchOptions& opt,
                         std::ostream& out) {
  Inputs in;
  const auto g = read_graph(in, graph_file);
  const auto bip = bipartition(g);
  if (!bip) throw std::invalid_argument("graph is not bipartite");
  std::optional<TotalLabeling> f;
  if (!labeling_file.empty()) {
    f = read_labeling(in, labeling_file, g);
    if (!valence_of(g, *f)) throw std::invalid_argument("supplied labeling of G is not edge-magic");
  }
  bool all_good = true;
  auto report = [&](const Decomposition& d) {
    json line{{"h1", one_based(d.part1)}, {"h2", one_based(d.part2)}, {"n", n},
              {"decomposition", check_decomposition(g, d)}};
    const bool iso = verify_s2n_iso(g, *bip, d, n);
    line["s2n_iso"] = iso;
    bool good = iso;
    const auto s2n = build_s2n(g, *bip, d, n);
    const auto obs = obstruction_report(s2n.graph, s2n.roles, g, n, opt);
    line["sigma_g"] = to_json(obs.sigma_g);
    line["tau_g"] = to_json(obs.tau_g);
    line["sigma_s2n"] = to_json(obs.sigma_star);
    line["tau_s2n"] = to_json(obs.tau_star);
    line["verdicts"] = {{"magic_transfer", to_json(obs.magic_transfer)},
                        {"sem_count", to_json(obs.sem_count)},
                        {"em_count", to_json(obs.em_count)}};
    good = good && obs.instance;
    if (f) {
      const auto lab = induced_s2n_labeling(g, *bip, d, n, *f);
      const bool labeled = lab.verified && *lab.verified == lab.predicted;
      line["valence"] = to_json(lab.verified);
      line["labeling_verified"] = labeled;
      good = good && labeled;
    }
    all_good = all_good && good;
    out << line.dump() << '\n';
  };
  if (enumerate) {
    for (const auto& d : enumerate_2_decompositions(g, {include_empty, 20})) report(d);
  } else {
    report(decomposition_from_part1(g, io::parse_index_list(h1_list, static_cast<std::size_t>(g.size()))));
  }
  return all_good ? ok : fails;
}

inline int cmd_repro(const std::string& id, const std::string& echo, std::ostream& out) {
  Inputs in;
  json result{{"example", id}};
  bool verified = false;
  if (id == "c4-spectrum") {
    const auto g = mk_cycle(4);
    const auto rep = em_spectrum(g);
    verified = spectrum_violations(g, rep).empty() && rep.perfect;
    result["spectrum"] = to_json(rep);
  } else if (id == "c4-crown-20") {
    const auto run = repro::c4_crown(2);
    json entries = json::array();
    for (const auto& e : run.entries)
      entries.push_back({{"rule", e.rule},
                         {"base", e.base},
                         {"r", e.r},
                         {"base_valence", e.base_valence},
                         {"predicted", e.predicted},
                         {"verified_on_product", to_json(e.on_product)},
                         {"isomorphic_to_crown", e.isomorphic},
                         {"verified_on_crown", to_json(e.on_crown)},
                         {"crown_labeling", to_json(e.crown_labeling)}});
    result["crown"] = to_json(run.crown);
    result["interval"] = to_json(run.interval);
    result["entries"] = entries;
    result["valences"] = run.valences;
    result["count"] = run.valences.size();
    result["perfect"] = run.perfect;
    verified = run.all_verified && run.perfect;
  } else if (id == "k1nl-perfect") {
    json rows = json::array();
    verified = true;
    for (const auto& row : repro::star_loop_perfect(6)) {
      rows.push_back({{"n", row.n}, {"interval", to_json(row.interval)}, {"sigma", row.spectrum.achieved},
                      {"perfect", row.spectrum.perfect}});
      verified = verified && row.matches;
    }
    result["rows"] = rows;
  } else if (id == "s2-k33") {
    const auto run = repro::s2_k33();
    result["base"] = to_json(run.base);
    result["base_labeling"] = to_json(run.base_labeling);
    result["base_valence"] = run.base_valence;
    result["h1"] = one_based(run.split.part1);
    result["h2"] = one_based(run.split.part2);
    result["s2"] = to_json(run.result.s2n.graph);
    result["labeling"] = to_json(run.result.labeling);
    result["predicted_valence"] = run.result.predicted;
    result["verified_valence"] = to_json(run.result.verified);
    result["product_isomorphism"] = run.iso;
    verified = run.verified;
  } else {
    throw std::invalid_argument("unknown example '" + id + "' (c4-spectrum, c4-crown-20, k1nl-perfect, s2-k33)");
  }
  out << certificate(echo, in, std::move(result), verified).dump(2) << '\n';
  return verified ? ok : fails;
}

// ---------------------------------------------------------------------------
// Entry point

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::string echo;
  for (int i = 0; i < argc; ++i) echo += (i ? " " : "") + std::string(argv[i]);

  CLI::App app{"Edge-magic and super edge-magic labelings: verify, search, products, decompositions"};
  app.require_subcommand(1);
  std::string kind_name = "em";
  auto kind_check = CLI::IsMember({"em", "sem"});

  std::string graph_file, labeling_file;
  bool as_json = false;
  auto* verify = app.add_subcommand("verify", "check a labeling");
  verify->add_option("graph", graph_file, "graph file")->required();
  verify->add_option("labeling", labeling_file, "labeling file")->required();
  verify->add_option("--kind", kind_name, "em or sem")->check(kind_check);
  verify->add_flag("--json", as_json, "emit a JSON certificate");

  auto* interval = app.add_subcommand("interval", "magic interval by rearrangement");
  interval->add_option("graph", graph_file, "graph file")->required();
  interval->add_option("--kind", kind_name, "em or sem")->check(kind_check);

  SearchOptions opt;
  std::string witnesses;
  auto* spec = app.add_subcommand("spectrum", "exhaustive valence spectrum");
  spec->add_option("graph", graph_file, "graph file")->required();
  spec->add_option("--kind", kind_name, "em or sem")->check(kind_check);
  spec->add_option("--cap", opt.cap, "largest p+q searched");
  spec->add_option("--witnesses", witnesses, "write witnesses to this JSON file");
  spec->add_option("--threads", opt.threads, "worker threads (0 = all cores)");
  spec->add_flag("--symmetry-break", opt.symmetry_break, "assume a vertex-transitive graph");

  std::string d_file, assign_file, mode;
  std::vector<std::string> members;
  auto* product = app.add_subcommand("product", "labeled ⊗_h product");
  product->add_option("--d", d_file, "labeled digraph file")->required();
  product->add_option("--member", members, "labeled member digraph file")->required();
  product->add_option("--assign", assign_file, "arc -> member map");
  product->add_option("--mode", mode, "spk or tq")->required()->check(CLI::IsMember({"spk", "tq"}));

  std::string h1_list;
  int n = 1, r = 1;
  auto* s2n = app.add_subcommand("s2n", "build S_2n(G; H1, H2)");
  s2n->add_option("--graph", graph_file, "bipartite graph file")->required();
  s2n->add_option("--h1", h1_list, "edge indices of H1, e.g. 1,3")->required();
  s2n->add_option("--n", n, "number of copies")->check(CLI::PositiveNumber);
  s2n->add_option("--labeling", labeling_file, "edge-magic labeling of G to carry over");
  s2n->add_option("--r", r, "centre label of the star factor")->check(CLI::PositiveNumber);

  bool enumerate = false, include_empty = false;
  auto* decompose = app.add_subcommand("decompose", "2-decompositions with S_2n checks (JSON lines)");
  decompose->add_option("--graph", graph_file, "bipartite graph file")->required();
  auto* en = decompose->add_flag("--enumerate", enumerate, "all ordered splits");
  decompose->add_option("--h1", h1_list, "a single split")->excludes(en);
  decompose->add_option("--n", n, "number of copies")->check(CLI::PositiveNumber);
  decompose->add_flag("--include-empty", include_empty, "also splits with an empty part");
  decompose->add_option("--labeling", labeling_file, "edge-magic labeling of G to carry over");
  decompose->add_option("--cap", opt.cap, "largest p+q searched for the spectral checks");

  std::string example;
  auto* repro_cmd = app.add_subcommand("repro", "rerun a named construction");
  repro_cmd->add_option("example", example, "c4-spectrum | c4-crown-20 | k1nl-perfect | s2-k33")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return input_error;
  }

  try {
    const Kind kind = parse_kind(kind_name);
    if (verify->parsed()) return cmd_verify(graph_file, labeling_file, kind, as_json, echo, out);
    if (interval->parsed()) return cmd_interval(graph_file, kind, out);
    if (spec->parsed()) return cmd_spectrum(graph_file, kind, opt, witnesses, echo, out);
    if (product->parsed()) return cmd_product(d_file, members, assign_file, mode, echo, out);
    if (s2n->parsed()) return cmd_s2n(graph_file, h1_list, n, labeling_file, r, echo, out);
    if (decompose->parsed()) {
      if (!enumerate && h1_list.empty()) throw std::invalid_argument("decompose needs --enumerate or --h1");
      return cmd_decompose(graph_file, enumerate, h1_list, n, include_empty, labeling_file, opt, out);
    }
    if (repro_cmd->parsed()) return cmd_repro(example, echo, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  return input_error;
}

}  // namespace emlab::cli
