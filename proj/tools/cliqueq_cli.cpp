// Copyright 2026 The cliqueq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line driver: kclique, maxclique, decompose, oracle, prep, report.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliqueq/cost.hpp"
#include "cliqueq/decompose.hpp"
#include "cliqueq/graph.hpp"
#include "cliqueq/grover.hpp"
#include "cliqueq/oracle.hpp"
#include "cliqueq/prep.hpp"
#include "cliqueq/sim.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace cliqueq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTooLarge = 3;
constexpr int kExitNoClique = 4;

constexpr const char* kOutputDirEnv = "CLIQUEQ_OUTPUT_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph;
  std::size_t k = 0;
  std::string prep;
  std::string oracle = "checking";
  std::string lowering = "vchain";
  std::string diffuser = "auto";
  std::string backend = "sparse";
  std::string mode = "known";
  std::size_t shots = 1024;
  std::uint64_t seed = 0;
  std::string iterations = "auto";
  std::size_t max_rounds = 8;
  std::size_t controls = 0;
  std::size_t n = 0;
  std::string format;
  std::string output_dir;
  std::string out;
  std::vector<std::string> graphs;
  std::vector<std::string> names;
  bool emit = false;
  bool emit_amplitudes = false;
  bool against_paper = false;
};

GroverConfig make_config(const Options& o) {
  GroverConfig c;
  if (!o.prep.empty()) c.prep = parse_prep_kind(o.prep);
  c.oracle = parse_oracle_variant(o.oracle);
  c.lowering = parse_lowering(o.lowering);
  c.diffuser = parse_diffuser(o.diffuser);
  if (o.backend == "sparse") {
    c.backend = Backend::Sparse;
  } else if (o.backend == "dense") {
    c.backend = Backend::Dense;
  } else {
    throw UsageError("unknown backend '" + o.backend + "'");
  }
  if (o.shots < 1) throw UsageError("--shots must be >= 1");
  c.shots = o.shots;
  c.seed = o.seed;
  if (o.iterations != "auto") {
    try {
      c.iterations = std::stoul(o.iterations);
    } catch (const std::exception&) {
      throw UsageError("--iterations must be 'auto' or a positive integer");
    }
    if (c.iterations == 0) throw UsageError("--iterations must be 'auto' or a positive integer");
  }
  c.max_boyer_rounds = o.max_rounds;
  return c;
}

json vertex_list(const VertexSet& s) {
  json a = json::array();
  for (auto v : s.members()) a.push_back(v);
  return a;
}

std::string histogram_csv(const SearchResult& r) {
  std::size_t total = 0;
  for (const auto& [bits, count] : r.histogram) total += count;
  std::ostringstream out;
  out << "basis_string,count,probability\n";
  char buf[64];
  for (const auto& [bits, count] : r.histogram) {
    std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(count) / static_cast<double>(total));
    out << bits << "," << count << "," << buf << "\n";
  }
  return out.str();
}

json result_json(const SearchResult& r, std::size_t n) {
  json j;
  j["found"] = r.found;
  j["witness"] = vertex_list(r.witness);
  j["witness_bits"] = r.witness.to_bitstring(n);
  j["clique_size"] = r.clique_size;
  j["iterations_used"] = r.iterations_used;
  j["rounds"] = r.rounds;
  j["success_probability"] = r.success_probability;
  j["histogram"] = r.histogram;
  if (!r.skipped_sizes.empty()) j["skipped_sizes"] = r.skipped_sizes;
  if (!r.failed_sizes.empty()) j["failed_sizes"] = r.failed_sizes;
  return j;
}

json config_json(const Options& o, const GroverConfig& c, const Graph& g, std::size_t k) {
  json j;
  j["graph"] = fs::path(o.graph).filename().string();
  j["n"] = g.num_vertices();
  j["edges"] = g.num_edges();
  if (k != 0) {
    const PrepSpec prep = resolve_prep(c, g.num_vertices(), k);
    j["k"] = k;
    j["prep"] = std::string(to_string(prep.kind));
    j["diffuser"] = std::string(to_string(resolve_diffuser(c, prep)));
  }
  j["oracle"] = std::string(to_string(c.oracle));
  j["lowering"] = std::string(to_string(c.lowering));
  j["seed"] = c.seed;
  return j;
}

int cmd_kclique(const Options& o, std::string& doc, std::string& extra) {
  const Graph g = read_graph_file(o.graph);
  if (o.k < 2 || o.k > g.num_vertices()) throw UsageError("--k must lie in [2, n]");
  const GroverConfig c = make_config(o);
  SearchResult r;
  if (o.mode == "known") {
    if (enumerate_k_cliques(g, o.k).empty()) {
      json j{{"command", "kclique"}, {"config", config_json(o, c, g, o.k)}, {"found", false}};
      doc = j.dump(2) + "\n";
      return kExitNoClique;
    }
    r = grover_known_m(g, o.k, c);
  } else if (o.mode == "unknown") {
    r = grover_unknown_m(g, o.k, c);
  } else {
    throw UsageError("--mode must be known or unknown");
  }
  json j{{"command", "kclique"}, {"config", config_json(o, c, g, o.k)}, {"mode", o.mode}};
  j["config"]["shots"] = c.shots;
  j["result"] = result_json(r, g.num_vertices());
  doc = j.dump(2) + "\n";
  extra = histogram_csv(r);
  return r.found ? kExitOk : kExitNoClique;
}

int cmd_maxclique(const Options& o, std::string& doc, std::string& extra) {
  const Graph g = read_graph_file(o.graph);
  if (g.num_vertices() < 2) throw UsageError("maxclique needs at least two vertices");
  const GroverConfig c = make_config(o);
  const SearchResult r = max_clique(g, c);
  json j{{"command", "maxclique"}, {"config", config_json(o, c, g, 0)}};
  j["config"]["max_rounds"] = c.max_boyer_rounds;
  j["result"] = result_json(r, g.num_vertices());
  doc = j.dump(2) + "\n";
  extra = histogram_csv(r);
  if (!r.found) {
    std::cerr << "no clique above size 1 found\n";
    return kExitNoClique;
  }
  std::cerr << "maximum clique size " << r.clique_size << ": " << r.witness.to_bitstring(g.num_vertices()) << "\n";
  return kExitOk;
}

int cmd_decompose(const Options& o, std::string& doc) {
  if (o.controls < 1 || o.controls + 1 > 24) throw UsageError("--controls must lie in [1, 23]");
  const std::size_t n = o.controls;
  Circuit abstract(n + 1);
  std::vector<Wire> ctl;
  for (Wire w = 0; w < n; ++w) ctl.push_back(w);
  abstract.append(Gate::mct(n, ctl));
  const Lowering method = parse_lowering(o.lowering);
  const Circuit lowered = lower(abstract, method);
  if (o.emit) {
    doc = serialize(lowered);
    return kExitOk;
  }
  const auto q = analyze_qudit(lowered);
  const auto s = standard_cost(static_cast<int>(n));
  json j{{"command", "decompose"}, {"controls", n}, {"lowering", std::string(to_string(method))}};
  j["qudit"] = {{"size", q.size}, {"depth", q.depth}, {"q1", q.one_qubit}, {"q2", q.two_qubit}, {"qd", q.two_qudit}};
  j["dims"] = lowered.wires().dims;
  j["standard"] = {{"size", s.size},           {"depth", s.depth},          {"q1", s.one_qubit},
                   {"q2", s.two_qubit},        {"extrapolated", s.extrapolated}};
  doc = j.dump(2) + "\n";
  return kExitOk;
}

int cmd_oracle(const Options& o, std::string& doc) {
  const Graph g = read_graph_file(o.graph);
  if (o.k < 2 || o.k > g.num_vertices()) throw UsageError("--k must lie in [2, n]");
  const GroverConfig c = make_config(o);
  const PrepSpec prep = resolve_prep(c, g.num_vertices(), o.k);
  const OracleCircuit oc = build_oracle(g, o.k, OracleKind{c.oracle, !prep.fixes_weight()});
  const Circuit lowered = lower(oc.circuit, c.lowering);
  for (const auto& w : oc.warnings) std::cerr << "warning: " << w << "\n";
  if (o.emit) {
    doc = serialize(lowered);
    return kExitOk;
  }
  json j{{"command", "oracle"}, {"config", config_json(o, c, g, o.k)}};
  j["wires"] = oc.layout.total_wires;
  json census = json::object();
  const auto cs = toffoli_census(oc.circuit);
  for (const auto& [arity, count] : cs.by_arity) census[std::to_string(arity)] = count;
  j["census"] = census;
  j["toffoli_total"] = cs.total();
  j["abstract"] = {{"size", oc.circuit.size()}, {"depth", oc.circuit.depth()}};
  j["lowered"] = {{"size", lowered.size()}, {"depth", lowered.depth()}, {"dims", lowered.wires().dims}};
  j["warnings"] = oc.warnings;
  doc = j.dump(2) + "\n";
  return kExitOk;
}

int cmd_prep(const Options& o, std::string& doc) {
  if (o.n < 1 || o.n > 20) throw UsageError("--n must lie in [1, 20]");
  const PrepKind kind = parse_prep_kind(o.prep.empty() ? "dicke" : o.prep);
  PrepSpec spec;
  switch (kind) {
    case PrepKind::FullHilbert: spec = PrepSpec::full_hilbert(o.n); break;
    case PrepKind::WState: spec = PrepSpec::w_state(o.n); break;
    case PrepKind::Dicke: spec = PrepSpec::dicke(o.n, o.k); break;
  }
  // W-state search complements the register; the bare W state is what users ask to inspect.
  const Circuit c = kind == PrepKind::WState ? w_state_prep(o.n) : build_prep(spec, o.n);
  if (o.emit) {
    doc = serialize(c);
    return kExitOk;
  }
  if (o.emit_amplitudes) {
    const StateVector psi = run(c, 0);
    std::vector<Wire> wires;
    for (Wire w = 0; w < c.num_wires(); ++w) wires.push_back(w);
    std::ostringstream out;
    out << "basis,re,im,probability\n";
    char buf[128];
    for (std::uint64_t i = 0; i < psi.index().size(); ++i) {
      const Amplitude a = psi[i];
      if (std::norm(a) < 1e-24) continue;
      // +0.0 avoids printing "-0.000000000000".
      std::snprintf(buf, sizeof buf, ",%.12f,%.12f,%.12f\n", a.real() + 0.0, a.imag() + 0.0, std::norm(a));
      out << psi.index().label(i, wires) << buf;
    }
    doc = out.str();
    return kExitOk;
  }
  json j{{"command", "prep"}, {"kind", std::string(to_string(kind))}, {"n", o.n}, {"k", spec.k}};
  j["size"] = c.size();
  j["depth"] = c.depth();
  j["search_space"] = spec.search_space_size();
  doc = j.dump(2) + "\n";
  return kExitOk;
}

int cmd_report(const Options& o, std::string& doc) {
  std::vector<std::string> paths = o.graphs;
  if (!o.graph.empty()) paths.insert(paths.begin(), o.graph);
  if (paths.empty()) throw UsageError("report needs --graph");
  if (!o.names.empty() && o.names.size() != paths.size()) throw UsageError("--name count must match --graph count");
  const GroverConfig c = make_config(o);
  const ReferenceTable* ref = o.against_paper ? &ReferenceTable::builtin() : nullptr;
  std::vector<InstanceCost> rows;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Graph g = read_graph_file(paths[i]);
    if (o.k < 2 || o.k > g.num_vertices()) throw UsageError("--k must lie in [2, n] for " + paths[i]);
    const std::string name = o.names.empty() ? fs::path(paths[i]).stem().string() : o.names[i];
    rows.push_back(analyze_instance(name, g, o.k, c, ref));
  }
  doc = emit_table(rows, parse_table_format(o.format.empty() ? "markdown" : o.format));
  return kExitOk;
}

// Writes every file to a temporary sibling first, then renames them into place,
// so a failure leaves no partial output behind.
void write_atomic(const std::vector<std::pair<fs::path, std::string>>& files) {
  std::vector<std::pair<fs::path, fs::path>> staged;
  auto discard = [&] {
    for (const auto& [tmp, path] : staged) fs::remove(tmp);
  };
  for (const auto& [path, text] : files) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    staged.emplace_back(tmp, path);
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f << text;
    f.close();
    if (!f) {
      discard();
      throw std::runtime_error("cannot write " + path.string());
    }
  }
  for (const auto& [tmp, path] : staged) fs::rename(tmp, path);
}

std::string default_file(const std::string& command, const Options& o) {
  if (o.emit) return command + ".circuit";
  if (o.emit_amplitudes) return command + ".csv";
  if (command == "report") {
    const std::string f = o.format.empty() ? "markdown" : o.format;
    return f == "csv" ? "report.csv" : f == "json" ? "report.json" : "report.md";
  }
  return command + ".json";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grover k-clique search with qudit-assisted Toffoli lowering"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv(kOutputDirEnv)) o.output_dir = env;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output-dir", o.output_dir, std::string("Directory for output files (default $") + kOutputDirEnv + ")");
    sub->add_option("--out", o.out, "Output file name (relative to the output directory)");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "DIMACS graph file")->required()->check(CLI::ExistingFile);
    sub->add_option("--prep", o.prep, "hilbert | w | dicke (default: dicke when k < n)");
    sub->add_option("--oracle", o.oracle, "checking | increment");
    sub->add_option("--lowering", o.lowering, "vchain | tree");
    sub->add_option("--diffuser", o.diffuser, "auto | standard | prep_conjugated");
    sub->add_option("--backend", o.backend, "sparse | dense");
    sub->add_option("--shots", o.shots, "Measurement shots");
    sub->add_option("--seed", o.seed, "RNG seed");
    sub->add_option("--iterations", o.iterations, "Grover iterations: auto or a count");
    sub->add_option("--max-rounds", o.max_rounds, "Rounds for the unknown-count search")->check(CLI::Range(1, 24));
    add_common(sub);
  };

  auto* kclique = app.add_subcommand("kclique", "Search for a k-clique");
  add_search(kclique);
  kclique->add_option("--k", o.k, "Clique size")->required();
  kclique->add_option("--mode", o.mode, "known | unknown solution count");

  auto* maxc = app.add_subcommand("maxclique", "Find a maximum clique by descending k");
  add_search(maxc);

  auto* dec = app.add_subcommand("decompose", "Lower one multi-controlled Toffoli");
  dec->add_option("--controls", o.controls, "Number of controls")->required();
  dec->add_option("--lowering", o.lowering, "vchain | tree");
  dec->add_flag("--emit", o.emit, "Print the gate listing");
  add_common(dec);

  auto* orc = app.add_subcommand("oracle", "Build and lower a clique oracle");
  orc->add_option("--graph", o.graph, "DIMACS graph file")->required()->check(CLI::ExistingFile);
  orc->add_option("--k", o.k, "Clique size")->required();
  orc->add_option("--prep", o.prep, "hilbert | w | dicke");
  orc->add_option("--oracle,--kind", o.oracle, "checking | increment");
  orc->add_option("--lowering", o.lowering, "vchain | tree");
  orc->add_flag("--emit", o.emit, "Print the lowered gate listing");
  add_common(orc);

  auto* prep = app.add_subcommand("prep", "Build a state-preparation circuit");
  prep->add_option("--kind", o.prep, "hilbert | w | dicke")->required();
  prep->add_option("--n", o.n, "Number of wires")->required();
  prep->add_option("--k", o.k, "Hamming weight (dicke)");
  prep->add_flag("--emit", o.emit, "Print the gate listing");
  prep->add_flag("--emit-amplitudes", o.emit_amplitudes, "Print nonzero amplitudes as CSV");
  add_common(prep);

  auto* rep = app.add_subcommand("report", "Standard vs qudit cost of the full search circuit");
  rep->add_option("--graph", o.graphs, "DIMACS graph file(s)")->required()->check(CLI::ExistingFile);
  rep->add_option("--name", o.names, "Instance names (default: file stems)");
  rep->add_option("--k", o.k, "Clique size")->required();
  rep->add_option("--prep", o.prep, "hilbert | w | dicke");
  rep->add_option("--oracle", o.oracle, "checking | increment");
  rep->add_option("--lowering", o.lowering, "vchain | tree");
  rep->add_option("--iterations", o.iterations, "Grover iterations: auto or a count");
  rep->add_option("--format", o.format, "markdown | csv | json");
  rep->add_flag("--against-paper", o.against_paper, "Attach the bundled reference costs");
  add_common(rep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  std::string doc;
  std::string histogram;
  int code = kExitOk;
  try {
    if (command == "kclique") code = cmd_kclique(o, doc, histogram);
    else if (command == "maxclique") code = cmd_maxclique(o, doc, histogram);
    else if (command == "decompose") code = cmd_decompose(o, doc);
    else if (command == "oracle") code = cmd_oracle(o, doc);
    else if (command == "prep") code = cmd_prep(o, doc);
    else code = cmd_report(o, doc);

    if (!o.output_dir.empty() || !o.out.empty()) {
      const fs::path dir = o.output_dir.empty() ? fs::path(".") : fs::path(o.output_dir);
      const fs::path name = o.out.empty() ? fs::path(default_file(command, o)) : fs::path(o.out);
      const fs::path main_file = name.is_absolute() ? name : dir / name;
      std::vector<std::pair<fs::path, std::string>> files{{main_file, doc}};
      if (!histogram.empty()) {
        fs::path h = main_file;
        h.replace_extension();
        h += "_histogram.csv";
        files.emplace_back(h, histogram);
      }
      write_atomic(files);
    }
    std::cout << doc;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: instance too large: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return code;
}
