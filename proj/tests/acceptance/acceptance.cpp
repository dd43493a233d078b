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


// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cliqueq/cost.hpp"
#include "cliqueq/decompose.hpp"
#include "cliqueq/grover.hpp"
#include "cliqueq/oracle.hpp"
#include "cliqueq/prep.hpp"
#include "cliqueq/sim.hpp"
#include "reference.hpp"

using namespace cliqueq;
namespace fs = std::filesystem;

namespace {

struct Paths {
  std::string cli;
  std::string data;
  std::string scratch;
};

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << what;
    pass = pass && ok;
  }
};

Gate mct_on(std::size_t n) {
  std::vector<Wire> ctl(n);
  std::iota(ctl.begin(), ctl.end(), Wire{0});
  return Gate::mct(n, ctl);
}

Circuit lowered_mct(std::size_t n, Lowering m) {
  const WireTable wires(n + 1);
  return m == Lowering::Tree ? lower_tree(mct_on(n), wires) : lower_vchain(mct_on(n), wires);
}

std::string fmt(double v, int prec = 6) {
  std::ostringstream s;
  s.precision(prec);
  s << v;
  return s.str();
}

void mct_table(Check& c, const Paths&) {
  const long rows[][5] = {{2, 3, 15, 12}, {3, 5, 27, 22}, {4, 7, 77, 60}};
  for (const auto& r : rows) {
    const int n = static_cast<int>(r[0]);
    const CostReport q = analyze_qudit(lowered_mct(static_cast<std::size_t>(n), Lowering::VChain));
    const StandardCostEntry s = standard_cost(n);
    c.require(q.size == r[1] && q.depth == r[1] && q.two_qudit == r[1],
              "qudit row n=" + std::to_string(n) + " is " + std::to_string(q.size) + "/" + std::to_string(q.depth) +
                  "/" + std::to_string(q.two_qudit));
    c.require(s.size == r[2] && s.depth == r[3], "standard row n=" + std::to_string(n) + " differs");
  }
  c.detail << "vchain (3,3,3) (5,5,5) (7,7,7); standard (15,12) (27,22) (77,60)";
}

void mct_equivalence(Check& c, const Paths&) {
  double worst_amp = 0.0;
  double worst_residual = 0.0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (Lowering m : {Lowering::VChain, Lowering::Tree}) {
      const Circuit frag = lowered_mct(n, m);
      const Matrix u = unitary_of(frag);
      const RadixIndex idx(frag.wires().dims);
      for (std::uint32_t bits = 0; bits < (1U << (n + 1)); ++bits) {
        std::vector<int> in(n + 1);
        for (std::size_t w = 0; w <= n; ++w) in[w] = (bits >> (n - w)) & 1U;
        std::vector<int> want = in;
        if (std::all_of(in.begin(), in.end() - 1, [](int d) { return d == 1; })) want[n] ^= 1;
        const std::uint64_t col = idx.encode(in);
        const std::uint64_t target = idx.encode(want);
        for (std::uint64_t row = 0; row < idx.size(); ++row) {
          const Amplitude a = u(row, col);
          worst_amp = std::max(worst_amp, std::abs(a - (row == target ? Amplitude{1} : Amplitude{})));
          const auto d = idx.decode(row);
          if (std::any_of(d.begin(), d.end(), [](int x) { return x >= 2; }))
            worst_residual = std::max(worst_residual, std::abs(a));
        }
      }
    }
  }
  c.require(worst_amp < 1e-9, "amplitude error " + fmt(worst_amp));
  c.require(worst_residual < 1e-12, "residual on raised levels " + fmt(worst_residual));
  c.detail << "n=2..6 both lowerings; max amplitude error " << fmt(worst_amp) << ", raised residual "
           << fmt(worst_residual);
}

void prep_amplitudes(Check& c, const Paths&) {
  auto check = [&](const Circuit& prep, std::size_t n, std::size_t weight, double amp, const std::string& name) {
    const StateVector psi = run(prep, 0);
    double err = 0.0;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const double want = static_cast<std::size_t>(std::popcount(i)) == weight ? amp : 0.0;
      err = std::max(err, std::abs(psi[i] - Amplitude{want}));
    }
    c.require(err < 1e-9, name + " error " + fmt(err));
    return err;
  };
  double e = check(dicke_prep(3, 1), 3, 1, std::sqrt(1.0 / 3.0), "dicke(3,1)");
  e = std::max(e, check(dicke_prep(6, 4), 6, 4, 1.0 / std::sqrt(15.0), "dicke(6,4)"));
  e = std::max(e, check(w_state_prep(6), 6, 1, 1.0 / std::sqrt(6.0), "w(6)"));
  c.detail << "dicke(3,1), dicke(6,4), w(6); max error " << fmt(e);
}

void diffusion(Check& c, const Paths&) {
  double worst = 0.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const Circuit l = lower(diffusion_standard(n), Lowering::VChain);
    const Matrix full = unitary_of(l);
    const RadixIndex idx(l.wires().dims);
    const std::size_t N = std::size_t{1} << n;
    auto enc = [&](std::size_t bits) {
      std::vector<int> d(n);
      for (std::size_t w = 0; w < n; ++w) d[w] = (bits >> (n - 1 - w)) & 1U;
      return idx.encode(d);
    };
    Matrix got(N, N), want(N, N);
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        got(r, k) = full(enc(r), enc(k));
        want(r, k) = 2.0 / static_cast<double>(N) - (r == k ? 1.0 : 0.0);
      }
    worst = std::max(worst, max_abs_diff_up_to_phase(got, want));
  }
  c.require(worst < 1e-9, "error " + fmt(worst));
  c.detail << "n=1..4; max error " << fmt(worst);
}

void grover_hilbert(Check& c, const Paths&) {
  GroverConfig cfg;
  cfg.prep = PrepKind::FullHilbert;
  cfg.iterations = 6;
  cfg.backend = Backend::Sparse;
  const SearchResult r = grover_known_m(testref::six_vertex_graph(), 4, cfg);
  const double closed = testref::grover_probability(64, 1, 6);
  c.require(r.success_probability >= 0.95, "P = " + fmt(r.success_probability));
  c.require(std::abs(r.success_probability - closed) < 1e-6, "closed form mismatch");
  c.require(r.found && r.witness == VertexSet{1, 2, 3, 4}, "wrong witness");
  c.detail << "P(011110) = " << fmt(r.success_probability) << " (closed form " << fmt(closed) << ")";
}

void grover_dicke(Check& c, const Paths&) {
  GroverConfig cfg;
  cfg.prep = PrepKind::Dicke;
  cfg.diffuser = DiffuserKind::PrepConjugated;
  cfg.iterations = 3;
  const SearchResult r = grover_known_m(testref::six_vertex_graph(), 4, cfg);
  const double closed = testref::grover_probability(15, 1, 3);
  c.require(r.success_probability >= 0.90, "P = " + fmt(r.success_probability));
  c.require(std::abs(r.success_probability - closed) < 1e-6, "closed form mismatch");
  c.detail << "P(marked) = " << fmt(r.success_probability) << " (closed form " << fmt(closed) << ")";
}

std::uint64_t vertex_basis(const RadixIndex& idx, std::size_t n, std::uint32_t mask, std::size_t total, Wire target,
                           int tv) {
  std::vector<int> d(total, 0);
  for (std::size_t v = 0; v < n; ++v) d[v] = (mask >> v) & 1U;
  d[target] = tv;
  return idx.encode(d);
}

// Vertex strings whose target flips; false when an ancilla is left dirty.
bool flipped(const Graph& g, const OracleCircuit& oc, std::set<std::string>& out) {
  const Circuit l = lower(oc.circuit, Lowering::VChain);
  const RadixIndex idx(l.wires().dims);
  const std::size_t n = g.num_vertices();
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    const auto in = vertex_basis(idx, n, m, l.num_wires(), oc.layout.target, 0);
    const SparseState s = run_sparse(l, SparseState(l.wires().dims, in));
    const double pf = std::norm(s.get(vertex_basis(idx, n, m, l.num_wires(), oc.layout.target, 1)));
    const double ps = std::norm(s.get(in));
    if (std::abs(pf + ps - 1.0) > 1e-12) return false;
    if (pf > 0.5) out.insert(testref::mask_to_bits(m, n));
  }
  return true;
}

void oracle_corpus(Check& c, const Paths&) {
  const auto corpus = testref::random_graphs(25, 2, 6, 777);
  std::size_t cases = 0;
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const Graph& g = corpus[gi];
    for (std::size_t k = 2; k <= g.num_vertices(); ++k) {
      const auto expected = testref::k_clique_strings(g, k);
      for (OracleVariant v : {OracleVariant::Checking, OracleVariant::Increment}) {
        std::set<std::string> got;
        const bool clean = flipped(g, build_oracle(g, k, {v, true}), got);
        c.require(clean, "dirty ancilla on graph " + std::to_string(gi));
        c.require(got == expected, std::string(to_string(v)) + " oracle mismatch on graph " + std::to_string(gi) +
                                       " k=" + std::to_string(k));
        ++cases;
      }
    }
  }
  c.detail << cases << " (graph, k, variant) cases over 25 graphs";
}

void max_clique_driver(Check& c, const Paths&) {
  auto graphs = testref::random_graphs(19, 3, 7, 2026);
  graphs.insert(graphs.begin(), testref::six_vertex_graph());
  std::size_t agree = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const SearchResult r = max_clique(graphs[i], GroverConfig{});
    const bool ok = r.clique_size == testref::max_clique_size(graphs[i]) && (!r.found || is_clique(graphs[i], r.witness));
    c.require(ok, "graph " + std::to_string(i) + " gave " + std::to_string(r.clique_size));
    agree += ok;
    if (i == 0) {
      c.require(r.clique_size == 4 && r.skipped_sizes == std::vector<std::size_t>{6, 5} && r.failed_sizes.empty(),
                "six-vertex descent did not skip 6 and 5");
    }
  }
  c.detail << agree << "/" << graphs.size() << " graphs match brute force; six-vertex: skip 6,5 then size 4";
}

void improvement(Check& c, const Paths& p) {
  GroverConfig cfg;
  cfg.prep = PrepKind::FullHilbert;
  cfg.oracle = OracleVariant::Increment;
  const InstanceCost r = analyze_instance("one_triangle", read_graph_file(p.data + "/one_triangle.col"), 3, cfg,
                                          &ReferenceTable::builtin());
  c.require(r.comparison.size_reduction_pct >= 60.0, "size reduction " + fmt(r.comparison.size_reduction_pct, 4));
  c.require(r.comparison.depth_reduction_pct >= 40.0, "depth reduction " + fmt(r.comparison.depth_reduction_pct, 4));
  c.detail << "size " << r.standard.size << " -> " << r.qudit.size << " (" << fmt(r.comparison.size_reduction_pct, 3)
           << "%), depth " << r.standard.depth << " -> " << r.qudit.depth << " ("
           << fmt(r.comparison.depth_reduction_pct, 3) << "%)";
}

std::string slurp(const fs::path& f) {
  std::ifstream in(f, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

// Runs one CLI invocation into `dir`; returns console output plus every written file.
std::vector<std::pair<std::string, std::string>> run_cli(const Paths& p, const std::string& args, const fs::path& dir,
                                                         int& rc) {
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cmd =
      "\"" + p.cli + "\" " + args + " --output-dir \"" + dir.string() + "\" > \"" + (dir / "stdout.txt").string() + "\" 2>&1";
  rc = std::system(cmd.c_str());
  std::vector<std::pair<std::string, std::string>> files;
  for (const auto& e : fs::directory_iterator(dir)) files.emplace_back(e.path().filename().string(), slurp(e.path()));
  std::sort(files.begin(), files.end());
  return files;
}

void determinism(Check& c, const Paths& p) {
  const std::string g6 = "\"" + p.data + "/six_vertex.col\"";
  const std::string tri = "\"" + p.data + "/one_triangle.col\"";
  const std::string sq = "\"" + p.data + "/square_diagonal.col\"";
  const std::vector<std::string> commands = {
      "kclique --graph " + g6 + " --k 4 --seed 11",
      "kclique --graph " + g6 + " --k 4 --mode unknown --seed 5",
      "kclique --graph " + tri + " --k 3 --prep hilbert --oracle increment --seed 1 --shots 300",
      "maxclique --graph " + g6 + " --seed 2",
      "decompose --controls 5 --lowering tree --emit",
      "oracle --graph " + tri + " --k 3 --oracle increment --emit",
      "prep --kind dicke --n 6 --k 4 --emit --emit-amplitudes",
      "report --graph " + tri + " " + sq + " --k 3 --prep hilbert --oracle increment --format json --against-paper",
  };
  std::size_t files = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    int rc_a = 0, rc_b = 0;
    const auto a = run_cli(p, commands[i], fs::path(p.scratch) / "a" / std::to_string(i), rc_a);
    const auto b = run_cli(p, commands[i], fs::path(p.scratch) / "b" / std::to_string(i), rc_b);
    c.require(rc_a == 0 && rc_b == 0, "command failed: " + commands[i]);
    c.require(a.size() >= 2, "no output files: " + commands[i]);
    c.require(a == b, "outputs differ: " + commands[i]);
    files += a.size();
  }
  c.detail << commands.size() << " commands run twice, " << files << " files byte-identical";
}

}  // namespace

int main(int argc, char** argv) {
  Paths paths;
  CLI::App app{"cliqueq acceptance checks"};
  app.add_option("--cli", paths.cli, "cliqueq executable")->required();
  app.add_option("--data", paths.data, "graph directory")->required();
  app.add_option("--scratch", paths.scratch, "scratch directory")->required();
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0: no runtime bound
    std::function<void(Check&, const Paths&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "mct cost rows", 1.0, mct_table},
      {2, "mct lowering equivalence", 10.0, mct_equivalence},
      {3, "state-prep amplitudes", 0.0, prep_amplitudes},
      {4, "diffusion matrix", 0.0, diffusion},
      {5, "grover full hilbert", 30.0, grover_hilbert},
      {6, "grover dicke prep", 0.0, grover_dicke},
      {7, "oracle corpus", 0.0, oracle_corpus},
      {8, "max-clique driver", 300.0, max_clique_driver},
      {9, "qudit improvement", 0.0, improvement},
      {10, "cli determinism", 0.0, determinism},
  };

  int failures = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(check, paths);
    } catch (const std::exception& e) {
      check.pass = false;
      check.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.budget_s > 0 && secs >= cr.budget_s) {
      check.pass = false;
      check.detail << "; exceeded " << cr.budget_s << " s budget";
    }
    failures += !check.pass;
    std::printf("%s %2d %-26s %.2fs  %s\n", check.pass ? "PASS" : "FAIL", cr.id, cr.name, secs,
                check.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
