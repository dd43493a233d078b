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

#include "cliqueq/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cliqueq {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges)
    : n_(n), adj_(n, std::vector<bool>(n, false)) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") with n=" + std::to_string(n));
    }
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (adj_[u][v]) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    }
    adj_[u][v] = adj_[v][u] = true;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  return u < n_ && v < n_ && adj_[u][v];
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph Graph::edgeless(std::size_t n) { return Graph(n, {}); }

VertexSet VertexSet::from_bitstring(std::string_view bits) {
  std::set<Vertex> members;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      members.insert(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("vertex bitstring must contain only 0/1");
    }
  }
  return VertexSet(std::move(members));
}

std::string VertexSet::to_bitstring(std::size_t n) const {
  std::string out(n, '0');
  for (Vertex v : members_) {
    if (v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " outside graph");
    out[v] = '1';
  }
  return out;
}

namespace {

std::size_t parse_count(const std::string& token, std::size_t line_no) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), ::isdigit)) {
    throw GraphParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                          token + "'");
  }
  return std::stoull(token);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;

    std::vector<std::string> rest;
    for (std::string tok; fields >> tok;) rest.push_back(tok);

    if (tag == "p") {
      if (have_header) throw GraphParseError("line " + std::to_string(line_no) + ": duplicate header");
      if (rest.size() != 3 || (rest[0] != "edge" && rest[0] != "col")) {
        throw GraphParseError("line " + std::to_string(line_no) + ": malformed header, expected 'p edge <n> <m>'");
      }
      n = parse_count(rest[1], line_no);
      m = parse_count(rest[2], line_no);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw GraphParseError("line " + std::to_string(line_no) + ": edge before header");
      if (rest.size() != 2) throw GraphParseError("line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
      const std::size_t u = parse_count(rest[0], line_no);
      const std::size_t v = parse_count(rest[1], line_no);
      if (u < 1 || u > n || v < 1 || v > n) {
        throw GraphParseError("line " + std::to_string(line_no) + ": edge endpoint out of range");
      }
      if (u == v) throw GraphParseError("line " + std::to_string(line_no) + ": self-loop");
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw GraphParseError("line " + std::to_string(line_no) + ": unknown line type '" + tag + "'");
    }
  }

  if (!have_header) throw GraphParseError("missing 'p edge' header");
  if (edges.size() != m) {
    throw GraphParseError("header declares " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()));
  }
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw GraphParseError(e.what());
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::size_t induced_edge_count(const Graph& g, const VertexSet& s) {
  std::size_t count = 0;
  for (auto [u, v] : g.edges()) {
    if (s.contains(u) && s.contains(v)) ++count;
  }
  return count;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  const auto& m = s.members();
  for (auto it = m.begin(); it != m.end(); ++it) {
    for (auto jt = std::next(it); jt != m.end(); ++jt) {
      if (!g.has_edge(*it, *jt)) return false;
    }
  }
  return true;
}

namespace {

void require_brute_force_size(const Graph& g) {
  if (g.num_vertices() > kBruteForceMaxVertices) {
    throw std::length_error("brute-force clique search limited to n <= " +
                            std::to_string(kBruteForceMaxVertices));
  }
}

// Visits k-subsets of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<Vertex> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<VertexSet> enumerate_k_cliques(const Graph& g, std::size_t k) {
  require_brute_force_size(g);
  if (k > g.num_vertices()) throw std::invalid_argument("k exceeds vertex count");
  std::vector<VertexSet> out;
  for_each_subset(g.num_vertices(), k, [&](const std::vector<Vertex>& idx) {
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        if (!g.has_edge(idx[a], idx[b])) return;
    out.emplace_back(std::set<Vertex>(idx.begin(), idx.end()));
  });
  return out;
}

VertexSet max_clique_bruteforce(const Graph& g) {
  require_brute_force_size(g);
  if (g.num_vertices() == 0) throw std::invalid_argument("max clique of an empty graph");
  for (std::size_t k = g.num_vertices(); k >= 1; --k) {
    auto cliques = enumerate_k_cliques(g, k);
    if (!cliques.empty()) return cliques.front();
  }
  return VertexSet{0};
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace cliqueq
