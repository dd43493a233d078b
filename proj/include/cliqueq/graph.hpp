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

#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cliqueq {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Largest vertex count accepted by the brute-force reference routines.
inline constexpr std::size_t kBruteForceMaxVertices = 24;

/// Raised when a graph file does not follow the `p edge` format.
class GraphParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Undirected simple graph with 0-indexed vertices.
 *
 * Edges are stored normalized (u < v) and kept sorted, so iteration order is
 * lexicographic. The class is immutable once constructed.
 */
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on self-loops, duplicates or endpoints >= n.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(Vertex u, Vertex v) const;

  static Graph complete(std::size_t n);
  static Graph edgeless(std::size_t n);

  bool operator==(const Graph&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<bool>> adj_;
};

/// A set of vertices of some graph; members kept sorted.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::set<Vertex> members) : members_(std::move(members)) {}
  VertexSet(std::initializer_list<Vertex> members) : members_(members) {}

  /// Leftmost character is vertex 0, e.g. "011110" for {1,2,3,4}.
  static VertexSet from_bitstring(std::string_view bits);
  std::string to_bitstring(std::size_t n) const;

  const std::set<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const { return members_.count(v) != 0; }

  auto operator<=>(const VertexSet&) const = default;

 private:
  std::set<Vertex> members_;
};

/// Parses the DIMACS-like `p edge <n> <m>` / `e <u> <v>` format (1-indexed).
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
/// Inverse of parse_graph; emits edges in sorted order.
std::string format_graph(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);
std::size_t induced_edge_count(const Graph& g, const VertexSet& s);

/// All k-subsets forming a clique, in lexicographic order of sorted members.
std::vector<VertexSet> enumerate_k_cliques(const Graph& g, std::size_t k);

/// A maximum clique; ties broken towards the lexicographically smallest set.
VertexSet max_clique_bruteforce(const Graph& g);

/// Binomial coefficient C(n, k); 0 when k > n.
std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace cliqueq
