// Copyright 2026 The pathip Authors
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

#ifndef PATHIP_GRAPH_HPP_
#define PATHIP_GRAPH_HPP_

#include <span>
#include <utility>
#include <vector>

namespace pathip {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

// A vertex sequence p^0 ... p^T. Consecutive entries are equal (wait) or
// adjacent (move).
using Path = std::vector<Vertex>;

inline constexpr int kUnreachable = -1;

// Undirected simple graph. Immutable after construction.
//
// Construction rejects self loops, duplicate edges (in either orientation)
// and out-of-range endpoints. Connectivity is not required here; instance
// loading enforces it via `is_connected()`.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Sorted neighbor list N(v).
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_[v].data(), adjacency_[v].size()};
  }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  // Index of {u, v} in edges(), or -1.
  int edge_index(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < vertex_count_; }

  bool is_connected() const;

  // Hop distances from a set of sources; kUnreachable where no path exists.
  // `allowed`, when non-empty, masks out vertices that may not be entered.
  std::vector<int> bfs_distances(std::span<const Vertex> sources,
                                 std::span<const char> allowed = {}) const;
  std::vector<int> bfs_distances(Vertex source) const {
    return bfs_distances(std::span<const Vertex>(&source, 1));
  }

  // Shortest path from `from` to `to` through allowed vertices; ties are
  // broken towards the lowest-id predecessor. Empty if unreachable.
  Path shortest_path(Vertex from, Vertex to,
                     std::span<const char> allowed = {}) const;

  // Largest eccentricity; the graph must be connected.
  int diameter() const;

  // A path of the same or consecutive-adjacent vertices.
  bool is_walk(std::span<const Vertex> path) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Result of replacing a vertex x by two copies that share N(x). A path
// out -> ... -> in in the split graph is a cycle through x in the original.
struct SplitGraph {
  Graph graph;
  Vertex original = 0;
  Vertex out = 0;  // keeps the id of `original`
  Vertex in = 0;   // appended as the last vertex
};

SplitGraph split_start_goal(const Graph& graph, Vertex x);

// Maps an out -> in path of a split graph back to a closed walk through the
// original vertex. Throws if the path does not leave `out` or end at `in`.
Path merge_split_path(const SplitGraph& split, std::span<const Vertex> path);

// 4-connected rows x cols grid, vertex id = r * cols + c.
Graph make_grid(int rows, int cols);

}  // namespace pathip

#endif  // PATHIP_GRAPH_HPP_
