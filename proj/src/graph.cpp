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

#include "pathip/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "pathip/error.hpp"

namespace pathip {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), adjacency_(std::max(vertex_count, 0)) {
  if (vertex_count < 0) throw InvariantError("negative vertex count");
  for (auto& [u, v] : edges) {
    if (!contains(u) || !contains(v)) {
      throw InvariantError("edge (" + std::to_string(u) + ", " +
                           std::to_string(v) + ") has an endpoint out of range");
    }
    if (u == v) {
      throw InvariantError("self-loop edge at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw InvariantError("duplicate edge (" + std::to_string(dup->first) + ", " +
                         std::to_string(dup->second) + ")");
  }
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v) || u == v) return -1;
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool Graph::is_connected() const {
  if (vertex_count_ <= 1) return true;
  auto dist = bfs_distances(0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d == kUnreachable; });
}

std::vector<int> Graph::bfs_distances(std::span<const Vertex> sources,
                                      std::span<const char> allowed) const {
  std::vector<int> dist(vertex_count_, kUnreachable);
  std::deque<Vertex> queue;
  auto ok = [&](Vertex v) { return allowed.empty() || allowed[v]; };
  for (Vertex s : sources) {
    if (contains(s) && ok(s) && dist[s] == kUnreachable) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adjacency_[v]) {
      if (dist[w] == kUnreachable && ok(w)) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Path Graph::shortest_path(Vertex from, Vertex to,
                          std::span<const char> allowed) const {
  if (!contains(from) || !contains(to)) return {};
  // Distances from the target let us walk forward picking the lowest-id
  // neighbor that is one step closer.
  auto dist = bfs_distances(std::span<const Vertex>(&to, 1), allowed);
  if (dist[from] == kUnreachable) return {};
  Path path{from};
  Vertex cur = from;
  while (cur != to) {
    for (Vertex w : adjacency_[cur]) {
      if (dist[w] == dist[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

int Graph::diameter() const {
  int best = 0;
  for (Vertex v = 0; v < vertex_count_; ++v) {
    auto dist = bfs_distances(v);
    for (int d : dist) best = std::max(best, d);
  }
  return best;
}

bool Graph::is_walk(std::span<const Vertex> path) const {
  for (size_t i = 0; i < path.size(); ++i) {
    if (!contains(path[i])) return false;
    if (i > 0 && path[i] != path[i - 1] && !has_edge(path[i - 1], path[i])) {
      return false;
    }
  }
  return true;
}

SplitGraph split_start_goal(const Graph& graph, Vertex x) {
  if (!graph.contains(x)) {
    throw InvariantError("cannot split vertex " + std::to_string(x) +
                         ": not in graph");
  }
  std::vector<Edge> edges = graph.edges();
  const Vertex in = graph.vertex_count();
  for (Vertex w : graph.neighbors(x)) edges.emplace_back(in, w);
  return SplitGraph{Graph(graph.vertex_count() + 1, std::move(edges)), x, x, in};
}

Path merge_split_path(const SplitGraph& split, std::span<const Vertex> path) {
  if (path.size() < 3 || path.front() != split.out || path.back() != split.in) {
    throw InvariantError("split path must leave v_out, visit at least one "
                         "interior vertex and end at v_in");
  }
  Path cycle(path.begin(), path.end());
  cycle.back() = split.original;
  return cycle;
}

Graph make_grid(int rows, int cols) {
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return Graph(rows * cols, std::move(edges));
}

}  // namespace pathip
