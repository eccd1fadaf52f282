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

// Path encodings: one binary per directed edge of G (base graph), or one
// binary per edge between consecutive time layers plus feedback edges from
// end copies back to start copies (time expanded).

#ifndef PATHIP_ENCODING_HPP_
#define PATHIP_ENCODING_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathip/graph.hpp"
#include "pathip/ip_model.hpp"

namespace pathip {

// ---- base graph ----

struct BaseVars {
  std::string label;  // robot prefix in names, empty for a single robot
  Vertex start = 0;
  Vertex goal = 0;
  std::map<std::pair<Vertex, Vertex>, VarId> edges;  // both directions
  std::map<Vertex, VarId> order;                     // u_i, when subtours are cut
};

// Adds the start/goal rows, degree rows for every other vertex and, when
// `subtour_elimination` is set and |V| > 3, order variables u_i in [3, |V|]
// with u_i - u_j + 1 <= (|V| - 2)(1 - x_ij) for every ordered pair of
// non-terminals. Throws Error when start == goal.
BaseVars add_base_encoding(IpModel& model, const Graph& graph, Vertex start, Vertex goal,
                           bool subtour_elimination, const std::string& label = {});

struct BaseEncoding {
  IpModel model;
  BaseVars vars;
};

BaseEncoding encode_base(const Graph& graph, Vertex start, Vertex goal, bool subtour_elimination);

// Follows positive edge variables from the start to the goal. Throws
// InvariantError on branching, dead ends or revisits.
Path extract_base_path(const BaseVars& vars, const Graph& graph, std::span<const double> x);

// Writes the edge (and order) values of a non-cyclic start-goal path into x,
// which must already have one entry per model variable. Other edge
// variables of this robot are zeroed. Throws InvariantError on revisits.
void encode_base_path(const BaseVars& vars, const Graph& graph, const Path& path,
                      std::span<double> x);

// ---- time expanded ----

enum class Reachability {
  kNone,     // every copy inside the mask
  kForward,  // copies reachable from a start copy at layer 0
  kFull,     // forward and able to reach an end copy at layer T
};

using LayerMask = std::vector<std::vector<char>>;  // [t][v], t = 0..T

// Copies kept by layered propagation inside `mask` (empty mask: all).
LayerMask reachable_copies(const Graph& graph, std::span<const Vertex> starts,
                           std::span<const Vertex> ends, int horizon, Reachability reachability,
                           const LayerMask& mask = {});

struct Arc {
  Vertex other = 0;
  VarId var = 0;
};

struct FeedbackArc {
  Vertex end = 0;
  Vertex start = 0;
  VarId var = 0;
};

// One flow of `multiplicity` units: a robot, or an interchangeable group.
struct CommoditySpec {
  std::string label;
  std::vector<Vertex> starts;  // distinct
  std::vector<Vertex> ends;    // candidate end vertices
  int multiplicity = 1;
  LayerMask mask;              // optional restriction applied before reachability
};

struct CommodityVars {
  std::string label;
  int multiplicity = 1;
  std::vector<Vertex> starts, ends;
  LayerMask kept;
  // move_out[t][v]: x^t_{v,w} for edges (t-1, v) -> (t, w), t = 1..T.
  std::vector<std::vector<std::vector<Arc>>> move_out;
  // move_in[t][w]: the same variables grouped by head.
  std::vector<std::vector<std::vector<Arc>>> move_in;
  std::vector<FeedbackArc> feedback;
  std::optional<int> empty_layer;  // first layer without kept copies
  int variable_count = 0;

  std::optional<VarId> move_var(int t, Vertex from, Vertex to) const;
  std::optional<VarId> feedback_var(Vertex end, Vertex start) const;
};

// Adds variables x[label][t][vi][vj] (t >= 1) and feedback variables
// x[label][0][g][s], the rows
//   sum of feedback = m,
//   sum of movement into end copies at layer T = m   (T > 0),
//   outflow = inflow at every kept copy of layers 0..T,
// and nothing else. When some layer is empty no variables are added and
// empty_layer is set.
CommodityVars add_commodity(IpModel& model, const Graph& graph, int horizon,
                            Reachability reachability, const CommoditySpec& spec);

struct TimeExpandedEncoding {
  IpModel model;
  int horizon = 0;
  std::vector<CommodityVars> commodities;

  std::optional<int> empty_layer() const;
};

// Single robot with start and goal candidate sets.
TimeExpandedEncoding encode_time_expanded(const Graph& graph, std::span<const Vertex> starts,
                                          std::span<const Vertex> goals, int horizon,
                                          Reachability reachability = Reachability::kFull);

// Decomposes the (integral) flow of one commodity into `multiplicity`
// paths of length T + 1, ordered by start vertex. Throws InvariantError if
// flow conservation fails.
std::vector<Path> extract_paths(const CommodityVars& vars, std::span<const double> x);
Path extract_path(const CommodityVars& vars, std::span<const double> x);

// Sets the variables used by `paths` (one per unit of flow, each of length
// T + 1) and zeroes the rest of the commodity. Throws InvariantError when a
// path needs a copy or edge that was not kept.
void encode_paths(const CommodityVars& vars, std::span<const Path> paths, std::span<double> x);

}  // namespace pathip

#endif  // PATHIP_ENCODING_HPP_
