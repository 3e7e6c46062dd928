// gfrf/graph.hpp

// Copyright 2026 GFRF Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gfrf {

struct Edge {
  int i = 0;  // endpoints, 0-based, stored with i < j
  int j = 0;
  double weight = 1.0;
};

// Undirected weighted graph with dense symmetric adjacency, immutable after
// construction. `hash` is a content hash over (n, sorted edge list) used to
// tie signals, bases and window sets to the graph they were built on.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;
  Eigen::MatrixXd adjacency;  // n x n, symmetric, zero diagonal
  std::uint64_t hash = 0;
};

enum class GraphKind { path, ring, random_ring, sphere, community, swiss_roll };

struct GraphParams {
  int n = 0;
  int knn = 6;              // sphere / swiss_roll neighbourhood size
  int clusters = 3;         // community cluster count
  double intra_prob = 0.7;  // community edge probability within a cluster
  double inter_prob = 0.05;
  int chords = 0;  // random_ring extra edges; 0 picks max(1, n / 8)
};

// Validates endpoints and weights, sorts and deduplicates-checks edges,
// builds the adjacency matrix and the content hash.
Graph make_graph(int n, std::vector<Edge> edges);

// Deterministic synthetic graph families. Randomized kinds are pure
// functions of (kind, params, seed) and always return a connected graph
// (disconnected draws are repaired by a deterministic chain of extra edges).
Graph generate_graph(GraphKind kind, const GraphParams& params, std::uint64_t seed = 0);

GraphKind graph_kind_from_string(const std::string& name);
std::string to_string(GraphKind kind);

// L = D - W, or D^{-1/2} (D - W) D^{-1/2} when normalized. The normalized
// variant requires every vertex degree to be positive.
Eigen::MatrixXd build_laplacian(const Graph& graph, bool normalized);

struct Signal {
  Eigen::VectorXcd values;
  std::uint64_t graph_hash = 0;  // 0 when not tied to a generated graph
};

enum class SignalKind { f7_sine, f8_piecewise, f9_chirp };

// Closed-form test signals, evaluated with 1-based vertex index n:
//   f7(n) = sin(110 pi n / N)
//   f8(n) = sin(160 pi n / N), sin(70 pi n / N), sin(200 pi n / N) on three
//           bands whose breakpoints scale as 90/300 and 170/300 of N
//   f9(n) = sin((30 n + n^2 / 5) pi / N)
Signal generate_signal(SignalKind kind, const Graph& graph);

// FNV-1a, used for content hashes of graphs and derived artifacts.
std::uint64_t fnv1a64(const void* data, std::size_t size,
                      std::uint64_t seed = 14695981039346656037ull);

}  // namespace gfrf
