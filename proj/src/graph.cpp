// graph.cpp

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

#include "gfrf/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>
#include <queue>
#include <set>
#include <utility>

#include "gfrf/errors.hpp"
#include "gfrf/rng.hpp"

namespace gfrf {

std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t seed) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t idx = 0; idx < size; ++idx) {
    h ^= bytes[idx];
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::uint64_t hash_u64(std::uint64_t h, std::uint64_t v) {
  return fnv1a64(&v, sizeof(v), h);
}

std::uint64_t hash_double(std::uint64_t h, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof(bits));
  return hash_u64(h, bits);
}

std::uint64_t graph_content_hash(int n, const std::vector<Edge>& edges) {
  std::uint64_t h = fnv1a64("gfrf-graph", 10);
  h = hash_u64(h, static_cast<std::uint64_t>(n));
  h = hash_u64(h, edges.size());
  for (const Edge& e : edges) {
    h = hash_u64(h, static_cast<std::uint64_t>(e.i));
    h = hash_u64(h, static_cast<std::uint64_t>(e.j));
    h = hash_double(h, e.weight);
  }
  return h;
}

std::vector<std::vector<int>> connected_components(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (comp[v] < 0) {
          comp[v] = ncomp;
          q.push(v);
        }
      }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> groups(ncomp);
  for (int v = 0; v < n; ++v) groups[comp[v]].push_back(v);
  return groups;  // ordered by smallest contained vertex
}

// Chains consecutive components together with one edge each; the endpoint
// pair is chosen by `pick`, which must be deterministic.
template <typename PickPair>
void connect_components(int n, std::vector<Edge>& edges, PickPair pick) {
  auto groups = connected_components(n, edges);
  for (std::size_t g = 1; g < groups.size(); ++g) {
    edges.push_back(pick(groups[g - 1], groups[g]));
  }
}

struct PointCloud {
  std::vector<Eigen::Vector3d> points;

  double sqdist(int a, int b) const { return (points[a] - points[b]).squaredNorm(); }
};

// Symmetrized k-nearest-neighbour edges with Gaussian kernel weights,
// sigma^2 set to the mean squared neighbour distance.
std::vector<Edge> knn_edges(const PointCloud& cloud, int knn) {
  const int n = static_cast<int>(cloud.points.size());
  std::set<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    std::vector<std::pair<double, int>> order;
    order.reserve(n - 1);
    for (int v = 0; v < n; ++v) {
      if (v != u) order.emplace_back(cloud.sqdist(u, v), v);
    }
    std::sort(order.begin(), order.end());
    for (int t = 0; t < knn && t < static_cast<int>(order.size()); ++t) {
      int v = order[t].second;
      pairs.emplace(std::min(u, v), std::max(u, v));
    }
  }
  double mean_sq = 0.0;
  for (const auto& p : pairs) mean_sq += cloud.sqdist(p.first, p.second);
  mean_sq /= static_cast<double>(pairs.size());
  if (mean_sq <= 0.0) throw NumericError("knn graph: coincident points");

  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& p : pairs) {
    double w = std::exp(-cloud.sqdist(p.first, p.second) / (2.0 * mean_sq));
    edges.push_back({p.first, p.second, w});
  }
  return edges;
}

Edge closest_pair_edge(const PointCloud& cloud, const std::vector<int>& a,
                       const std::vector<int>& b, double sigma_sq) {
  double best = std::numeric_limits<double>::infinity();
  int bu = a.front(), bv = b.front();
  for (int u : a) {
    for (int v : b) {
      double d = cloud.sqdist(u, v);
      if (d < best) {
        best = d;
        bu = u;
        bv = v;
      }
    }
  }
  double w = std::exp(-best / (2.0 * sigma_sq));
  return {std::min(bu, bv), std::max(bu, bv), w};
}

std::vector<Edge> path_edges(int n) {
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1.0});
  return edges;
}

Graph generate_path(int n) {
  if (n < 2) throw ValidationError("path graph requires n >= 2");
  return make_graph(n, path_edges(n));
}

Graph generate_ring(int n) {
  if (n < 3) throw ValidationError("ring graph requires n >= 3");
  auto edges = path_edges(n);
  edges.push_back({0, n - 1, 1.0});
  return make_graph(n, edges);
}

Graph generate_random_ring(const GraphParams& p, std::uint64_t seed) {
  if (p.n < 4) throw ValidationError("random ring graph requires n >= 4");
  auto edges = path_edges(p.n);
  edges.push_back({0, p.n - 1, 1.0});
  std::set<std::pair<int, int>> used;
  for (const Edge& e : edges) used.emplace(e.i, e.j);

  Rng rng(seed);
  const int target = p.chords > 0 ? p.chords : std::max(1, p.n / 8);
  int added = 0;
  std::uint64_t attempts = 0;
  const std::uint64_t max_attempts = 1000ull * static_cast<std::uint64_t>(target);
  while (added < target && attempts < max_attempts) {
    ++attempts;
    int u = static_cast<int>(rng.below(p.n));
    int v = static_cast<int>(rng.below(p.n));
    if (u == v) continue;
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    if (used.count(key)) continue;
    used.insert(key);
    edges.push_back({key.first, key.second, rng.uniform_pos()});
    ++added;
  }
  return make_graph(p.n, edges);
}

Graph generate_sphere(const GraphParams& p, std::uint64_t seed) {
  if (p.knn < 1) throw ValidationError("sphere graph requires knn >= 1");
  if (p.n <= p.knn) throw ValidationError("sphere graph requires n > knn");
  Rng rng(seed);
  PointCloud cloud;
  cloud.points.reserve(p.n);
  for (int v = 0; v < p.n; ++v) {
    Eigen::Vector3d x(rng.normal(), rng.normal(), rng.normal());
    while (x.norm() < 1e-12) x = Eigen::Vector3d(rng.normal(), rng.normal(), rng.normal());
    cloud.points.push_back(x.normalized());
  }
  auto edges = knn_edges(cloud, p.knn);
  double mean_sq = 0.0;
  for (const Edge& e : edges) mean_sq += cloud.sqdist(e.i, e.j);
  mean_sq /= static_cast<double>(edges.size());
  connect_components(p.n, edges, [&](const auto& a, const auto& b) {
    return closest_pair_edge(cloud, a, b, mean_sq);
  });
  return make_graph(p.n, edges);
}

Graph generate_swiss_roll(const GraphParams& p, std::uint64_t seed) {
  if (p.knn < 1) throw ValidationError("swiss roll graph requires knn >= 1");
  if (p.n <= p.knn) throw ValidationError("swiss roll graph requires n > knn");
  Rng rng(seed);
  PointCloud cloud;
  cloud.points.reserve(p.n);
  for (int v = 0; v < p.n; ++v) {
    const double t = 1.5 * std::numbers::pi * (1.0 + 2.0 * rng.uniform());
    const double height = 21.0 * rng.uniform();
    cloud.points.emplace_back(t * std::cos(t), height, t * std::sin(t));
  }
  auto edges = knn_edges(cloud, p.knn);
  double mean_sq = 0.0;
  for (const Edge& e : edges) mean_sq += cloud.sqdist(e.i, e.j);
  mean_sq /= static_cast<double>(edges.size());
  connect_components(p.n, edges, [&](const auto& a, const auto& b) {
    return closest_pair_edge(cloud, a, b, mean_sq);
  });
  return make_graph(p.n, edges);
}

Graph generate_community(const GraphParams& p, std::uint64_t seed) {
  if (p.clusters < 1) throw ValidationError("community graph requires clusters >= 1");
  if (p.n < 2 * p.clusters) throw ValidationError("community graph requires n >= 2 * clusters");
  if (p.intra_prob <= 0.0 || p.intra_prob > 1.0 || p.inter_prob < 0.0 || p.inter_prob > 1.0)
    throw ValidationError("community graph probabilities out of range");

  std::vector<int> cluster_of(p.n);
  for (int v = 0; v < p.n; ++v)
    cluster_of[v] = static_cast<int>((static_cast<long long>(v) * p.clusters) / p.n);

  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < p.n; ++u) {
    for (int v = u + 1; v < p.n; ++v) {
      const double prob = cluster_of[u] == cluster_of[v] ? p.intra_prob : p.inter_prob;
      if (rng.uniform() < prob) edges.push_back({u, v, 1.0});
    }
  }
  connect_components(p.n, edges, [](const auto& a, const auto& b) {
    return Edge{std::min(a.front(), b.front()), std::max(a.front(), b.front()), 1.0};
  });
  return make_graph(p.n, edges);
}

}  // namespace

Graph make_graph(int n, std::vector<Edge> edges) {
  if (n < 2) throw ValidationError("graph requires n >= 2");
  for (Edge& e : edges) {
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.i < 0 || e.j >= n) throw ValidationError("edge endpoint out of range");
    if (e.i == e.j) throw ValidationError("self-loops are not allowed");
    if (!(e.weight > 0.0)) throw ValidationError("edge weights must be strictly positive");
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  });
  for (std::size_t t = 1; t < edges.size(); ++t) {
    if (edges[t].i == edges[t - 1].i && edges[t].j == edges[t - 1].j)
      throw ValidationError("duplicate edge");
  }

  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.adjacency = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges) {
    g.adjacency(e.i, e.j) = e.weight;
    g.adjacency(e.j, e.i) = e.weight;
  }
  g.hash = graph_content_hash(n, g.edges);
  return g;
}

Graph generate_graph(GraphKind kind, const GraphParams& params, std::uint64_t seed) {
  switch (kind) {
    case GraphKind::path:
      return generate_path(params.n);
    case GraphKind::ring:
      return generate_ring(params.n);
    case GraphKind::random_ring:
      return generate_random_ring(params, seed);
    case GraphKind::sphere:
      return generate_sphere(params, seed);
    case GraphKind::community:
      return generate_community(params, seed);
    case GraphKind::swiss_roll:
      return generate_swiss_roll(params, seed);
  }
  throw ValidationError("unsupported graph kind");
}

GraphKind graph_kind_from_string(const std::string& name) {
  if (name == "path") return GraphKind::path;
  if (name == "ring") return GraphKind::ring;
  if (name == "random_ring") return GraphKind::random_ring;
  if (name == "sphere") return GraphKind::sphere;
  if (name == "community") return GraphKind::community;
  if (name == "swiss_roll") return GraphKind::swiss_roll;
  throw ValidationError("unsupported graph kind: " + name);
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::path: return "path";
    case GraphKind::ring: return "ring";
    case GraphKind::random_ring: return "random_ring";
    case GraphKind::sphere: return "sphere";
    case GraphKind::community: return "community";
    case GraphKind::swiss_roll: return "swiss_roll";
  }
  return "unknown";
}

Eigen::MatrixXd build_laplacian(const Graph& graph, bool normalized) {
  const int n = graph.n;
  Eigen::VectorXd degree = graph.adjacency.rowwise().sum();
  Eigen::MatrixXd lap = -graph.adjacency;
  lap.diagonal() = degree;
  if (!normalized) return lap;

  for (int v = 0; v < n; ++v) {
    if (degree(v) <= 0.0)
      throw ValidationError("normalized Laplacian: vertex with degenerate degree");
  }
  Eigen::VectorXd scale = degree.cwiseSqrt().cwiseInverse();
  // Fill the upper triangle and mirror so the result is exactly symmetric.
  Eigen::MatrixXd norm(n, n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r <= c; ++r) {
      const double v = lap(r, c) * scale(r) * scale(c);
      norm(r, c) = v;
      norm(c, r) = v;
    }
  }
  return norm;
}

Signal generate_signal(SignalKind kind, const Graph& graph) {
  const int n = graph.n;
  Signal s;
  s.graph_hash = graph.hash;
  s.values = Eigen::VectorXcd::Zero(n);
  const double pi = std::numbers::pi;
  switch (kind) {
    case SignalKind::f7_sine:
      for (int v = 1; v <= n; ++v)
        s.values(v - 1) = std::sin(110.0 * pi * v / n);
      break;
    case SignalKind::f8_piecewise: {
      // Band breakpoints are 90 and 170 at n = 300 and scale with n.
      const int b1 = static_cast<int>(std::llround(90.0 * n / 300.0));
      const int b2 = static_cast<int>(std::llround(170.0 * n / 300.0));
      for (int v = 1; v <= n; ++v) {
        double freq = v <= b1 ? 160.0 : (v <= b2 ? 70.0 : 200.0);
        s.values(v - 1) = std::sin(freq * pi * v / n);
      }
      break;
    }
    case SignalKind::f9_chirp:
      for (int v = 1; v <= n; ++v)
        s.values(v - 1) = std::sin((30.0 * v + v * static_cast<double>(v) / 5.0) * pi / n);
      break;
  }
  return s;
}

}  // namespace gfrf
