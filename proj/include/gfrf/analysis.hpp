// gfrf/analysis.hpp

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

#include <cstdint>
#include <string>
#include <vector>

#include "gfrf/graph.hpp"

namespace gfrf {

struct Spectrogram {
  Eigen::MatrixXd values;  // |coefficient|^2, rows = vertex, cols = frequency
  std::string transform;
  double alpha = 1.0;
  std::string window_label;
};

Spectrogram spectrogram(const Eigen::MatrixXcd& coefficients);

enum class NoiseKind { gaussian, poisson, exponential };

struct NoiseModel {
  NoiseKind kind = NoiseKind::gaussian;
  // Standard deviation for gaussian noise; mean for poisson and exponential
  // (a larger parameter always means more noise).
  double parameter = 0.0;
};

NoiseKind noise_kind_from_string(const std::string& name);
std::string to_string(NoiseKind kind);

// Adds an independent draw to every vertex value; reproducible per seed.
Signal add_noise(const Signal& f, const NoiseModel& model, std::uint64_t seed);

// MSE = (1/N^2) sum |ref - contaminated|^2, NMSE = MSE / ||ref||_F^2.
double nmse(const Eigen::MatrixXcd& reference, const Eigen::MatrixXcd& contaminated);

// Row maxima against the global threshold delta = max(S) / 2; a vertex is
// flagged when its row maximum strictly exceeds delta. Returns 0-based
// vertex indices in ascending order.
std::vector<int> detect_anomalies(const Spectrogram& spec);

struct BenchmarkRecord {
  std::vector<int> sizes;
  std::vector<double> times_naive;  // median seconds per size; empty when not run
  std::vector<double> times_fast;
  double slope_naive = 0.0;  // log-log fit over the largest half of sizes
  double slope_fast = 0.0;
};

enum class BenchAlgo { naive, fast, both };

struct BenchmarkConfig {
  GraphKind family = GraphKind::random_ring;
  std::vector<int> sizes;
  int window_count = 10;
  double alpha = 0.8;
  int reps = 5;
  BenchAlgo algo = BenchAlgo::both;
  std::uint64_t seed = 1;
};

// Times the direct and fast multi-window transforms, single-threaded, on
// translated gaussian window families. Basis and window construction are
// excluded from the timed region.
BenchmarkRecord benchmark(const BenchmarkConfig& config);

// Least-squares slope of log(time) against log(size) over the largest
// ceil(m/2) sizes.
double fit_loglog_slope(const std::vector<int>& sizes, const std::vector<double>& times);

}  // namespace gfrf
