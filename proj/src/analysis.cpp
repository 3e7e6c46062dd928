// analysis.cpp

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

#include "gfrf/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "gfrf/errors.hpp"
#include "gfrf/rng.hpp"
#include "gfrf/transforms.hpp"
#include "gfrf/windows.hpp"

namespace gfrf {

Spectrogram spectrogram(const Eigen::MatrixXcd& coefficients) {
  Spectrogram spec;
  spec.values = coefficients.cwiseAbs2();
  return spec;
}

NoiseKind noise_kind_from_string(const std::string& name) {
  if (name == "gaussian") return NoiseKind::gaussian;
  if (name == "poisson") return NoiseKind::poisson;
  if (name == "exponential") return NoiseKind::exponential;
  throw ValidationError("unsupported noise model: " + name);
}

std::string to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::gaussian: return "gaussian";
    case NoiseKind::poisson: return "poisson";
    case NoiseKind::exponential: return "exponential";
  }
  return "unknown";
}

Signal add_noise(const Signal& f, const NoiseModel& model, std::uint64_t seed) {
  if (!(model.parameter >= 0.0)) throw ValidationError("add_noise: parameter must be >= 0");
  Rng rng(seed);
  Signal out = f;
  for (int v = 0; v < out.values.size(); ++v) {
    double draw = 0.0;
    switch (model.kind) {
      case NoiseKind::gaussian:
        draw = model.parameter * rng.normal();
        break;
      case NoiseKind::poisson:
        draw = model.parameter == 0.0 ? 0.0 : static_cast<double>(rng.poisson(model.parameter));
        break;
      case NoiseKind::exponential:
        draw = model.parameter == 0.0 ? 0.0 : rng.exponential(model.parameter);
        break;
    }
    out.values(v) += draw;
  }
  return out;
}

double nmse(const Eigen::MatrixXcd& reference, const Eigen::MatrixXcd& contaminated) {
  if (reference.rows() != contaminated.rows() || reference.cols() != contaminated.cols())
    throw ValidationError("nmse: shape mismatch");
  const double ref_energy = reference.squaredNorm();
  if (ref_energy <= 0.0) throw ValidationError("nmse: reference has zero norm");
  const double n = static_cast<double>(reference.rows());
  const double mse = (reference - contaminated).squaredNorm() / (n * n);
  return mse / ref_energy;
}

std::vector<int> detect_anomalies(const Spectrogram& spec) {
  if (spec.values.size() == 0) throw ValidationError("detect_anomalies: empty spectrogram");
  const double delta = 0.5 * spec.values.maxCoeff();
  std::vector<int> flagged;
  for (int i = 0; i < spec.values.rows(); ++i) {
    if (spec.values.row(i).maxCoeff() > delta) flagged.push_back(i);
  }
  return flagged;
}

double fit_loglog_slope(const std::vector<int>& sizes, const std::vector<double>& times) {
  if (sizes.size() != times.size() || sizes.size() < 2)
    throw ValidationError("fit_loglog_slope: need at least two (size, time) pairs");
  const std::size_t m = sizes.size();
  const std::size_t use = std::max<std::size_t>(2, (m + 1) / 2);  // largest half
  const std::size_t begin = m - use;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t idx = begin; idx < m; ++idx) {
    if (!(times[idx] > 0.0)) throw NumericError("fit_loglog_slope: nonpositive time");
    const double x = std::log(static_cast<double>(sizes[idx]));
    const double y = std::log(times[idx]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double count = static_cast<double>(use);
  const double denom = count * sxx - sx * sx;
  if (use < 2 || denom == 0.0) {
    // Two equal sizes cannot happen with ascending input; guard anyway.
    throw NumericError("fit_loglog_slope: degenerate size grid");
  }
  return (count * sxy - sx * sy) / denom;
}

BenchmarkRecord benchmark(const BenchmarkConfig& config) {
  if (config.sizes.size() < 2) throw ValidationError("benchmark: need at least two sizes");
  if (!std::is_sorted(config.sizes.begin(), config.sizes.end()))
    throw ValidationError("benchmark: sizes must be ascending");
  if (config.reps < 3) throw ValidationError("benchmark: need reps >= 3");

  const bool run_naive = config.algo != BenchAlgo::fast;
  const bool run_fast = config.algo != BenchAlgo::naive;

  BenchmarkRecord record;
  record.sizes = config.sizes;

  for (int n : config.sizes) {
    GraphParams params;
    params.n = n;
    const Graph graph = generate_graph(config.family, params, config.seed);
    const FractionalBasis basis = build_basis(graph, config.alpha, false);
    const WindowSet windows =
        translated_family(basis, gaussian_window(basis, 0.5), config.window_count);

    Eigen::VectorXcd f(n);
    Rng rng(config.seed + static_cast<std::uint64_t>(n));
    for (int v = 0; v < n; ++v) f(v) = {rng.normal(), rng.normal()};
    f /= f.norm();

    auto median_seconds = [&](auto&& run) {
      std::vector<double> laps(config.reps);
      for (int rep = 0; rep < config.reps; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        run();
        const auto stop = std::chrono::steady_clock::now();
        laps[rep] = std::chrono::duration<double>(stop - start).count();
      }
      std::sort(laps.begin(), laps.end());
      return laps[laps.size() / 2];
    };

    if (run_naive) {
      record.times_naive.push_back(median_seconds([&] {
        volatile double sink = mwgfrft(f, windows, basis, /*threads=*/1).aggregated(0, 0).real();
        (void)sink;
      }));
    }
    if (run_fast) {
      record.times_fast.push_back(median_seconds([&] {
        volatile double sink = fmwgfrft(f, windows, basis)(0, 0).real();
        (void)sink;
      }));
    }
  }

  if (run_naive) record.slope_naive = fit_loglog_slope(record.sizes, record.times_naive);
  if (run_fast) record.slope_fast = fit_loglog_slope(record.sizes, record.times_fast);
  return record;
}

}  // namespace gfrf
