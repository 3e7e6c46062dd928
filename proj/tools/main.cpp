// main.cpp

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

// Command-line front end: graph, signal, windows, transform, frame, bench,
// detect and nmse subcommands over JSON/CSV/PGM files. Every command is a
// pure function of its inputs, flags and seed, so re-running reproduces the
// output files byte for byte (bench output contains wall-clock medians and
// is exempt).

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gfrf/analysis.hpp"
#include "gfrf/errors.hpp"
#include "gfrf/frames.hpp"
#include "gfrf/io.hpp"
#include "gfrf/rng.hpp"
#include "gfrf/transforms.hpp"
#include "gfrf/windows.hpp"

namespace {

using namespace gfrf;

constexpr int kExitOk = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitValidation = 2;

struct CommonOpts {
  std::string cache_dir;
  int threads = 0;
};

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      out.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw ValidationError("malformed numeric list entry: " + cell);
    }
  }
  if (out.empty()) throw ValidationError("empty numeric list");
  return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  for (double v : parse_double_list(csv)) {
    if (v != std::floor(v)) throw ValidationError("expected integer list");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

FractionalBasis basis_for(const Graph& graph, double alpha, bool normalized,
                          const CommonOpts& common) {
  return build_basis_cached(graph, alpha, normalized, common.cache_dir);
}

// ---- graph ----------------------------------------------------------------

struct GraphArgs {
  std::string kind = "ring";
  GraphParams params;
  std::uint64_t seed = 1;
  std::string out;
};

void run_graph(const GraphArgs& args) {
  const Graph g = generate_graph(graph_kind_from_string(args.kind), args.params, args.seed);
  save_graph_json(g, args.out);
}

// ---- signal ---------------------------------------------------------------

struct SignalArgs {
  std::string kind = "f7";
  std::string graph_path;
  std::string in;  // custom input CSV
  std::string indices = "";
  double alpha = 1.0;
  bool normalized = false;
  std::string out;
};

void run_signal(const SignalArgs& args, const CommonOpts& common) {
  const Graph g = load_graph_json(args.graph_path);
  Eigen::VectorXcd values;
  if (args.kind == "f7") {
    values = generate_signal(SignalKind::f7_sine, g).values;
  } else if (args.kind == "f8") {
    values = generate_signal(SignalKind::f8_piecewise, g).values;
  } else if (args.kind == "f9") {
    values = generate_signal(SignalKind::f9_chirp, g).values;
  } else if (args.kind == "eigvec") {
    if (args.indices.empty()) throw ValidationError("eigvec signal requires --indices");
    const FractionalBasis b = basis_for(g, args.alpha, args.normalized, common);
    values = eigenvector_combination(b, parse_int_list(args.indices)).values;
  } else if (args.kind == "custom") {
    if (args.in.empty()) throw ValidationError("custom signal requires --in");
    values = load_signal_csv(args.in);
    if (values.size() != g.n)
      throw ValidationError("custom signal length does not match the graph");
  } else {
    throw ValidationError("unsupported signal kind: " + args.kind);
  }
  save_signal_csv(values, args.out);
}

// ---- windows ---------------------------------------------------------------

struct WindowArgs {
  std::string kind = "heat";
  std::string graph_path;
  double alpha = 1.0;
  bool normalized = false;
  double tau = 1.0;
  double mu = 0.0;  // 0: pick by normalization
  int count = 1;
  std::string centers;
  std::string generator_csv;
  std::string out;
};

void run_windows(const WindowArgs& args, const CommonOpts& common) {
  const Graph g = load_graph_json(args.graph_path);
  const FractionalBasis b = basis_for(g, args.alpha, args.normalized, common);

  WindowSet ws;
  Json params = Json::object();
  if (args.kind == "heat" || args.kind == "gaussian" || args.kind == "dual_heat") {
    WindowSet mother;
    if (args.kind == "heat") {
      mother = heat_window(b, args.tau);
    } else if (args.kind == "gaussian") {
      mother = gaussian_window(b, args.tau);
    } else {
      const DualHeatWindow dual = dual_heat_window(
          b, args.tau, args.mu > 0.0 ? std::optional<double>(args.mu) : std::nullopt);
      mother = dual.window;
      params["mu"] = dual.mu;
    }
    params["tau"] = args.tau;
    if (args.count > 1 || !args.centers.empty()) {
      const std::vector<int> centers =
          args.centers.empty() ? std::vector<int>{} : parse_int_list(args.centers);
      ws = translated_family(b, mother, args.count, centers);
      params["L"] = args.count;
      if (!args.centers.empty()) params["centers"] = centers;
    } else {
      ws = mother;
    }
  } else if (args.kind == "bspline") {
    ws = bspline_tight_windows(b);
  } else if (args.kind == "householder") {
    Eigen::VectorXd gen;
    if (args.generator_csv.empty()) {
      gen = default_householder_generator(g.n);
    } else {
      const Eigen::VectorXcd raw = load_signal_csv(args.generator_csv);
      if (raw.size() != g.n) throw ValidationError("generator length does not match graph");
      gen = raw.real();
    }
    ws = householder_windows(b, gen);
  } else if (args.kind == "eigenvector") {
    ws = eigenvector_windows(b);
  } else {
    throw ValidationError("unsupported window kind: " + args.kind);
  }
  save_window_set(ws, args.kind, params, args.out);
}

// ---- transform ---------------------------------------------------------

struct TransformArgs {
  std::string graph_path;
  std::string signal_path;
  std::string windows_path;
  std::string algo = "fmwgfrft";
  double alpha = 1.0;
  bool normalized = false;
  bool tensor = false;
  std::string out;
};

void write_transform_outputs(const Eigen::MatrixXcd& aggregated, const std::string& prefix) {
  save_complex_matrix_csv(aggregated, prefix + "_coefficients.csv");
  const Spectrogram spec = spectrogram(aggregated);
  save_real_matrix_csv(spec.values, prefix + "_spectrogram.csv");
  save_pgm(spec.values, prefix + "_heatmap.pgm");
}

Eigen::MatrixXcd run_transform_algo(const std::string& algo, const Eigen::VectorXcd& f,
                                    const WindowSet& ws, const FractionalBasis& b,
                                    const Graph& g, int threads, bool tensor,
                                    const std::string& prefix) {
  const bool pins_alpha_one = algo == "wgft" || algo == "mwgft" || algo == "smwgft";
  if (pins_alpha_one && b.alpha != 1.0)
    throw ValidationError(algo + " requires --alpha 1 (degeneration by parameter pinning)");
  const bool single_window = algo == "wgft" || algo == "wgfrft";
  if (single_window && ws.count() != 1)
    throw ValidationError(algo + " requires a single-window set");

  auto dump_tensor = [&](const std::vector<Eigen::MatrixXcd>& per_window) {
    for (std::size_t l = 0; l < per_window.size(); ++l)
      save_complex_matrix_csv(per_window[l],
                              prefix + "_window" + std::to_string(l + 1) + ".csv");
  };

  if (algo == "smwgft" || algo == "smwgfrft") {
    const FractionalShift shift = fractional_shift(g, b.alpha);
    const CoefficientSet set = smwgfrft(f, ws, shift, b);
    if (tensor) dump_tensor(set.per_window);
    return set.aggregated;
  }
  if (algo == "fmwgfrft") {
    if (tensor) {
      const GAlphaDomain domain = g_alpha_domain(f, ws, b);
      std::vector<Eigen::MatrixXcd> per_window;
      per_window.reserve(domain.per_window.size());
      for (const auto& galpha : domain.per_window)
        per_window.emplace_back(b.gamma * galpha);
      dump_tensor(per_window);
    }
    return fmwgfrft(f, ws, b);
  }
  if (algo == "wgft" || algo == "wgfrft" || algo == "mwgft" || algo == "mwgfrft") {
    const CoefficientSet set = mwgfrft(f, ws, b, threads);
    if (tensor) dump_tensor(set.per_window);
    return set.aggregated;
  }
  throw ValidationError("unsupported transform algo: " + algo);
}

void run_transform(const TransformArgs& args, const CommonOpts& common) {
  const Graph g = load_graph_json(args.graph_path);
  const FractionalBasis b = basis_for(g, args.alpha, args.normalized, common);
  const WindowSet ws = load_window_set(args.windows_path, b);
  const Eigen::VectorXcd f = load_signal_csv(args.signal_path);
  if (f.size() != g.n) throw ValidationError("signal length does not match the graph");

  const Eigen::MatrixXcd aggregated =
      run_transform_algo(args.algo, f, ws, b, g, common.threads, args.tensor, args.out);
  write_transform_outputs(aggregated, args.out);
}

// ---- frame ---------------------------------------------------------------

struct FrameArgs {
  std::string graph_path;
  std::string windows_path;
  std::string dual_path;
  std::string family = "mw";
  double alpha = 1.0;
  bool normalized = false;
  double tol = kTightTolerance;
  std::uint64_t seed = 1;
  std::string out;
};

// Banks are materialized for the reconstruction report; past this size the
// residual is skipped and reported as null.
constexpr int kMaxBankSize = 128;

void run_frame(const FrameArgs& args, const CommonOpts& common) {
  const Graph g = load_graph_json(args.graph_path);
  const FractionalBasis b = basis_for(g, args.alpha, args.normalized, common);
  const WindowSet ws = load_window_set(args.windows_path, b);

  Rng rng(args.seed);
  Eigen::VectorXcd f(g.n);
  for (int v = 0; v < g.n; ++v) f(v) = {rng.normal(), rng.normal()};
  f /= f.norm();

  Json report;
  if (args.family == "shift") {
    const FractionalShift shift = fractional_shift(g, b.alpha);
    const FrameDiagnostics diag = frame_bounds_shift(ws, shift, args.tol);
    report = diagnostics_to_json(diag, b.alpha, ws.count());
    if (diag.is_frame && g.n <= kMaxBankSize) {
      const AtomBank bank = shift_atom_bank(b, shift, ws);
      const AtomBank dual = canonical_dual(bank, diag.c);
      std::vector<Eigen::MatrixXcd> coeffs;
      for (const auto& atoms : bank.per_window)
        coeffs.emplace_back(atoms.adjoint() * f);
      report["reconstruction_residual"] = (reconstruct(coeffs, dual, 1.0) - f).norm();
    } else {
      report["reconstruction_residual"] = nullptr;
    }
  } else if (args.family == "mw") {
    const FrameDiagnostics diag = frame_bounds_mw(ws, b, args.tol);
    report = diagnostics_to_json(diag, b.alpha, ws.count());
    double spectral_constant = 0.0;
    report["spectral_tight"] = tight_spectral_check(ws, 1e-9, &spectral_constant);
    report["spectral_constant"] = spectral_constant;

    if (!args.dual_path.empty()) {
      const WindowSet dual_ws = load_window_set(args.dual_path, b);
      const DualWindowCheck check = verify_dual_windows(ws, dual_ws, b, 1e-8);
      report["dual_verified"] = check.ok;
      report["mu"] = check.mu;
      report["dual_max_deviation"] = check.max_deviation;
      if (check.ok && g.n <= kMaxBankSize) {
        const AtomBank bank = mw_atom_bank(b, ws);
        const AtomBank dual_bank = mw_atom_bank(b, dual_ws);
        std::vector<Eigen::MatrixXcd> coeffs;
        for (const auto& atoms : dual_bank.per_window) {
          Eigen::MatrixXcd block(g.n, g.n);
          for (int i = 0; i < g.n; ++i)
            for (int k = 0; k < g.n; ++k) block(i, k) = atoms.col(i * g.n + k).dot(f);
          coeffs.push_back(std::move(block));
        }
        report["reconstruction_residual"] =
            (reconstruct(coeffs, bank, check.reconstruction_constant) - f).norm();
      } else {
        report["reconstruction_residual"] = nullptr;
      }
    } else if (diag.is_frame && g.n <= kMaxBankSize) {
      const AtomBank bank = mw_atom_bank(b, ws);
      const AtomBank dual = canonical_dual(bank, diag.c);
      std::vector<Eigen::MatrixXcd> coeffs;
      for (const auto& atoms : bank.per_window) {
        Eigen::MatrixXcd block(g.n, g.n);
        for (int i = 0; i < g.n; ++i)
          for (int k = 0; k < g.n; ++k) block(i, k) = atoms.col(i * g.n + k).dot(f);
        coeffs.push_back(std::move(block));
      }
      report["reconstruction_residual"] = (reconstruct(coeffs, dual, 1.0) - f).norm();
    } else {
      report["reconstruction_residual"] = nullptr;
    }
  } else {
    throw ValidationError("unsupported frame family: " + args.family);
  }
  save_json(report, args.out);
}

// ---- bench -----------------------------------------------------------------

struct BenchArgs {
  std::string family = "random_ring";
  std::string sizes = "64,128,256";
  int window_count = 10;
  double alpha = 0.8;
  int reps = 5;
  std::string algo = "both";
  std::uint64_t seed = 1;
  std::string out;
};

void run_bench(const BenchArgs& args) {
  BenchmarkConfig config;
  config.family = graph_kind_from_string(args.family);
  config.sizes = parse_int_list(args.sizes);
  config.window_count = args.window_count;
  config.alpha = args.alpha;
  config.reps = args.reps;
  config.seed = args.seed;
  if (args.algo == "naive") {
    config.algo = BenchAlgo::naive;
  } else if (args.algo == "fast") {
    config.algo = BenchAlgo::fast;
  } else if (args.algo == "both") {
    config.algo = BenchAlgo::both;
  } else {
    throw ValidationError("unsupported bench algo: " + args.algo);
  }

  const BenchmarkRecord record = benchmark(config);

  std::ofstream csv(args.out + ".csv");
  if (!csv) throw ValidationError("cannot open for writing: " + args.out + ".csv");
  csv << "N,algorithm,median_seconds\n";
  for (std::size_t idx = 0; idx < record.sizes.size(); ++idx) {
    if (!record.times_naive.empty()) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", record.times_naive[idx]);
      csv << record.sizes[idx] << ",naive," << buf << '\n';
    }
    if (!record.times_fast.empty()) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", record.times_fast[idx]);
      csv << record.sizes[idx] << ",fast," << buf << '\n';
    }
  }

  Json j;
  j["sizes"] = record.sizes;
  j["alpha"] = args.alpha;
  j["L"] = args.window_count;
  j["reps"] = args.reps;
  if (!record.times_naive.empty()) {
    j["times_naive"] = record.times_naive;
    j["slope_naive"] = record.slope_naive;
  }
  if (!record.times_fast.empty()) {
    j["times_fast"] = record.times_fast;
    j["slope_fast"] = record.slope_fast;
  }
  save_json(j, args.out + ".json");
}

// ---- detect ---------------------------------------------------------------

struct DetectArgs {
  std::string graph_path;
  std::string signal_path;
  std::string windows_path;
  std::string algo = "fmwgfrft";
  double alpha = 1.0;
  bool normalized = false;
  std::string out;
};

void run_detect(const DetectArgs& args, const CommonOpts& common) {
  const Graph g = load_graph_json(args.graph_path);
  const FractionalBasis b = basis_for(g, args.alpha, args.normalized, common);
  const WindowSet ws = load_window_set(args.windows_path, b);
  const Eigen::VectorXcd f = load_signal_csv(args.signal_path);
  if (f.size() != g.n) throw ValidationError("signal length does not match the graph");

  Eigen::MatrixXcd aggregated;
  if (args.algo == "fmwgfrft" || args.algo == "mwgfrft") {
    aggregated = fmwgfrft(f, ws, b);
  } else if (args.algo == "smwgfrft") {
    aggregated = smwgfrft(f, ws, fractional_shift(g, b.alpha), b).aggregated;
  } else {
    throw ValidationError("unsupported detect algo: " + args.algo);
  }

  const Spectrogram spec = spectrogram(aggregated);
  const std::vector<int> flagged = detect_anomalies(spec);
  Json j;
  j["algo"] = args.algo;
  j["alpha"] = b.alpha;
  j["threshold"] = 0.5 * spec.values.maxCoeff();
  Json verts = Json::array();
  for (int v : flagged) verts.push_back(v + 1);  // 1-based on disk
  j["flagged"] = verts;
  save_json(j, args.out);
}

// ---- nmse -------------------------------------------------------------------

struct NmseArgs {
  std::string graph_path;
  std::string signal_kind = "f7";
  std::string noise = "gaussian";
  std::string params = "0.2,0.3,0.5";
  std::string alphas = "0.6";
  std::string window_kind = "gaussian";
  double tau = 0.5;
  int window_count = 20;
  int seeds = 20;
  std::uint64_t seed = 1;
  std::string out;
};

void run_nmse(const NmseArgs& args, const CommonOpts& common) {
  const Graph g = load_graph_json(args.graph_path);
  SignalKind kind;
  if (args.signal_kind == "f7") {
    kind = SignalKind::f7_sine;
  } else if (args.signal_kind == "f8") {
    kind = SignalKind::f8_piecewise;
  } else if (args.signal_kind == "f9") {
    kind = SignalKind::f9_chirp;
  } else {
    throw ValidationError("unsupported signal kind: " + args.signal_kind);
  }
  const Signal clean = generate_signal(kind, g);
  const NoiseKind noise = noise_kind_from_string(args.noise);

  std::ofstream csv(args.out);
  if (!csv) throw ValidationError("cannot open for writing: " + args.out);
  csv << "alpha,noise_param,mean_nmse,std_nmse\n";

  for (double alpha : parse_double_list(args.alphas)) {
    const FractionalBasis b = basis_for(g, alpha, false, common);
    WindowSet mother = args.window_kind == "heat" ? heat_window(b, args.tau)
                                                  : gaussian_window(b, args.tau);
    const WindowSet ws = args.window_count > 1
                             ? translated_family(b, mother, args.window_count)
                             : mother;
    const Eigen::MatrixXcd reference = fmwgfrft(clean.values, ws, b);

    for (double param : parse_double_list(args.params)) {
      std::vector<double> values;
      values.reserve(args.seeds);
      for (int t = 0; t < args.seeds; ++t) {
        const Signal noisy =
            add_noise(clean, {noise, param}, args.seed + static_cast<std::uint64_t>(t));
        values.push_back(nmse(reference, fmwgfrft(noisy.values, ws, b)));
      }
      double mean = 0.0;
      for (double v : values) mean += v;
      mean /= values.size();
      double var = 0.0;
      for (double v : values) var += (v - mean) * (v - mean);
      const double sd = values.size() > 1 ? std::sqrt(var / (values.size() - 1)) : 0.0;
      char mean_buf[64], sd_buf[64], a_buf[64], p_buf[64];
      std::snprintf(a_buf, sizeof(a_buf), "%.17g", alpha);
      std::snprintf(p_buf, sizeof(p_buf), "%.17g", param);
      std::snprintf(mean_buf, sizeof(mean_buf), "%.17g", mean);
      std::snprintf(sd_buf, sizeof(sd_buf), "%.17g", sd);
      csv << a_buf << ',' << p_buf << ',' << mean_buf << ',' << sd_buf << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph fractional Fourier frames toolkit"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--cache-dir", common.cache_dir,
                 "Directory for the on-disk basis cache (off when empty)");
  app.add_option("--threads", common.threads,
                 "Worker threads for the direct transform (0 = hardware, 1 = serial)");

  GraphArgs graph_args;
  CLI::App* graph_cmd = app.add_subcommand("graph", "Generate a synthetic graph file");
  graph_cmd->add_option("--kind", graph_args.kind,
                        "path|ring|random_ring|sphere|community|swiss_roll");
  graph_cmd->add_option("--n", graph_args.params.n, "Vertex count")->required();
  graph_cmd->add_option("--seed", graph_args.seed, "Seed for randomized kinds");
  graph_cmd->add_option("--knn", graph_args.params.knn, "Neighbours for sphere/swiss_roll");
  graph_cmd->add_option("--clusters", graph_args.params.clusters, "Community cluster count");
  graph_cmd->add_option("--chords", graph_args.params.chords,
                        "Extra random_ring chords (0 = n/8)");
  graph_cmd->add_option("--intra", graph_args.params.intra_prob,
                        "Community intra-cluster edge probability");
  graph_cmd->add_option("--inter", graph_args.params.inter_prob,
                        "Community inter-cluster edge probability");
  graph_cmd->add_option("--out", graph_args.out, "Output graph JSON")->required();

  SignalArgs signal_args;
  CLI::App* signal_cmd = app.add_subcommand("signal", "Generate or import a graph signal");
  signal_cmd->add_option("--kind", signal_args.kind, "f7|f8|f9|eigvec|custom");
  signal_cmd->add_option("--graph", signal_args.graph_path, "Graph JSON")->required();
  signal_cmd->add_option("--in", signal_args.in, "Input CSV for --kind custom");
  signal_cmd->add_option("--indices", signal_args.indices,
                         "Basis column indices for --kind eigvec (0-based)");
  signal_cmd->add_option("--alpha", signal_args.alpha, "Fractional order for --kind eigvec");
  signal_cmd->add_flag("--normalized", signal_args.normalized,
                       "Use the normalized Laplacian basis");
  signal_cmd->add_option("--out", signal_args.out, "Output signal CSV")->required();

  WindowArgs window_args;
  CLI::App* windows_cmd = app.add_subcommand("windows", "Build a window set");
  windows_cmd->add_option("--kind", window_args.kind,
                          "heat|gaussian|dual_heat|bspline|householder|eigenvector");
  windows_cmd->add_option("--graph", window_args.graph_path, "Graph JSON")->required();
  windows_cmd->add_option("--alpha", window_args.alpha, "Fractional order")->required();
  windows_cmd->add_flag("--normalized", window_args.normalized,
                        "Use the normalized Laplacian (required for bspline)");
  windows_cmd->add_option("--tau", window_args.tau, "Kernel decay parameter");
  windows_cmd->add_option("--mu", window_args.mu, "Dual-heat scale (0 = normalize)");
  windows_cmd->add_option("--L", window_args.count, "Translated-family size");
  windows_cmd->add_option("--centers", window_args.centers,
                          "Explicit translation centers (0-based, comma separated)");
  windows_cmd->add_option("--generator", window_args.generator_csv,
                          "CSV generator vector for householder windows");
  windows_cmd->add_option("--out", window_args.out, "Output prefix")->required();

  TransformArgs transform_args;
  CLI::App* transform_cmd =
      app.add_subcommand("transform", "Vertex-frequency transform of a signal");
  transform_cmd->add_option("--graph", transform_args.graph_path, "Graph JSON")->required();
  transform_cmd->add_option("--signal", transform_args.signal_path, "Signal CSV")->required();
  transform_cmd->add_option("--windows", transform_args.windows_path, "Window descriptor JSON")
      ->required();
  transform_cmd->add_option("--algo", transform_args.algo,
                            "wgft|wgfrft|mwgft|mwgfrft|fmwgfrft|smwgft|smwgfrft");
  transform_cmd->add_option("--alpha", transform_args.alpha, "Fractional order")->required();
  transform_cmd->add_flag("--normalized", transform_args.normalized,
                          "Use the normalized Laplacian basis");
  transform_cmd->add_flag("--tensor", transform_args.tensor,
                          "Also write one per-window coefficient CSV per window");
  transform_cmd->add_option("--out", transform_args.out, "Output prefix")->required();

  FrameArgs frame_args;
  CLI::App* frame_cmd = app.add_subcommand("frame", "Frame diagnostics report");
  frame_cmd->add_option("--graph", frame_args.graph_path, "Graph JSON")->required();
  frame_cmd->add_option("--windows", frame_args.windows_path, "Window descriptor JSON")
      ->required();
  frame_cmd->add_option("--dual", frame_args.dual_path, "Candidate dual window descriptor");
  frame_cmd->add_option("--family", frame_args.family, "mw|shift");
  frame_cmd->add_option("--alpha", frame_args.alpha, "Fractional order")->required();
  frame_cmd->add_flag("--normalized", frame_args.normalized,
                      "Use the normalized Laplacian basis");
  frame_cmd->add_option("--tol", frame_args.tol, "Relative tightness tolerance");
  frame_cmd->add_option("--seed", frame_args.seed, "Seed for the reconstruction probe");
  frame_cmd->add_option("--out", frame_args.out, "Output report JSON")->required();

  BenchArgs bench_args;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time the direct and fast transforms");
  bench_cmd->add_option("--family", bench_args.family, "Graph family");
  bench_cmd->add_option("--sizes", bench_args.sizes, "Ascending vertex counts");
  bench_cmd->add_option("--L", bench_args.window_count, "Window count");
  bench_cmd->add_option("--alpha", bench_args.alpha, "Fractional order");
  bench_cmd->add_option("--reps", bench_args.reps, "Repetitions per size (median)");
  bench_cmd->add_option("--algo", bench_args.algo, "naive|fast|both");
  bench_cmd->add_option("--seed", bench_args.seed, "Graph/signal seed");
  bench_cmd->add_option("--out", bench_args.out, "Output prefix (.csv and .json)")->required();

  DetectArgs detect_args;
  CLI::App* detect_cmd = app.add_subcommand("detect", "Spectrogram anomaly detection");
  detect_cmd->add_option("--graph", detect_args.graph_path, "Graph JSON")->required();
  detect_cmd->add_option("--signal", detect_args.signal_path, "Signal CSV")->required();
  detect_cmd->add_option("--windows", detect_args.windows_path, "Window descriptor JSON")
      ->required();
  detect_cmd->add_option("--algo", detect_args.algo, "fmwgfrft|mwgfrft|smwgfrft");
  detect_cmd->add_option("--alpha", detect_args.alpha, "Fractional order")->required();
  detect_cmd->add_flag("--normalized", detect_args.normalized,
                       "Use the normalized Laplacian basis");
  detect_cmd->add_option("--out", detect_args.out, "Output report JSON")->required();

  NmseArgs nmse_args;
  CLI::App* nmse_cmd = app.add_subcommand("nmse", "NMSE sweep over noise parameters");
  nmse_cmd->add_option("--graph", nmse_args.graph_path, "Graph JSON")->required();
  nmse_cmd->add_option("--signal-kind", nmse_args.signal_kind, "f7|f8|f9");
  nmse_cmd->add_option("--noise", nmse_args.noise, "gaussian|poisson|exponential");
  nmse_cmd->add_option("--params", nmse_args.params, "Noise parameters, comma separated");
  nmse_cmd->add_option("--alphas", nmse_args.alphas, "Fractional orders, comma separated");
  nmse_cmd->add_option("--window-kind", nmse_args.window_kind, "heat|gaussian");
  nmse_cmd->add_option("--tau", nmse_args.tau, "Window decay parameter");
  nmse_cmd->add_option("--L", nmse_args.window_count, "Translated-family size");
  nmse_cmd->add_option("--seeds", nmse_args.seeds, "Trials per configuration");
  nmse_cmd->add_option("--seed", nmse_args.seed, "Base seed");
  nmse_cmd->add_option("--out", nmse_args.out, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*graph_cmd) run_graph(graph_args);
    if (*signal_cmd) run_signal(signal_args, common);
    if (*windows_cmd) run_windows(window_args, common);
    if (*transform_cmd) run_transform(transform_args, common);
    if (*frame_cmd) run_frame(frame_args, common);
    if (*bench_cmd) run_bench(bench_args);
    if (*detect_cmd) run_detect(detect_args, common);
    if (*nmse_cmd) run_nmse(nmse_args, common);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}
