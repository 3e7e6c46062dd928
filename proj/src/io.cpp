// io.cpp

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

#include "gfrf/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "gfrf/errors.hpp"

namespace gfrf {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open for reading: " + path);
  return in;
}

std::vector<std::vector<double>> read_csv_rows(const std::string& path) {
  std::ifstream in = open_in(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
        if (used != cell.size()) throw ValidationError("");
      } catch (const std::exception&) {
        throw ValidationError("malformed CSV value '" + cell + "' in " + path);
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ValidationError("empty CSV file: " + path);
  for (const auto& row : rows) {
    if (row.size() != rows.front().size())
      throw ValidationError("ragged CSV rows in " + path);
  }
  return rows;
}

}  // namespace

std::string hash_to_hex(std::uint64_t hash) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::uint64_t hex_to_hash(const std::string& hex) {
  return std::stoull(hex, nullptr, 16);
}

void save_graph_json(const Graph& graph, const std::string& path) {
  Json j;
  j["n"] = graph.n;
  Json edges = Json::array();
  for (const Edge& e : graph.edges) edges.push_back({e.i + 1, e.j + 1, e.weight});
  j["edges"] = std::move(edges);
  save_json(j, path);
}

Graph load_graph_json(const std::string& path) {
  const Json j = load_json(path);
  if (!j.contains("n") || !j.contains("edges"))
    throw ValidationError("graph file missing 'n' or 'edges': " + path);
  const int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& item : j.at("edges")) {
    if (!item.is_array() || item.size() != 3)
      throw ValidationError("graph edge entries must be [i, j, w]: " + path);
    Edge e;
    e.i = item.at(0).get<int>() - 1;
    e.j = item.at(1).get<int>() - 1;
    e.weight = item.at(2).get<double>();
    edges.push_back(e);
  }
  return make_graph(n, std::move(edges));
}

void save_signal_csv(const Eigen::VectorXcd& values, const std::string& path) {
  std::ofstream out = open_out(path);
  for (int v = 0; v < values.size(); ++v)
    out << format_double(values(v).real()) << ',' << format_double(values(v).imag()) << '\n';
}

Eigen::VectorXcd load_signal_csv(const std::string& path) {
  const auto rows = read_csv_rows(path);
  const std::size_t cols = rows.front().size();
  if (cols != 1 && cols != 2)
    throw ValidationError("signal CSV must have 1 (re) or 2 (re, im) columns: " + path);
  Eigen::VectorXcd values(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    values(static_cast<int>(r)) = {rows[r][0], cols == 2 ? rows[r][1] : 0.0};
  return values;
}

void save_complex_matrix_csv(const Eigen::MatrixXcd& m, const std::string& path) {
  std::ofstream out = open_out(path);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out << ',';
      out << format_double(m(r, c).real()) << ',' << format_double(m(r, c).imag());
    }
    out << '\n';
  }
}

Eigen::MatrixXcd load_complex_matrix_csv(const std::string& path) {
  const auto rows = read_csv_rows(path);
  const std::size_t cols = rows.front().size();
  if (cols % 2 != 0)
    throw ValidationError("complex matrix CSV needs an even column count: " + path);
  Eigen::MatrixXcd m(rows.size(), cols / 2);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols / 2; ++c)
      m(static_cast<int>(r), static_cast<int>(c)) = {rows[r][2 * c], rows[r][2 * c + 1]};
  return m;
}

void save_real_matrix_csv(const Eigen::MatrixXd& m, const std::string& path) {
  std::ofstream out = open_out(path);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out << ',';
      out << format_double(m(r, c));
    }
    out << '\n';
  }
}

Eigen::MatrixXd load_real_matrix_csv(const std::string& path) {
  const auto rows = read_csv_rows(path);
  Eigen::MatrixXd m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.front().size(); ++c)
      m(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
  return m;
}

std::string save_window_set(const WindowSet& ws, const std::string& kind, const Json& params,
                            const std::string& prefix) {
  const std::string csv_path = prefix + ".csv";
  const std::string json_path = prefix + ".json";
  save_complex_matrix_csv(ws.profiles, csv_path);
  Json j;
  j["kind"] = kind;
  j["params"] = params;
  j["alpha"] = ws.alpha;
  j["graph_hash"] = hash_to_hex(ws.graph_hash);
  j["n"] = ws.n();
  j["L"] = ws.count();
  j["label"] = ws.label;
  j["profiles_csv"] = std::filesystem::path(csv_path).filename().string();
  save_json(j, json_path);
  return json_path;
}

WindowSet load_window_set(const std::string& descriptor_path, const FractionalBasis& basis) {
  const Json j = load_json(descriptor_path);
  const double alpha = j.at("alpha").get<double>();
  if (alpha != basis.alpha)
    throw ValidationError("window set alpha does not match the requested basis");
  const std::uint64_t hash = hex_to_hash(j.at("graph_hash").get<std::string>());
  if (hash != 0 && basis.graph_hash != 0 && hash != basis.graph_hash)
    throw ValidationError("window set was built for a different graph");
  const auto csv = std::filesystem::path(descriptor_path).parent_path() /
                   j.at("profiles_csv").get<std::string>();
  Eigen::MatrixXcd profiles = load_complex_matrix_csv(csv.string());
  if (profiles.rows() != basis.n())
    throw ValidationError("window set size does not match the basis");
  WindowSet ws = window_set_from_profiles(basis, std::move(profiles),
                                          j.value("label", std::string{}));
  return ws;
}

void save_atom_bank_csv(const AtomBank& bank, const std::string& prefix) {
  const int n = bank.n;
  for (int l = 0; l < bank.count(); ++l) {
    const Eigen::MatrixXcd& atoms = bank.per_window[l];
    const int per_vertex = static_cast<int>(atoms.cols()) / n;  // n*n banks: n, shift: 1
    std::ofstream out = open_out(prefix + "_window" + std::to_string(l + 1) + ".csv");
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < per_vertex; ++k) {
        const Eigen::VectorXcd atom = atoms.col(i * per_vertex + k);
        for (int v = 0; v < n; ++v) {
          if (k || v) out << ',';
          out << format_double(atom(v).real()) << ',' << format_double(atom(v).imag());
        }
      }
      out << '\n';
    }
  }
}

Json diagnostics_to_json(const FrameDiagnostics& diag, double alpha, int window_count) {
  Json j;
  j["family"] = diag.family == FrameFamily::mwgfrff ? "mwgfrff" : "smwgfrff";
  j["N"] = static_cast<int>(diag.c.size());
  j["L"] = window_count;
  j["alpha"] = alpha;
  j["A"] = diag.lower;
  j["B"] = diag.upper;
  j["tight"] = diag.tight;
  j["C"] = diag.tight_constant;
  j["c_min_index"] = diag.c_min_index + 1;  // file formats are 1-based
  j["c_max_index"] = diag.c_max_index + 1;
  j["is_frame"] = diag.is_frame;
  j["r0_hypothesis"] = diag.r0_hypothesis;
  return j;
}

void save_json(const Json& j, const std::string& path) {
  std::ofstream out = open_out(path);
  out << j.dump(2) << '\n';
}

Json load_json(const std::string& path) {
  std::ifstream in = open_in(path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_pgm(const Eigen::MatrixXd& values, const std::string& path) {
  if (values.size() == 0) throw ValidationError("save_pgm: empty matrix");
  if (values.minCoeff() < 0.0) throw ValidationError("save_pgm: negative values");
  std::ofstream out = open_out(path);
  out << "P5\n" << values.cols() << ' ' << values.rows() << "\n255\n";
  const double hi = values.maxCoeff();
  std::vector<unsigned char> row(values.cols());
  for (int r = 0; r < values.rows(); ++r) {
    for (int c = 0; c < values.cols(); ++c) {
      const double scaled = hi > 0.0 ? values(r, c) / hi * 255.0 : 0.0;
      row[c] = static_cast<unsigned char>(std::lround(scaled));
    }
    out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
  }
}

std::string basis_cache_key(std::uint64_t graph_hash, bool normalized, double alpha) {
  std::uint64_t alpha_bits;
  static_assert(sizeof(alpha_bits) == sizeof(alpha));
  std::memcpy(&alpha_bits, &alpha, sizeof(alpha_bits));
  return "basis_" + hash_to_hex(graph_hash) + (normalized ? "_norm_" : "_raw_") +
         hash_to_hex(alpha_bits);
}

void store_basis_cache(const std::string& dir, const FractionalBasis& basis) {
  std::filesystem::create_directories(dir);
  const std::string key = basis_cache_key(basis.graph_hash, basis.normalized_laplacian,
                                          basis.alpha);
  const auto base = std::filesystem::path(dir) / key;
  save_complex_matrix_csv(basis.gamma, (base.string() + "_gamma.csv"));
  Eigen::MatrixXd spectrum(basis.lambda.size(), 2);
  spectrum.col(0) = basis.lambda;
  spectrum.col(1) = basis.r;
  save_real_matrix_csv(spectrum, base.string() + "_spectrum.csv");
  Json j;
  j["alpha"] = basis.alpha;
  j["graph_hash"] = hash_to_hex(basis.graph_hash);
  j["normalized"] = basis.normalized_laplacian;
  j["n"] = basis.n();
  save_json(j, base.string() + ".json");
}

std::optional<FractionalBasis> try_load_basis_cache(const std::string& dir,
                                                    std::uint64_t graph_hash, bool normalized,
                                                    double alpha) {
  const std::string key = basis_cache_key(graph_hash, normalized, alpha);
  const auto base = std::filesystem::path(dir) / key;
  if (!std::filesystem::exists(base.string() + ".json")) return std::nullopt;
  const Json j = load_json(base.string() + ".json");
  FractionalBasis basis;
  basis.alpha = j.at("alpha").get<double>();
  basis.graph_hash = hex_to_hash(j.at("graph_hash").get<std::string>());
  basis.normalized_laplacian = j.at("normalized").get<bool>();
  basis.gamma = load_complex_matrix_csv(base.string() + "_gamma.csv");
  const Eigen::MatrixXd spectrum = load_real_matrix_csv(base.string() + "_spectrum.csv");
  basis.lambda = spectrum.col(0);
  basis.r = spectrum.col(1);
  if (basis.gamma.rows() != j.at("n").get<int>() || basis.lambda.size() != basis.gamma.rows())
    throw ValidationError("basis cache entry is inconsistent: " + key);
  return basis;
}

FractionalBasis build_basis_cached(const Graph& graph, double alpha, bool normalized,
                                   const std::string& cache_dir) {
  if (!cache_dir.empty()) {
    if (auto cached = try_load_basis_cache(cache_dir, graph.hash, normalized, alpha))
      return *cached;
  }
  FractionalBasis basis = build_basis(graph, alpha, normalized);
  if (!cache_dir.empty()) store_basis_cache(cache_dir, basis);
  return basis;
}

}  // namespace gfrf
