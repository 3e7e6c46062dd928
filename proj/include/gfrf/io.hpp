// gfrf/io.hpp

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

#include <json.hpp>

#include <optional>
#include <string>

#include "gfrf/atoms.hpp"
#include "gfrf/frames.hpp"
#include "gfrf/graph.hpp"
#include "gfrf/spectral.hpp"

namespace gfrf {

using Json = nlohmann::ordered_json;

// Graph files: {"n": N, "edges": [[i, j, w], ...]} with 1-based indices.
void save_graph_json(const Graph& graph, const std::string& path);
Graph load_graph_json(const std::string& path);

// Signals: CSV, one value per row, columns re[,im].
void save_signal_csv(const Eigen::VectorXcd& values, const std::string& path);
Eigen::VectorXcd load_signal_csv(const std::string& path);

// Complex matrices: CSV with interleaved re/im columns, 17 significant
// digits (doubles round-trip exactly).
void save_complex_matrix_csv(const Eigen::MatrixXcd& m, const std::string& path);
Eigen::MatrixXcd load_complex_matrix_csv(const std::string& path);

void save_real_matrix_csv(const Eigen::MatrixXd& m, const std::string& path);
Eigen::MatrixXd load_real_matrix_csv(const std::string& path);

// Window sets persist as a profiles CSV next to a JSON descriptor
// {kind, params, alpha, graph_hash, ...}. Writes <prefix>.json and
// <prefix>.csv; returns the descriptor path.
std::string save_window_set(const WindowSet& ws, const std::string& kind, const Json& params,
                            const std::string& prefix);
// Loads and re-derives the vertex windows from the stored profiles;
// validates alpha and graph hash against the basis.
WindowSet load_window_set(const std::string& descriptor_path, const FractionalBasis& basis);

// Atom banks: one CSV per window named <prefix>_window<l>.csv. Row i holds
// the atoms of vertex i in k-major order, each atom as n interleaved re/im
// pairs. The plain shift family (one atom per i) writes one atom per row.
void save_atom_bank_csv(const AtomBank& bank, const std::string& prefix);

Json diagnostics_to_json(const FrameDiagnostics& diag, double alpha, int window_count);

void save_json(const Json& j, const std::string& path);
Json load_json(const std::string& path);

// 8-bit binary PGM, values linearly scaled so the matrix maximum maps to 255.
void save_pgm(const Eigen::MatrixXd& values, const std::string& path);

// On-disk basis cache keyed by (graph hash, normalized flag, alpha).
std::string basis_cache_key(std::uint64_t graph_hash, bool normalized, double alpha);
void store_basis_cache(const std::string& dir, const FractionalBasis& basis);
std::optional<FractionalBasis> try_load_basis_cache(const std::string& dir,
                                                    std::uint64_t graph_hash, bool normalized,
                                                    double alpha);

// build_basis with a read-through cache; empty dir disables caching.
FractionalBasis build_basis_cached(const Graph& graph, double alpha, bool normalized,
                                   const std::string& cache_dir);

std::string hash_to_hex(std::uint64_t hash);
std::uint64_t hex_to_hash(const std::string& hex);

}  // namespace gfrf
