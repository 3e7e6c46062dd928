// test_io.cpp

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "gfrf/errors.hpp"
#include "gfrf/io.hpp"
#include "gfrf/rng.hpp"
#include "gfrf/windows.hpp"

using namespace gfrf;
using cd = std::complex<double>;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("gfrf_io_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Eigen::MatrixXcd random_matrix(int rows, int cols, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXcd m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = {rng.normal(), rng.normal()};
  return m;
}

}  // namespace

TEST_CASE("graph JSON roundtrip preserves every edge bit-for-bit") {
  TempDir tmp;
  const Graph g = generate_graph(GraphKind::random_ring, {.n = 24}, 17);
  save_graph_json(g, tmp.file("g.json"));
  const Graph back = load_graph_json(tmp.file("g.json"));
  REQUIRE(back.n == g.n);
  REQUIRE(back.edges.size() == g.edges.size());
  for (std::size_t t = 0; t < g.edges.size(); ++t) {
    CHECK(back.edges[t].i == g.edges[t].i);
    CHECK(back.edges[t].j == g.edges[t].j);
    CHECK(back.edges[t].weight == g.edges[t].weight);
  }
  CHECK(back.hash == g.hash);

  // 1-based indices on disk.
  const Json j = load_json(tmp.file("g.json"));
  CHECK(j.at("edges").front().at(0).get<int>() >= 1);
}

TEST_CASE("malformed graph files are rejected") {
  TempDir tmp;
  std::ofstream(tmp.file("bad.json")) << "{\"n\": 3}";
  CHECK_THROWS_AS(load_graph_json(tmp.file("bad.json")), ValidationError);
  std::ofstream(tmp.file("worse.json")) << "not json";
  CHECK_THROWS_AS(load_graph_json(tmp.file("worse.json")), ValidationError);
  CHECK_THROWS_AS(load_graph_json(tmp.file("absent.json")), ValidationError);
}

TEST_CASE("signal CSV roundtrip") {
  TempDir tmp;
  Eigen::VectorXcd v(5);
  v << cd(1.5, -2.25), cd(0.1, 0.0), cd(-1e-17, 3.0), cd(0.0, 0.0), cd(1.0 / 3.0, -1.0 / 7.0);
  save_signal_csv(v, tmp.file("s.csv"));
  const Eigen::VectorXcd back = load_signal_csv(tmp.file("s.csv"));
  REQUIRE(back.size() == 5);
  CHECK((back - v).cwiseAbs().maxCoeff() == 0.0);

  // Single-column files read as real signals.
  std::ofstream(tmp.file("real.csv")) << "1.25\n-3.5\n";
  const Eigen::VectorXcd real = load_signal_csv(tmp.file("real.csv"));
  CHECK(real(0) == cd(1.25, 0.0));
  CHECK(real(1) == cd(-3.5, 0.0));

  std::ofstream(tmp.file("bad.csv")) << "1,2,3\n";
  CHECK_THROWS_AS(load_signal_csv(tmp.file("bad.csv")), ValidationError);
  std::ofstream(tmp.file("nan.csv")) << "1,abc\n";
  CHECK_THROWS_AS(load_signal_csv(tmp.file("nan.csv")), ValidationError);
}

TEST_CASE("complex matrix CSV roundtrips exactly at 17 significant digits") {
  TempDir tmp;
  const Eigen::MatrixXcd m = random_matrix(7, 4, 29);
  save_complex_matrix_csv(m, tmp.file("m.csv"));
  const Eigen::MatrixXcd back = load_complex_matrix_csv(tmp.file("m.csv"));
  REQUIRE(back.rows() == 7);
  REQUIRE(back.cols() == 4);
  CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);

  std::ofstream(tmp.file("odd.csv")) << "1,2,3\n";
  CHECK_THROWS_AS(load_complex_matrix_csv(tmp.file("odd.csv")), ValidationError);
}

TEST_CASE("real matrix CSV roundtrip") {
  TempDir tmp;
  const Eigen::MatrixXd m = random_matrix(3, 6, 31).real();
  save_real_matrix_csv(m, tmp.file("r.csv"));
  CHECK((load_real_matrix_csv(tmp.file("r.csv")) - m).cwiseAbs().maxCoeff() == 0.0);

  std::ofstream(tmp.file("ragged.csv")) << "1,2\n3\n";
  CHECK_THROWS_AS(load_real_matrix_csv(tmp.file("ragged.csv")), ValidationError);
}

TEST_CASE("window set descriptor roundtrip") {
  TempDir tmp;
  const Graph g = generate_graph(GraphKind::ring, {.n = 12});
  const FractionalBasis b = build_basis(g, 0.8, false);
  const WindowSet ws = translated_family(b, heat_window(b, 1.5), 4);

  Json params;
  params["tau"] = 1.5;
  params["L"] = 4;
  const std::string descriptor = save_window_set(ws, "heat", params, tmp.file("w"));

  const WindowSet back = load_window_set(descriptor, b);
  CHECK((back.profiles - ws.profiles).cwiseAbs().maxCoeff() == 0.0);
  CHECK((back.vertex_windows - ws.vertex_windows).cwiseAbs().maxCoeff() <= 1e-12);

  // Alpha and graph-hash mismatches are rejected.
  const FractionalBasis other_alpha = build_basis(g, 0.6, false);
  CHECK_THROWS_AS(load_window_set(descriptor, other_alpha), ValidationError);
  const Graph other = generate_graph(GraphKind::random_ring, {.n = 12}, 3);
  const FractionalBasis other_basis = build_basis(other, 0.8, false);
  CHECK_THROWS_AS(load_window_set(descriptor, other_basis), ValidationError);
}

TEST_CASE("atom bank export writes one k-major CSV per window") {
  TempDir tmp;
  const Graph g = generate_graph(GraphKind::ring, {.n = 5});
  const FractionalBasis b = build_basis(g, 0.7, false);
  const WindowSet ws = translated_family(b, heat_window(b, 0.8), 2);
  const AtomBank bank = mw_atom_bank(b, ws);
  save_atom_bank_csv(bank, tmp.file("bank"));

  for (int l = 0; l < 2; ++l) {
    const Eigen::MatrixXd rows =
        load_real_matrix_csv(tmp.file("bank_window" + std::to_string(l + 1) + ".csv"));
    REQUIRE(rows.rows() == 5);
    REQUIRE(rows.cols() == 2 * 5 * 5);  // k-major blocks of 5 complex entries
    for (int i = 0; i < 5; ++i)
      for (int k = 0; k < 5; ++k)
        for (int v = 0; v < 5; ++v) {
          const std::complex<double> stored(rows(i, 2 * (k * 5 + v)),
                                            rows(i, 2 * (k * 5 + v) + 1));
          CHECK(stored == bank.per_window[l].col(i * 5 + k)(v));
        }
  }
}

TEST_CASE("diagnostics JSON carries the required keys") {
  const Graph g = generate_graph(GraphKind::ring, {.n = 16});
  const FractionalBasis b = build_basis(g, 0.9, true);
  const FrameDiagnostics diag = frame_bounds_mw(bspline_tight_windows(b), b);
  const Json j = diagnostics_to_json(diag, 0.9, 3);
  for (const char* key :
       {"family", "N", "L", "alpha", "A", "B", "tight", "C", "c_min_index", "c_max_index"})
    CHECK(j.contains(key));
  CHECK(j.at("family") == "mwgfrff");
  CHECK(j.at("N") == 16);
  CHECK(j.at("tight") == true);
  CHECK(j.at("c_min_index").get<int>() >= 1);
}

TEST_CASE("PGM heatmaps are deterministic max-normalized rasters") {
  TempDir tmp;
  Eigen::MatrixXd values(2, 3);
  values << 0.0, 1.0, 2.0, 3.0, 4.0, 8.0;
  save_pgm(values, tmp.file("a.pgm"));
  const std::string bytes = slurp(tmp.file("a.pgm"));
  const std::string header = "P5\n3 2\n255\n";
  REQUIRE(bytes.size() == header.size() + 6);
  CHECK(bytes.substr(0, header.size()) == header);
  const unsigned char* px = reinterpret_cast<const unsigned char*>(bytes.data() + header.size());
  CHECK(px[0] == 0);
  CHECK(px[1] == 32);   // 1/8 * 255 rounded
  CHECK(px[2] == 64);   // 2/8 * 255
  CHECK(px[3] == 96);
  CHECK(px[4] == 128);  // 4/8 * 255 rounds to 128 (127.5 -> 128)
  CHECK(px[5] == 255);

  save_pgm(values, tmp.file("b.pgm"));
  CHECK(slurp(tmp.file("b.pgm")) == bytes);

  CHECK_THROWS_AS(save_pgm(Eigen::MatrixXd::Constant(2, 2, -1.0), tmp.file("c.pgm")),
                  ValidationError);
}

TEST_CASE("basis cache stores and restores bit-identical bases") {
  TempDir tmp;
  const Graph g = generate_graph(GraphKind::community, {.n = 14}, 77);
  const FractionalBasis b = build_basis(g, 0.7, true);
  store_basis_cache(tmp.file("cache"), b);

  const auto missing = try_load_basis_cache(tmp.file("cache"), g.hash, false, 0.7);
  CHECK_FALSE(missing.has_value());

  const auto cached = try_load_basis_cache(tmp.file("cache"), g.hash, true, 0.7);
  REQUIRE(cached.has_value());
  CHECK((cached->gamma - b.gamma).cwiseAbs().maxCoeff() == 0.0);
  CHECK((cached->lambda - b.lambda).cwiseAbs().maxCoeff() == 0.0);
  CHECK((cached->r - b.r).cwiseAbs().maxCoeff() == 0.0);
  CHECK(cached->alpha == b.alpha);
  CHECK(cached->graph_hash == b.graph_hash);
  CHECK(cached->normalized_laplacian);

  // The read-through wrapper hits the cache.
  const FractionalBasis again = build_basis_cached(g, 0.7, true, tmp.file("cache"));
  CHECK((again.gamma - b.gamma).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("hash hex helpers") {
  CHECK(hash_to_hex(0x0123456789abcdefull) == "0123456789abcdef");
  CHECK(hex_to_hash("0123456789abcdef") == 0x0123456789abcdefull);
  CHECK(hex_to_hash(hash_to_hex(0xffffffffffffffffull)) == 0xffffffffffffffffull);
}
