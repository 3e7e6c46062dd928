// test_transforms.cpp

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

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "gfrf/errors.hpp"
#include "gfrf/frames.hpp"
#include "gfrf/graph.hpp"
#include "gfrf/rng.hpp"
#include "gfrf/transforms.hpp"
#include "gfrf/windows.hpp"

using namespace gfrf;
using cd = std::complex<double>;

namespace {

Eigen::VectorXcd random_complex(int n, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::VectorXcd v(n);
  for (int idx = 0; idx < n; ++idx) v(idx) = {rng.normal(), rng.normal()};
  return v;
}

WindowSet random_windows(const FractionalBasis& b, int count, std::uint64_t seed) {
  Eigen::MatrixXcd profiles(b.n(), count);
  for (int l = 0; l < count; ++l) {
    profiles.col(l) = random_complex(b.n(), seed + static_cast<std::uint64_t>(l));
    profiles.col(l) /= profiles.col(l).norm();
  }
  return window_set_from_profiles(b, std::move(profiles), "random");
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

// Direct quadruple-sum evaluation of the windowed transform.
Eigen::MatrixXcd wgfrft_oracle(const Eigen::VectorXcd& f, const Eigen::VectorXcd& profile,
                               const FractionalBasis& b) {
  const int n = b.n();
  const double scale = std::pow(static_cast<double>(n), b.alpha);
  Eigen::MatrixXcd out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      cd acc = 0.0;
      for (int v = 0; v < n; ++v) {
        cd inner = 0.0;
        for (int p = 0; p < n; ++p)
          inner += std::conj(profile(p)) * b.gamma(i, p) * std::conj(b.gamma(v, p));
        acc += f(v) * inner * std::conj(b.gamma(v, k));
      }
      out(i, k) = scale * acc;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("wgfrft agrees with atom pairings and the scalar oracle") {
  const Graph g = generate_graph(GraphKind::path, {.n = 8});
  const FractionalBasis b = build_basis(g, 0.6, false);
  const WindowSet ws = heat_window(b, 0.5);
  const Eigen::VectorXcd f = random_complex(8, 3);

  const Eigen::MatrixXcd w = wgfrft(f, ws.profiles.col(0), b);

  SUBCASE("entries are inner products with the atoms") {
    for (const AtomIndex idx : {AtomIndex{0, 0, 0}, AtomIndex{0, 3, 5}, AtomIndex{0, 7, 2}}) {
      const cd pairing = mw_atom(b, ws, idx).dot(f);
      CHECK(std::abs(w(idx.i, idx.k) - pairing) <= 1e-10);
    }
  }

  SUBCASE("quadruple-loop oracle") {
    CHECK(max_abs(w - wgfrft_oracle(f, ws.profiles.col(0), b)) <= 1e-10);
  }

  SUBCASE("threaded rows equal serial rows exactly") {
    const Eigen::MatrixXcd serial = wgfrft(f, ws.profiles.col(0), b, 1);
    const Eigen::MatrixXcd threaded = wgfrft(f, ws.profiles.col(0), b, 2);
    CHECK(max_abs(serial - threaded) == 0.0);
  }

  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(wgfrft(random_complex(4, 9), ws.profiles.col(0), b), ValidationError);
  }
}

TEST_CASE("wgfrft at alpha = 1 reduces to classical windowed coefficients") {
  const Graph g = generate_graph(GraphKind::ring, {.n = 8});
  const FractionalBasis b = build_basis(g, 1.0, false);
  const Eigen::MatrixXd chi = b.gamma.real();
  const WindowSet ws = heat_window(b, 0.5);
  const Eigen::VectorXcd f = random_complex(8, 5);

  const Eigen::MatrixXcd w = wgfrft(f, ws.profiles.col(0), b);
  for (int i = 0; i < 8; ++i) {
    for (int k = 0; k < 8; ++k) {
      cd acc = 0.0;
      for (int v = 0; v < 8; ++v) {
        cd inner = 0.0;
        for (int p = 0; p < 8; ++p)
          inner += std::conj(ws.profiles(p, 0)) * chi(i, p) * chi(v, p);
        acc += f(v) * inner * chi(v, k);
      }
      CHECK(std::abs(w(i, k) - 8.0 * acc) <= 1e-10);
    }
  }
}

TEST_CASE("mwgfrft structure") {
  const Graph g = generate_graph(GraphKind::random_ring, {.n = 8}, 13);
  const FractionalBasis b = build_basis(g, 0.6, false);
  const WindowSet ws = random_windows(b, 2, 600);
  const Eigen::VectorXcd f = random_complex(8, 14);

  const CoefficientSet set = mwgfrft(f, ws, b);

  SUBCASE("aggregated equals the window sum") {
    Eigen::MatrixXcd sum = set.per_window[0] + set.per_window[1];
    CHECK(max_abs(set.aggregated - sum) <= 1e-12);
  }

  SUBCASE("single window degenerates to wgfrft") {
    const WindowSet single = random_windows(b, 1, 700);
    const CoefficientSet one = mwgfrft(f, single, b);
    CHECK(max_abs(one.aggregated - wgfrft(f, single.profiles.col(0), b)) == 0.0);
  }

  SUBCASE("zero signal gives zero coefficients") {
    const CoefficientSet zero = mwgfrft(Eigen::VectorXcd::Zero(8), ws, b);
    CHECK(max_abs(zero.aggregated) == 0.0);
  }

  SUBCASE("matches the fast algorithm") {
    CHECK(max_abs(set.aggregated - fmwgfrft(f, ws, b)) <= 1e-9);
  }

  SUBCASE("meta carries provenance") {
    CHECK(set.meta.graph_hash == g.hash);
    CHECK(set.meta.alpha == 0.6);
  }
}

TEST_CASE("f_tilde") {
  const Graph g = generate_graph(GraphKind::community, {.n = 16}, 15);
  const FractionalBasis b = build_basis(g, 0.7, false);

  SUBCASE("scalar triple-sum oracle") {
    const Eigen::VectorXcd f = random_complex(16, 16);
    const Eigen::MatrixXcd ft = f_tilde(f, b);
    for (int k = 0; k < 16; ++k) {
      for (int kp = 0; kp < 16; ++kp) {
        cd acc = 0.0;
        for (int d = 0; d < 16; ++d)
          acc += f(d) * std::conj(b.gamma(d, kp)) * std::conj(b.gamma(d, k));
        CHECK(std::abs(ft(k, kp) - acc) <= 1e-11);
      }
    }
  }

  SUBCASE("symmetric in (k, k')") {
    const Eigen::VectorXcd f = b.gamma.col(3);
    const Eigen::MatrixXcd ft = f_tilde(f, b);
    CHECK(max_abs(ft - ft.transpose()) <= 1e-12);
  }

  SUBCASE("delta signal on path-2 at alpha = 1") {
    const Graph p2 = generate_graph(GraphKind::path, {.n = 2});
    const FractionalBasis b1 = build_basis(p2, 1.0, false);
    Eigen::VectorXcd f = Eigen::VectorXcd::Zero(2);
    f(0) = 1.0;  // delta at the first vertex
    const Eigen::MatrixXcd ft = f_tilde(f, b1);
    const Eigen::MatrixXd chi = b1.gamma.real();
    for (int k = 0; k < 2; ++k)
      for (int kp = 0; kp < 2; ++kp)
        CHECK(std::abs(ft(k, kp) - chi(0, k) * chi(0, kp)) <= 1e-14);
  }
}

TEST_CASE("g_alpha domain ties the kernel to the per-window matrices") {
  const Graph g = generate_graph(GraphKind::ring, {.n = 10});
  const FractionalBasis b = build_basis(g, 0.8, false);
  const WindowSet ws = random_windows(b, 2, 88);
  const Eigen::VectorXcd f = random_complex(10, 89);

  const GAlphaDomain domain = g_alpha_domain(f, ws, b);
  const double scale = std::pow(10.0, 0.8);
  for (int l = 0; l < 2; ++l) {
    for (int k = 0; k < 10; ++k)
      for (int kp = 0; kp < 10; ++kp) {
        const cd expected = scale * std::conj(ws.profiles(k, l)) * domain.f_tilde(k, kp);
        CHECK(std::abs(domain.per_window[l](k, kp) - expected) <= 1e-12);
      }
  }
}

TEST_CASE("fmwgfrft equals the direct transform") {
  const Graph g = generate_graph(GraphKind::random_ring, {.n = 16}, 23);
  const FractionalBasis b = build_basis(g, 0.8, false);
  const WindowSet ws = random_windows(b, 3, 230);
  const Eigen::VectorXcd f = random_complex(16, 24);

  const Eigen::MatrixXcd fast = fmwgfrft(f, ws, b);
  const Eigen::MatrixXcd naive = mwgfrft(f, ws, b).aggregated;
  CHECK(max_abs(fast - naive) <= 1e-9 * f.norm());
}

TEST_CASE("diagonal clustering as alpha tends to zero") {
  SUBCASE("fmwgfrft off-diagonals vanish at alpha = 1e-4") {
    const Graph g = generate_graph(GraphKind::ring, {.n = 32});
    const FractionalBasis b = build_basis(g, 1e-4, false);
    Eigen::MatrixXcd profiles(32, 2);
    profiles.col(0) = heat_window(b, 0.1).profiles.col(0);
    profiles.col(1) = gaussian_window(b, 0.1).profiles.col(0);
    const WindowSet ws = window_set_from_profiles(b, profiles, "hg");
    const Eigen::VectorXcd f = Eigen::VectorXcd::Ones(32);

    auto ratio = [](const Eigen::MatrixXcd& w) {
      double offdiag = 0.0, diag = 0.0;
      for (int i = 0; i < w.rows(); ++i)
        for (int k = 0; k < w.cols(); ++k)
          (i == k ? diag : offdiag) = std::max(i == k ? diag : offdiag, std::abs(w(i, k)));
      return offdiag / diag;
    };
    CHECK(ratio(fmwgfrft(f, ws, b)) <= 1e-3);
    CHECK(ratio(mwgfrft(f, ws, b).aggregated) <= 1e-3);
  }

  SUBCASE("diagonal approaches N^a f(n) sum_l g_hat_l(r_n) at alpha = 1e-6") {
    const Graph g = generate_graph(GraphKind::path, {.n = 12});
    const FractionalBasis b = build_basis(g, 1e-6, false);
    const WindowSet ws = heat_window(b, 0.2);
    const Eigen::VectorXcd f = random_complex(12, 31);
    const Eigen::MatrixXcd w = fmwgfrft(f, ws, b);
    const double scale = std::pow(12.0, 1e-6);
    for (int v = 0; v < 12; ++v) {
      const cd expected = scale * f(v) * ws.profiles(v, 0);
      CHECK(std::abs(w(v, v) - expected) <= 1e-3 * std::abs(expected));
    }
  }
}

TEST_CASE("smwgfrft") {
  const Graph g = generate_graph(GraphKind::ring, {.n = 8});
  const FractionalBasis b = build_basis(g, 0.6, false);
  const FractionalShift s = fractional_shift(g, 0.6);
  const WindowSet ws = random_windows(b, 2, 450);
  const Eigen::VectorXcd f = random_complex(8, 47);

  SUBCASE("matches direct inner products over the atom bank") {
    const CoefficientSet set = smwgfrft(f, ws, s, b);
    const AtomBank bank = shift_modulated_atom_bank(b, s, ws);
    for (int l = 0; l < 2; ++l)
      for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
          const cd pairing = bank.per_window[l].col(i * 8 + k).dot(f);
          CHECK(std::abs(set.per_window[l](i, k) - pairing) <= 1e-10);
        }
  }

  SUBCASE("alpha = 1 degenerates to the classical shift transform") {
    const FractionalBasis b1 = build_basis(g, 1.0, false);
    const FractionalShift s1 = fractional_shift(g, 1.0);
    const WindowSet ws1 = random_windows(b1, 1, 460);
    const CoefficientSet set = smwgfrft(f, ws1, s1, b1);
    const Eigen::MatrixXd chi = b1.gamma.real();
    for (int i = 0; i < 8; ++i)
      for (int k = 0; k < 8; ++k) {
        cd acc = 0.0;
        for (int v = 0; v < 8; ++v)
          acc += g.adjacency(i, v) * f(v) * std::conj(ws1.vertex_windows(v, 0)) * chi(v, k);
        CHECK(std::abs(set.per_window[0](i, k) - std::sqrt(8.0) * acc) <= 1e-10);
      }
  }

  SUBCASE("orthogonal signal gives zero coefficients") {
    const CoefficientSet zero = smwgfrft(Eigen::VectorXcd::Zero(8), ws, s, b);
    CHECK(max_abs(zero.aggregated) == 0.0);
  }

  SUBCASE("diagonal clustering at alpha = 1e-4 on an invertible adjacency") {
    const Graph path = generate_graph(GraphKind::path, {.n = 32});
    const FractionalBasis pb = build_basis(path, 1e-4, false);
    const FractionalShift ps = fractional_shift(path, 1e-4);
    const WindowSet pws = heat_window(pb, 0.1);
    const CoefficientSet set = smwgfrft(Eigen::VectorXcd::Ones(32), pws, ps, pb);
    double offdiag = 0.0, diag = 0.0;
    for (int i = 0; i < 32; ++i)
      for (int k = 0; k < 32; ++k)
        (i == k ? diag : offdiag) =
            std::max(i == k ? diag : offdiag, std::abs(set.aggregated(i, k)));
    CHECK(offdiag <= 1e-3 * diag);
  }
}

TEST_CASE("transform linearity") {
  const Graph g = generate_graph(GraphKind::community, {.n = 12}, 53);
  const FractionalBasis b = build_basis(g, 0.65, false);
  const FractionalShift s = fractional_shift(g, 0.65);
  const WindowSet ws = random_windows(b, 2, 530);
  const Eigen::VectorXcd f = random_complex(12, 54);
  const Eigen::VectorXcd h = random_complex(12, 55);
  const cd a(0.7, -0.2), c(-1.3, 0.4);

  SUBCASE("fmwgfrft") {
    const Eigen::MatrixXcd combined = fmwgfrft((a * f + c * h).eval(), ws, b);
    const Eigen::MatrixXcd split = a * fmwgfrft(f, ws, b) + c * fmwgfrft(h, ws, b);
    CHECK(max_abs(combined - split) <= 1e-10 * (f.norm() + h.norm()));
  }

  SUBCASE("smwgfrft") {
    const Eigen::MatrixXcd combined = smwgfrft((a * f + c * h).eval(), ws, s, b).aggregated;
    const Eigen::MatrixXcd split =
        a * smwgfrft(f, ws, s, b).aggregated + c * smwgfrft(h, ws, s, b).aggregated;
    CHECK(max_abs(combined - split) <= 1e-10 * (f.norm() + h.norm()));
  }
}

TEST_CASE("energy identity ties coefficients to the frame vector") {
  const Graph g = generate_graph(GraphKind::random_ring, {.n = 14}, 57);
  const FractionalBasis b = build_basis(g, 0.7, false);
  const WindowSet ws = random_windows(b, 3, 570);
  const Eigen::VectorXcd f = random_complex(14, 58);

  const CoefficientSet set = mwgfrft(f, ws, b);
  double energy = 0.0;
  for (const auto& block : set.per_window) energy += block.squaredNorm();

  const Eigen::VectorXd c = frame_vector_mw(ws, b);
  double quadratic = 0.0;
  for (int v = 0; v < 14; ++v) quadratic += c(v) * std::norm(f(v));
  CHECK(std::abs(energy - quadratic) <= 1e-8 * quadratic);
}
