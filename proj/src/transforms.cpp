// transforms.cpp

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

#include "gfrf/transforms.hpp"

#include <cmath>
#include <thread>

#include "gfrf/errors.hpp"

namespace gfrf {

namespace {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void check_signal(const Eigen::VectorXcd& f, const FractionalBasis& basis) {
  if (f.size() != basis.n()) throw ValidationError("transform: signal length mismatch");
}

void check_windows(const WindowSet& ws, const FractionalBasis& basis) {
  if (ws.n() != basis.n()) throw ValidationError("transform: window set does not match basis");
}

// Rows [row_begin, row_end) of the direct windowed transform. Each entry
// materializes its atom from scratch: translate (a dense matrix-vector
// product) then modulate, then the inner product with f.
void wgfrft_rows(const Eigen::VectorXcd& f, const Eigen::VectorXcd& profile,
                 const FractionalBasis& basis, int row_begin, int row_end,
                 Eigen::MatrixXcd& out) {
  const int n = basis.n();
  const double half_scale = std::pow(std::sqrt(static_cast<double>(n)), basis.alpha);
  Eigen::VectorXcd weighted(n), translated(n), atom(n);
  for (int i = row_begin; i < row_end; ++i) {
    for (int k = 0; k < n; ++k) {
      weighted = profile.array() * basis.gamma.row(i).conjugate().transpose().array();
      translated.noalias() = basis.gamma * weighted;
      translated *= half_scale;
      atom = half_scale * translated.cwiseProduct(basis.gamma.col(k));
      out(i, k) = atom.dot(f);  // <f, atom> = sum f(n) conj(atom(n))
    }
  }
}

}  // namespace

Eigen::MatrixXcd wgfrft(const Eigen::VectorXcd& f, const Eigen::VectorXcd& profile,
                        const FractionalBasis& basis, int threads) {
  check_signal(f, basis);
  if (profile.size() != basis.n()) throw ValidationError("wgfrft: profile length mismatch");
  const int n = basis.n();
  Eigen::MatrixXcd out(n, n);

  const int workers = std::min(resolve_threads(threads), n);
  if (workers <= 1) {
    wgfrft_rows(f, profile, basis, 0, n, out);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const int chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int begin = w * chunk;
    const int end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] { wgfrft_rows(f, profile, basis, begin, end, out); });
  }
  for (auto& t : pool) t.join();
  return out;
}

CoefficientSet mwgfrft(const Eigen::VectorXcd& f, const WindowSet& ws,
                       const FractionalBasis& basis, int threads) {
  check_signal(f, basis);
  check_windows(ws, basis);
  CoefficientSet set;
  set.meta = {basis.graph_hash, basis.alpha, ws.label};
  set.per_window.reserve(ws.count());
  for (int l = 0; l < ws.count(); ++l)
    set.per_window.push_back(wgfrft(f, ws.profiles.col(l), basis, threads));
  set.aggregated = set.per_window.front();
  for (int l = 1; l < ws.count(); ++l) set.aggregated += set.per_window[l];
  return set;
}

Eigen::MatrixXcd f_tilde(const Eigen::VectorXcd& f, const FractionalBasis& basis) {
  check_signal(f, basis);
  // gamma^H diag(f) conj(gamma), the matrix form of the scalar definition.
  return basis.gamma.adjoint() * (f.asDiagonal() * basis.gamma.conjugate());
}

GAlphaDomain g_alpha_domain(const Eigen::VectorXcd& f, const WindowSet& ws,
                            const FractionalBasis& basis) {
  check_windows(ws, basis);
  GAlphaDomain domain;
  domain.f_tilde = f_tilde(f, basis);
  const double scale = std::pow(static_cast<double>(basis.n()), basis.alpha);
  domain.per_window.reserve(ws.count());
  for (int l = 0; l < ws.count(); ++l) {
    domain.per_window.push_back(
        (scale * ws.profiles.col(l).conjugate()).asDiagonal() * domain.f_tilde);
  }
  return domain;
}

Eigen::MatrixXcd fmwgfrft(const Eigen::VectorXcd& f, const WindowSet& ws,
                          const FractionalBasis& basis) {
  check_signal(f, basis);
  check_windows(ws, basis);
  const int n = basis.n();
  const double scale = std::pow(static_cast<double>(n), basis.alpha);

  const Eigen::MatrixXcd kernel = f_tilde(f, basis);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd galpha(n, n);
  for (int l = 0; l < ws.count(); ++l) {
    galpha = (scale * ws.profiles.col(l).conjugate()).asDiagonal() * kernel;
    out.noalias() += basis.gamma * galpha;  // inverse SGFRFT over the first index
  }
  return out;
}

CoefficientSet smwgfrft(const Eigen::VectorXcd& f, const WindowSet& ws,
                        const FractionalShift& shift, const FractionalBasis& basis) {
  check_signal(f, basis);
  check_windows(ws, basis);
  if (shift.n() != basis.n()) throw ValidationError("smwgfrft: shift size mismatch");
  const int n = basis.n();
  const double half_scale = std::pow(std::sqrt(static_cast<double>(n)), basis.alpha);

  CoefficientSet set;
  set.meta = {basis.graph_hash, basis.alpha, ws.label};
  set.per_window.reserve(ws.count());
  const Eigen::MatrixXcd shift_conj = shift.s_alpha.conjugate();
  const Eigen::MatrixXcd gamma_conj = basis.gamma.conjugate();
  for (int l = 0; l < ws.count(); ++l) {
    const Eigen::VectorXcd u =
        half_scale * f.cwiseProduct(ws.vertex_windows.col(l).conjugate());
    set.per_window.emplace_back(shift_conj * (u.asDiagonal() * gamma_conj));
  }
  set.aggregated = set.per_window.front();
  for (int l = 1; l < ws.count(); ++l) set.aggregated += set.per_window[l];
  return set;
}

}  // namespace gfrf
