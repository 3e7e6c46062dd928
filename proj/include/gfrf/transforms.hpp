// gfrf/transforms.hpp

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

#include "gfrf/atoms.hpp"

namespace gfrf {

struct CoefficientMeta {
  std::uint64_t graph_hash = 0;
  double alpha = 1.0;
  std::string window_label;
};

// Vertex-frequency coefficients. per_window[l](i, k) = <f, g_{i,k}^{(l a)}>
// holds the frame-analysis tensor; `aggregated` is its sum over windows, the
// single N x N matrix the fast algorithm produces and spectrograms consume.
struct CoefficientSet {
  std::vector<Eigen::MatrixXcd> per_window;
  Eigen::MatrixXcd aggregated;
  CoefficientMeta meta;

  int count() const { return static_cast<int>(per_window.size()); }
};

// Windowed transform of one window, evaluated atom by atom from the
// definition: entry (i, k) = <f, M_k^a T_i^a g>. The translate is rebuilt for
// every (i, k) pair, which is what gives the direct algorithm its O(N^4)
// per-window cost; rows are independent and are computed on `threads`
// workers (0 picks the hardware count, 1 forces serial).
Eigen::MatrixXcd wgfrft(const Eigen::VectorXcd& f, const Eigen::VectorXcd& profile,
                        const FractionalBasis& basis, int threads = 0);

// Direct multi-window transform: per-window wgfrft slices plus their sum.
CoefficientSet mwgfrft(const Eigen::VectorXcd& f, const WindowSet& ws,
                       const FractionalBasis& basis, int threads = 0);

// f_tilde(k, k') = sum_d f(d) conj(gamma_k'(d)) conj(gamma_k(d)), the
// signal-dependent kernel of the fast algorithm; symmetric in (k, k').
Eigen::MatrixXcd f_tilde(const Eigen::VectorXcd& f, const FractionalBasis& basis);

// G^a-domain representation: per window l,
// G^a_l(k, k') = N^a conj(g_hat_l(r_k)) f_tilde(k, k').
struct GAlphaDomain {
  Eigen::MatrixXcd f_tilde;
  std::vector<Eigen::MatrixXcd> per_window;
};

GAlphaDomain g_alpha_domain(const Eigen::VectorXcd& f, const WindowSet& ws,
                            const FractionalBasis& basis);

// Fast multi-window transform: one f_tilde kernel, a diagonal scaling per
// window, an inverse SGFRFT over the first index, and a final sum over
// windows; O(L N^3) against the direct algorithm's O(L N^4). Agrees with
// mwgfrft(...).aggregated to roundoff.
Eigen::MatrixXcd fmwgfrft(const Eigen::VectorXcd& f, const WindowSet& ws,
                          const FractionalBasis& basis);

// Shift multi-window transform: per_window[l](i, k) = <f, M_k^a S_i^a g_l>,
// evaluated as conj(S^a) diag(f o conj(g_l)) conj(gamma) per window.
CoefficientSet smwgfrft(const Eigen::VectorXcd& f, const WindowSet& ws,
                        const FractionalShift& shift, const FractionalBasis& basis);

}  // namespace gfrf
