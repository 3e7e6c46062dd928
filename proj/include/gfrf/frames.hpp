// gfrf/frames.hpp

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

#include <vector>

#include "gfrf/atoms.hpp"

namespace gfrf {

// Relative spread (max - min) / max below which a frame vector counts as
// constant; floating-point entries are never exactly equal.
inline constexpr double kTightTolerance = 1e-8;

// Entries of c below this fraction of max(c) are treated as zero, both for
// the frame decision and for dual-scaling inversion.
inline constexpr double kSingularCutoff = 1e-12;

enum class FrameFamily { mwgfrff, smwgfrff };

// Diagnostics for a diagonal frame operator S f = c o f: the frame vector c,
// the optimal bounds A = min(c), B = max(c), and the tightness verdict.
struct FrameDiagnostics {
  Eigen::VectorXd c;
  double lower = 0.0;          // A
  double upper = 0.0;          // B
  bool is_frame = false;       // all c_n above the singular cutoff
  bool tight = false;
  double tight_constant = 0.0; // mean(c), meaningful when tight
  FrameFamily family = FrameFamily::mwgfrff;
  int c_min_index = 0;
  int c_max_index = 0;
  // Sufficient frame hypothesis sum_l |g_hat_l(r_0)|^2 != 0; the verdict in
  // is_frame comes from c itself. Always true for the shift family.
  bool r0_hypothesis = true;
};

struct DualScaling {
  Eigen::VectorXd d;  // d_n = 1 / c_n
  double mu = 0.0;    // dual-window constant when produced by verify_dual_windows
};

struct TightCheck {
  bool tight = false;
  double constant = 0.0;  // mean of the frame vector
};

// c_n = N^a sum_l ||T_n^a g_l||^2, evaluated through the spectral expansion
// c_n = N^{2a} sum_p sum_l |g_hat_l(r_p)|^2 |gamma_p(n)|^2.
Eigen::VectorXd frame_vector_mw(const WindowSet& ws, const FractionalBasis& basis);

FrameDiagnostics frame_bounds_mw(const WindowSet& ws, const FractionalBasis& basis,
                                 double tight_tol = kTightTolerance);

TightCheck is_tight_mw(const WindowSet& ws, const FractionalBasis& basis,
                       double tol = kTightTolerance);

// Sufficient (not necessary) tightness test: sum_l |g_hat_l(r_p)|^2 constant
// over p. Returns the constant through `constant` when non-null.
bool tight_spectral_check(const WindowSet& ws, double tol = 1e-9, double* constant = nullptr);

// d = 1 / c; throws NumericError when c has entries below the singular cutoff.
DualScaling dual_scaling(const Eigen::VectorXd& c);

// Canonical dual atoms d o g, the image of the bank under the inverse frame
// operator.
AtomBank canonical_dual(const AtomBank& bank, const Eigen::VectorXd& c);

struct DualWindowCheck {
  bool ok = false;
  double mu = 0.0;                     // constant value of sum_l conj(g_hat_l) gt_hat_l
  double max_deviation = 0.0;          // max_p |product_p - mu|
  double reconstruction_constant = 0;  // C = 1 / (N^{2a} mu)
  bool dual_is_frame = false;          // Cauchy-Schwarz consequence, verified directly
};

// Checks sum_l conj(g_hat_l(r_p)) gt_hat_l(r_p) = mu for all p within
// tol * |mu| and that mu is real positive.
DualWindowCheck verify_dual_windows(const WindowSet& ws, const WindowSet& dual,
                                    const FractionalBasis& basis, double tol = 1e-8);

// c_k = s_k G conj(s_k)^T with G = sum_l g_l g_l^H and s_k the k-th row of
// S^a; evaluated as sum_l |(S^a g_l)(k)|^2.
Eigen::VectorXd frame_vector_shift(const WindowSet& ws, const FractionalShift& shift);

FrameDiagnostics frame_bounds_shift(const WindowSet& ws, const FractionalShift& shift,
                                    double tight_tol = kTightTolerance);

TightCheck is_tight_shift(const WindowSet& ws, const FractionalShift& shift,
                          double tol = kTightTolerance);

// Analysis against the shift atoms: entry (i, l) = <f, g_{i,l}>.
Eigen::MatrixXcd shift_frame_coefficients(const Eigen::VectorXcd& f, const WindowSet& ws,
                                          const FractionalShift& shift,
                                          const FractionalBasis& basis);

// Synthesis f = C sum_{l,i,k} coeff(l,i,k) atom(l,i,k). Coefficient blocks are
// n x n matrices indexed (i, k) for modulated banks, or n x 1 columns indexed
// by i for the plain shift bank.
Eigen::VectorXcd reconstruct(const std::vector<Eigen::MatrixXcd>& coefficients,
                             const AtomBank& bank, double constant);

}  // namespace gfrf
