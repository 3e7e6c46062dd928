// gfrf/atoms.hpp

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

#include <string>
#include <vector>

#include "gfrf/spectral.hpp"

namespace gfrf {

// A family of L window functions kept in both representations: spectral
// profiles g_hat_l over r_0..r_{N-1} (columns of `profiles`) and the vertex
// windows g_l = inverse SGFRFT of the profiles (columns of `vertex_windows`).
// The two stay consistent by construction. Degenerate all-zero sets are
// representable so that frame diagnostics can report on them.
struct WindowSet {
  Eigen::MatrixXcd profiles;        // n x L
  Eigen::MatrixXcd vertex_windows;  // n x L
  double alpha = 1.0;
  std::uint64_t graph_hash = 0;
  std::string label;

  int n() const { return static_cast<int>(profiles.rows()); }
  int count() const { return static_cast<int>(profiles.cols()); }
};

WindowSet window_set_from_profiles(const FractionalBasis& basis,
                                   Eigen::MatrixXcd profiles, std::string label);
WindowSet window_set_from_vertex_windows(const FractionalBasis& basis,
                                         Eigen::MatrixXcd vertex_windows,
                                         std::string label);

// (window l, vertex i, frequency k), all 0-based.
struct AtomIndex {
  int l = 0;
  int i = 0;
  int k = 0;
};

// (T_i^a g)(n) = sqrt(N)^a sum_p g_hat(r_p) conj(gamma_p(i)) gamma_p(n).
Eigen::VectorXcd translate(const FractionalBasis& basis, const Eigen::VectorXcd& g, int i);
// Same operator applied directly to a spectral profile.
Eigen::VectorXcd translate_profile(const FractionalBasis& basis,
                                   const Eigen::VectorXcd& profile, int i);

// (M_k^a g)(n) = sqrt(N)^a g(n) gamma_k(n).
Eigen::VectorXcd modulate(const FractionalBasis& basis, const Eigen::VectorXcd& g, int k);

// Multi-windowed atom g_{i,k}^{(l a)} = M_k^a T_i^a g_l.
Eigen::VectorXcd mw_atom(const FractionalBasis& basis, const WindowSet& ws, AtomIndex idx);

// Shift atom g_{i,l} = gamma_i o (S^a g_l); rejects S^a g_l = 0.
Eigen::VectorXcd shift_atom(const FractionalBasis& basis, const FractionalShift& shift,
                            const WindowSet& ws, int l, int i);

// Modulated shift atom (M_k^a S_i^a g_l)(n) = sqrt(N)^a gamma_k(n) s_i(n) g_l(n),
// with s_i the (non-conjugated) i-th row of S^a applied entrywise.
Eigen::VectorXcd shift_modulated_atom(const FractionalBasis& basis,
                                      const FractionalShift& shift, const WindowSet& ws,
                                      AtomIndex idx);

// Materialized atom family, one matrix per window. Modulated families store
// n*n columns ordered by i*n + k; the plain shift family stores n columns
// ordered by i. Intended for desk-scale diagnostics and reconstruction.
struct AtomBank {
  std::vector<Eigen::MatrixXcd> per_window;
  int n = 0;

  int count() const { return static_cast<int>(per_window.size()); }
  int atoms_per_window() const {
    return per_window.empty() ? 0 : static_cast<int>(per_window.front().cols());
  }
};

AtomBank mw_atom_bank(const FractionalBasis& basis, const WindowSet& ws);
AtomBank shift_atom_bank(const FractionalBasis& basis, const FractionalShift& shift,
                         const WindowSet& ws);
AtomBank shift_modulated_atom_bank(const FractionalBasis& basis,
                                   const FractionalShift& shift, const WindowSet& ws);

}  // namespace gfrf
