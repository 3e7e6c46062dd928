// atoms.cpp

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

#include "gfrf/atoms.hpp"

#include <cmath>
#include <utility>

#include "gfrf/errors.hpp"

namespace gfrf {

namespace {

double half_power_scale(const FractionalBasis& basis) {
  // sqrt(N)^alpha
  return std::pow(std::sqrt(static_cast<double>(basis.n())), basis.alpha);
}

void check_window_set(const FractionalBasis& basis, const Eigen::MatrixXcd& m) {
  if (m.rows() != basis.n()) throw ValidationError("window set: length does not match basis");
  if (m.cols() < 1) throw ValidationError("window set: at least one window required");
}

void check_atom_index(const WindowSet& ws, AtomIndex idx) {
  if (idx.l < 0 || idx.l >= ws.count()) throw ValidationError("atom index: window out of range");
  if (idx.i < 0 || idx.i >= ws.n()) throw ValidationError("atom index: vertex out of range");
  if (idx.k < 0 || idx.k >= ws.n()) throw ValidationError("atom index: frequency out of range");
}

}  // namespace

WindowSet window_set_from_profiles(const FractionalBasis& basis, Eigen::MatrixXcd profiles,
                                   std::string label) {
  check_window_set(basis, profiles);
  WindowSet ws;
  ws.vertex_windows.noalias() = basis.gamma * profiles;
  ws.profiles = std::move(profiles);
  ws.alpha = basis.alpha;
  ws.graph_hash = basis.graph_hash;
  ws.label = std::move(label);
  return ws;
}

WindowSet window_set_from_vertex_windows(const FractionalBasis& basis,
                                         Eigen::MatrixXcd vertex_windows, std::string label) {
  check_window_set(basis, vertex_windows);
  WindowSet ws;
  ws.profiles.noalias() = basis.gamma.adjoint() * vertex_windows;
  ws.vertex_windows = std::move(vertex_windows);
  ws.alpha = basis.alpha;
  ws.graph_hash = basis.graph_hash;
  ws.label = std::move(label);
  return ws;
}

Eigen::VectorXcd translate_profile(const FractionalBasis& basis,
                                   const Eigen::VectorXcd& profile, int i) {
  if (profile.size() != basis.n()) throw ValidationError("translate: profile length mismatch");
  if (i < 0 || i >= basis.n()) throw ValidationError("translate: vertex index out of range");
  const Eigen::VectorXcd weighted =
      profile.array() * basis.gamma.row(i).conjugate().transpose().array();
  return half_power_scale(basis) * (basis.gamma * weighted);
}

Eigen::VectorXcd translate(const FractionalBasis& basis, const Eigen::VectorXcd& g, int i) {
  return translate_profile(basis, sgfrft(g, basis), i);
}

Eigen::VectorXcd modulate(const FractionalBasis& basis, const Eigen::VectorXcd& g, int k) {
  if (g.size() != basis.n()) throw ValidationError("modulate: signal length mismatch");
  if (k < 0 || k >= basis.n()) throw ValidationError("modulate: frequency index out of range");
  return half_power_scale(basis) * g.cwiseProduct(basis.gamma.col(k));
}

Eigen::VectorXcd mw_atom(const FractionalBasis& basis, const WindowSet& ws, AtomIndex idx) {
  check_atom_index(ws, idx);
  return modulate(basis, translate_profile(basis, ws.profiles.col(idx.l), idx.i), idx.k);
}

Eigen::VectorXcd shift_atom(const FractionalBasis& basis, const FractionalShift& shift,
                            const WindowSet& ws, int l, int i) {
  if (l < 0 || l >= ws.count()) throw ValidationError("shift_atom: window out of range");
  if (i < 0 || i >= ws.n()) throw ValidationError("shift_atom: index out of range");
  if (shift.n() != ws.n()) throw ValidationError("shift_atom: shift size mismatch");
  const Eigen::VectorXcd shifted = shift.s_alpha * ws.vertex_windows.col(l);
  const double floor = 1e-12 * shift.s_alpha.norm() * ws.vertex_windows.col(l).norm();
  if (shifted.norm() <= floor)
    throw NumericError("shift_atom: shifted window vanishes (S^a g = 0)");
  return basis.gamma.col(i).cwiseProduct(shifted);
}

Eigen::VectorXcd shift_modulated_atom(const FractionalBasis& basis,
                                      const FractionalShift& shift, const WindowSet& ws,
                                      AtomIndex idx) {
  check_atom_index(ws, idx);
  if (shift.n() != ws.n())
    throw ValidationError("shift_modulated_atom: shift size mismatch");
  return half_power_scale(basis) *
         basis.gamma.col(idx.k)
             .cwiseProduct(shift.s_alpha.row(idx.i).transpose())
             .cwiseProduct(ws.vertex_windows.col(idx.l));
}

AtomBank mw_atom_bank(const FractionalBasis& basis, const WindowSet& ws) {
  const int n = ws.n();
  AtomBank bank;
  bank.n = n;
  bank.per_window.reserve(ws.count());
  for (int l = 0; l < ws.count(); ++l) {
    Eigen::MatrixXcd atoms(n, n * n);
    for (int i = 0; i < n; ++i) {
      const Eigen::VectorXcd translated = translate_profile(basis, ws.profiles.col(l), i);
      for (int k = 0; k < n; ++k)
        atoms.col(i * n + k) = modulate(basis, translated, k);
    }
    bank.per_window.push_back(std::move(atoms));
  }
  return bank;
}

AtomBank shift_atom_bank(const FractionalBasis& basis, const FractionalShift& shift,
                         const WindowSet& ws) {
  const int n = ws.n();
  AtomBank bank;
  bank.n = n;
  bank.per_window.reserve(ws.count());
  for (int l = 0; l < ws.count(); ++l) {
    Eigen::MatrixXcd atoms(n, n);
    for (int i = 0; i < n; ++i) atoms.col(i) = shift_atom(basis, shift, ws, l, i);
    bank.per_window.push_back(std::move(atoms));
  }
  return bank;
}

AtomBank shift_modulated_atom_bank(const FractionalBasis& basis, const FractionalShift& shift,
                                   const WindowSet& ws) {
  const int n = ws.n();
  AtomBank bank;
  bank.n = n;
  bank.per_window.reserve(ws.count());
  for (int l = 0; l < ws.count(); ++l) {
    Eigen::MatrixXcd atoms(n, n * n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        atoms.col(i * n + k) = shift_modulated_atom(basis, shift, ws, {l, i, k});
    bank.per_window.push_back(std::move(atoms));
  }
  return bank;
}

}  // namespace gfrf
