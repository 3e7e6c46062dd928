// frames.cpp

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

#include "gfrf/frames.hpp"

#include <cmath>
#include <complex>

#include "gfrf/errors.hpp"

namespace gfrf {

namespace {

FrameDiagnostics diagnostics_from_vector(Eigen::VectorXd c, FrameFamily family,
                                         double tight_tol) {
  FrameDiagnostics diag;
  diag.family = family;
  diag.lower = c.minCoeff(&diag.c_min_index);
  diag.upper = c.maxCoeff(&diag.c_max_index);
  diag.is_frame = diag.upper > 0.0 && diag.lower > kSingularCutoff * diag.upper;
  diag.tight = diag.is_frame && (diag.upper - diag.lower) <= tight_tol * diag.upper;
  diag.tight_constant = c.mean();
  diag.c = std::move(c);
  return diag;
}

}  // namespace

Eigen::VectorXd frame_vector_mw(const WindowSet& ws, const FractionalBasis& basis) {
  if (ws.n() != basis.n()) throw ValidationError("frame_vector_mw: size mismatch");
  const Eigen::VectorXd weights = ws.profiles.cwiseAbs2().rowwise().sum();
  const double scale = std::pow(static_cast<double>(basis.n()), 2.0 * basis.alpha);
  return scale * (basis.gamma.cwiseAbs2() * weights);
}

FrameDiagnostics frame_bounds_mw(const WindowSet& ws, const FractionalBasis& basis,
                                 double tight_tol) {
  FrameDiagnostics diag =
      diagnostics_from_vector(frame_vector_mw(ws, basis), FrameFamily::mwgfrff, tight_tol);
  diag.r0_hypothesis = ws.profiles.row(0).squaredNorm() > 0.0;
  return diag;
}

TightCheck is_tight_mw(const WindowSet& ws, const FractionalBasis& basis, double tol) {
  const FrameDiagnostics diag = frame_bounds_mw(ws, basis, tol);
  return {diag.tight, diag.tight_constant};
}

bool tight_spectral_check(const WindowSet& ws, double tol, double* constant) {
  const Eigen::VectorXd weights = ws.profiles.cwiseAbs2().rowwise().sum();
  const double hi = weights.maxCoeff();
  if (constant) *constant = weights.mean();
  if (hi <= 0.0) return false;
  return (hi - weights.minCoeff()) <= tol * hi;
}

DualScaling dual_scaling(const Eigen::VectorXd& c) {
  const double hi = c.maxCoeff();
  if (!(hi > 0.0)) throw NumericError("dual_scaling: frame vector is zero");
  DualScaling out;
  out.d.resize(c.size());
  for (int idx = 0; idx < c.size(); ++idx) {
    if (c(idx) < kSingularCutoff * hi)
      throw NumericError("dual_scaling: singular frame (near-zero frame vector entry)");
    out.d(idx) = 1.0 / c(idx);
  }
  return out;
}

AtomBank canonical_dual(const AtomBank& bank, const Eigen::VectorXd& c) {
  if (c.size() != bank.n) throw ValidationError("canonical_dual: frame vector size mismatch");
  const DualScaling scaling = dual_scaling(c);
  AtomBank dual;
  dual.n = bank.n;
  dual.per_window.reserve(bank.per_window.size());
  for (const Eigen::MatrixXcd& atoms : bank.per_window)
    dual.per_window.push_back(scaling.d.asDiagonal() * atoms);
  return dual;
}

DualWindowCheck verify_dual_windows(const WindowSet& ws, const WindowSet& dual,
                                    const FractionalBasis& basis, double tol) {
  if (ws.count() != dual.count() || ws.n() != dual.n())
    throw ValidationError("verify_dual_windows: window sets must share L and N");
  const Eigen::VectorXcd products =
      (ws.profiles.conjugate().array() * dual.profiles.array()).rowwise().sum();
  const std::complex<double> mean = products.mean();

  DualWindowCheck check;
  check.max_deviation = (products.array() - mean).abs().maxCoeff();
  const double magnitude = std::abs(mean);
  check.mu = mean.real();
  check.ok = magnitude > 0.0 && check.max_deviation <= tol * magnitude &&
             std::abs(mean.imag()) <= tol * magnitude && mean.real() > 0.0;
  if (check.ok) {
    check.reconstruction_constant =
        1.0 / (std::pow(static_cast<double>(ws.n()), 2.0 * basis.alpha) * check.mu);
    check.dual_is_frame = frame_bounds_mw(dual, basis).is_frame;
  }
  return check;
}

Eigen::VectorXd frame_vector_shift(const WindowSet& ws, const FractionalShift& shift) {
  if (ws.n() != shift.n()) throw ValidationError("frame_vector_shift: size mismatch");
  return (shift.s_alpha * ws.vertex_windows).cwiseAbs2().rowwise().sum();
}

FrameDiagnostics frame_bounds_shift(const WindowSet& ws, const FractionalShift& shift,
                                    double tight_tol) {
  return diagnostics_from_vector(frame_vector_shift(ws, shift), FrameFamily::smwgfrff,
                                 tight_tol);
}

TightCheck is_tight_shift(const WindowSet& ws, const FractionalShift& shift, double tol) {
  const FrameDiagnostics diag = frame_bounds_shift(ws, shift, tol);
  return {diag.tight, diag.tight_constant};
}

Eigen::MatrixXcd shift_frame_coefficients(const Eigen::VectorXcd& f, const WindowSet& ws,
                                          const FractionalShift& shift,
                                          const FractionalBasis& basis) {
  if (f.size() != ws.n() || ws.n() != shift.n() || ws.n() != basis.n())
    throw ValidationError("shift_frame_coefficients: size mismatch");
  const Eigen::MatrixXcd shifted = shift.s_alpha * ws.vertex_windows;  // n x L
  Eigen::MatrixXcd coeffs(ws.n(), ws.count());
  for (int l = 0; l < ws.count(); ++l) {
    // <f, gamma_i o h> over all i at once: gamma^H (f o conj(h)).
    coeffs.col(l) = basis.gamma.adjoint() * f.cwiseProduct(shifted.col(l).conjugate());
  }
  return coeffs;
}

Eigen::VectorXcd reconstruct(const std::vector<Eigen::MatrixXcd>& coefficients,
                             const AtomBank& bank, double constant) {
  if (coefficients.size() != bank.per_window.size())
    throw ValidationError("reconstruct: window count mismatch");
  const int n = bank.n;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (std::size_t l = 0; l < coefficients.size(); ++l) {
    const Eigen::MatrixXcd& coeff = coefficients[l];
    const Eigen::MatrixXcd& atoms = bank.per_window[l];
    Eigen::VectorXcd flat(atoms.cols());
    if (coeff.rows() == n && coeff.cols() == n && atoms.cols() == n * n) {
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) flat(i * n + k) = coeff(i, k);
    } else if (coeff.cols() == 1 && coeff.rows() == atoms.cols()) {
      flat = coeff.col(0);
    } else {
      throw ValidationError("reconstruct: coefficient shape does not match bank");
    }
    out.noalias() += atoms * flat;
  }
  return constant * out;
}

}  // namespace gfrf
