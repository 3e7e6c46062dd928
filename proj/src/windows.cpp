// windows.cpp

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

#include "gfrf/windows.hpp"

#include <cmath>
#include <set>

#include "gfrf/errors.hpp"

namespace gfrf {

namespace {

Eigen::MatrixXcd as_column(const Eigen::VectorXd& v) {
  Eigen::MatrixXcd m(v.size(), 1);
  m.col(0) = v.cast<std::complex<double>>();
  return m;
}

}  // namespace

WindowSet heat_window(const FractionalBasis& basis, double tau) {
  if (!(tau > 0.0)) throw ValidationError("heat_window: tau must be positive");
  Eigen::VectorXd profile = (-tau * basis.lambda.array()).exp();
  profile /= profile.norm();
  return window_set_from_profiles(basis, as_column(profile), "heat");
}

WindowSet gaussian_window(const FractionalBasis& basis, double tau) {
  if (!(tau > 0.0)) throw ValidationError("gaussian_window: tau must be positive");
  Eigen::VectorXd profile = (-tau * basis.lambda.array().square()).exp();
  profile /= profile.norm();
  return window_set_from_profiles(basis, as_column(profile), "gaussian");
}

DualHeatWindow dual_heat_window(const FractionalBasis& basis, double tau,
                                std::optional<double> mu) {
  if (tau < 0.0) throw ValidationError("dual_heat_window: tau must be nonnegative");
  if (mu && !(*mu > 0.0)) throw ValidationError("dual_heat_window: mu must be positive");
  if (tau * basis.lambda.maxCoeff() > 700.0)
    throw NumericError("dual_heat_window: exp(tau * lambda) overflows");
  Eigen::VectorXd raw = (tau * basis.lambda.array()).exp();
  const double scale = mu ? *mu : 1.0 / raw.norm();
  DualHeatWindow out;
  out.mu = scale;
  out.window = window_set_from_profiles(basis, as_column((scale * raw).eval()), "dual_heat");
  return out;
}

WindowSet translated_family(const FractionalBasis& basis, const WindowSet& mother, int count,
                            const std::vector<int>& centers) {
  if (mother.count() != 1)
    throw ValidationError("translated_family: mother set must hold a single window");
  if (mother.n() != basis.n())
    throw ValidationError("translated_family: mother window does not match basis");
  const int n = basis.n();
  if (count < 1 || count > n) throw ValidationError("translated_family: need 1 <= L <= N");

  std::vector<int> at = centers;
  if (at.empty()) {
    at.resize(count);
    for (int l = 0; l < count; ++l)
      at[l] = static_cast<int>(std::llround(static_cast<double>(l) * n / count));
  }
  if (static_cast<int>(at.size()) != count)
    throw ValidationError("translated_family: center list length must equal L");
  std::set<int> seen;
  for (int c : at) {
    if (c < 0 || c >= n) throw ValidationError("translated_family: center out of range");
    if (!seen.insert(c).second) throw ValidationError("translated_family: duplicate center");
  }

  Eigen::MatrixXcd windows(n, count);
  for (int l = 0; l < count; ++l)
    windows.col(l) = translate_profile(basis, mother.profiles.col(0), at[l]);
  return window_set_from_vertex_windows(basis, std::move(windows),
                                        mother.label + "_translated");
}

double bspline_n2(double x) {
  if (x >= 0.0 && x < 1.0) return x;
  if (x >= 1.0 && x <= 2.0) return 2.0 - x;
  return 0.0;
}

WindowSet bspline_tight_windows(const FractionalBasis& basis) {
  const int n = basis.n();
  for (int p = 0; p < n; ++p) {
    if (basis.r(p) < -1e-12 || basis.r(p) > 2.0 + 1e-12)
      throw ValidationError(
          "bspline_tight_windows: fractional spectrum outside [0, 2]; "
          "build the basis from a normalized Laplacian");
  }
  Eigen::MatrixXcd profiles(n, 3);
  for (int p = 0; p < n; ++p) {
    const double r = basis.r(p);
    profiles(p, 0) = std::sqrt(bspline_n2(r - 1.0));
    profiles(p, 1) = std::sqrt(bspline_n2(r));
    profiles(p, 2) = std::sqrt(bspline_n2(r + 1.0));
  }
  return window_set_from_profiles(basis, std::move(profiles), "bspline_n2");
}

Eigen::MatrixXd householder_matrix(int n, const Eigen::VectorXd& generator) {
  if (generator.size() != n) throw ValidationError("householder_matrix: generator length mismatch");
  const double norm = generator.norm();
  if (norm <= 0.0) throw ValidationError("householder_matrix: zero generator");
  const Eigen::VectorXd v = generator / norm;
  return Eigen::MatrixXd::Identity(n, n) - 2.0 * v * v.transpose();
}

Eigen::VectorXd default_householder_generator(int n) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  for (int idx = 0; idx < std::min(n, 10); ++idx) v(idx) = std::exp(-0.5 * idx);
  return v;
}

WindowSet householder_windows(const FractionalBasis& basis, const Eigen::VectorXd& generator) {
  const Eigen::MatrixXd h = householder_matrix(basis.n(), generator);
  return window_set_from_vertex_windows(basis, h.cast<std::complex<double>>(), "householder");
}

WindowSet eigenvector_windows(const FractionalBasis& basis) {
  return window_set_from_vertex_windows(basis, basis.gamma, "eigenvector");
}

}  // namespace gfrf
