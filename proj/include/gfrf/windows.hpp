// gfrf/windows.hpp

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

#include <optional>
#include <vector>

#include "gfrf/atoms.hpp"

namespace gfrf {

// Heat diffusion kernel: profile C exp(-tau lambda_p), C chosen so the
// profile has unit 2-norm. tau > 0.
WindowSet heat_window(const FractionalBasis& basis, double tau);

// Gaussian kernel: profile C exp(-tau lambda_p^2), unit 2-norm. tau > 0.
WindowSet gaussian_window(const FractionalBasis& basis, double tau);

struct DualHeatWindow {
  WindowSet window;
  double mu = 0.0;  // scale actually applied to exp(+tau lambda_p)
};

// Dual heat kernel mu exp(+tau lambda_p). When mu is not given it is chosen
// so the profile has unit 2-norm. Rejects exponents that would overflow.
DualHeatWindow dual_heat_window(const FractionalBasis& basis, double tau,
                                std::optional<double> mu = std::nullopt);

// Translates of a single mother window, g_l = T_{c_l}^a g. With an empty
// center list the centers are evenly spaced: c_l = round(l N / L), l = 0..L-1.
WindowSet translated_family(const FractionalBasis& basis, const WindowSet& mother, int count,
                            const std::vector<int>& centers = {});

// Second-order cardinal B-spline: x on [0,1), 2-x on [1,2], 0 elsewhere.
double bspline_n2(double x);

// Three windows with |g_hat_1|^2 = N2(r-1), |g_hat_2|^2 = N2(r),
// |g_hat_3|^2 = N2(r+1); their squared profiles sum to 1 across [0, 2], so
// the basis must come from a normalized Laplacian (all r_p within [0, 2]).
WindowSet bspline_tight_windows(const FractionalBasis& basis);

// H = I - 2 v v^T for unit v. The generator is normalized before reflecting.
Eigen::MatrixXd householder_matrix(int n, const Eigen::VectorXd& generator);

// The localized generator used in the experiments: v(n) = e^{-(n-1)/2} on the
// first min(10, n) vertices, zero beyond.
Eigen::VectorXd default_householder_generator(int n);

// The n columns of the Householder reflection as an orthonormal window set.
WindowSet householder_windows(const FractionalBasis& basis, const Eigen::VectorXd& generator);

// g_l = gamma_{l-1}: the fractional basis columns as an orthonormal window set.
WindowSet eigenvector_windows(const FractionalBasis& basis);

}  // namespace gfrf
