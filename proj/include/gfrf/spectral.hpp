// gfrf/spectral.hpp

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

#include <complex>
#include <cstdint>
#include <vector>

#include "gfrf/graph.hpp"

namespace gfrf {

// Eigendecomposition of a real symmetric operator with a fixed convention:
// eigenvalues ascending (ties broken by lexicographic eigenvector order) and,
// in every column, the entry of largest magnitude (lowest index on magnitude
// ties) made positive. The convention pins the otherwise arbitrary signs and
// degenerate-subspace bases so downstream coefficients are reproducible.
struct SpectralDecomposition {
  enum class Source { laplacian, adjacency };

  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns
  Source source = Source::laplacian;
  std::uint64_t graph_hash = 0;
  bool normalized_laplacian = false;

  int n() const { return static_cast<int>(eigenvalues.size()); }
};

SpectralDecomposition eig_sym(const Eigen::MatrixXd& matrix,
                              SpectralDecomposition::Source source =
                                  SpectralDecomposition::Source::laplacian,
                              std::uint64_t graph_hash = 0,
                              bool normalized_laplacian = false);

// Fractional Fourier basis gamma = chi^alpha together with the fractional
// eigenvalues r_k = lambda_k^alpha. chi^alpha is taken through the unitary
// diagonalization of chi with principal-branch powers of its unit-modulus
// eigenvalues (argument in (-pi, pi]), so gamma -> chi as alpha -> 1 and
// gamma -> I as alpha -> 0. lambda_k <= 0 maps to r_k = 0.
struct FractionalBasis {
  double alpha = 1.0;
  Eigen::MatrixXcd gamma;  // unitary
  Eigen::VectorXd r;       // lambda^alpha, ascending
  Eigen::VectorXd lambda;  // source eigenvalues (window kernels evaluate these)
  std::uint64_t graph_hash = 0;
  bool normalized_laplacian = false;

  int n() const { return static_cast<int>(gamma.rows()); }
};

FractionalBasis fractional_basis(const SpectralDecomposition& decomp, double alpha);

// Laplacian -> eig_sym -> fractional_basis in one step.
FractionalBasis build_basis(const Graph& graph, double alpha, bool normalized);

// Forward transform: coefficients gamma^H f.
Eigen::VectorXcd sgfrft(const Eigen::VectorXcd& f, const FractionalBasis& basis);
// Inverse transform: gamma * coefficients.
Eigen::VectorXcd inverse_sgfrft(const Eigen::VectorXcd& coeffs, const FractionalBasis& basis);

// Graph fractional shift S^alpha = V J^alpha V^{-1} from the adjacency
// eigendecomposition, with principal-branch complex powers
// lambda^alpha = exp(alpha (ln|lambda| + i arg lambda)) and 0^alpha = 0.
struct FractionalShift {
  double alpha = 1.0;
  Eigen::MatrixXcd s_alpha;
  std::uint64_t graph_hash = 0;

  int n() const { return static_cast<int>(s_alpha.rows()); }
};

FractionalShift fractional_shift(const Graph& graph, double alpha);

// Real part of a sum of fractional basis columns; mirrors the band signals
// assembled from eigenvectors in the experiments.
Signal eigenvector_combination(const FractionalBasis& basis, const std::vector<int>& indices);

}  // namespace gfrf
