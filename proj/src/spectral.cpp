// spectral.cpp

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

#include "gfrf/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "gfrf/errors.hpp"

namespace gfrf {

namespace {

using cd = std::complex<double>;

// Principal-branch power with 0^alpha = 0.
cd principal_power(double value, double alpha) {
  if (value == 0.0) return cd(0.0, 0.0);
  if (value > 0.0) return cd(std::pow(value, alpha), 0.0);
  return std::polar(std::pow(-value, alpha), alpha * std::numbers::pi);
}

void normalize_column_signs(Eigen::MatrixXd& vectors) {
  for (int c = 0; c < vectors.cols(); ++c) {
    int pivot = 0;
    double best = -1.0;
    for (int r = 0; r < vectors.rows(); ++r) {
      const double mag = std::abs(vectors(r, c));
      if (mag > best) {  // strict: magnitude ties keep the lowest index
        best = mag;
        pivot = r;
      }
    }
    if (vectors(pivot, c) < 0.0) vectors.col(c) = -vectors.col(c);
  }
}

bool lexicographic_less(const Eigen::MatrixXd& vectors, int a, int b) {
  for (int r = 0; r < vectors.rows(); ++r) {
    if (vectors(r, a) != vectors(r, b)) return vectors(r, a) < vectors(r, b);
  }
  return false;
}

}  // namespace

SpectralDecomposition eig_sym(const Eigen::MatrixXd& matrix,
                              SpectralDecomposition::Source source,
                              std::uint64_t graph_hash, bool normalized_laplacian) {
  if (matrix.rows() != matrix.cols()) throw ValidationError("eig_sym: matrix must be square");
  const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12)
    throw ValidationError("eig_sym: input not symmetric (max asymmetry " +
                          std::to_string(asym) + ")");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
  if (solver.info() != Eigen::Success) throw NumericError("eig_sym: eigensolver failed");

  Eigen::VectorXd values = solver.eigenvalues();
  Eigen::MatrixXd vectors = solver.eigenvectors();
  normalize_column_signs(vectors);

  const int n = static_cast<int>(values.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (values(a) != values(b)) return values(a) < values(b);
    return lexicographic_less(vectors, a, b);
  });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (int c = 0; c < n; ++c) {
    out.eigenvalues(c) = values(order[c]);
    out.eigenvectors.col(c) = vectors.col(order[c]);
  }
  out.source = source;
  out.graph_hash = graph_hash;
  out.normalized_laplacian = normalized_laplacian;

  const double scale = std::max(out.eigenvalues.cwiseAbs().maxCoeff(), 1e-300);
  const double residual =
      (matrix * out.eigenvectors - out.eigenvectors * out.eigenvalues.asDiagonal())
          .cwiseAbs()
          .maxCoeff();
  if (residual > 1e-8 * scale) {
    std::ostringstream msg;
    msg << "eig_sym: decomposition residual " << residual << " exceeds tolerance";
    throw NumericError(msg.str());
  }
  return out;
}

FractionalBasis fractional_basis(const SpectralDecomposition& decomp, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw ValidationError("fractional_basis: alpha must lie in (0, 1]");
  if (decomp.source != SpectralDecomposition::Source::laplacian)
    throw ValidationError("fractional_basis: decomposition must come from a Laplacian");
  const int n = decomp.n();
  const double lambda_max = decomp.eigenvalues.cwiseAbs().maxCoeff();
  if (decomp.eigenvalues.minCoeff() < -1e-9 * std::max(lambda_max, 1.0))
    throw ValidationError("fractional_basis: spectrum is not positive semidefinite");

  FractionalBasis basis;
  basis.alpha = alpha;
  basis.lambda = decomp.eigenvalues;
  basis.graph_hash = decomp.graph_hash;
  basis.normalized_laplacian = decomp.normalized_laplacian;

  // Numerically-zero eigenvalues (the constant mode of a connected graph)
  // count as exact zeros; 0^alpha = 0 keeps r_0 = 0 at every order.
  const double zero_cut = 1e-12 * std::max(lambda_max, 1e-300);
  basis.r.resize(n);
  for (int k = 0; k < n; ++k) {
    const double lk = decomp.eigenvalues(k);
    basis.r(k) = lk <= zero_cut ? 0.0 : std::pow(lk, alpha);
  }

  if (alpha == 1.0) {
    basis.gamma = decomp.eigenvectors.cast<cd>();
    return basis;
  }

  // chi is orthogonal, hence normal: its complex Schur form is diagonal up to
  // roundoff and the Schur vectors are an orthonormal eigenbasis. Powers of
  // the unit-modulus Schur diagonal give chi^alpha with a unitary result.
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(decomp.eigenvectors.cast<cd>());
  if (schur.info() != Eigen::Success)
    throw NumericError("fractional_basis: Schur decomposition failed");
  const Eigen::MatrixXcd& u = schur.matrixU();
  Eigen::VectorXcd powers(n);
  for (int k = 0; k < n; ++k) {
    const cd t = schur.matrixT()(k, k);
    powers(k) = std::polar(std::pow(std::abs(t), alpha), alpha * std::arg(t));
  }
  basis.gamma.noalias() = u * powers.asDiagonal() * u.adjoint();

  const double unitarity =
      (basis.gamma * basis.gamma.adjoint() - Eigen::MatrixXcd::Identity(n, n))
          .cwiseAbs()
          .maxCoeff();
  if (unitarity > 1e-8) {
    std::ostringstream msg;
    msg << "fractional_basis: unitarity residual " << unitarity;
    throw NumericError(msg.str());
  }
  return basis;
}

FractionalBasis build_basis(const Graph& graph, double alpha, bool normalized) {
  const Eigen::MatrixXd lap = build_laplacian(graph, normalized);
  const SpectralDecomposition decomp =
      eig_sym(lap, SpectralDecomposition::Source::laplacian, graph.hash, normalized);
  return fractional_basis(decomp, alpha);
}

Eigen::VectorXcd sgfrft(const Eigen::VectorXcd& f, const FractionalBasis& basis) {
  if (f.size() != basis.gamma.rows())
    throw ValidationError("sgfrft: signal length does not match basis");
  return basis.gamma.adjoint() * f;
}

Eigen::VectorXcd inverse_sgfrft(const Eigen::VectorXcd& coeffs, const FractionalBasis& basis) {
  if (coeffs.size() != basis.gamma.rows())
    throw ValidationError("inverse_sgfrft: coefficient length does not match basis");
  return basis.gamma * coeffs;
}

FractionalShift fractional_shift(const Graph& graph, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw ValidationError("fractional_shift: alpha must lie in (0, 1]");
  const SpectralDecomposition decomp =
      eig_sym(graph.adjacency, SpectralDecomposition::Source::adjacency, graph.hash);
  const int n = decomp.n();
  const double scale = decomp.eigenvalues.cwiseAbs().maxCoeff();

  Eigen::VectorXcd jalpha(n);
  for (int k = 0; k < n; ++k) {
    double lk = decomp.eigenvalues(k);
    if (std::abs(lk) <= 1e-12 * std::max(scale, 1e-300)) lk = 0.0;
    jalpha(k) = principal_power(lk, alpha);
  }

  FractionalShift shift;
  shift.alpha = alpha;
  shift.graph_hash = graph.hash;
  const Eigen::MatrixXcd v = decomp.eigenvectors.cast<cd>();
  shift.s_alpha.noalias() = v * jalpha.asDiagonal() * v.transpose();
  return shift;
}

Signal eigenvector_combination(const FractionalBasis& basis, const std::vector<int>& indices) {
  if (indices.empty()) throw ValidationError("eigenvector_combination: no indices given");
  const int n = basis.n();
  Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(n);
  for (int k : indices) {
    if (k < 0 || k >= n) throw ValidationError("eigenvector_combination: index out of range");
    sum += basis.gamma.col(k);
  }
  Signal s;
  s.graph_hash = basis.graph_hash;
  s.values = sum.real().cast<cd>();
  return s;
}

}  // namespace gfrf
