// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "rssl/errors.hpp"

namespace rssl {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Robust location and scatter restricted to `variables`, a strictly
/// increasing list of column indices into the original p. df is the
/// chi-square degrees of freedom to use for cutoffs.
struct RobustEstimate {
  Vector location;
  Matrix scatter;
  std::vector<int> variables;
  int df = 0;
};

/// Column means. Requires at least one row.
Vector sample_mean(const Matrix& X);

/// Covariance with the population convention (divide by the row count).
/// The returned matrix is exactly symmetric entry-for-entry.
/// Throws degenerate_sample for fewer than two rows.
Matrix sample_covariance(const Matrix& X);

/// Cholesky factorization, throwing not_positive_definite on failure.
Eigen::LLT<Matrix> cholesky_pd(const Matrix& M);

/// log(det(M)) = 2 * sum(log(L_ii)) for positive-definite M.
double log_det_pd(const Matrix& M);

/// (x - mu)^T Sigma^{-1} (x - mu) via one triangular solve; Sigma^{-1} is
/// never materialized.
double mahalanobis_sq(const Vector& x, const Vector& mu, const Matrix& scatter);

/// Squared Mahalanobis distance of every row of X, sharing one factorization.
Vector mahalanobis_sq_all(const Matrix& X, const Vector& mu,
                          const Matrix& scatter);

Matrix gather_rows(const Matrix& X, const std::vector<int>& rows);
Matrix gather_cols(const Matrix& X, const std::vector<int>& cols);
Matrix gather(const Matrix& X, const std::vector<int>& rows,
              const std::vector<int>& cols);

bool all_finite(const Matrix& X);

}  // namespace rssl
