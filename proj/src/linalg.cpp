// SPDX-License-Identifier: Apache-2.0
#include "rssl/linalg.hpp"

#include <cmath>

namespace rssl {

Vector sample_mean(const Matrix& X) {
  if (X.rows() < 1 || X.cols() < 1)
    throw config_error("sample_mean: matrix must be nonempty");
  return X.colwise().mean();
}

Matrix sample_covariance(const Matrix& X) {
  const auto n = X.rows();
  if (n < 2)
    throw degenerate_sample("sample_covariance: need at least 2 observations");
  const Matrix centered = X.rowwise() - X.colwise().mean();
  Matrix cov = Matrix::Zero(X.cols(), X.cols());
  cov.selfadjointView<Eigen::Lower>().rankUpdate(centered.transpose(),
                                                 1.0 / static_cast<double>(n));
  // Mirror the computed lower triangle so both halves are bitwise equal.
  cov.triangularView<Eigen::StrictlyUpper>() = cov.transpose();
  return cov;
}

Eigen::LLT<Matrix> cholesky_pd(const Matrix& M) {
  Eigen::LLT<Matrix> llt(M);
  if (llt.info() != Eigen::Success)
    throw not_positive_definite("matrix is not positive definite");
  return llt;
}

double log_det_pd(const Matrix& M) {
  const auto llt = cholesky_pd(M);
  return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

double mahalanobis_sq(const Vector& x, const Vector& mu,
                      const Matrix& scatter) {
  if (x.size() != mu.size() || scatter.rows() != x.size() ||
      scatter.cols() != x.size())
    throw config_error("mahalanobis_sq: dimension mismatch");
  const auto llt = cholesky_pd(scatter);
  Vector whitened = x - mu;
  llt.matrixL().solveInPlace(whitened);
  return whitened.squaredNorm();
}

Vector mahalanobis_sq_all(const Matrix& X, const Vector& mu,
                          const Matrix& scatter) {
  if (X.cols() != mu.size() || scatter.rows() != mu.size() ||
      scatter.cols() != mu.size())
    throw config_error("mahalanobis_sq_all: dimension mismatch");
  const auto llt = cholesky_pd(scatter);
  Matrix whitened = (X.rowwise() - mu.transpose()).transpose();
  llt.matrixL().solveInPlace(whitened);
  return whitened.colwise().squaredNorm();
}

Matrix gather_rows(const Matrix& X, const std::vector<int>& rows) {
  Matrix out(static_cast<Eigen::Index>(rows.size()), X.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    out.row(static_cast<Eigen::Index>(i)) = X.row(rows[i]);
  return out;
}

Matrix gather_cols(const Matrix& X, const std::vector<int>& cols) {
  Matrix out(X.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    out.col(static_cast<Eigen::Index>(j)) = X.col(cols[j]);
  return out;
}

Matrix gather(const Matrix& X, const std::vector<int>& rows,
              const std::vector<int>& cols) {
  Matrix out(static_cast<Eigen::Index>(rows.size()),
             static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          X(rows[i], cols[j]);
  return out;
}

bool all_finite(const Matrix& X) { return X.allFinite(); }

}  // namespace rssl
