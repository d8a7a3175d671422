// SPDX-License-Identifier: Apache-2.0
#include "rssl/sim.hpp"

#include <cmath>
#include <numeric>

namespace rssl {

namespace {

// Rows are mu + scale * (L z). scale = sqrt(gamma) turns the factor of Sigma
// into the Cholesky factor of gamma * Sigma.
void fill_mvn_rows(Matrix& out, int first_row, int count, const Vector& mu,
                   const Eigen::LLT<Matrix>& llt, double scale, Rng& rng) {
  const auto p = mu.size();
  Vector z(p);
  for (int i = 0; i < count; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) z[j] = rng.normal();
    out.row(first_row + i) =
        (mu + scale * (llt.matrixL() * z)).transpose();
  }
}

}  // namespace

Matrix ar_covariance(int p, double rho) {
  if (p < 1) throw config_error("ar_covariance: p must be >= 1");
  if (!(rho >= 0.0 && rho < 1.0))
    throw config_error("ar_covariance: rho must lie in [0, 1)");
  Matrix sigma = Matrix::Constant(p, p, rho);
  sigma.diagonal().setOnes();
  return sigma;
}

Matrix sample_mvn(const Vector& mu, const Matrix& scatter, int count,
                  Rng& rng) {
  if (count < 1) throw config_error("sample_mvn: count must be >= 1");
  if (scatter.rows() != mu.size() || scatter.cols() != mu.size())
    throw config_error("sample_mvn: dimension mismatch");
  const auto llt = cholesky_pd(scatter);
  Matrix out(count, mu.size());
  fill_mvn_rows(out, 0, count, mu, llt, 1.0, rng);
  return out;
}

void validate_config(const ContaminationConfig& config) {
  if (config.n < 1) throw config_error("simulate: n must be >= 1");
  if (config.p < 1) throw config_error("simulate: p must be >= 1");
  if (!(config.epsilon >= 0.0 && config.epsilon < 0.5))
    throw config_error("simulate: epsilon must lie in [0, 0.5)");
  if (!(config.gamma > 0.0)) throw config_error("simulate: gamma must be > 0");
  if (!(config.rho >= 0.0 && config.rho < 1.0))
    throw config_error("simulate: rho must lie in [0, 1)");
}

SimulatedDataset sample_dataset(const ContaminationConfig& config) {
  validate_config(config);
  const int n = config.n;
  const int p = config.p;
  const int n_out =
      static_cast<int>(std::lround(config.epsilon * static_cast<double>(n)));
  if (n_out >= n) throw config_error("simulate: outlier count reaches n");

  Rng rng(config.seed);
  const auto llt = cholesky_pd(ar_covariance(p, config.rho));

  // Inlier block first, then the outlier block, then one shuffle: the stream
  // consumption order is part of the reproducibility contract.
  Matrix blocks(n, p);
  const Vector zero = Vector::Zero(p);
  const Vector shifted = Vector::Constant(p, config.eta);
  fill_mvn_rows(blocks, 0, n - n_out, zero, llt, 1.0, rng);
  if (n_out > 0)
    fill_mvn_rows(blocks, n - n_out, n_out, shifted, llt,
                  std::sqrt(config.gamma), rng);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);

  SimulatedDataset ds;
  ds.data.resize(n, p);
  ds.labels.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    ds.data.row(i) = blocks.row(order[static_cast<std::size_t>(i)]);
    ds.labels[static_cast<std::size_t>(i)] =
        order[static_cast<std::size_t>(i)] >= n - n_out ? 1 : 0;
  }
  ds.config = config;
  return ds;
}

}  // namespace rssl
