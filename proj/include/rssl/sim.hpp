// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "rssl/linalg.hpp"
#include "rssl/rng.hpp"

namespace rssl {

/// Parameters of the contaminated-Gaussian generator. A fraction epsilon of
/// observations comes from N(eta * 1, gamma * Sigma) instead of N(0, Sigma),
/// with Sigma the equicorrelated AR matrix of correlation rho.
struct ContaminationConfig {
  int n = 0;
  int p = 0;
  double epsilon = 0.0;
  double eta = 0.0;
  double gamma = 1.0;
  double rho = 0.0;
  std::uint64_t seed = 0;
};

struct SimulatedDataset {
  Matrix data;              // n x p
  std::vector<int> labels;  // 0 = inlier, 1 = outlier
  ContaminationConfig config;
};

/// (1 - rho) * I_p + rho * 1 1^T: unit diagonal, constant off-diagonal rho.
Matrix ar_covariance(int p, double rho);

/// Each row is mu + L z with L the Cholesky factor of scatter and z standard
/// normal; deterministic given the stream state.
Matrix sample_mvn(const Vector& mu, const Matrix& scatter, int count, Rng& rng);

/// Draws exactly round(epsilon * n) outlier rows, shuffles row order with the
/// same seeded stream, and returns data plus ground-truth labels. A pure
/// function of config: equal configs produce byte-identical datasets.
SimulatedDataset sample_dataset(const ContaminationConfig& config);

void validate_config(const ContaminationConfig& config);

}  // namespace rssl
