// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "rssl/linalg.hpp"

namespace rssl {

/// Concentration-step MCD with random restarts.
struct McdConfig {
  int h = 0;  // subset size; 0 = floor((n+p+1)/2) clamped into [ceil(n/2), n-1]
  int n_starts = 10;
  int max_iter = 100;
  std::uint64_t seed = 0;
};

struct McdResult {
  RobustEstimate estimate;     // over all p variables, df = p
  std::vector<int> h_indices;  // winning subset, sorted
  double objective = 0.0;      // log-determinant of the winning covariance
  int iterations = 0;          // C-steps executed by the winning start
};

int default_h(int n, int p);

/// One concentration step: re-select the h observations closest in
/// Mahalanobis distance to the subset's own estimate. The new subset's
/// covariance log-determinant never exceeds the old one.
/// Throws not_positive_definite when the subset covariance is singular,
/// in which case callers discard this start.
std::vector<int> c_step(const Matrix& X, const std::vector<int>& subset);

McdResult mcd_fit(const Matrix& X, const McdConfig& config);

/// Deterministic core: iterate C-steps from each given start until the subset
/// stabilizes, the determinant decrease falls below 1e-12, or max_iter is hit;
/// returns the smallest-determinant result (ties by lowest start index).
McdResult mcd_fit_with_starts(const Matrix& X,
                              const std::vector<std::vector<int>>& starts,
                              int max_iter);

}  // namespace rssl
