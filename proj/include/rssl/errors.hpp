// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace rssl {

/// Invalid parameter values, or a detector invoked outside its regime.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A file could not be opened, read, or written.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed dataset or prediction file contents.
struct format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An estimator could not produce a result.
struct estimation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Cholesky failure: the matrix is singular or indefinite. In this pipeline a
/// singular covariance marks an invalid subsample that callers must reject.
struct not_positive_definite : estimation_error {
  using estimation_error::estimation_error;
};

/// Too few observations to form the requested statistic.
struct degenerate_sample : estimation_error {
  using estimation_error::estimation_error;
};

}  // namespace rssl
