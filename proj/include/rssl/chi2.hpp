// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace rssl {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
/// Series expansion for x < a + 1, Lentz continued fraction otherwise.
double regularized_gamma_p(double a, double x);

/// P(chi2_df <= x).
double chi2_cdf(int df, double x);

/// The value q with P(chi2_df <= q) = prob, by bracketed bisection on the
/// regularized incomplete gamma; converges to 1e-10 relative interval width.
/// prob must lie in [0, 1); prob = 0 yields 0.
double chi2_quantile(int df, double prob);

}  // namespace rssl
