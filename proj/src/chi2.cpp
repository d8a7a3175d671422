// SPDX-License-Identifier: Apache-2.0
#include "rssl/chi2.hpp"

#include <algorithm>
#include <cmath>

#include "rssl/errors.hpp"

namespace rssl {

namespace {

constexpr int kMaxIter = 100000;
constexpr double kEps = 1e-16;

// P(a,x) = x^a e^{-x} / Gamma(a) * sum_{k>=0} x^k / (a (a+1) ... (a+k)),
// convergent for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int i = 0; i < kMaxIter; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Q(a,x) by the modified Lentz continued fraction, stable for x >= a + 1.
double gamma_q_continued_fraction(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double regularized_gamma_p(double a, double x) {
  if (!(a > 0.0)) throw config_error("regularized_gamma_p: a must be > 0");
  if (!(x >= 0.0)) throw config_error("regularized_gamma_p: x must be >= 0");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_continued_fraction(a, x);
}

double chi2_cdf(int df, double x) {
  if (df < 1) throw config_error("chi2_cdf: df must be >= 1");
  if (x <= 0.0) return 0.0;
  return regularized_gamma_p(0.5 * df, 0.5 * x);
}

double chi2_quantile(int df, double prob) {
  if (df < 1) throw config_error("chi2_quantile: df must be >= 1");
  if (!(prob >= 0.0 && prob < 1.0))
    throw config_error("chi2_quantile: prob must lie in [0, 1)");
  if (prob == 0.0) return 0.0;
  double lo = 0.0;
  double hi = df + 10.0 * std::sqrt(2.0 * static_cast<double>(df)) + 10.0;
  while (chi2_cdf(df, hi) < prob) hi *= 2.0;
  while (hi - lo > 1e-10 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (chi2_cdf(df, mid) < prob)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace rssl
