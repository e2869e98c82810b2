// Copyright 2026 The bornsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bornsim/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bornsim/errors.hpp"

namespace bornsim {
namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxIter = 10'000;

// Lower series: P(a, x) = x^a e^-x / Gamma(a+1) * sum x^k / ((a+1)...(a+k)).
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int k = 1; k < kMaxIter; ++k) {
    term *= x / (a + k);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x), modified Lentz.
double gamma_q_fraction(double a, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double an = -i * (i - a);
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

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) {
    throw RangeError("regularized_gamma_q requires a > 0 and x >= 0");
  }
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < a + 1.0) return std::clamp(1.0 - gamma_p_series(a, x), 0.0, 1.0);
  return std::clamp(gamma_q_fraction(a, x), 0.0, 1.0);
}

double chi_square_sf(double x, int dof) {
  if (dof < 0) throw RangeError("negative degrees of freedom");
  if (std::isnan(x)) throw RangeError("chi-square statistic is NaN");
  if (x <= 0.0) return 1.0;
  if (dof == 0) return 0.0;
  return regularized_gamma_q(0.5 * dof, 0.5 * x);
}

double kolmogorov_sf(double lambda) {
  if (std::isnan(lambda)) throw RangeError("Kolmogorov argument is NaN");
  if (lambda <= 0.0) return 1.0;
  constexpr double kTruncate = 1e-12;
  constexpr double pi = std::numbers::pi;
  if (lambda < 1.0) {
    // Theta-function form converges quickly for small lambda:
    // CDF = sqrt(2 pi) / lambda * sum exp(-(2k-1)^2 pi^2 / (8 lambda^2)).
    const double scale = -pi * pi / (8.0 * lambda * lambda);
    double sum = 0.0;
    for (int k = 1; k < kMaxIter; ++k) {
      const double odd = 2.0 * k - 1.0;
      const double term = std::exp(odd * odd * scale);
      sum += term;
      if (term < kTruncate) break;
    }
    const double cdf = std::sqrt(2.0 * pi) / lambda * sum;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k < kMaxIter; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    if (term < kTruncate) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace bornsim
