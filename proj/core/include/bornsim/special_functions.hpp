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

#pragma once

namespace bornsim {

// Regularized upper incomplete gamma function Q(a, x) = Gamma(a, x) / Gamma(a)
// for a > 0, x >= 0.
double regularized_gamma_q(double a, double x);

// P(X >= x) for X ~ chi-square with `dof` degrees of freedom. With dof = 0
// the distribution is a point mass at 0.
double chi_square_sf(double x, int dof);

// Survival function of the Kolmogorov distribution,
// P(sup |B(t)| > lambda) = 2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 lambda^2).
double kolmogorov_sf(double lambda);

}  // namespace bornsim
