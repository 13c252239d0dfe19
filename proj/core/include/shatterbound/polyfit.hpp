/*
   Copyright 2026 The Shatterbound Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <span>

namespace shatterbound {

/// Ordinary-least-squares degree-2 fit a2*x^2 + a1*x + a0 with diagnostics.
///
/// error_pct is the mean absolute percentage error
///   (100/m) * sum |y - yhat| / max(|y|, 1),
/// a scale-free companion to the raw residual sum of squares.
struct QuadraticFit {
    double a2 = 0.0;
    double a1 = 0.0;
    double a0 = 0.0;
    double rss = 0.0;
    double error_pct = 0.0;
    std::size_t m = 0;
};

/// OLS fit over (x, y) pairs. Requires at least 3 points with 3 distinct
/// abscissae; throws DomainError on a rank-deficient design.
QuadraticFit fit_quadratic(std::span<const double> x, std::span<const double> y);

/// a2*x^2 + a1*x + a0.
double evaluate(const QuadraticFit& fit, double x);

} // namespace shatterbound
