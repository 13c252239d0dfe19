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

#include "shatterbound/polyfit.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "shatterbound/errors.hpp"

namespace shatterbound {

namespace {

constexpr std::size_t kTerms = 3;

/// In-place Householder QR of the m x 3 Vandermonde design matrix, applied
/// to the right-hand side as well. Returns false when the triangular factor
/// is numerically rank deficient.
bool qr_solve(std::vector<double>& design, std::vector<double>& rhs,
              std::size_t m, double coeffs[kTerms]) {
    auto entry = [&](std::size_t i, std::size_t j) -> double& {
        return design[i * kTerms + j];
    };

    for (std::size_t col = 0; col < kTerms; ++col) {
        double norm = 0.0;
        for (std::size_t i = col; i < m; ++i) {
            norm = std::hypot(norm, entry(i, col));
        }
        if (norm == 0.0) {
            return false;
        }
        if (entry(col, col) > 0.0) {
            norm = -norm;
        }
        // Householder vector stored in the column below the diagonal.
        for (std::size_t i = col; i < m; ++i) {
            entry(i, col) /= norm;
        }
        entry(col, col) += 1.0;

        for (std::size_t j = col + 1; j < kTerms; ++j) {
            double s = 0.0;
            for (std::size_t i = col; i < m; ++i) {
                s += entry(i, col) * entry(i, j);
            }
            s = -s / entry(col, col);
            for (std::size_t i = col; i < m; ++i) {
                entry(i, j) += s * entry(i, col);
            }
        }
        double s = 0.0;
        for (std::size_t i = col; i < m; ++i) {
            s += entry(i, col) * rhs[i];
        }
        s = -s / entry(col, col);
        for (std::size_t i = col; i < m; ++i) {
            rhs[i] += s * entry(i, col);
        }
        // Diagonal of R.
        entry(col, col) = norm;
    }

    // Relative rank test on R's diagonal.
    double max_diag = 0.0;
    for (std::size_t j = 0; j < kTerms; ++j) {
        max_diag = std::max(max_diag, std::abs(entry(j, j)));
    }
    for (std::size_t j = 0; j < kTerms; ++j) {
        if (std::abs(entry(j, j)) <= 1e-13 * max_diag) {
            return false;
        }
    }

    for (std::size_t j = kTerms; j-- > 0;) {
        double s = rhs[j];
        for (std::size_t k = j + 1; k < kTerms; ++k) {
            s -= entry(j, k) * coeffs[k];
        }
        coeffs[j] = s / entry(j, j);
    }
    return true;
}

} // namespace

QuadraticFit fit_quadratic(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw DomainError("fit_quadratic: x and y lengths differ");
    }
    const std::size_t m = x.size();
    if (m < kTerms) {
        throw DomainError("fit_quadratic: need at least 3 points");
    }
    std::vector<double> distinct(x.begin(), x.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < kTerms) {
        throw DomainError("fit_quadratic: need at least 3 distinct x values");
    }

    std::vector<double> design(m * kTerms);
    std::vector<double> rhs(y.begin(), y.end());
    for (std::size_t i = 0; i < m; ++i) {
        design[i * kTerms + 0] = 1.0;
        design[i * kTerms + 1] = x[i];
        design[i * kTerms + 2] = x[i] * x[i];
    }

    double coeffs[kTerms];
    if (!qr_solve(design, rhs, m, coeffs)) {
        throw DomainError("fit_quadratic: rank-deficient design matrix");
    }

    QuadraticFit fit;
    fit.a0 = coeffs[0];
    fit.a1 = coeffs[1];
    fit.a2 = coeffs[2];
    fit.m = m;
    double rss = 0.0;
    double mape = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double predicted = evaluate(fit, x[i]);
        const double residual = y[i] - predicted;
        rss += residual * residual;
        mape += std::abs(residual) / std::max(std::abs(y[i]), 1.0);
    }
    fit.rss = rss;
    fit.error_pct = 100.0 * mape / static_cast<double>(m);
    return fit;
}

double evaluate(const QuadraticFit& fit, double x) {
    return (fit.a2 * x + fit.a1) * x + fit.a0;
}

} // namespace shatterbound
