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

#include "shatterbound/separability.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "shatterbound/errors.hpp"

namespace shatterbound {

namespace {

using Rational = boost::multiprecision::cpp_rational;

template <typename Scalar>
struct ScalarOps {
    static bool positive(const Scalar& v) { return v > 0; }
    static bool negative(const Scalar& v) { return v < 0; }
    static bool nonzero(const Scalar& v) { return v != 0; }
};

template <>
struct ScalarOps<double> {
    static constexpr double kEps = 1e-9;
    static bool positive(double v) { return v > kEps; }
    static bool negative(double v) { return v < -kEps; }
    static bool nonzero(double v) { return v > kEps || v < -kEps; }
};

enum class PhaseOneOutcome { feasible, infeasible, ambiguous };

/// Phase-I simplex for: exists (w, b) with y_i(<x_i, w> + b) >= 1?
///
/// Standard form uses split free variables, one slack and one artificial
/// per constraint; the RHS is identically 1, so the artificial basis is
/// immediately primal-feasible. Bland's rule avoids cycling.
template <typename Scalar>
PhaseOneOutcome phase_one_separable(const PointSet& points, std::uint32_t label_bits) {
    using Ops = ScalarOps<Scalar>;
    const std::size_t m = points.count();
    const std::size_t d = points.dims();
    const std::size_t slack0 = 2 * (d + 1);
    const std::size_t art0 = slack0 + m;
    const std::size_t ncols = art0 + m;

    std::vector<std::vector<Scalar>> a(m, std::vector<Scalar>(ncols, Scalar(0)));
    std::vector<Scalar> rhs(m, Scalar(1));
    std::vector<std::size_t> basis(m);

    for (std::size_t i = 0; i < m; ++i) {
        const Scalar sign = ((label_bits >> i) & 1u) ? Scalar(1) : Scalar(-1);
        for (std::size_t j = 0; j < d; ++j) {
            const Scalar v = sign * Scalar(points.at(i, j));
            a[i][j] = v;
            a[i][d + j] = -v;
        }
        a[i][2 * d] = sign;
        a[i][2 * d + 1] = -sign;
        a[i][slack0 + i] = Scalar(-1);
        a[i][art0 + i] = Scalar(1);
        basis[i] = art0 + i;
    }

    // Reduced costs for min(sum of artificials): r_j = c_j - sum_i a[i][j].
    std::vector<Scalar> reduced(ncols, Scalar(0));
    for (std::size_t j = 0; j < ncols; ++j) {
        Scalar colsum(0);
        for (std::size_t i = 0; i < m; ++i) {
            colsum += a[i][j];
        }
        reduced[j] = (j >= art0 ? Scalar(1) : Scalar(0)) - colsum;
    }
    Scalar objective(0);
    for (const Scalar& v : rhs) {
        objective += v;
    }

    const std::size_t max_iterations = 60 * (m + ncols) + 200;
    bool optimal = false;
    for (std::size_t iteration = 0; iteration < max_iterations; ++iteration) {
        std::size_t enter = ncols;
        for (std::size_t j = 0; j < ncols; ++j) {
            if (Ops::negative(reduced[j])) {
                enter = j;
                break;
            }
        }
        if (enter == ncols) {
            optimal = true;
            break;
        }

        std::size_t leave = m;
        Scalar best_ratio(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (!Ops::positive(a[i][enter])) {
                continue;
            }
            const Scalar ratio = rhs[i] / a[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) {
            return PhaseOneOutcome::ambiguous; // unbounded Phase-I: numeric trouble
        }

        // Pivot on (leave, enter).
        const Scalar pivot = a[leave][enter];
        for (std::size_t j = 0; j < ncols; ++j) {
            a[leave][j] /= pivot;
        }
        rhs[leave] /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || !Ops::nonzero(a[i][enter])) {
                continue;
            }
            const Scalar factor = a[i][enter];
            for (std::size_t j = 0; j < ncols; ++j) {
                a[i][j] -= factor * a[leave][j];
            }
            rhs[i] -= factor * rhs[leave];
        }
        const Scalar rfactor = reduced[enter];
        for (std::size_t j = 0; j < ncols; ++j) {
            reduced[j] -= rfactor * a[leave][j];
        }
        objective += rfactor * rhs[leave];
        basis[leave] = enter;
    }

    if constexpr (std::is_same_v<Scalar, double>) {
        if (!optimal || (objective > 0.25 && objective < 0.75)) {
            return PhaseOneOutcome::ambiguous;
        }
        return objective < 0.25 ? PhaseOneOutcome::feasible : PhaseOneOutcome::infeasible;
    } else {
        if (!optimal) {
            return PhaseOneOutcome::ambiguous;
        }
        return objective == 0 ? PhaseOneOutcome::feasible : PhaseOneOutcome::infeasible;
    }
}

bool separable_bits(const PointSet& points, std::uint32_t label_bits,
                    FeasibilityMethod method) {
    switch (method) {
    case FeasibilityMethod::floating: {
        const auto outcome = phase_one_separable<double>(points, label_bits);
        return outcome == PhaseOneOutcome::feasible;
    }
    case FeasibilityMethod::exact: {
        const auto outcome = phase_one_separable<Rational>(points, label_bits);
        if (outcome == PhaseOneOutcome::ambiguous) {
            throw DomainError("exact feasibility solve did not terminate");
        }
        return outcome == PhaseOneOutcome::feasible;
    }
    case FeasibilityMethod::automatic:
    default: {
        const auto outcome = phase_one_separable<double>(points, label_bits);
        if (outcome != PhaseOneOutcome::ambiguous) {
            return outcome == PhaseOneOutcome::feasible;
        }
        return separable_bits(points, label_bits, FeasibilityMethod::exact);
    }
    }
}

/// Rank of the (k-1) x d matrix of differences against the first point,
/// in exact rational arithmetic.
bool affinely_independent(const PointSet& points, std::span<const std::size_t> subset) {
    const std::size_t rows = subset.size() - 1;
    const std::size_t cols = points.dims();
    if (rows > cols) {
        return false;
    }
    std::vector<std::vector<Rational>> mat(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            mat[i][j] = Rational(points.at(subset[i + 1], j)) -
                        Rational(points.at(subset[0], j));
        }
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot_row = rank;
        while (pivot_row < rows && mat[pivot_row][col] == 0) {
            ++pivot_row;
        }
        if (pivot_row == rows) {
            continue;
        }
        std::swap(mat[rank], mat[pivot_row]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (mat[i][col] == 0) {
                continue;
            }
            const Rational factor = mat[i][col] / mat[rank][col];
            for (std::size_t j = col; j < cols; ++j) {
                mat[i][j] -= factor * mat[rank][j];
            }
        }
        ++rank;
    }
    return rank == rows;
}

bool subsets_independent(const PointSet& points, std::size_t size) {
    std::vector<std::size_t> subset(size);
    // Plain lexicographic combination walk.
    for (std::size_t i = 0; i < size; ++i) {
        subset[i] = i;
    }
    const std::size_t n = points.count();
    while (true) {
        if (!affinely_independent(points, subset)) {
            return false;
        }
        std::size_t i = size;
        while (i > 0) {
            --i;
            if (subset[i] != i + n - size) {
                break;
            }
            if (i == 0) {
                return true;
            }
        }
        ++subset[i];
        for (std::size_t j = i + 1; j < size; ++j) {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

} // namespace

bool is_linearly_separable(const PointSet& points, std::span<const int> labels,
                           FeasibilityMethod method) {
    if (labels.size() != points.count()) {
        throw DomainError("label count does not match point count");
    }
    if (points.count() == 0 || points.count() > 32) {
        throw ResourceError("separability check supports 1..32 points");
    }
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != 1 && labels[i] != -1) {
            throw DomainError("labels must be +1 or -1");
        }
        if (labels[i] == 1) {
            bits |= 1u << i;
        }
    }
    return separable_bits(points, bits, method);
}

std::uint64_t brute_force_dichotomy_count(const PointSet& points,
                                          FeasibilityMethod method) {
    const std::size_t n = points.count();
    if (n == 0) {
        throw DomainError("point set is empty");
    }
    if (n > kBruteForceMaxPoints) {
        throw ResourceError("brute-force enumeration capped at " +
                            std::to_string(kBruteForceMaxPoints) + " points");
    }
    // A dichotomy and its complement are realized by (w, b) and (-w, -b),
    // so only patterns with the last point labeled +1 need solving.
    const std::uint32_t top = 1u << (n - 1);
    std::uint64_t count = 0;
    for (std::uint32_t bits = 0; bits < top; ++bits) {
        if (separable_bits(points, bits | top, method)) {
            count += 2;
        }
    }
    return count;
}

bool is_general_position(const PointSet& points) {
    const std::size_t n = points.count();
    if (n == 0) {
        throw DomainError("point set is empty");
    }
    if (n > 64) {
        throw ResourceError("general-position check capped at 64 points");
    }
    const std::size_t max_subset = std::min(n, points.dims() + 1);
    for (std::size_t size = 2; size <= max_subset; ++size) {
        if (!subsets_independent(points, size)) {
            return false;
        }
    }
    return true;
}

} // namespace shatterbound
