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

#include <cstdint>
#include <span>

#include "shatterbound/point_set.hpp"

namespace shatterbound {

/// How to decide the separating-hyperplane feasibility LP.
///
/// The Phase-I objective of the feasibility program y_i(<x_i, w> + b) >= 1
/// is provably either 0 (separable) or >= 1 (not separable), so the floating
/// solver decides with a huge margin; `automatic` re-solves in exact rational
/// arithmetic whenever the floating optimum is not clearly on one side.
enum class FeasibilityMethod {
    automatic,
    floating,
    exact,
};

/// Exhaustive enumeration is capped at 2^20 label assignments.
inline constexpr std::size_t kBruteForceMaxPoints = 20;

/// True when some affine hyperplane strictly separates the +1 points from
/// the -1 points. `labels` holds +1/-1, one per point.
bool is_linearly_separable(const PointSet& points, std::span<const int> labels,
                           FeasibilityMethod method = FeasibilityMethod::automatic);

/// Exact count of linearly separable label assignments over all 2^n
/// dichotomies of `points`. Throws ResourceError above kBruteForceMaxPoints.
std::uint64_t brute_force_dichotomy_count(
    const PointSet& points, FeasibilityMethod method = FeasibilityMethod::automatic);

/// Exact general-position test: every subset of at most dims+1 points must be
/// affinely independent (no coincident pairs, no d+1 points on a common
/// (d-1)-flat). Decided in rational arithmetic, so free of tolerance effects.
bool is_general_position(const PointSet& points);

} // namespace shatterbound
