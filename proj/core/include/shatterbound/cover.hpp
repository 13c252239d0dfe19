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

namespace shatterbound {

/// Maximum number of affine-hyperplane dichotomies of n points in general
/// position in R^d, computed with exact integer arithmetic.
///
/// When the exact value does not fit a 64-bit integer the result saturates:
/// `exact` is false, `value` is meaningless, and only `log_value` (the
/// natural log of the exact integer) is usable.
struct CoverBound {
    bool exact = true;
    std::uint64_t value = 0;
    double log_value = 0.0;
};

/// min(2^n, 2 * sum_{i=0..d} C(n-1, i)). Requires n >= 1, d >= 1.
CoverBound cover_bound(std::uint64_t n, std::uint64_t dims);

} // namespace shatterbound
