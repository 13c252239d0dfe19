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

#include "shatterbound/cover.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <numbers>

#include "shatterbound/errors.hpp"

namespace shatterbound {

namespace {

using BigInt = boost::multiprecision::cpp_int;

double log_of(const BigInt& v) {
    // Values beyond double range: take the top 53 bits and add the shift.
    const std::size_t bits = boost::multiprecision::msb(v);
    if (bits < 900) {
        return std::log(v.convert_to<double>());
    }
    const std::size_t shift = bits - 52;
    const BigInt top = v >> shift;
    return std::log(top.convert_to<double>()) +
           static_cast<double>(shift) * std::numbers::ln2;
}

} // namespace

CoverBound cover_bound(std::uint64_t n, std::uint64_t dims) {
    if (n < 1 || dims < 1) {
        throw DomainError("cover_bound requires n >= 1 and dims >= 1");
    }
    // Binomial tail: sum_{i=0..min(d, n-1)} C(n-1, i). Terms past n-1 vanish,
    // and the truncated sum never exceeds 2^(n-1), so the min with 2^n is
    // already folded in.
    const std::uint64_t top = n - 1;
    const std::uint64_t upto = dims < top ? dims : top;
    BigInt term = 1;
    BigInt sum = 1; // i = 0
    for (std::uint64_t i = 1; i <= upto; ++i) {
        term *= top - (i - 1);
        term /= i;
        sum += term;
    }
    sum *= 2;

    CoverBound result;
    result.log_value = log_of(sum);
    if (sum <= BigInt(UINT64_MAX)) {
        result.exact = true;
        result.value = sum.convert_to<std::uint64_t>();
    } else {
        result.exact = false;
        result.value = 0;
    }
    return result;
}

} // namespace shatterbound
