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

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace shatterbound {

/// Philox4x32-10 counter-based block generator (Salmon et al.).
///
/// Stateless: a 128-bit counter and a 64-bit key map to 128 random bits.
/// Any (counter, key) pair can be evaluated independently, which gives
/// reproducible streams under arbitrary parallel scheduling.
struct Philox4x32 {
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static constexpr Block generate(Block ctr, Key key) noexcept {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        return ctr;
    }
};

/// Domain tags keep unrelated draw purposes in disjoint counter spaces.
enum class StreamDomain : std::uint32_t {
    points = 1,      // point-cloud coordinates
    hyperplanes = 2, // trial hyperplane coefficients
    scratch = 3,     // test fixtures and ad-hoc sampling
};

/// A deterministic random stream addressed by (seed, domain, stream id).
///
/// Each (domain, stream) pair owns an independent 2^32-block counter space
/// under the same master seed. Consecutive draws walk the block counter;
/// no state is shared between streams, so per-trial streams can be created
/// and consumed concurrently with bit-identical results.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, StreamDomain domain, std::uint64_t stream) noexcept
        : key_{static_cast<std::uint32_t>(seed),
               static_cast<std::uint32_t>(seed >> 32)},
          base_{0,
                static_cast<std::uint32_t>(domain),
                static_cast<std::uint32_t>(stream),
                static_cast<std::uint32_t>(stream >> 32)} {}

    /// Uniform draw in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_bits() >> 11) * 0x1.0p-53; }

    /// Uniform draw in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    /// Normal draw via Box-Muller; pairs are cached, mean/stdev applied per call.
    double normal(double mean, double stdev) {
        if (have_spare_) {
            have_spare_ = false;
            return mean + stdev * spare_;
        }
        // u1 in (0, 1] keeps the log finite.
        const double u1 = static_cast<double>((next_bits() >> 11) + 1) * 0x1.0p-53;
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return mean + stdev * radius * std::cos(angle);
    }

    /// 64 fresh random bits.
    std::uint64_t next_bits() {
        if (word_ == 0) {
            auto ctr = base_;
            ctr[0] = block_++;
            buffer_ = Philox4x32::generate(ctr, key_);
            word_ = 2;
            return (std::uint64_t{buffer_[0]} << 32) | buffer_[1];
        }
        word_ = 0;
        return (std::uint64_t{buffer_[2]} << 32) | buffer_[3];
    }

private:
    Philox4x32::Key key_;
    Philox4x32::Block base_;
    Philox4x32::Block buffer_{};
    std::uint32_t block_ = 0;
    int word_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace shatterbound
