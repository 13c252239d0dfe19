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
#include <string>
#include <vector>

#include "shatterbound/point_set.hpp"

namespace shatterbound {

/// Fixed default master seed; reproducibility is preferred over novelty.
inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

/// How many random hyperplanes to try per sample size n.
enum class TrialBudget {
    linear, // iter * n
    power,  // round(n ^ budget_exponent)
};

/// Parameters of a Monte Carlo dichotomy-count run.
///
/// For each n in [start, end] one point set of n points with i.i.d.
/// Normal(average, stdev) coordinates in R^dims is drawn, then hyperplanes
/// (w, b) ~ Uniform(min_value, max_value)^(dims+1) label it and distinct
/// label patterns are counted.
struct EstimatorConfig {
    std::uint32_t iter = 1000;
    std::uint32_t start = 1;
    std::uint32_t end = 100;
    std::uint32_t dims = 2;
    double average = 0.0;
    double stdev = 1.0;
    double min_value = -1.0;
    double max_value = 1.0;
    std::uint64_t seed = kDefaultSeed;
    TrialBudget budget = TrialBudget::linear;
    double budget_exponent = 1.0;

    /// Throws ConfigError when any field invariant is violated.
    void validate() const;

    /// Trial count for sample size n under the configured budget.
    std::uint64_t trials_for(std::uint32_t n) const;

    /// Stable hex digest of every field; identifies the producing
    /// configuration in output metadata.
    std::string digest() const;
};

struct ShatterCurveEntry {
    std::uint32_t n = 0;
    std::uint64_t count = 0;
};

/// Distinct-dichotomy counts per sample size, annotated with the producing
/// configuration. Immutable after construction; safe to share across threads.
struct ShatterCurve {
    std::vector<ShatterCurveEntry> entries;
    std::uint32_t dims = 0;
    std::string config_digest;
};

/// Draws `count` points with i.i.d. Normal(average, stdev) coordinates from
/// the stream identified by (seed, stream).
PointSet sample_point_set(std::uint64_t seed, std::uint64_t stream,
                          std::uint32_t count, std::uint32_t dims,
                          double average, double stdev);

/// Counts distinct label patterns produced by `trials` random affine
/// hyperplanes over a fixed point set. Each trial draws its coefficients
/// from the per-trial stream (seed, stream_tag, trial index), so the result
/// is independent of `threads`. A point on the hyperplane labels +1.
std::uint64_t count_dichotomies(const PointSet& points, std::uint64_t trials,
                                double min_value, double max_value,
                                std::uint64_t seed, std::uint32_t stream_tag,
                                unsigned threads = 1);

/// Runs the full sweep over [start, end]. threads = 0 picks the hardware
/// concurrency; any thread count yields the identical curve.
ShatterCurve estimate_shattering(const EstimatorConfig& config, unsigned threads = 1);

} // namespace shatterbound
