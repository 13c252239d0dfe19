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

#include "shatterbound/estimator.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>
#include <unordered_set>
#include <utility>

#include "shatterbound/errors.hpp"
#include "shatterbound/rng.hpp"

namespace shatterbound {

namespace {

constexpr std::uint64_t kMaxTrials = std::uint64_t{1} << 32;

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const char c : text) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

/// Runs trials [first, last) against a fixed point set, collecting packed
/// label patterns. Patterns are byte strings of ceil(n/8) bytes, which stay
/// within the small-string buffer for every practical n.
void run_trials(const PointSet& points, std::uint64_t first, std::uint64_t last,
                double min_value, double max_value, std::uint64_t seed,
                std::uint32_t stream_tag, std::unordered_set<std::string>& patterns) {
    const std::size_t n = points.count();
    const std::size_t dims = points.dims();
    const std::size_t key_bytes = (n + 7) / 8;
    std::vector<double> w(dims);
    std::string key(key_bytes, '\0');

    for (std::uint64_t trial = first; trial < last; ++trial) {
        RandomStream rng(seed, StreamDomain::hyperplanes,
                         (std::uint64_t{stream_tag} << 32) | trial);
        for (std::size_t j = 0; j < dims; ++j) {
            w[j] = rng.uniform(min_value, max_value);
        }
        const double bias = rng.uniform(min_value, max_value);

        key.assign(key_bytes, '\0');
        for (std::size_t i = 0; i < n; ++i) {
            const double* row = points.row(i).data();
            double activation = bias;
            for (std::size_t j = 0; j < dims; ++j) {
                activation += row[j] * w[j];
            }
            if (activation >= 0.0) {
                key[i >> 3] |= static_cast<char>(1u << (i & 7u));
            }
        }
        patterns.insert(key);
    }
}

} // namespace

void EstimatorConfig::validate() const {
    if (iter < 1) {
        throw ConfigError("iter must be positive");
    }
    if (start < 1) {
        throw ConfigError("start must be >= 1");
    }
    if (end < start) {
        throw ConfigError("end must be >= start");
    }
    if (dims < 1) {
        throw ConfigError("dims must be >= 1");
    }
    if (!(stdev > 0.0)) {
        throw ConfigError("stdev must be positive");
    }
    if (!(min_value < max_value)) {
        throw ConfigError("min_value must be less than max_value");
    }
    if (budget == TrialBudget::power &&
        !(budget_exponent > 0.0 && budget_exponent <= 8.0)) {
        throw ConfigError("budget_exponent must lie in (0, 8]");
    }
}

std::uint64_t EstimatorConfig::trials_for(std::uint32_t n) const {
    double requested = 0.0;
    if (budget == TrialBudget::linear) {
        requested = static_cast<double>(iter) * static_cast<double>(n);
    } else {
        requested = std::pow(static_cast<double>(n), budget_exponent);
    }
    if (requested >= static_cast<double>(kMaxTrials)) {
        throw ResourceError("trial budget for n=" + std::to_string(n) +
                            " exceeds 2^32 trials");
    }
    const auto trials = static_cast<std::uint64_t>(std::llround(requested));
    return trials < 1 ? 1 : trials;
}

std::string EstimatorConfig::digest() const {
    char buffer[320];
    std::snprintf(buffer, sizeof buffer,
                  "iter=%u;start=%u;end=%u;dims=%u;average=%.17g;stdev=%.17g;"
                  "min=%.17g;max=%.17g;seed=%llu;budget=%s;exponent=%.17g",
                  iter, start, end, dims, average, stdev, min_value, max_value,
                  static_cast<unsigned long long>(seed),
                  budget == TrialBudget::linear ? "linear" : "power",
                  budget_exponent);
    char out[17];
    std::snprintf(out, sizeof out, "%016llx",
                  static_cast<unsigned long long>(fnv1a(buffer)));
    return std::string(out);
}

PointSet sample_point_set(std::uint64_t seed, std::uint64_t stream,
                          std::uint32_t count, std::uint32_t dims,
                          double average, double stdev) {
    if (count < 1 || dims < 1) {
        throw ConfigError("point set needs count >= 1 and dims >= 1");
    }
    const std::uint64_t total = std::uint64_t{count} * dims;
    if (total > (std::uint64_t{1} << 31)) {
        throw ResourceError("point set of " + std::to_string(total) +
                            " coordinates is too large");
    }
    PointSet points(count, dims);
    RandomStream rng(seed, StreamDomain::points, stream);
    for (std::uint32_t i = 0; i < count; ++i) {
        for (std::uint32_t j = 0; j < dims; ++j) {
            points.at(i, j) = rng.normal(average, stdev);
        }
    }
    return points;
}

std::uint64_t count_dichotomies(const PointSet& points, std::uint64_t trials,
                                double min_value, double max_value,
                                std::uint64_t seed, std::uint32_t stream_tag,
                                unsigned threads) {
    if (points.count() == 0) {
        throw DomainError("point set is empty");
    }
    if (trials > kMaxTrials) {
        throw ResourceError("trial count exceeds 2^32");
    }
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(trials, 1)));

    if (workers <= 1) {
        std::unordered_set<std::string> patterns;
        run_trials(points, 0, trials, min_value, max_value, seed, stream_tag, patterns);
        return patterns.size();
    }

    std::vector<std::unordered_set<std::string>> partials(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = trials / workers;
    const std::uint64_t remainder = trials % workers;
    std::uint64_t begin = 0;
    for (unsigned k = 0; k < workers; ++k) {
        const std::uint64_t size = chunk + (k < remainder ? 1 : 0);
        const std::uint64_t finish = begin + size;
        pool.emplace_back([&, k, begin, finish] {
            run_trials(points, begin, finish, min_value, max_value, seed,
                       stream_tag, partials[k]);
        });
        begin = finish;
    }
    for (auto& worker : pool) {
        worker.join();
    }

    auto& merged = partials.front();
    for (unsigned k = 1; k < workers; ++k) {
        merged.merge(partials[k]);
    }
    return merged.size();
}

ShatterCurve estimate_shattering(const EstimatorConfig& config, unsigned threads) {
    config.validate();
    ShatterCurve curve;
    curve.dims = config.dims;
    curve.config_digest = config.digest();
    curve.entries.reserve(config.end - config.start + 1);
    for (std::uint32_t n = config.start; n <= config.end; ++n) {
        const PointSet points = sample_point_set(config.seed, n, n, config.dims,
                                                 config.average, config.stdev);
        const std::uint64_t count =
            count_dichotomies(points, config.trials_for(n), config.min_value,
                              config.max_value, config.seed, n, threads);
        curve.entries.push_back({n, count});
    }
    return curve;
}

} // namespace shatterbound
