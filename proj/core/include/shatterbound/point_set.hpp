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
#include <vector>

namespace shatterbound {

/// A dense row-major set of points in R^dims.
class PointSet {
public:
    PointSet(std::size_t count, std::size_t dims)
        : count_(count), dims_(dims), coords_(count * dims, 0.0) {}

    std::size_t count() const noexcept { return count_; }
    std::size_t dims() const noexcept { return dims_; }

    double& at(std::size_t point, std::size_t dim) {
        return coords_[point * dims_ + dim];
    }
    double at(std::size_t point, std::size_t dim) const {
        return coords_[point * dims_ + dim];
    }

    std::span<const double> row(std::size_t point) const {
        return {coords_.data() + point * dims_, dims_};
    }
    std::span<double> row(std::size_t point) {
        return {coords_.data() + point * dims_, dims_};
    }

private:
    std::size_t count_;
    std::size_t dims_;
    std::vector<double> coords_;
};

} // namespace shatterbound
