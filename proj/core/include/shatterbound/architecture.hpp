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
#include <string_view>
#include <vector>

namespace shatterbound {

enum class LayerKind {
    conv,
    pool,
    activation,
    fully_connected,
};

struct LayerSpec {
    LayerKind kind = LayerKind::conv;
    std::uint32_t neurons = 0;     // conv, fully_connected
    std::uint32_t filter_h = 0;    // conv
    std::uint32_t filter_w = 0;    // conv
    std::uint32_t pool_factor = 0; // pool
};

struct ArchitectureSpec {
    std::string name;
    std::uint32_t input_h = 0;
    std::uint32_t input_w = 0;
    std::vector<LayerSpec> layers;

    std::uint64_t conv_neuron_total() const;
};

/// Parses the line-oriented architecture document:
///
///   name <text>
///   input <H> <W>
///   conv <neurons> <FHxFW>
///   pool <factor>
///   act relu
///   fc <neurons>
///
/// `#` starts a comment; blank lines are ignored. Syntax problems throw
/// ParseError with line/column; structural problems (no conv layer, ...)
/// throw SemanticError with the offending layer index.
ArchitectureSpec parse_architecture(std::string_view text);

/// Per-conv-layer shattering dimension and incoming spatial size. Each
/// neuron of a conv layer separates points in R^(filter_h*filter_w);
/// pooling divides the spatial dimensions (integer division, floor 1).
struct ConvLayerDims {
    std::size_t layer_index = 0;
    std::uint32_t input_dim = 0;
    std::uint32_t spatial_h = 0;
    std::uint32_t spatial_w = 0;
};

std::vector<ConvLayerDims> receptive_dims(const ArchitectureSpec& spec);

/// Neuron count of the single conv layer spanning an approximately
/// equivalent function space, with the caveat that makes it exact.
struct SingleLayerEquivalent {
    std::uint64_t neuron_count = 0;
    std::string note;
};

SingleLayerEquivalent equivalent_single_layer(const ArchitectureSpec& spec);

} // namespace shatterbound
