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
#include <stdexcept>
#include <string>

namespace shatterbound {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration (violated field invariants, bad flag combinations).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Malformed input document. Carries a 1-based line/column position.
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column)
        : Error(message + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Structurally valid input that violates a semantic constraint.
/// layer_index() is meaningful for architecture documents; npos otherwise.
class SemanticError : public Error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit SemanticError(std::string message, std::size_t layer_index = npos)
        : Error(std::move(message)), layer_index_(layer_index) {}

    std::size_t layer_index() const noexcept { return layer_index_; }

private:
    std::size_t layer_index_;
};

/// Mathematically undefined request (log of a non-positive value, delta
/// outside (0,1), rank-deficient fit, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Request exceeds a hard resource limit (enumeration size, allocation, ...).
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace shatterbound
