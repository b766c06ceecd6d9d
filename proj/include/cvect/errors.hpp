/*
   Copyright 2026 the cvect authors

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

namespace cvect {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two values from different charts were combined.
struct ChartMismatch : Error {
    ChartMismatch() : Error("chart mismatch") {}
};

/// A parity query or parity-sensitive operation hit a mixed-parity value.
struct MixedParity : Error {
    explicit MixedParity(const std::string& what) : Error("mixed parity: " + what) {}
};

/// Input outside the operation's domain (unknown variable, nu = 0, ...).
struct DomainError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(std::size_t position, const std::string& what)
        : Error("parse error at position " + std::to_string(position) + ": " + what),
          pos(position) {}
    std::size_t pos;
};

}  // namespace cvect
