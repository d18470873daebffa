// Copyright 2026 The nonloc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NONLOC_ERRORS_HPP
#define NONLOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nonloc {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: missing table entries, bad file schema, bad literals.
struct StructuralError : Error {
    using Error::Error;
};

/// Input behavior violates a physical constraint it was required to satisfy.
struct SignalingError : Error {
    using Error::Error;
};

/// Conditioning on an outcome of probability zero.
struct ZeroProbabilityError : Error {
    using Error::Error;
};

/// State / measurement shapes do not match.
struct DimensionError : Error {
    using Error::Error;
};

/// An enumeration or solve exceeded a configured cap.
struct CapExceededError : Error {
    using Error::Error;
};

/// A protocol step touches a qubit owned by a non-designated party.
struct LocalityError : Error {
    using Error::Error;
};

}  // namespace nonloc

#endif
