// Copyright 2026 The ame-graph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AME_ERRORS_H
#define AME_ERRORS_H

#include <stdexcept>
#include <string>

namespace ame {

/// Matrix or vector shapes do not fit the operation.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the mathematical domain (e.g. modulus < 2).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Caller-side precondition does not hold (e.g. N not a multiple of 4).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class ValidationKind {
    MalformedInput,
    Shape,
    Asymmetric,
    NonzeroDiagonal,
    OutOfRange,
    SelfLoop,
    VertexOutOfRange,
};

const char *to_string(ValidationKind kind);

/// Graph input rejected. `kind` distinguishes the failure class.
struct ValidationError : std::invalid_argument {
    ValidationError(ValidationKind kind, const std::string &what)
        : std::invalid_argument(std::string(to_string(kind)) + ": " + what), kind(kind) {}
    ValidationKind kind;
};

/// Work requested exceeds the configured enumeration budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A mathematical identity that must always hold was observed to fail.
/// Seeing this means there is a bug, not that the input was bad.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// The determinant scan found no non-unit among the Delta_j. The parity
/// argument rules this out for even d, so it also signals a bug.
struct TheoremContradiction : std::logic_error {
    using std::logic_error::logic_error;
};

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ame

#endif
