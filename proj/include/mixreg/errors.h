// Copyright 2026 The mixreg Authors
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

#ifndef MIXREG_ERRORS_H
#define MIXREG_ERRORS_H

#include <stdexcept>
#include <string>

namespace mixreg {

/// A generator set that was required to commute does not.
struct InvalidCode : std::domain_error {
    using std::domain_error::domain_error;
};

/// A dense oracle object would exceed the dimension cap.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// A floating-point check that must hold exactly (up to tolerance) did not.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A codeword seed whose projection onto the codespace vanishes.
struct ZeroProjection : std::domain_error {
    using std::domain_error::domain_error;
};

/// A file could not be read or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed code file. `line` is 1-based, 0 when not tied to a line.
struct ParseError : std::runtime_error {
    ParseError(size_t line, const std::string &what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line(line) {
    }
    size_t line;
};

/// Exponent outside [0, Q) in a code file.
struct RangeError : ParseError {
    using ParseError::ParseError;
};

/// Bad modulus (non-integer or < 2) in a code file.
struct FormatError : ParseError {
    using ParseError::ParseError;
};

}  // namespace mixreg

#endif
