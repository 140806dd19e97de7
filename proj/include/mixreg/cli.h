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

#ifndef MIXREG_CLI_H
#define MIXREG_CLI_H

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mixreg/code.h"

namespace mixreg {

/// Contents of a code file:
///
///     # comment
///     moduli 2 6 3
///     gen 1 3 0 / 0 0 0
///
/// The generators are not required to commute.
struct CodeFile {
    Device device;
    std::vector<PauliVec> generators;

    /// Throws InvalidCode if the generators do not commute.
    StabilizerCode code() const;
};

/// Throws ParseError (malformed line), RangeError (exponent outside [0, Q)) or FormatError
/// (bad modulus), each carrying the 1-based line number.
CodeFile parse_code_file(std::string_view text);
std::string render_code_file(const Device &device, std::span<const PauliVec> generators);
std::string render_code_file(const StabilizerCode &code);

CodeFile read_code_file(const std::string &path);

/// Runs one command line (without the program name). Returns 0 on success, 1 on domain errors
/// such as non-commuting generators or invalid maps, 2 on I/O, parse and usage errors.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace mixreg

#endif
