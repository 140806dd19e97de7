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

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "mixreg/cli.h"
#include "mixreg/errors.h"

namespace mixreg {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            i++;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            i++;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

std::optional<int64_t> parse_int(std::string_view word) {
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
        return std::nullopt;
    }
    return v;
}

}  // namespace

StabilizerCode CodeFile::code() const {
    return StabilizerCode(device, generators);
}

CodeFile parse_code_file(std::string_view text) {
    std::optional<Device> device;
    std::vector<PauliVec> gens;
    size_t line_no = 0;
    while (!text.empty()) {
        size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
        line_no++;
        line = line.substr(0, line.find('#'));
        auto words = split_words(line);
        if (words.empty()) {
            continue;
        }

        if (words[0] == "moduli") {
            if (device) {
                throw ParseError(line_no, "duplicate moduli line");
            }
            if (words.size() < 2) {
                throw ParseError(line_no, "moduli line lists no registers");
            }
            std::vector<int64_t> moduli;
            for (size_t k = 1; k < words.size(); k++) {
                auto v = parse_int(words[k]);
                if (!v || *v < 2) {
                    throw FormatError(line_no, "modulus must be an integer >= 2, got '" + std::string(words[k]) + "'");
                }
                moduli.push_back(*v);
            }
            device.emplace(std::move(moduli));
            continue;
        }

        if (words[0] != "gen") {
            throw ParseError(line_no, "unknown directive '" + std::string(words[0]) + "'");
        }
        if (!device) {
            throw ParseError(line_no, "gen line before the moduli line");
        }
        size_t n = device->size();
        if (words.size() != 2 * n + 2 || words[n + 1] != "/") {
            throw ParseError(line_no, "gen line needs " + std::to_string(n) + " x exponents, '/', and " +
                                          std::to_string(n) + " z exponents");
        }
        std::vector<int64_t> x(n), z(n);
        for (size_t i = 0; i < n; i++) {
            for (int half = 0; half < 2; half++) {
                std::string_view w = words[half ? n + 2 + i : 1 + i];
                auto v = parse_int(w);
                if (!v) {
                    throw ParseError(line_no, "exponent '" + std::string(w) + "' is not an integer");
                }
                if (*v < 0 || *v >= device->modulus(i)) {
                    throw RangeError(line_no, "exponent " + std::to_string(*v) + " outside [0, " +
                                                  std::to_string(device->modulus(i)) + ") on register " +
                                                  std::to_string(i + 1));
                }
                (half ? z : x)[i] = *v;
            }
        }
        gens.emplace_back(*device, std::move(x), std::move(z));
    }
    if (!device) {
        throw ParseError(0, "missing moduli line");
    }
    return CodeFile{*device, std::move(gens)};
}

std::string render_code_file(const Device &device, std::span<const PauliVec> generators) {
    std::ostringstream out;
    out << "moduli";
    for (int64_t q : device.moduli()) {
        out << " " << q;
    }
    out << "\n";
    for (const auto &g : generators) {
        out << "gen " << g.to_string() << "\n";
    }
    return out.str();
}

std::string render_code_file(const StabilizerCode &code) {
    return render_code_file(code.device(), code.generators());
}

CodeFile read_code_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_file(buf.str());
}

}  // namespace mixreg
