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

#include "mixreg/cli.h"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "mixreg/analysis.h"
#include "mixreg/construct.h"
#include "mixreg/decompose.h"
#include "mixreg/errors.h"
#include "mixreg/oracle.h"

namespace mixreg {

namespace {

std::vector<int64_t> parse_list(const std::string &text, const char *what) {
    std::vector<int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            long long v = std::stoll(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            out.push_back(v);
        } catch (const std::logic_error &) {
            throw std::invalid_argument(std::string(what) + " entry '" + item + "' is not an integer");
        }
    }
    if (out.empty()) {
        throw std::invalid_argument(std::string(what) + " is empty");
    }
    return out;
}

// 1-based comma-separated register list to 0-based positions.
std::vector<size_t> parse_map(const std::string &text, const char *what) {
    std::vector<size_t> out;
    for (int64_t v : parse_list(text, what)) {
        if (v < 1) {
            throw std::invalid_argument(std::string(what) + " indices are 1-based, got " + std::to_string(v));
        }
        out.push_back(static_cast<size_t>(v - 1));
    }
    return out;
}

std::string fixed(double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

void emit_code(const StabilizerCode &code, const std::string &path, std::ostream &out) {
    std::string text = render_code_file(code);
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f || !(f << text)) {
        throw IoError("cannot write '" + path + "'");
    }
}

void print_distance(const std::optional<DistanceResult> &d, size_t cap, std::ostream &out) {
    if (d) {
        out << "d=" << d->distance << " witness=" << d->witness.to_string() << "\n";
    } else {
        out << "d>" << cap << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Mixed-register stabilizer code toolkit"};
    app.require_subcommand(1);

    std::string file, file2, out_path, map1, map2, codeword_text;
    size_t cap = 3;
    int64_t modulus = 0;
    bool check_projector = false;

    auto *params = app.add_subcommand("params", "Register count, group order, logical dimension and distance");
    params->add_option("file", file, "code file")->required();
    params->add_option("--distance-cap", cap, "largest weight searched for the distance");

    auto *decompose = app.add_subcommand("decompose", "Split a generator set into radical and hyperbolic pairs");
    decompose->add_option("file", file, "code file")->required();

    auto *resolve_cmd = app.add_subcommand("resolve", "Append registers until the generators commute");
    resolve_cmd->add_option("file", file, "code file")->required();
    resolve_cmd->add_option("-o", out_path, "output path (default stdout)");

    auto *scan_cmd = app.add_subcommand("scan", "Join two coprime-dimension codes on overlapping registers");
    scan_cmd->add_option("file1", file, "first code file")->required();
    scan_cmd->add_option("file2", file2, "second code file")->required();
    scan_cmd->add_option("--map1", map1, "1-based output registers of the first code")->required();
    scan_cmd->add_option("--map2", map2, "1-based output registers of the second code")->required();
    scan_cmd->add_option("-o", out_path, "output path (default stdout)");

    auto *embed = app.add_subcommand("embed", "Scale a uniform-modulus code into larger registers");
    embed->add_option("file", file, "code file")->required();
    embed->add_option("--modulus", modulus, "target register modulus")->required();
    embed->add_option("-o", out_path, "output path (default stdout)");

    auto *split = app.add_subcommand("split", "Rewrite a code with generators supported on coprime blocks");
    split->add_option("file", file, "code file")->required();
    split->add_option("-o", out_path, "output path (default stdout)");

    auto *distance_cmd = app.add_subcommand("distance", "Brute-force code distance");
    distance_cmd->add_option("file", file, "code file")->required();
    distance_cmd->add_option("--distance-cap", cap, "largest weight searched");

    auto *commutes_cmd = app.add_subcommand("commutes", "Print the commutator matrix");
    commutes_cmd->add_option("file", file, "code file")->required();

    auto *oracle = app.add_subcommand("oracle", "Dense projector checks");
    oracle->add_option("file", file, "code file")->required();
    oracle->add_option("--codeword", codeword_text, "comma-separated basis state to project");
    oracle->add_flag("--check-projector", check_projector, "verify idempotence, hermiticity and trace");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        CodeFile cf = read_code_file(file);
        if (params->parsed()) {
            StabilizerCode code = cf.code();
            CodeParams p = code_params(code, cap);
            out << "n=" << p.n << " moduli=";
            for (size_t i = 0; i < code.num_registers(); i++) {
                out << (i ? "," : "") << code.device().modulus(i);
            }
            out << " |S|=" << p.group_order.get_str() << " K=" << p.K.get_str() << "\n";
            print_distance(p.distance, cap, out);
        } else if (decompose->parsed()) {
            DecompositionResult r = amalgamate(gram_schmidt(cf.generators));
            out << "l=" << r.isotropic.size() << " c=" << r.pairs.size() << "\n";
            for (const auto &w : r.isotropic) {
                out << "W " << w.to_string() << "\n";
            }
            for (const auto &pair : r.pairs) {
                out << "pair d=" << pair.d << " U=[" << pair.u.to_string() << "] V=[" << pair.v.to_string()
                    << "]\n";
            }
        } else if (resolve_cmd->parsed()) {
            emit_code(resolve(cf.device, cf.generators), out_path, out);
        } else if (scan_cmd->parsed()) {
            CodeFile cf2 = read_code_file(file2);
            ScanMap map{parse_map(map1, "--map1"), parse_map(map2, "--map2")};
            emit_code(scan(cf.code(), cf2.code(), map), out_path, out);
        } else if (embed->parsed()) {
            emit_code(embed_scale(cf.code(), modulus), out_path, out);
        } else if (split->parsed()) {
            emit_code(split_coprime(cf.code()), out_path, out);
        } else if (distance_cmd->parsed()) {
            print_distance(distance(cf.code(), cap), cap, out);
        } else if (commutes_cmd->parsed()) {
            CommutatorMatrix m = commutator_matrix(cf.generators);
            for (size_t r = 0; r < m.rows(); r++) {
                for (size_t c = 0; c < m.cols(); c++) {
                    out << (c ? " " : "") << m(r, c).get_str();
                }
                out << "\n";
            }
            out << "commuting=" << (all_commute(cf.generators) ? "yes" : "no") << "\n";
        } else if (oracle->parsed()) {
            StabilizerCode code = cf.code();
            DenseOperator pi = projector(code);
            Complex tr = pi.matrix().trace();
            double idem = idempotence_residual(pi);
            out << "dim=" << pi.dim() << "\n";
            out << "trace=" << fixed(tr.real()) << "\n";
            out << "idempotence_residual=" << sci(idem) << "\n";
            if (check_projector) {
                double herm = pi.dim() ? (pi.matrix() - pi.matrix().adjoint()).cwiseAbs().maxCoeff() : 0.0;
                out << "hermiticity_residual=" << sci(herm) << "\n";
                Int k = logical_count(code);
                bool ok = idem <= kOracleTolerance && herm <= kOracleTolerance &&
                          std::abs(tr.real() - k.get_d()) <= kOracleTolerance &&
                          std::abs(tr.imag()) <= kOracleTolerance;
                out << "logical_count=" << k.get_str() << "\n";
                out << "projector_check=" << (ok ? "pass" : "fail") << "\n";
                if (!ok) {
                    return 1;
                }
            }
            if (!codeword_text.empty()) {
                std::vector<int64_t> seed = parse_list(codeword_text, "--codeword");
                StateVector v = codeword(code, seed);
                for (size_t j = 0; j < v.dim(); j++) {
                    Complex a = v.amplitudes[j];
                    if (std::abs(a) <= kOracleTolerance) {
                        continue;
                    }
                    auto digits = basis_digits(code.device(), j);
                    out << "|";
                    for (size_t i = 0; i < digits.size(); i++) {
                        out << (i ? "," : "") << digits[i];
                    }
                    out << "> " << fixed(a.real()) << " " << fixed(a.imag()) << "\n";
                }
            }
        }
    } catch (const ParseError &e) {
        err << "error: " << file << ": " << e.what() << "\n";
        return 2;
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace mixreg
