// Copyright 2026 The qtamper Authors
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

#include "qtamper/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qtamper/error.hpp"

namespace qtamper {

std::string format_double(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

void dump_into(std::string &out, const Json &v, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
    switch (v.type()) {
        case Json::value_t::number_float: out += format_double(v.get<double>()); return;
        case Json::value_t::array: {
            if (v.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto &item : v) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                dump_into(out, item, depth + 1);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case Json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto &[key, item] : v.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad + Json(key).dump() + ": ";
                dump_into(out, item, depth + 1);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        default: out += v.dump(); return;
    }
}

[[noreturn]] void bad_input(const std::string &what) { throw Error(ErrorCode::InputError, what); }

}  // namespace

std::string dump_json(const Json &value) {
    std::string out;
    dump_into(out, value, 0);
    out += "\n";
    return out;
}

Json pauli_to_json(const PauliLabel &label) {
    return Json{{"q", label.q()}, {"m", label.m()}, {"x", label.x()}, {"z", label.z()}};
}

PauliLabel pauli_from_json(const Json &value) {
    try {
        const auto q = value.at("q").get<std::uint32_t>();
        const auto m = value.at("m").get<int>();
        auto x = value.at("x").get<std::vector<std::uint32_t>>();
        auto z = value.at("z").get<std::vector<std::uint32_t>>();
        if (static_cast<int>(x.size()) != m || static_cast<int>(z.size()) != m) bad_input("pauli label: x and z need m entries");
        return PauliLabel(PrimeModulus(q), std::move(x), std::move(z));
    } catch (const Json::exception &e) {
        bad_input(std::string("pauli label: ") + e.what());
    } catch (const Error &e) {
        if (e.code() == ErrorCode::InputError) throw;
        bad_input(std::string("pauli label: ") + e.what());
    }
}

Json matrix_to_json(const ComplexMatrix &M) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < M.cols(); ++c) row.push_back(Json::array({M(r, c).real(), M(r, c).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const Json &value) {
    if (!value.is_array() || value.empty()) bad_input("unitary: expected a non-empty array of rows");
    const auto n = static_cast<Eigen::Index>(value.size());
    ComplexMatrix M(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        const auto &row = value[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) bad_input("unitary: matrix is not square");
        for (Eigen::Index c = 0; c < n; ++c) {
            const auto &entry = row[static_cast<std::size_t>(c)];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
                bad_input("unitary: entries must be [re, im] pairs");
            }
            M(r, c) = Complex{entry[0].get<double>(), entry[1].get<double>()};
        }
    }
    return M;
}

Json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) bad_input("cannot read " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::exception &e) {
        bad_input(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw Error(ErrorCode::InputError, "cannot write " + path.string());
}

ComplexMatrix read_unitary_file(const std::filesystem::path &path) {
    ComplexMatrix M = matrix_from_json(read_json_file(path));
    if (!is_unitary(M)) throw Error(ErrorCode::NotUnitary, path.string() + " is not unitary");
    return M;
}

void write_unitary_file(const std::filesystem::path &path, const ComplexMatrix &M) {
    write_text_file(path, dump_json(matrix_to_json(M)));
}

UnitaryFamily read_family_file(const std::filesystem::path &path, std::optional<double> trace_bound_phi) {
    const Json list = read_json_file(path);
    if (!list.is_array() || list.empty()) bad_input("family file must be a non-empty JSON list");
    UnitaryFamily family(trace_bound_phi);
    constexpr std::string_view kPauliPrefix = "pauli:";
    for (const auto &entry : list) {
        if (entry.is_object()) {
            family.add(pauli_from_json(entry));
        } else if (entry.is_string()) {
            const auto text = entry.get<std::string>();
            if (text.starts_with(kPauliPrefix)) {
                family.add(PauliLabel::parse(text.substr(kPauliPrefix.size())));
            } else {
                const auto member = path.parent_path() / text;
                family.add(text, read_unitary_file(member));
            }
        } else {
            bad_input("family entries must be strings or Pauli objects");
        }
    }
    return family;
}

}  // namespace qtamper
