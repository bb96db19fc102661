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

#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "qtamper/linalg.hpp"
#include "qtamper/pauli.hpp"
#include "qtamper/tamper.hpp"

namespace qtamper {

using Json = nlohmann::json;

/// printf("%.17g"); NaN and infinities become "null".
std::string format_double(double x);

/// Pretty JSON (two-space indent, sorted keys) with every floating-point
/// number rendered by format_double, so equal values give equal bytes.
std::string dump_json(const Json &value);

Json pauli_to_json(const PauliLabel &label);
/// {"q": 3, "m": 2, "x": [...], "z": [...]}; throws InputError.
PauliLabel pauli_from_json(const Json &value);

/// Square matrix stored as rows of [re, im] pairs.
Json matrix_to_json(const ComplexMatrix &M);
ComplexMatrix matrix_from_json(const Json &value);

/// Throws InputError for unreadable files or malformed content.
Json read_json_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, const std::string &text);

ComplexMatrix read_unitary_file(const std::filesystem::path &path);
void write_unitary_file(const std::filesystem::path &path, const ComplexMatrix &M);

/// A JSON list whose entries are unitary-file paths (relative to the family
/// file), "pauli:<label>" strings, or Pauli objects.
UnitaryFamily read_family_file(const std::filesystem::path &path, std::optional<double> trace_bound_phi);

}  // namespace qtamper
