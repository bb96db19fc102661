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

#include <gtest/gtest.h>

#include <filesystem>

#include "qtamper/error.hpp"
#include "qtamper/haar.hpp"
#include "qtamper/json_io.hpp"

using namespace qtamper;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string &name) {
    const auto dir = fs::temp_directory_path() / "qtamper_json_io_test";
    fs::create_directories(dir);
    return dir / name;
}

template <typename F>
ErrorCode code_of(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::InternalConsistency;
}

}  // namespace

TEST(JsonIo, DoubleFormatting) {
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(1.0), "1");
    EXPECT_EQ(format_double(std::nan("")), "null");
    EXPECT_EQ(dump_json(Json{{"b", 0.5}, {"a", {1, 2.25}}}), "{\n  \"a\": [\n    1,\n    2.25\n  ],\n  \"b\": 0.5\n}\n");
}

TEST(JsonIo, MatrixRoundTripIsExact) {
    const auto U = sample_haar_unitary(6, Seed{3}).matrix;
    const auto path = scratch("u.json");
    write_unitary_file(path, U);
    EXPECT_EQ(read_unitary_file(path), U);
}

TEST(JsonIo, MalformedUnitaryFiles) {
    EXPECT_EQ(code_of([] { (void)read_unitary_file(scratch("missing.json")); }), ErrorCode::InputError);
    write_text_file(scratch("bad1.json"), "not json");
    EXPECT_EQ(code_of([] { (void)read_unitary_file(scratch("bad1.json")); }), ErrorCode::InputError);
    write_text_file(scratch("bad2.json"), "[[[1,0],[0,0]]]");
    EXPECT_EQ(code_of([] { (void)read_unitary_file(scratch("bad2.json")); }), ErrorCode::InputError);
    write_text_file(scratch("bad3.json"), "[[[1,0,3]]]");
    EXPECT_EQ(code_of([] { (void)read_unitary_file(scratch("bad3.json")); }), ErrorCode::InputError);
    write_text_file(scratch("bad4.json"), "[[[2,0],[0,0]],[[0,0],[1,0]]]");
    EXPECT_EQ(code_of([] { (void)read_unitary_file(scratch("bad4.json")); }), ErrorCode::NotUnitary);
}

TEST(JsonIo, PauliRoundTrip) {
    const PauliLabel l(PrimeModulus(3), {1, 0, 2}, {0, 2, 2});
    const Json j = pauli_to_json(l);
    EXPECT_EQ(j.at("m"), 3);
    EXPECT_EQ(pauli_from_json(j), l);
    EXPECT_EQ(code_of([] { (void)pauli_from_json(Json{{"q", 3}, {"m", 2}, {"x", {1}}, {"z", {0, 0}}}); }),
              ErrorCode::InputError);
    EXPECT_EQ(code_of([] { (void)pauli_from_json(Json{{"q", 4}, {"m", 1}, {"x", {1}}, {"z", {0}}}); }),
              ErrorCode::InputError);
}

TEST(JsonIo, FamilyFile) {
    ComplexMatrix X = ComplexMatrix::Zero(4, 4);
    X(1, 0) = X(0, 1) = X(3, 2) = X(2, 3) = 1.0;
    write_unitary_file(scratch("x1.json"), X);
    write_text_file(scratch("family.json"),
                    dump_json(Json::array({"x1.json", "pauli:2:0,1:1,0",
                                           pauli_to_json(PauliLabel(PrimeModulus(2), {1, 1}, {0, 0}))})));
    const auto family = read_family_file(scratch("family.json"), 0.0);
    ASSERT_EQ(family.size(), 3u);
    EXPECT_EQ(family.members()[0].label, "x1.json");
    EXPECT_EQ(family.dense(0), X);
    EXPECT_EQ(family.members()[1].label, "2:0,1:1,0");
    write_text_file(scratch("family_bad.json"), "[3]");
    EXPECT_EQ(code_of([] { (void)read_family_file(scratch("family_bad.json"), std::nullopt); }), ErrorCode::InputError);
}
