// Copyright 2026 The squarepack Authors
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


// JSON readers and writers for the file formats shared by the CLI.

#pragma once

#include <json.hpp>
#include <string>

#include "squarepack/constants.hpp"
#include "squarepack/errors.hpp"
#include "squarepack/geometry.hpp"
#include "squarepack/reduction.hpp"
#include "squarepack/whitespace.hpp"

namespace squarepack::io {

using nlohmann::json;

// Readers throw kParseError on malformed documents and pass through the
// validation errors of the constructed values.
json to_json(const Rectangle& rect);
Rectangle rectangle_from_json(const json& j);

json to_json(const Packing& packing);
Packing packing_from_json(const json& j);

json to_json(const Instance& inst);
Instance instance_from_json(const json& j);

json to_json(const VerificationReport& report);
VerificationReport verification_report_from_json(const json& j);

json to_json(const FloorCertificate& cert);
json to_json(const HarmonicCheck& check);
json to_json(const ConstantsReport& report);
ConstantsReport constants_report_from_json(const json& j);

json to_json(const PackParams& params);
PackParams pack_params_from_json(const json& j);

json to_json(const ReductionResult& result);
ReductionResult reduction_result_from_json(const json& j);

json to_json(const WhitespaceResult& result);
WhitespaceResult whitespace_result_from_json(const json& j);

json error_json(ErrorKind kind, const std::string& message);

json read_json_file(const std::string& path);  // kIoError / kParseError
void write_text_file(const std::string& path, const std::string& text);

}  // namespace squarepack::io
