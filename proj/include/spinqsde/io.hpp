// Copyright 2026 The spinqsde Authors
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

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "spinqsde/model.hpp"

namespace spinqsde {

// Malformed input: unreadable file, bad JSON, wrong shapes, missing or
// duplicate sections. The message always names the offending field.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A system description holds exactly one of the two sections:
//   {"params": {"alpha": [a1,a2,a3], "lambda": [[re,im],[re,im],[re,im]]}}
//   {"qsde": {"F0": [..3..], "F": [[..]..], "G1": .., "G2": ..,
//             "H1": [..3..], "H2": [..3..]}}
// Complex numbers are [re, im] pairs; matrices are row-major arrays of rows.
struct SystemFile {
  std::optional<PhysicalParams> params;
  std::optional<BilinearQSDE> qsde;
};

// Whole-file read; throws LoadError when the file cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// Parse / serialize. All throw LoadError with the offending field named.
SystemFile parse_system(const std::string& text);
SystemFile system_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PhysicalParams& p);
nlohmann::json to_json(const BilinearQSDE& q);
PhysicalParams params_from_json(const nlohmann::json& j);
BilinearQSDE qsde_from_json(const nlohmann::json& j);

// 64-bit FNV-1a content digest, rendered as "fnv1a64:<16 hex digits>".
std::string fnv1a_digest(std::string_view bytes);

// Current UTC time as an ISO-8601 stamp, e.g. "2026-01-02T03:04:05Z".
std::string iso_timestamp();

}  // namespace spinqsde
