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

#include "spinqsde/io.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

namespace spinqsde {

namespace {

using nlohmann::json;

double parse_real(const json& j, const std::string& where) {
  if (!j.is_number())
    throw LoadError("field " + where + " must be a real number");
  return j.get<double>();
}

Complex parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw LoadError("field " + where + " must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key))
    throw LoadError("field " + where + "." + key + " is missing");
  return j.at(key);
}

template <typename Vec>
Vec parse_real3(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3)
    throw LoadError("field " + where + " must be an array of 3 real numbers");
  Vec v;
  for (int i = 0; i < 3; ++i)
    v(i) = parse_real(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

RowVec3c parse_complex3(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3)
    throw LoadError("field " + where + " must be an array of 3 [re, im] pairs");
  RowVec3c v;
  for (int i = 0; i < 3; ++i)
    v(i) = parse_complex(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

Mat3 parse_mat3(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3)
    throw LoadError("field " + where + " must be a 3x3 matrix (3 rows)");
  Mat3 m;
  for (int r = 0; r < 3; ++r) {
    const json& row = j[r];
    const std::string row_where = where + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != 3)
      throw LoadError("field " + row_where + " must be a row of 3 real numbers");
    for (int c = 0; c < 3; ++c)
      m(r, c) = parse_real(row[c], row_where + "[" + std::to_string(c) + "]");
  }
  return m;
}

void reject_unknown(const json& j, std::initializer_list<const char*> known,
                    const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || (key == k);
    if (!ok) throw LoadError("unknown field " + where + "." + key);
  }
}

json complex_to_json(const Complex& z) {
  return json::array({z.real(), z.imag()});
}

json row3_to_json(const RowVec3& v) { return json::array({v(0), v(1), v(2)}); }

json mat3_to_json(const Mat3& m) {
  json rows = json::array();
  for (int r = 0; r < 3; ++r)
    rows.push_back(json::array({m(r, 0), m(r, 1), m(r, 2)}));
  return rows;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LoadError("cannot open output file: " + path);
  out << contents;
  out.flush();
  if (!out) throw LoadError("failed while writing output file: " + path);
}

PhysicalParams params_from_json(const json& j) {
  if (!j.is_object()) throw LoadError("field params must be an object");
  reject_unknown(j, {"alpha", "lambda"}, "params");
  PhysicalParams p;
  p.alpha = parse_real3<RowVec3>(require(j, "alpha", "params"), "params.alpha");
  p.lambda = parse_complex3(require(j, "lambda", "params"), "params.lambda");
  return p;
}

BilinearQSDE qsde_from_json(const json& j) {
  if (!j.is_object()) throw LoadError("field qsde must be an object");
  reject_unknown(j, {"F0", "F", "G1", "G2", "H1", "H2"}, "qsde");
  BilinearQSDE q;
  q.F0 = parse_real3<Vec3>(require(j, "F0", "qsde"), "qsde.F0");
  q.F = parse_mat3(require(j, "F", "qsde"), "qsde.F");
  q.G1 = parse_mat3(require(j, "G1", "qsde"), "qsde.G1");
  q.G2 = parse_mat3(require(j, "G2", "qsde"), "qsde.G2");
  q.H1 = parse_real3<RowVec3>(require(j, "H1", "qsde"), "qsde.H1");
  q.H2 = parse_real3<RowVec3>(require(j, "H2", "qsde"), "qsde.H2");
  return q;
}

SystemFile system_from_json(const json& j) {
  if (!j.is_object()) throw LoadError("system file must be a JSON object");
  const bool has_params = j.contains("params");
  const bool has_qsde = j.contains("qsde");
  if (has_params && has_qsde)
    throw LoadError(
        "system file must contain exactly one of \"params\" or \"qsde\" "
        "(found both)");
  if (!has_params && !has_qsde)
    throw LoadError(
        "system file must contain exactly one of \"params\" or \"qsde\" "
        "(found neither)");
  SystemFile s;
  if (has_params) s.params = params_from_json(j.at("params"));
  if (has_qsde) s.qsde = qsde_from_json(j.at("qsde"));
  return s;
}

SystemFile parse_system(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw LoadError(std::string("input is not valid JSON: ") + e.what());
  }
  return system_from_json(j);
}

json to_json(const PhysicalParams& p) {
  json j;
  j["alpha"] = row3_to_json(p.alpha);
  j["lambda"] = json::array({complex_to_json(p.lambda(0)),
                             complex_to_json(p.lambda(1)),
                             complex_to_json(p.lambda(2))});
  return j;
}

json to_json(const BilinearQSDE& q) {
  json j;
  j["F0"] = json::array({q.F0(0), q.F0(1), q.F0(2)});
  j["F"] = mat3_to_json(q.F);
  j["G1"] = mat3_to_json(q.G1);
  j["G2"] = mat3_to_json(q.G2);
  j["H1"] = row3_to_json(q.H1);
  j["H2"] = row3_to_json(q.H2);
  return j;
}

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (const char ch : bytes) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string iso_timestamp() {
  const std::time_t tt =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace spinqsde
