/*
 * Copyright 2026 the cjmoment authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cjm::io {

namespace {

using nlohmann::json;

std::string fmt_complex(const Complex& z) {
  return "[" + format_double(z.real()) + "," + format_double(z.imag()) + "]";
}

Complex parse_complex(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(ErrorCode::parse_error, std::string(where) + ": complex values are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json parse_root(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::parse_error, "malformed JSON");
  if (!j.is_object()) fail(ErrorCode::parse_error, "top-level JSON object expected");
  return j;
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string emit_jacobi(const jacobi::JacobiSpec& spec) {
  std::string out = "{\"a\":[";
  for (std::size_t k = 0; k < spec.a.size(); ++k) {
    if (k) out += ",";
    out += fmt_complex(spec.a[k]);
  }
  out += "],\"b\":[";
  for (std::size_t k = 0; k < spec.b.size(); ++k) {
    if (k) out += ",";
    out += fmt_complex(spec.b[k]);
  }
  out += "]}\n";
  return out;
}

std::string emit_moments(const MomentSequence& s) {
  std::string out = "{\"s\":[";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += fmt_complex(s[k]);
  }
  out += "]}\n";
  return out;
}

std::string emit_measure(const AtomicMeasure& mu) {
  std::string out = "{\"atoms\":[";
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if (k) out += ",";
    out += "{\"z\":" + fmt_complex(mu.atoms()[k].z) + ",\"w\":" + format_double(mu.atoms()[k].w) +
           "}";
  }
  out += "],\"support_radius\":" + format_double(mu.support_radius());
  out += ",\"tau\":" + format_double(mu.tau());
  out += ",\"rho\":" + format_double(mu.rho());
  out += "}\n";
  return out;
}

std::string emit_similarity_report(double intertwining_residual, double gram_min_sv,
                                   std::size_t degree) {
  return "{\"intertwining_residual\":" + format_double(intertwining_residual) +
         ",\"gram_min_sv\":" + format_double(gram_min_sv) +
         ",\"degree\":" + std::to_string(degree) + "}\n";
}

std::string emit_verify_report(const std::vector<double>& deviations, double tolerance,
                               bool pass) {
  std::string out = "{\"deviations\":[";
  for (std::size_t k = 0; k < deviations.size(); ++k) {
    if (k) out += ",";
    out += format_double(deviations[k]);
  }
  double mx = 0.0;
  for (double d : deviations) mx = std::max(mx, d);
  out += "],\"max_deviation\":" + format_double(mx);
  out += ",\"tolerance\":" + format_double(tolerance);
  out += std::string(",\"pass\":") + (pass ? "true" : "false") + "}\n";
  return out;
}

std::string emit_error(const std::string& code, int exit_code, const std::string& message,
                       long index) {
  json j;
  j["error"]["code"] = code;
  j["error"]["exit"] = exit_code;
  j["error"]["message"] = message;
  if (index >= 0) j["error"]["index"] = index;
  return j.dump() + "\n";
}

std::string emit_spectrum_csv(const std::vector<Complex>& values) {
  std::string out = "re,im\n";
  for (const auto& z : values)
    out += format_double(z.real()) + "," + format_double(z.imag()) + "\n";
  return out;
}

jacobi::JacobiSpec parse_jacobi(const std::string& text) {
  const json j = parse_root(text);
  if (!j.contains("a") || !j.contains("b") || !j["a"].is_array() || !j["b"].is_array())
    fail(ErrorCode::parse_error, "Jacobi file needs arrays \"a\" and \"b\"");
  jacobi::JacobiSpec spec;
  for (const auto& e : j["a"]) spec.a.push_back(parse_complex(e, "a"));
  for (const auto& e : j["b"]) spec.b.push_back(parse_complex(e, "b"));
  jacobi::validate(spec);
  return spec;
}

MomentSequence parse_moments(const std::string& text) {
  const json j = parse_root(text);
  if (!j.contains("s") || !j["s"].is_array())
    fail(ErrorCode::parse_error, "moment file needs an array \"s\"");
  if (j["s"].empty()) fail(ErrorCode::parse_error, "moment list is empty");
  MomentSequence s;
  for (const auto& e : j["s"]) s.values.push_back(parse_complex(e, "s"));
  if (s[0] != Complex(1.0, 0.0))
    fail(ErrorCode::normalization_error, "s_0 must equal 1");
  return s;
}

AtomicMeasure parse_measure(const std::string& text) {
  const json j = parse_root(text);
  if (!j.contains("atoms") || !j["atoms"].is_array())
    fail(ErrorCode::parse_error, "measure file needs an array \"atoms\"");
  std::vector<Atom> atoms;
  for (const auto& e : j["atoms"]) {
    if (!e.is_object() || !e.contains("z") || !e.contains("w") || !e["w"].is_number())
      fail(ErrorCode::parse_error, "atoms are objects {\"z\": [re, im], \"w\": weight}");
    atoms.push_back({parse_complex(e["z"], "z"), e["w"].get<double>()});
  }
  const double tau = j.value("tau", 0.0);
  const double rho = j.value("rho", 0.0);
  return AtomicMeasure(std::move(atoms), tau, rho);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::invalid_argument, "cannot write " + path);
  out << content;
}

}  // namespace cjm::io
