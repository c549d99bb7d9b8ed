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

// Command-line front end. Talks to the library exclusively through the C API
// in cjm.h; every verb reads/writes the JSON formats owned by the library.
//
// Exit codes: 0 success, 1 input or validation error, 2 reconstruction
// breakdown, 3 tolerance failure in verify, 4 internal numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cjm.h"

namespace {

int exit_code_for(cjm_status status) {
  switch (status) {
    case CJM_OK: return 0;
    case CJM_ERR_PARSE:
    case CJM_ERR_VALIDATION:
    case CJM_ERR_ARGUMENT: return 1;
    case CJM_ERR_BREAKDOWN: return 2;
    case CJM_ERR_TOLERANCE: return 3;
    case CJM_ERR_NUMERIC: return 4;
  }
  return 4;
}

std::string json_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

// Structured diagnostics on stderr, one JSON object per failure.
int report_failure(cjm_status status) {
  const int code = exit_code_for(status);
  std::string out = "{\"error\":{\"code\":\"";
  out += cjm_last_error_code_name();
  out += "\",\"exit\":" + std::to_string(code);
  out += ",\"message\":\"" + json_escape(cjm_last_error_message()) + "\"";
  if (cjm_last_error_index() >= 0)
    out += ",\"index\":" + std::to_string(cjm_last_error_index());
  out += "}}";
  std::cerr << out << std::endl;
  return code;
}

#define CHECK(call)                              \
  do {                                           \
    const cjm_status st_ = (call);               \
    if (st_ != CJM_OK) return report_failure(st_); \
  } while (0)

std::optional<std::string> read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "{\"error\":{\"code\":\"Io\",\"exit\":1,\"message\":\"cannot write "
              << json_escape(path) << "\"}}" << std::endl;
    return 1;
  }
  out << content;
  return 0;
}

struct JacobiHandle {
  cjm_jacobi* p = nullptr;
  ~JacobiHandle() { cjm_jacobi_free(p); }
};
struct MomentsHandle {
  cjm_moments* p = nullptr;
  ~MomentsHandle() { cjm_moments_free(p); }
};
struct MeasureHandle {
  cjm_measure* p = nullptr;
  ~MeasureHandle() { cjm_measure_free(p); }
};
struct StringHandle {
  char* p = nullptr;
  ~StringHandle() { cjm_string_free(p); }
};

int load_jacobi(const std::string& path, JacobiHandle& h) {
  auto text = read_text(path);
  if (!text) {
    std::cerr << "{\"error\":{\"code\":\"Io\",\"exit\":1,\"message\":\"cannot open "
              << json_escape(path) << "\"}}" << std::endl;
    return 1;
  }
  const cjm_status st = cjm_jacobi_parse_json(text->c_str(), &h.p);
  if (st != CJM_OK) return report_failure(st);
  return 0;
}

int load_moments(const std::string& path, MomentsHandle& h) {
  auto text = read_text(path);
  if (!text) {
    std::cerr << "{\"error\":{\"code\":\"Io\",\"exit\":1,\"message\":\"cannot open "
              << json_escape(path) << "\"}}" << std::endl;
    return 1;
  }
  const cjm_status st = cjm_moments_parse_json(text->c_str(), &h.p);
  if (st != CJM_OK) return report_failure(st);
  return 0;
}

int load_measure(const std::string& path, MeasureHandle& h) {
  auto text = read_text(path);
  if (!text) {
    std::cerr << "{\"error\":{\"code\":\"Io\",\"exit\":1,\"message\":\"cannot open "
              << json_escape(path) << "\"}}" << std::endl;
    return 1;
  }
  const cjm_status st = cjm_measure_parse_json(text->c_str(), &h.p);
  if (st != CJM_OK) return report_failure(st);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complex Jacobi matrices and moment problems on the complex plane"};
  app.require_subcommand(1);

  std::string jacobi_path, moments_path, measure_path, out_path;
  std::string tau_text = "auto", signs = "principal";
  std::size_t degree = 8;
  double tol = 1e-8;
  bool exact = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output path (default: stdout)");
  };

  auto* c_moments = app.add_subcommand("moments", "moments of a Jacobi window");
  c_moments->add_option("--jacobi", jacobi_path, "Jacobi JSON file")->required();
  c_moments->add_option("--degree", degree, "highest moment index K");
  c_moments->add_flag("--exact", exact, "exact rational recurrence");
  add_common(c_moments);

  auto* c_rec = app.add_subcommand("reconstruct", "Jacobi window from moments");
  c_rec->add_option("--moments", moments_path, "moment JSON file")->required();
  c_rec->add_option("--degree", degree, "window size n");
  c_rec->add_option("--sign", signs, "principal | comma-separated +1/-1 list");
  c_rec->add_flag("--exact", exact, "exact rational orthogonalization");
  add_common(c_rec);

  auto* c_solve = app.add_subcommand("solve", "atomic measure for a moment problem");
  c_solve->add_option("--moments", moments_path, "moment JSON file")->required();
  c_solve->add_option("--degree", degree, "moment degree K to match");
  c_solve->add_option("--tau", tau_text, "scaling parameter > growth radius, or 'auto'");
  add_common(c_solve);

  auto* c_verify = app.add_subcommand("verify", "compare measure moments against a file");
  c_verify->add_option("--measure", measure_path, "measure JSON file")->required();
  c_verify->add_option("--moments", moments_path, "moment JSON file")->required();
  c_verify->add_option("--degree", degree, "degree K to compare through");
  c_verify->add_option("--tol", tol, "tolerance for every deviation");
  add_common(c_verify);

  auto* c_inter = app.add_subcommand("intertwine", "similarity report for a Jacobi window");
  c_inter->add_option("--jacobi", jacobi_path, "Jacobi JSON file")->required();
  c_inter->add_option("--degree", degree, "degree d");
  c_inter->add_flag("--exact", exact, "exact rational recurrence identity");
  add_common(c_inter);

  auto* c_spec = app.add_subcommand("spectrum", "finite-section eigenvalue table (CSV)");
  c_spec->add_option("--jacobi", jacobi_path, "Jacobi JSON file")->required();
  c_spec->add_option("--degree", degree, "section size n");
  add_common(c_spec);

  CLI11_PARSE(app, argc, argv);

  if (c_moments->parsed()) {
    JacobiHandle spec;
    if (int rc = load_jacobi(jacobi_path, spec)) return rc;
    MomentsHandle s;
    CHECK(cjm_jacobi_moments(spec.p, degree, exact ? 1 : 0, &s.p));
    StringHandle text;
    CHECK(cjm_moments_to_json(s.p, &text.p));
    return write_output(out_path, text.p);
  }

  if (c_rec->parsed()) {
    MomentsHandle s;
    if (int rc = load_moments(moments_path, s)) return rc;
    JacobiHandle spec;
    CHECK(cjm_moments_reconstruct(s.p, degree, signs.c_str(), exact ? 1 : 0, &spec.p));
    StringHandle text;
    CHECK(cjm_jacobi_to_json(spec.p, &text.p));
    return write_output(out_path, text.p);
  }

  if (c_solve->parsed()) {
    MomentsHandle s;
    if (int rc = load_moments(moments_path, s)) return rc;
    double tau = 0.0;  // <= 0 selects the library default
    if (tau_text != "auto") {
      try {
        tau = std::stod(tau_text);
      } catch (...) {
        std::cerr << "{\"error\":{\"code\":\"InvalidArgument\",\"exit\":1,"
                     "\"message\":\"--tau expects a number or 'auto'\"}}"
                  << std::endl;
        return 1;
      }
      if (tau <= 0.0) {
        std::cerr << "{\"error\":{\"code\":\"NonpositiveTau\",\"exit\":1,"
                     "\"message\":\"tau must be positive\"}}"
                  << std::endl;
        return 1;
      }
    }
    MeasureHandle mu;
    CHECK(cjm_moments_solve(s.p, degree, tau, &mu.p));
    StringHandle text;
    CHECK(cjm_measure_to_json(mu.p, &text.p));
    return write_output(out_path, text.p);
  }

  if (c_verify->parsed()) {
    MeasureHandle mu;
    if (int rc = load_measure(measure_path, mu)) return rc;
    MomentsHandle s;
    if (int rc = load_moments(moments_path, s)) return rc;
    StringHandle report;
    const cjm_status st = cjm_measure_verify(mu.p, s.p, degree, tol, &report.p);
    if (report.p != nullptr) {
      const int rc = write_output(out_path, report.p);
      if (rc != 0) return rc;
    }
    if (st != CJM_OK) return report_failure(st);
    return 0;
  }

  if (c_inter->parsed()) {
    JacobiHandle spec;
    if (int rc = load_jacobi(jacobi_path, spec)) return rc;
    StringHandle report;
    CHECK(cjm_jacobi_similarity_report(spec.p, degree, exact ? 1 : 0, &report.p));
    return write_output(out_path, report.p);
  }

  if (c_spec->parsed()) {
    JacobiHandle spec;
    if (int rc = load_jacobi(jacobi_path, spec)) return rc;
    StringHandle csv;
    CHECK(cjm_jacobi_spectrum_csv(spec.p, degree, &csv.p));
    return write_output(out_path, csv.p);
  }

  return 1;
}
