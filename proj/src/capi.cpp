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

#include "cjm.h"

#include <cstring>
#include <new>
#include <string>

#include "dilation.hpp"
#include "errors.hpp"
#include "functional.hpp"
#include "io.hpp"
#include "jacobi.hpp"
#include "moments.hpp"
#include "reconstruct.hpp"
#include "similarity.hpp"

struct cjm_jacobi {
  cjm::jacobi::JacobiSpec spec;
};
struct cjm_moments {
  cjm::MomentSequence s;
};
struct cjm_measure {
  cjm::AtomicMeasure mu;
};

namespace {

thread_local std::string g_error_message;
thread_local std::string g_error_code = "None";
thread_local long g_error_index = -1;

cjm_status map_code(cjm::ErrorCode code) {
  using EC = cjm::ErrorCode;
  switch (code) {
    case EC::parse_error:
      return CJM_ERR_PARSE;
    case EC::normalization_error:
    case EC::zero_off_diagonal:
    case EC::empty_spec:
    case EC::window_overflow:
    case EC::insufficient_moments:
    case EC::degree_overflow:
    case EC::nonpositive_tau:
    case EC::negative_weight:
    case EC::empty_measure:
      return CJM_ERR_VALIDATION;
    case EC::breakdown:
    case EC::inexact_square_root:
      return CJM_ERR_BREAKDOWN;
    case EC::tolerance_exceeded:
      return CJM_ERR_TOLERANCE;
    case EC::not_a_contraction:
    case EC::identity_check_failed:
    case EC::no_convergence:
    case EC::not_hermitian:
    case EC::negative_eigenvalue:
      return CJM_ERR_NUMERIC;
    case EC::invalid_argument:
      return CJM_ERR_ARGUMENT;
  }
  return CJM_ERR_NUMERIC;
}

void clear_error() {
  g_error_message.clear();
  g_error_code = "None";
  g_error_index = -1;
}

template <class F>
cjm_status guarded(F&& fn) {
  clear_error();
  try {
    fn();
    return CJM_OK;
  } catch (const cjm::Error& e) {
    g_error_message = e.what();
    g_error_code = cjm::error_code_name(e.code());
    g_error_index = e.index();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_error_message = "out of memory";
    g_error_code = "OutOfMemory";
    return CJM_ERR_NUMERIC;
  } catch (const std::exception& e) {
    g_error_message = e.what();
    g_error_code = "Internal";
    return CJM_ERR_NUMERIC;
  }
}

cjm_status arg_error(const char* message) {
  g_error_message = message;
  g_error_code = "InvalidArgument";
  g_error_index = -1;
  return CJM_ERR_ARGUMENT;
}

char* dup_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

std::vector<cjm::Complex> from_interleaved(const double* data, size_t count) {
  std::vector<cjm::Complex> out(count);
  for (size_t k = 0; k < count; ++k) out[k] = cjm::Complex(data[2 * k], data[2 * k + 1]);
  return out;
}

cjm::reconstruct::SignRule parse_signs(const char* signs) {
  using cjm::reconstruct::SignRule;
  if (signs == nullptr || std::string(signs) == "principal" || std::string(signs).empty())
    return SignRule::principal();
  std::vector<int> list;
  const std::string text(signs);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string tok = text.substr(pos, next - pos);
    if (tok == "1" || tok == "+1")
      list.push_back(1);
    else if (tok == "-1")
      list.push_back(-1);
    else
      cjm::fail(cjm::ErrorCode::invalid_argument,
                "sign list entries must be +1 or -1, got '" + tok + "'");
    pos = next + 1;
  }
  return SignRule::list(std::move(list));
}

}  // namespace

extern "C" {

const char* cjm_version(void) { return "1.0.0"; }

const char* cjm_status_name(cjm_status status) {
  switch (status) {
    case CJM_OK: return "ok";
    case CJM_ERR_PARSE: return "parse-error";
    case CJM_ERR_VALIDATION: return "validation-error";
    case CJM_ERR_BREAKDOWN: return "breakdown";
    case CJM_ERR_TOLERANCE: return "tolerance-failure";
    case CJM_ERR_NUMERIC: return "numeric-failure";
    case CJM_ERR_ARGUMENT: return "invalid-argument";
  }
  return "unknown";
}

const char* cjm_last_error_message(void) { return g_error_message.c_str(); }
const char* cjm_last_error_code_name(void) { return g_error_code.c_str(); }
long cjm_last_error_index(void) { return g_error_index; }

void cjm_string_free(char* text) { delete[] text; }

/* ---- Jacobi ---- */

cjm_status cjm_jacobi_create(const double* a, size_t n_a, const double* b, size_t n_b,
                             cjm_jacobi** out) {
  if (out == nullptr || (n_a > 0 && a == nullptr) || (n_b > 0 && b == nullptr))
    return arg_error("null pointer");
  return guarded([&] {
    cjm::jacobi::JacobiSpec spec;
    spec.a = from_interleaved(a, n_a);
    spec.b = from_interleaved(b, n_b);
    cjm::jacobi::validate(spec);
    *out = new cjm_jacobi{std::move(spec)};
  });
}

cjm_status cjm_jacobi_parse_json(const char* text, cjm_jacobi** out) {
  if (text == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] { *out = new cjm_jacobi{cjm::io::parse_jacobi(text)}; });
}

cjm_status cjm_jacobi_to_json(const cjm_jacobi* spec, char** out) {
  if (spec == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] { *out = dup_string(cjm::io::emit_jacobi(spec->spec)); });
}

void cjm_jacobi_free(cjm_jacobi* spec) { delete spec; }

size_t cjm_jacobi_window(const cjm_jacobi* spec) { return spec ? spec->spec.size() : 0; }

cjm_status cjm_jacobi_entries(const cjm_jacobi* spec, double* a, double* b) {
  if (spec == nullptr || a == nullptr || b == nullptr) return arg_error("null pointer");
  for (size_t k = 0; k < spec->spec.a.size(); ++k) {
    a[2 * k] = spec->spec.a[k].real();
    a[2 * k + 1] = spec->spec.a[k].imag();
  }
  for (size_t k = 0; k < spec->spec.b.size(); ++k) {
    b[2 * k] = spec->spec.b[k].real();
    b[2 * k + 1] = spec->spec.b[k].imag();
  }
  return CJM_OK;
}

cjm_status cjm_jacobi_norm_bound(const cjm_jacobi* spec, double* out) {
  if (spec == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] { *out = cjm::jacobi::norm_bound(spec->spec); });
}

cjm_status cjm_jacobi_moments(const cjm_jacobi* spec, size_t K, int exact, cjm_moments** out) {
  if (spec == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] {
    if (exact) {
      const auto sq = cjm::jacobi::window_moments(cjm::jacobi::to_exact(spec->spec), K);
      std::vector<cjm::Complex> values;
      values.reserve(sq.size());
      for (const auto& z : sq) values.push_back(z.to_complex());
      *out = new cjm_moments{cjm::MomentSequence(std::move(values))};
    } else {
      *out = new cjm_moments{cjm::jacobi::compute_moments(spec->spec, K)};
    }
  });
}

cjm_status cjm_jacobi_spectrum_csv(const cjm_jacobi* spec, size_t n, char** out) {
  if (spec == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] {
    const auto section = cjm::jacobi::finite_section(spec->spec, n);
    const auto eig = cjm::linalg::complex_eig(section);
    *out = dup_string(cjm::io::emit_spectrum_csv(eig.eigenvalues));
  });
}

cjm_status cjm_jacobi_similarity_report(const cjm_jacobi* spec, size_t d, int exact,
                                        char** out) {
  if (spec == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] {
    double residual;
    if (exact) {
      residual =
          cjm::similarity::check_intertwining(cjm::jacobi::to_exact(spec->spec), d);
    } else {
      residual = cjm::similarity::check_intertwining(spec->spec, d);
    }
    // injectivity evidence from the solver's measure at matching degree
    const auto s = cjm::jacobi::compute_moments(spec->spec, 2 * d);
    const auto mu = cjm::dilation::solve_moment_problem(s, 2 * d);
    const auto map = cjm::similarity::BasisMapD::build(spec->spec, d);
    const auto gram = cjm::similarity::gram_matrix(map, mu, d);
    *out = dup_string(cjm::io::emit_similarity_report(residual, gram.smallest_sv, d));
  });
}

/* ---- moments ---- */

cjm_status cjm_moments_create(const double* s, size_t count, cjm_moments** out) {
  if (out == nullptr || (count > 0 && s == nullptr)) return arg_error("null pointer");
  return guarded([&] {
    cjm::MomentSequence seq(from_interleaved(s, count));
    cjm::require_normalized(seq, 0.0);
    *out = new cjm_moments{std::move(seq)};
  });
}

cjm_status cjm_moments_parse_json(const char* text, cjm_moments** out) {
  if (text == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] { *out = new cjm_moments{cjm::io::parse_moments(text)}; });
}

cjm_status cjm_moments_to_json(const cjm_moments* s, char** out) {
  if (s == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] { *out = dup_string(cjm::io::emit_moments(s->s)); });
}

void cjm_moments_free(cjm_moments* s) { delete s; }

size_t cjm_moments_count(const cjm_moments* s) { return s ? s->s.size() : 0; }

cjm_status cjm_moments_values(const cjm_moments* s, double* out) {
  if (s == nullptr || out == nullptr) return arg_error("null pointer");
  for (size_t k = 0; k < s->s.size(); ++k) {
    out[2 * k] = s->s[k].real();
    out[2 * k + 1] = s->s[k].imag();
  }
  return CJM_OK;
}

cjm_status cjm_moments_growth_radius(const cjm_moments* s, double* out) {
  if (s == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] { *out = cjm::dilation::growth_radius(s->s); });
}

cjm_status cjm_moments_reconstruct(const cjm_moments* s, size_t n, const char* signs, int exact,
                                   cjm_jacobi** out) {
  if (s == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] {
    const auto rule = parse_signs(signs);
    if (exact) {
      std::vector<cjm::RationalComplex> sq;
      sq.reserve(s->s.size());
      for (const auto& z : s->s.values) sq.push_back(cjm::RationalComplex::from(z));
      *out = new cjm_jacobi{
          cjm::jacobi::to_double(cjm::reconstruct::moments_to_jacobi_exact(sq, n, rule))};
    } else {
      *out = new cjm_jacobi{cjm::reconstruct::moments_to_jacobi(s->s, n, rule)};
    }
  });
}

cjm_status cjm_moments_solve(const cjm_moments* s, size_t K, double tau, cjm_measure** out) {
  if (s == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] {
    cjm::dilation::SolveOptions options;
    if (tau > 0.0) options.tau = tau;
    *out = new cjm_measure{cjm::dilation::solve_moment_problem(s->s, K, options)};
  });
}

/* ---- measures ---- */

cjm_status cjm_measure_parse_json(const char* text, cjm_measure** out) {
  if (text == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] { *out = new cjm_measure{cjm::io::parse_measure(text)}; });
}

cjm_status cjm_measure_to_json(const cjm_measure* mu, char** out) {
  if (mu == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] { *out = dup_string(cjm::io::emit_measure(mu->mu)); });
}

void cjm_measure_free(cjm_measure* mu) { delete mu; }

size_t cjm_measure_atom_count(const cjm_measure* mu) { return mu ? mu->mu.size() : 0; }

cjm_status cjm_measure_atoms(const cjm_measure* mu, double* z, double* w) {
  if (mu == nullptr || z == nullptr || w == nullptr) return arg_error("null pointer");
  for (size_t k = 0; k < mu->mu.size(); ++k) {
    z[2 * k] = mu->mu.atoms()[k].z.real();
    z[2 * k + 1] = mu->mu.atoms()[k].z.imag();
    w[k] = mu->mu.atoms()[k].w;
  }
  return CJM_OK;
}

cjm_status cjm_measure_moments(const cjm_measure* mu, size_t K, cjm_moments** out) {
  if (mu == nullptr || out == nullptr) return arg_error("null pointer");
  return guarded([&] { *out = new cjm_moments{cjm::dilation::measure_moments(mu->mu, K)}; });
}

cjm_status cjm_measure_verify(const cjm_measure* mu, const cjm_moments* s, size_t K, double tol,
                              char** report) {
  if (mu == nullptr || s == nullptr || report == nullptr) return arg_error("null pointer");
  return guarded([&] {
    if (K > s->s.max_index())
      cjm::fail(cjm::ErrorCode::insufficient_moments, "verify degree exceeds the moments");
    const auto got = cjm::dilation::measure_moments(mu->mu, K);
    std::vector<double> deviations(K + 1);
    double mx = 0.0;
    for (size_t n = 0; n <= K; ++n) {
      deviations[n] = std::abs(got[n] - s->s[n]);
      mx = std::max(mx, deviations[n]);
    }
    const bool pass = mx <= tol;
    *report = dup_string(cjm::io::emit_verify_report(deviations, tol, pass));
    if (!pass)
      cjm::fail(cjm::ErrorCode::tolerance_exceeded,
                "max deviation " + std::to_string(mx) + " exceeds tolerance");
  });
}

}  // extern "C"
