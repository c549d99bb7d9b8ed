#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "cjm.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { cjm_string_free(p); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(cjm_version()) == "1.0.0");
  CHECK(std::string(cjm_status_name(CJM_OK)) == "ok");
  CHECK(std::string(cjm_status_name(CJM_ERR_BREAKDOWN)) == "breakdown");
}

TEST_CASE("jacobi handles") {
  const double a[] = {1, 0};
  const double b[] = {0, 0, 0, 0};
  cjm_jacobi* spec = nullptr;
  REQUIRE(cjm_jacobi_create(a, 1, b, 2, &spec) == CJM_OK);
  CHECK(cjm_jacobi_window(spec) == 2);

  double a_out[2] = {9, 9}, b_out[4] = {9, 9, 9, 9};
  CHECK(cjm_jacobi_entries(spec, a_out, b_out) == CJM_OK);
  CHECK(a_out[0] == 1.0);
  CHECK(b_out[2] == 0.0);

  double bound = -1;
  CHECK(cjm_jacobi_norm_bound(spec, &bound) == CJM_OK);
  CHECK(bound == doctest::Approx(2.0));

  Str js;
  CHECK(cjm_jacobi_to_json(spec, &js.p) == CJM_OK);
  cjm_jacobi* again = nullptr;
  CHECK(cjm_jacobi_parse_json(js.p, &again) == CJM_OK);
  CHECK(cjm_jacobi_window(again) == 2);
  cjm_jacobi_free(again);
  cjm_jacobi_free(spec);
}

TEST_CASE("validation errors carry code names and indices") {
  const double a[] = {0, 0};
  const double b[] = {0, 0, 0, 0};
  cjm_jacobi* spec = nullptr;
  CHECK(cjm_jacobi_create(a, 1, b, 2, &spec) == CJM_ERR_VALIDATION);
  CHECK(std::string(cjm_last_error_code_name()) == "ZeroOffDiagonal");
  CHECK(cjm_last_error_index() == 0);
  CHECK(cjm_jacobi_create(a, 1, b, 2, nullptr) == CJM_ERR_ARGUMENT);
}

TEST_CASE("moments, solve and verify through the C surface") {
  // free Jacobi window
  std::vector<double> a(18, 0.0), b(20, 0.0);
  for (std::size_t k = 0; k < 9; ++k) a[2 * k] = 1.0;
  cjm_jacobi* spec = nullptr;
  REQUIRE(cjm_jacobi_create(a.data(), 9, b.data(), 10, &spec) == CJM_OK);

  cjm_moments* s = nullptr;
  REQUIRE(cjm_jacobi_moments(spec, 8, 0, &s) == CJM_OK);
  CHECK(cjm_moments_count(s) == 9);
  std::vector<double> values(18);
  CHECK(cjm_moments_values(s, values.data()) == CJM_OK);
  CHECK(values[16] == 14.0);  // s_8, Catalan

  // exact mode agrees on integer data
  cjm_moments* sx = nullptr;
  REQUIRE(cjm_jacobi_moments(spec, 8, 1, &sx) == CJM_OK);
  std::vector<double> xvalues(18);
  CHECK(cjm_moments_values(sx, xvalues.data()) == CJM_OK);
  CHECK(std::memcmp(values.data(), xvalues.data(), sizeof(double) * 18) == 0);
  cjm_moments_free(sx);

  double radius = 0;
  CHECK(cjm_moments_growth_radius(s, &radius) == CJM_OK);
  CHECK(radius == doctest::Approx(std::pow(14.0, 0.125)));

  cjm_measure* mu = nullptr;
  REQUIRE(cjm_moments_solve(s, 8, 0.0, &mu) == CJM_OK);
  CHECK(cjm_measure_atom_count(mu) > 0);

  Str report;
  CHECK(cjm_measure_verify(mu, s, 8, 1e-8, &report.p) == CJM_OK);
  CHECK(std::string(report.p).find("\"pass\":true") != std::string::npos);

  Str strict;
  CHECK(cjm_measure_verify(mu, s, 8, 1e-30, &strict.p) == CJM_ERR_TOLERANCE);
  REQUIRE(strict.p != nullptr);  // report produced even on failure
  CHECK(std::string(strict.p).find("\"pass\":false") != std::string::npos);

  cjm_measure* roundtrip = nullptr;
  Str mj;
  CHECK(cjm_measure_to_json(mu, &mj.p) == CJM_OK);
  CHECK(cjm_measure_parse_json(mj.p, &roundtrip) == CJM_OK);
  CHECK(cjm_measure_atom_count(roundtrip) == cjm_measure_atom_count(mu));
  cjm_measure_free(roundtrip);

  cjm_measure_free(mu);
  cjm_moments_free(s);
  cjm_jacobi_free(spec);
}

TEST_CASE("reconstruction breakdown through the C surface") {
  // dirac-at-1 moments
  std::vector<double> s(14, 0.0);
  for (std::size_t n = 0; n < 7; ++n) s[2 * n] = 1.0;
  cjm_moments* m = nullptr;
  REQUIRE(cjm_moments_create(s.data(), 7, &m) == CJM_OK);
  cjm_jacobi* spec = nullptr;
  CHECK(cjm_moments_reconstruct(m, 3, "principal", 0, &spec) == CJM_ERR_BREAKDOWN);
  CHECK(std::string(cjm_last_error_code_name()) == "Breakdown");
  CHECK(cjm_last_error_index() == 0);

  // but the dilation route succeeds on the same input
  cjm_measure* mu = nullptr;
  CHECK(cjm_moments_solve(m, 6, 0.0, &mu) == CJM_OK);
  cjm_measure_free(mu);
  cjm_moments_free(m);
}

TEST_CASE("reconstruction with an explicit sign list") {
  std::vector<double> s = {1, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 5, 0, 0, 0};
  cjm_moments* m = nullptr;
  REQUIRE(cjm_moments_create(s.data(), 8, &m) == CJM_OK);
  cjm_jacobi* spec = nullptr;
  REQUIRE(cjm_moments_reconstruct(m, 3, "-1,-1", 0, &spec) == CJM_OK);
  double a[4], b[6];
  CHECK(cjm_jacobi_entries(spec, a, b) == CJM_OK);
  CHECK(a[0] == doctest::Approx(-1.0));
  CHECK(a[2] == doctest::Approx(-1.0));
  cjm_jacobi_free(spec);
  CHECK(cjm_moments_reconstruct(m, 3, "up,down", 0, &spec) == CJM_ERR_ARGUMENT);
  cjm_moments_free(m);
}

TEST_CASE("normalization is enforced at the boundary") {
  const double bad[] = {2, 0};
  cjm_moments* m = nullptr;
  CHECK(cjm_moments_create(bad, 1, &m) == CJM_ERR_VALIDATION);
  CHECK(std::string(cjm_last_error_code_name()) == "NormalizationError");
  CHECK(cjm_moments_parse_json("{\"s\": [[2,0]]}", &m) == CJM_ERR_VALIDATION);
  CHECK(cjm_moments_parse_json("{oops", &m) == CJM_ERR_PARSE);
}

TEST_CASE("spectrum and similarity reports") {
  std::vector<double> a(8, 0.0), b(10, 0.0);
  for (std::size_t k = 0; k < 4; ++k) a[2 * k] = 1.0;
  cjm_jacobi* spec = nullptr;
  REQUIRE(cjm_jacobi_create(a.data(), 4, b.data(), 5, &spec) == CJM_OK);

  Str csv;
  REQUIRE(cjm_jacobi_spectrum_csv(spec, 3, &csv.p) == CJM_OK);
  CHECK(std::string(csv.p).rfind("re,im\n", 0) == 0);

  Str rep;
  REQUIRE(cjm_jacobi_similarity_report(spec, 2, 1, &rep.p) == CJM_OK);
  CHECK(std::string(rep.p).find("\"intertwining_residual\":0,") != std::string::npos);
  cjm_jacobi_free(spec);
}
