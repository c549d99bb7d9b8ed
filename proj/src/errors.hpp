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

#ifndef CJM_ERRORS_HPP
#define CJM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cjm {

enum class ErrorCode {
  parse_error,
  normalization_error,
  zero_off_diagonal,
  empty_spec,
  window_overflow,
  insufficient_moments,
  degree_overflow,
  breakdown,
  inexact_square_root,
  nonpositive_tau,
  not_a_contraction,
  identity_check_failed,
  no_convergence,
  not_hermitian,
  negative_eigenvalue,
  negative_weight,
  empty_measure,
  tolerance_exceeded,
  invalid_argument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, long index = -1)
      : std::runtime_error(std::move(message)), code_(code), index_(index) {}

  ErrorCode code() const { return code_; }
  // Offending entry index where one applies (a_k = 0, breakdown step, ...).
  long index() const { return index_; }

 private:
  ErrorCode code_;
  long index_;
};

[[noreturn]] inline void fail(ErrorCode code, std::string message, long index = -1) {
  throw Error(code, std::move(message), index);
}

}  // namespace cjm

#endif
