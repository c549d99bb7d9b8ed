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

#ifndef CJM_IO_HPP
#define CJM_IO_HPP

#include <string>
#include <vector>

#include "jacobi.hpp"
#include "moments.hpp"

namespace cjm::io {

// Emission is canonical: fixed field order, complex numbers as [re, im],
// floats printed with 17 significant digits so that parse -> emit is a fixed
// point byte for byte.
std::string format_double(double v);

std::string emit_jacobi(const jacobi::JacobiSpec& spec);
std::string emit_moments(const MomentSequence& s);
std::string emit_measure(const AtomicMeasure& mu);
std::string emit_similarity_report(double intertwining_residual, double gram_min_sv,
                                   std::size_t degree);
std::string emit_verify_report(const std::vector<double>& deviations, double tolerance,
                               bool pass);
std::string emit_error(const std::string& code, int exit_code, const std::string& message,
                       long index);

// CSV table of eigenvalues, header "re,im".
std::string emit_spectrum_csv(const std::vector<Complex>& values);

jacobi::JacobiSpec parse_jacobi(const std::string& text);   // validates entries
MomentSequence parse_moments(const std::string& text);      // rejects s_0 != 1
AtomicMeasure parse_measure(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cjm::io

#endif
