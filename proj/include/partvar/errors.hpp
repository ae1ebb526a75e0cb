// Copyright 2026 The partvar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARTVAR_ERRORS_HPP_
#define PARTVAR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace partvar {

enum class ErrorCode {
  invalid_value,            // bad field value (mass <= 0, non-finite conc, ...)
  dimension_mismatch,       // vector/matrix sizes disagree
  asymmetric_dependence,    // C matrix asymmetry beyond tolerance
  empty_sample,             // M_sample == 0 where theta_hat is needed
  degenerate_dependence,    // some C_ij >= 1 with a 1/(1-C) weighting
  degenerate_mass_variance, // plug-in V(M) <= 0 where the B-model needs it
  zero_sample_amount,       // plug-in E(A) == 0, beta undefined
  undefined_dependence,     // kappa_i == 0 in the C' conversion
  invalid_configuration,    // bad option (x <= 0, unknown design, ...)
  enumeration_too_large,    // exact enumeration refused
  insufficient_data,        // too few usable replicates
  parse_error,              // malformed input file
  label_mismatch,           // kind labels disagree between files
};

/// Exception carrying a stable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace partvar

#endif  // PARTVAR_ERRORS_HPP_
