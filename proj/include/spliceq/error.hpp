// Copyright 2026 The spliceq Authors
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

#ifndef SPLICEQ_ERROR_HPP
#define SPLICEQ_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace spliceq {

enum class ErrorCode {
  invalid_argument,
  pole_at_one,
  decorated_arrow_present,
  cache_mismatch,
  non_primitive_input,
  negative_determinant,
  non_integral_interpolation,
  missing_cache,
  degenerate_denominator,
  not_an_edge,
  no_f_arrow,
  non_polynomial_delta1,
  parse_error,
  validation_error,
  degenerate_branch,
  overflow,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C layer can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace spliceq

#endif  // SPLICEQ_ERROR_HPP
