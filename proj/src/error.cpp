/******************************************************************************
 * Copyright 2026 The ktur Authors
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
 *****************************************************************************/

#include "ktur/error.hpp"

namespace ktur {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_grid: return "invalid_grid";
    case ErrorKind::incompatible_grids: return "incompatible_grids";
    case ErrorKind::resolution: return "resolution";
    case ErrorKind::aliasing_risk: return "aliasing_risk";
    case ErrorKind::degenerate_kernel: return "degenerate_kernel";
    case ErrorKind::singular_parameter: return "singular_parameter";
    case ErrorKind::grid_too_coarse: return "grid_too_coarse";
    case ErrorKind::not_normalized: return "not_normalized";
    case ErrorKind::hermiticity_violation: return "hermiticity_violation";
    case ErrorKind::unsupported_closed_form: return "unsupported_closed_form";
    case ErrorKind::insufficient_basis: return "insufficient_basis";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::parse_error: return "parse_error";
    case ErrorKind::io_error: return "io_error";
  }
  return "unknown";
}

bool is_numerical(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument:
    case ErrorKind::parse_error:
    case ErrorKind::io_error:
    case ErrorKind::invalid_grid:
      return false;
    default:
      return true;
  }
}

std::string_view to_string(DegenerateLimit limit) {
  switch (limit) {
    case DegenerateLimit::identity: return "identity";
    case DegenerateLimit::parity: return "parity";
    case DegenerateLimit::scaling: return "scaling";
  }
  return "unknown";
}

}  // namespace ktur
