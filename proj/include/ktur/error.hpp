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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ktur {

enum class ErrorKind {
  invalid_grid,
  incompatible_grids,
  resolution,
  aliasing_risk,
  degenerate_kernel,
  singular_parameter,
  grid_too_coarse,
  not_normalized,
  hermiticity_violation,
  unsupported_closed_form,
  insufficient_basis,
  invalid_argument,
  parse_error,
  io_error,
};

std::string_view to_string(ErrorKind kind);

/// Numerical preconditions (as opposed to malformed configuration).
bool is_numerical(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Analytic limit of a kernel family at a parameter where the sampled kernel
/// would collapse to a delta or a pure scaling.
enum class DegenerateLimit { identity, parity, scaling };

std::string_view to_string(DegenerateLimit limit);

class DegenerateKernelError : public Error {
 public:
  DegenerateKernelError(DegenerateLimit limit, const std::string& detail)
      : Error(ErrorKind::degenerate_kernel, detail), limit_(limit) {}

  DegenerateLimit limit() const noexcept { return limit_; }

 private:
  DegenerateLimit limit_;
};

}  // namespace ktur
