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

#include <vector>

#include "ktur/grid.hpp"
#include "ktur/signals.hpp"

namespace ktur::test {

inline SampledSignal gaussian(const Grid& g, double mu = 0.0, double chirp = 0.0, double p0 = 0.0,
                              double sigma = 0.70710678118654752440) {
  return sample({GaussianSpec{mu, sigma, chirp, p0}}, g);
}

inline SampledSignal hermite(const Grid& g, std::vector<int> levels) {
  return sample({HermiteSpec{std::move(levels)}}, g);
}

inline double rel_distance(const SampledSignal& a, const SampledSignal& b) { return norm(a - b) / norm(b); }

}  // namespace ktur::test
