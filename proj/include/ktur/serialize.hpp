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

#include <string>

#include "json.hpp"

#include "ktur/bounds.hpp"
#include "ktur/kernel.hpp"
#include "ktur/moments.hpp"
#include "ktur/number_domain.hpp"
#include "ktur/transform.hpp"

namespace ktur {

using Json = nlohmann::ordered_json;

/// Shortest representation that round-trips; "nan", "inf", "-inf" otherwise.
std::string format_double(double v);

Json to_json(const QuadPhaseKernel& k);
/// Inverse of to_json(QuadPhaseKernel); validates like the constructor.
QuadPhaseKernel kernel_from_json(const Json& j);

Json to_json(const MomentSet& m);
Json to_json(const HigherMoments& m);
Json to_json(const UrReport& r);
Json to_json(const UnitarityReport& r);
Json to_json(const NumberDecomposition& d);
Json to_json(const DomainMoments& m);

/// Pretty-printed with two-space indent and a trailing newline.
std::string dump(const Json& j);

}  // namespace ktur
