// Copyright 2026 The SDSP-BRM Authors
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

#pragma once

#include <cstdint>
#include <string>

namespace sdsp {

// All times and durations are fixed-point microseconds. Canonical files
// carry seconds with at most six decimal places, which maps 1:1 onto this
// representation, so serialization round-trips are exact and constraint
// arithmetic never drifts.
using Usec = std::int64_t;

inline constexpr Usec kUsecPerSec = 1'000'000;

// Equality tolerance for continuous quantities: 1e-6 s, i.e. one tick.
inline constexpr Usec kTimeTol = 1;

Usec usec_from_seconds(double s);
double seconds(Usec t);

// Renders microseconds as seconds with up to six decimal places, trailing
// zeros trimmed: 90000000 -> "90", 100500000 -> "100.5".
std::string format_seconds(Usec t);

// Same trimming discipline for plain doubles (report means etc.).
std::string format_decimal(double v);

}  // namespace sdsp
