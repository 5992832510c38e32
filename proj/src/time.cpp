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

#include "sdsp/time.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace sdsp {

Usec usec_from_seconds(double s) { return static_cast<Usec>(std::llround(s * 1e6)); }

double seconds(Usec t) { return static_cast<double>(t) / 1e6; }

std::string format_seconds(Usec t) {
  bool negative = t < 0;
  unsigned long long abs_t = negative ? 0ULL - static_cast<unsigned long long>(t)
                                      : static_cast<unsigned long long>(t);
  unsigned long long whole = abs_t / kUsecPerSec;
  unsigned long long frac = abs_t % kUsecPerSec;
  char buf[40];
  if (frac == 0) {
    std::snprintf(buf, sizeof(buf), "%s%llu", negative ? "-" : "", whole);
    return buf;
  }
  char fracbuf[8];
  std::snprintf(fracbuf, sizeof(fracbuf), "%06llu", frac);
  int len = 6;
  while (len > 0 && fracbuf[len - 1] == '0') --len;
  fracbuf[len] = '\0';
  std::snprintf(buf, sizeof(buf), "%s%llu.%s", negative ? "-" : "", whole, fracbuf);
  return buf;
}

std::string format_decimal(double v) {
  // Round to the same six-decimal grid as times, then trim.
  return format_seconds(static_cast<Usec>(std::llround(v * 1e6)));
}

}  // namespace sdsp
