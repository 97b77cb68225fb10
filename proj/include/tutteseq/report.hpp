// Copyright 2026 The tutteseq Authors
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

#pragma once

#include <nlohmann/json.hpp>

#include "tutteseq/betti.hpp"
#include "tutteseq/divisor.hpp"
#include "tutteseq/exactness.hpp"
#include "tutteseq/orientation.hpp"
#include "tutteseq/series.hpp"
#include "tutteseq/tutte.hpp"

namespace tutteseq {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const IntPoly& p);
/// [[i, j, "coefficient"], ...] sorted.
nlohmann::json to_json(const BiPoly& p);
/// [[i, k, value], ...] sorted.
nlohmann::json to_json(const BettiTable& t);
nlohmann::json to_json(const HilbertData& h);
nlohmann::json to_json(const Divisor& d);
nlohmann::json to_json(const Orientation& a);
nlohmann::json to_json(const ExactnessReport& r);
nlohmann::json to_json(const AltDcReport& r);
nlohmann::json to_json(const VanishingReport& r);

}  // namespace tutteseq
