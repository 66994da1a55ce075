// Copyright 2026 The ame-graph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AME_REPORT_H
#define AME_REPORT_H

#include <json.hpp>

#include "ame/ame_verifier.h"
#include "ame/graph.h"
#include "ame/sweep.h"
#include "ame/witness.h"

namespace ame {

nlohmann::json to_json(const Multigraph &g);
nlohmann::json to_json(const ZdVector &v);
nlohmann::json to_json(const AmeVerdict &verdict);
nlohmann::json to_json(const WitnessReport &report);
nlohmann::json to_json(const SweepReport &report);
nlohmann::json to_json(const RegressionRow &row);

/// JSON number when it fits in 64 bits, decimal string otherwise.
nlohmann::json to_json(const Integer &value);

}  // namespace ame

#endif
