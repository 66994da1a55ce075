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

#include "ame/report.h"

#include <limits>

namespace ame {

nlohmann::json to_json(const Multigraph &g) {
    return nlohmann::json::parse(serialize_graph(g));
}

nlohmann::json to_json(const ZdVector &v) {
    return std::vector<Residue>(v.entries().begin(), v.entries().end());
}

nlohmann::json to_json(const Integer &value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
        return value.convert_to<std::int64_t>();
    }
    return value.str();
}

nlohmann::json to_json(const AmeVerdict &verdict) {
    nlohmann::json j;
    j["is_ame"] = verdict.is_ame;
    j["min_weight"] = verdict.min_weight;
    j["min_weight_exact"] = verdict.min_weight_exact;
    j["witness_alpha"] = verdict.witness_alpha ? to_json(verdict.witness_alpha->alpha) : nlohmann::json(nullptr);
    j["checked_count"] = verdict.checked_count;
    return j;
}

nlohmann::json to_json(const WitnessReport &report) {
    nlohmann::json deltas = nlohmann::json::object();
    for (const auto &[j, delta] : report.deltas) {
        deltas[std::to_string(j)] = to_json(delta);
    }
    nlohmann::json out;
    out["k"] = report.k;
    out["chosen_j"] = report.chosen_j;
    out["deltas"] = std::move(deltas);
    out["kernel"] = to_json(report.kernel);
    out["alpha"] = to_json(report.alpha.alpha);
    out["witness"] = {
        {"x", to_json(report.witness.x())},
        {"z", to_json(report.witness.z())},
        {"pauli", to_string(report.witness)},
    };
    out["witness_weight"] = report.witness_weight;
    return out;
}

nlohmann::json to_json(const SweepReport &report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["d"] = report.d;
    j["mode"] = to_string(report.mode);
    j["graphs_checked"] = report.graphs_checked;
    j["ame_found"] = report.ame_found;
    j["first_ame_index"] = report.first_ame_index ? nlohmann::json(*report.first_ame_index) : nlohmann::json(nullptr);
    j["first_ame_graph"] = report.first_ame_graph ? to_json(*report.first_ame_graph) : nlohmann::json(nullptr);
    j["witness_failures"] = report.witness_failures;
    j["elapsed_seconds"] = report.elapsed.count();
    return j;
}

nlohmann::json to_json(const RegressionRow &row) {
    static constexpr const char *kExpectation[] = {"none", "exists", "informational"};
    nlohmann::json j;
    j["label"] = row.label;
    j["n"] = row.n;
    j["d"] = row.d;
    j["expected"] = kExpectation[static_cast<int>(row.expectation)];
    j["basis"] = row.basis;
    j["passed"] = row.passed;
    j["graphs_checked"] = row.graphs_checked;
    j["ame_found"] = row.ame_found;
    j["witness_failures"] = row.witness_failures;
    j["dense_confirmed"] = row.dense_confirmed ? nlohmann::json(*row.dense_confirmed) : nlohmann::json(nullptr);
    j["example"] = row.example ? to_json(*row.example) : nlohmann::json(nullptr);
    return j;
}

}  // namespace ame
