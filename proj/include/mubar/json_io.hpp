#pragma once

#include "mubar/report.hpp"
#include "mubar/verify.hpp"

#include <json.hpp>

namespace mubar {

using json = nlohmann::ordered_json;

inline json report_json(const InvariantReport& r) {
    json verdicts = json::object();
    for (const auto& [name, pass] : r.verdicts) verdicts[name] = pass;
    return json{{"seifert", r.seifert.name()},
                {"eta_combination", to_string(r.eta_combination)},
                {"mubar", r.mubar.convert_to<long long>()},
                {"mubar_dedekind", to_string(r.mubar_dedekind)},
                {"signature", r.signature.convert_to<long long>()},
                {"wu_self_intersection", r.wu_self_intersection.convert_to<long long>()},
                {"aps_index", to_string(r.aps_index)},
                {"verdicts", verdicts}};
}

inline json graph_json(const PlumbingGraph& g) {
    json arms = json::array();
    for (const auto& arm : g.arms) arms.push_back(arm);
    json framings = json::object();
    for (int i = 0; i < g.size(); ++i)
        framings[std::to_string(i)] = g.framings[i].convert_to<long long>();
    return json{{"center", g.center}, {"arms", arms}, {"framings", framings}};
}

// wall time is intentionally omitted so that re-runs are bit-identical
inline json summary_json(const VerificationSummary& s) {
    json failures = json::array();
    for (const auto& f : s.failures)
        failures.push_back(json{{"seifert", f.seifert}, {"failed", f.verdicts}});
    return json{{"corpus", json{{"n_min", s.n_min}, {"n_max", s.n_max}, {"max_a", s.max_a}}},
                {"total", s.total},
                {"passed", s.passed},
                {"failures", failures}};
}

} // namespace mubar
