#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "packrho/distance.hpp"
#include "packrho/exact.hpp"
#include "packrho/graph.hpp"
#include "packrho/theorems.hpp"

namespace packrho {

using nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

inline json graph_summary_json(const Graph& g) {
    auto m = metrics(g);
    json out;
    out["n"] = g.n;
    out["m"] = g.edge_count();
    out["connected"] = m.connected;
    if (m.connected && g.n > 0) {
        out["rad"] = m.rad;
        out["diam"] = m.diam;
    } else {
        out["rad"] = nullptr;
        out["diam"] = nullptr;
    }
    return out;
}

inline json coloring_json(const std::vector<int>& colors) { return json(colors); }

inline json gamma_result_json(const GammaResult& r) {
    json out;
    out["value"] = r.value;
    out["method"] = r.method;
    out["exact"] = r.exact;
    out["certificate"] = coloring_json(from_layers(r.certificate).colors);
    return out;
}

inline json chi_result_json(const ChiResult& r) {
    json out;
    out["value"] = r.value;
    out["method"] = r.method;
    out["exact"] = r.exact;
    out["certificate"] = coloring_json(r.certificate.colors);
    return out;
}

inline json theorem_report_json(const TheoremReport& r) {
    json out;
    out["theorem"] = r.theorem;
    out["instances"] = r.instances;
    out["passed"] = r.passed;
    if (r.counterexample.empty())
        out["counterexample"] = nullptr;
    else
        out["counterexample"] = r.counterexample;
    out["note"] = r.note;
    return out;
}

// Envelope every subcommand prints on stdout.
inline json make_report(const std::string& command, json graph, json result,
                        double timing_ms) {
    json out;
    out["schema_version"] = kReportSchemaVersion;
    out["tool"] = "packrho";
    out["version"] = kVersion;
    out["command"] = command;
    out["graph"] = std::move(graph);
    out["result"] = std::move(result);
    out["timing_ms"] = timing_ms;
    return out;
}

}  // namespace packrho
