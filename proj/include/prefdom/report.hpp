#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "prefdom/domain.hpp"
#include "prefdom/graph.hpp"
#include "prefdom/scf.hpp"
#include "prefdom/search.hpp"

namespace prefdom {

// JSON report schema (field names are part of the test surface):
//   tool, command, inputs{domain{name,digest,alternatives,preferences}, scf?},
//   results{...}, timing_ms{...}
// Preference indices are 1-based in reports, alternatives appear as labels.

nlohmann::json domain_json(const Domain& d, std::string_view name);
nlohmann::json verdict_json(const Domain& d, const DomainVerdict& v);
nlohmann::json graph_structure_json(const Domain& d, const GraphStructureReport& r);
nlohmann::json scf_json(const SCFTable& f);
nlohmann::json manipulation_json(const SCFTable& f, const ManipulationWitness& w);
nlohmann::json bundle_json(const AxiomBundle& b);
nlohmann::json certificate_json(const SearchCertificate& c);
nlohmann::json region_report_json(const RegionReport& r);

std::string tri_name(Tri t);

/// Rebuilds the domain embedded in a report's inputs section.
Domain domain_from_report(const nlohmann::json& report);

/// Rebuilds an scf from an embedded `{"n":..,"table":[...]}` object.
SCFTable scf_from_json(const nlohmann::json& scf, const Domain& d);

struct ReplayResult {
    std::string item;  // which witness / result was replayed
    bool ok = false;
    std::string note;
};

/// Re-validates every witness in a report against the embedded inputs by
/// re-evaluating the defining condition. Exhaustion certificates carry no
/// replayable content and are reported as skipped-ok.
std::vector<ReplayResult> verify_report(const nlohmann::json& report);

}  // namespace prefdom
