#include "prefdom/report.hpp"

#include <algorithm>
#include <set>

#include "prefdom/io.hpp"

namespace prefdom {

using nlohmann::json;

namespace {

json profile_json(const Profile& p) {
    json out = json::array();
    for (int i : p.prefs) out.push_back(i + 1);
    return out;
}

Profile profile_from_json(const json& j) {
    Profile p;
    for (const auto& v : j) p.prefs.push_back(v.get<int>() - 1);
    return p;
}

json witness_json(const Domain& d, const DomainWitness& w) {
    json out;
    if (const auto* miss = std::get_if<MissingTopWitness>(&w)) {
        out["kind"] = "missing-top";
        out["alternative"] = d.alts().label(miss->alternative);
    } else if (const auto* disc = std::get_if<DisconnectedWitness>(&w)) {
        out["kind"] = "disconnected";
        out["first"] = disc->first + 1;
        out["second"] = disc->second + 1;
        out["component"] = disc->component;
    } else if (const auto* nb = std::get_if<NeighbourTopsWitness>(&w)) {
        out["kind"] = "neighbour-tops";
        out["pref"] = nb->pref + 1;
        json tops = json::array();
        for (Alt a : nb->neighbour_tops) tops.push_back(d.alts().label(a));
        out["neighbour_tops"] = tops;
    } else if (const auto* rest = std::get_if<RestorationWitness>(&w)) {
        out["kind"] = "restoration";
        out["from"] = rest->from + 1;
        out["to"] = rest->to + 1;
        out["pair"] = {d.alts().label(rest->a), d.alts().label(rest->b)};
    } else if (const auto* dis = std::get_if<DisagreementWitness>(&w)) {
        out["kind"] = "disagreement";
        out["first"] = dis->first + 1;
        out["second"] = dis->second + 1;
        out["pair"] = {d.alts().label(dis->a), d.alts().label(dis->b)};
        out["has_a_over_b"] = dis->has_a_over_b;
        out["has_b_over_a"] = dis->has_b_over_a;
    }
    return out;
}

}  // namespace

json domain_json(const Domain& d, std::string_view name) {
    json out;
    out["name"] = std::string(name);
    out["digest"] = domain_digest(d);
    out["alternatives"] = d.alts().labels();
    json prefs = json::array();
    for (int i = 0; i < d.size(); ++i) prefs.push_back(to_string(d.alts(), d.pref(i)));
    out["preferences"] = prefs;
    return out;
}

json verdict_json(const Domain& d, const DomainVerdict& v) {
    json out;
    out["holds"] = v.holds;
    out["witness"] = v.witness ? witness_json(d, *v.witness) : json(nullptr);
    return out;
}

json graph_structure_json(const Domain& d, const GraphStructureReport& r) {
    json out;
    out["connected"]["holds"] = r.connected;
    out["connected"]["witness"] = nullptr;
    if (r.disconnected) {
        out["connected"]["witness"] = {{"kind", "graph-disconnected"},
                                       {"first", d.alts().label(r.disconnected->first)},
                                       {"second", d.alts().label(r.disconnected->second)}};
    }
    out["min_degree"]["holds"] = r.min_degree_ok;
    out["min_degree"]["witness"] = nullptr;
    if (r.low_degree) {
        json verts = json::array();
        for (Alt a : r.low_degree->vertices) verts.push_back(d.alts().label(a));
        out["min_degree"]["witness"] = {{"kind", "low-degree"}, {"vertices", verts}};
    }
    out["has_cycle"]["holds"] = r.has_cycle;
    out["has_cycle"]["witness"] = nullptr;
    if (r.acyclic) {
        out["has_cycle"]["witness"] = {{"kind", "acyclic"},
                                       {"edge_count", r.acyclic->edge_count},
                                       {"component_count", r.acyclic->component_count}};
    }
    out["bridge_paths"]["holds"] = r.bridge_paths_ok;
    out["bridge_paths"]["witness"] = nullptr;
    if (r.no_bridge) {
        json verts = json::array();
        for (Alt a : r.no_bridge->vertices) verts.push_back(d.alts().label(a));
        out["bridge_paths"]["witness"] = {{"kind", "no-bridge-path"}, {"vertices", verts}};
    }
    return out;
}

json scf_json(const SCFTable& f) {
    json out;
    out["n"] = f.voters();
    json lines = json::array();
    const std::string text = emit_scf(f);
    std::size_t pos = text.find('\n') + 1;  // skip the header line
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        lines.push_back(text.substr(pos, eol - pos));
        pos = eol + 1;
    }
    out["table"] = lines;
    return out;
}

json manipulation_json(const SCFTable& f, const ManipulationWitness& w) {
    json out;
    out["kind"] = "manipulation";
    out["voter"] = w.voter + 1;
    out["profile"] = profile_json(w.profile);
    out["deviation"] = w.deviation + 1;
    out["local"] = w.local;
    out["outcome"] = f.domain().alts().label(f.at(w.profile));
    Profile q = w.profile;
    q.prefs[static_cast<std::size_t>(w.voter)] = w.deviation;
    out["deviated_outcome"] = f.domain().alts().label(f.at(q));
    return out;
}

json bundle_json(const AxiomBundle& b) {
    json out;
    out["unanimity"] = b.require_unanimity;
    out["incentive"] = b.incentive == AxiomBundle::Incentive::none       ? "none"
                       : b.incentive == AxiomBundle::Incentive::local_sp ? "local-sp"
                                                                         : "sp";
    out["require_tops_only"] = b.require_tops_only;
    out["forbid_tops_only"] = b.forbid_tops_only;
    out["forbid_dictatorship"] = b.forbid_dictatorship;
    out["restrict_search_to_tops_only"] = b.restrict_search_to_tops_only;
    return out;
}

json certificate_json(const SearchCertificate& c) {
    json out;
    out["nodes"] = c.nodes;
    out["propagations"] = c.propagations;
    out["ordering"] = c.ordering;
    out["collapsed"] = c.collapsed;
    return out;
}

std::string tri_name(Tri t) {
    switch (t) {
        case Tri::holds: return "holds";
        case Tri::fails: return "fails";
        default: return "undecided";
    }
}

json region_report_json(const RegionReport& r) {
    json out;
    out["minimally_rich"] = r.minimally_rich;
    out["cdn"] = r.cdn;
    out["property_p"] = r.property_p;
    out["scd"] = r.scd;
    out["disagreement"] = r.disagreement;
    out["l_tops_only"] = tri_name(r.l_tops_only);
    out["ldict"] = tri_name(r.ldict);
    out["dict"] = tri_name(r.dict);
    out["conjecture_relevant"] = r.conjecture_relevant;
    out["certificates"] = {{"l_tops_only", certificate_json(r.l_tops_only_certificate)},
                           {"ldict", certificate_json(r.ldict_certificate)},
                           {"dict", certificate_json(r.dict_certificate)}};
    json counter = json::object();
    if (r.l_tops_only_counterexample) counter["l_tops_only"] = scf_json(*r.l_tops_only_counterexample);
    if (r.ldict_counterexample) counter["ldict"] = scf_json(*r.ldict_counterexample);
    if (r.dict_counterexample) counter["dict"] = scf_json(*r.dict_counterexample);
    out["counterexamples"] = counter;
    return out;
}

Domain domain_from_report(const json& report) {
    const auto& dj = report.at("inputs").at("domain");
    std::string text = "alternatives:";
    for (const auto& l : dj.at("alternatives")) text += " " + l.get<std::string>();
    text += '\n';
    for (const auto& p : dj.at("preferences")) text += p.get<std::string>() + '\n';
    return parse_domain(text);
}

SCFTable scf_from_json(const json& scf, const Domain& d) {
    std::string text = "scf n=" + std::to_string(scf.at("n").get<int>()) +
                       " domain=" + domain_digest(d) + '\n';
    for (const auto& line : scf.at("table")) text += line.get<std::string>() + '\n';
    return parse_scf(text, d);
}

namespace {

Alt alt_from_label(const Domain& d, const json& label) {
    auto a = d.alts().index_of(label.get<std::string>());
    if (!a) throw std::runtime_error("report names an unknown alternative");
    return *a;
}

ReplayResult replay_domain_witness(const Domain& d, const std::string& property,
                                   const json& witness) {
    const std::string kind = witness.at("kind").get<std::string>();
    auto result = [&](bool ok, std::string note) {
        return ReplayResult{property + "/" + kind, ok, std::move(note)};
    };
    if (kind == "missing-top") {
        const Alt a = alt_from_label(d, witness.at("alternative"));
        for (int i = 0; i < d.size(); ++i)
            if (d.top(i) == a) return result(false, "alternative is topped after all");
        return result(true, "no preference tops it");
    }
    if (kind == "disconnected") {
        const int first = witness.at("first").get<int>() - 1;
        const int second = witness.at("second").get<int>() - 1;
        const auto comp = witness.at("component").get<std::vector<int>>();
        if (static_cast<int>(comp.size()) != d.size())
            return result(false, "component partition has wrong size");
        for (int i = 0; i < d.size(); ++i)
            for (int j : d.adjacent_to(i))
                if (comp[static_cast<std::size_t>(i)] != comp[static_cast<std::size_t>(j)])
                    return result(false, "partition splits an adjacent pair");
        if (comp[static_cast<std::size_t>(first)] == comp[static_cast<std::size_t>(second)])
            return result(false, "witness pair shares a component");
        if (find_path(d, first, second)) return result(false, "witness pair is connected");
        return result(true, "pair is unreachable and the partition respects adjacency");
    }
    if (kind == "neighbour-tops") {
        const int pref = witness.at("pref").get<int>() - 1;
        auto nb = neighbours(d, tcc(d, pref));
        std::set<std::string> tops;
        for (int j : nb) tops.insert(d.alts().label(d.top(j)));
        std::set<std::string> claimed;
        for (const auto& l : witness.at("neighbour_tops")) claimed.insert(l.get<std::string>());
        if (tops != claimed) return result(false, "neighbour top set differs");
        if (tops.size() >= 2) return result(false, "two distinct neighbour tops exist");
        return result(true, "closure has at most one neighbour top");
    }
    if (kind == "restoration") {
        const int from = witness.at("from").get<int>() - 1;
        const int to = witness.at("to").get<int>() - 1;
        const Alt a = alt_from_label(d, witness.at("pair").at(0));
        const Alt b = alt_from_label(d, witness.at("pair").at(1));
        if (restoration_free_path(d, from, to, a, b))
            return result(false, "a restoration-free path exists");
        return result(true, "no restoration-free path between the endpoints");
    }
    if (kind == "disagreement") {
        const int first = witness.at("first").get<int>() - 1;
        const int second = witness.at("second").get<int>() - 1;
        const Alt a = alt_from_label(d, witness.at("pair").at(0));
        const Alt b = alt_from_label(d, witness.at("pair").at(1));
        if (!d.adjacent(first, second)) return result(false, "witness pair is not adjacent");
        if (d.top(first) != a || d.top(second) != b)
            return result(false, "witness pair tops differ from the pair");
        bool has_ab = false, has_ba = false;
        for (int p = 0; p < d.size(); ++p) {
            if (d.top(p) == a || d.top(p) == b) continue;
            (d.pref(p).prefers(a, b) ? has_ab : has_ba) = true;
        }
        if (has_ab != witness.at("has_a_over_b").get<bool>() ||
            has_ba != witness.at("has_b_over_a").get<bool>())
            return result(false, "recomputed disagreement voices differ");
        if (has_ab && has_ba) return result(false, "both voices exist after all");
        return result(true, "the adjacency is uncovered as claimed");
    }
    return result(false, "unknown witness kind");
}

ReplayResult replay_graph_witness(const Domain& d, const std::string& sub, const json& witness) {
    const InducedGraph g = induced_graph(d);
    const std::string kind = witness.at("kind").get<std::string>();
    auto result = [&](bool ok, std::string note) {
        return ReplayResult{"graph-structure/" + sub + "/" + kind, ok, std::move(note)};
    };
    auto vertex = [&](const json& label) {
        auto a = g.alts.index_of(label.get<std::string>());
        if (!a) throw std::runtime_error("report names an unknown vertex");
        return *a;
    };
    if (kind == "graph-disconnected") {
        const Alt first = vertex(witness.at("first")), second = vertex(witness.at("second"));
        std::set<Alt> reach{first};
        std::vector<Alt> stack{first};
        while (!stack.empty()) {
            Alt u = stack.back();
            stack.pop_back();
            for (Alt v : g.adjacent_to(u))
                if (reach.insert(v).second) stack.push_back(v);
        }
        return reach.count(second) ? result(false, "vertices are connected in G")
                                   : result(true, "vertices lie in different components of G");
    }
    if (kind == "low-degree") {
        std::set<Alt> claimed;
        for (const auto& l : witness.at("vertices")) claimed.insert(vertex(l));
        std::set<Alt> actual;
        for (Alt a = 0; a < g.vertex_count(); ++a)
            if (degree(g, a) < 2) actual.insert(a);
        if (claimed != actual) return result(false, "low-degree vertex set differs");
        return claimed.empty() ? result(false, "no low-degree vertices exist")
                               : result(true, "exactly these vertices have degree < 2");
    }
    if (kind == "acyclic") {
        if (!all_cycles(g).empty()) return result(false, "a cycle exists after all");
        if (static_cast<int>(g.edges.size()) != witness.at("edge_count").get<int>())
            return result(false, "edge count differs");
        return result(true, "graph has no cycle");
    }
    if (kind == "no-bridge-path") {
        auto report = graph_structure_check(d);
        std::set<Alt> actual;
        if (report.no_bridge)
            actual.insert(report.no_bridge->vertices.begin(), report.no_bridge->vertices.end());
        std::set<Alt> claimed;
        for (const auto& l : witness.at("vertices")) claimed.insert(vertex(l));
        if (claimed != actual) return result(false, "stuck vertex set differs");
        return claimed.empty() ? result(false, "every vertex has a qualifying path")
                               : result(true, "these vertices have no qualifying bridge path");
    }
    return result(false, "unknown witness kind");
}

ReplayResult replay_scf_witness(const SCFTable& f, const std::string& axiom, const json& witness) {
    const Domain& d = f.domain();
    const std::string kind = witness.at("kind").get<std::string>();
    auto result = [&](bool ok, std::string note) {
        return ReplayResult{axiom + "/" + kind, ok, std::move(note)};
    };
    if (kind == "unanimity") {
        Profile p = profile_from_json(witness.at("profile"));
        const Alt top = alt_from_label(d, witness.at("top"));
        for (int i : p.prefs)
            if (d.top(i) != top) return result(false, "profile is not unanimous on the top");
        if (f.at(p) == top) return result(false, "outcome matches the shared top");
        return result(true, "unanimous profile is not mapped to its top");
    }
    if (kind == "manipulation") {
        const int voter = witness.at("voter").get<int>() - 1;
        Profile p = profile_from_json(witness.at("profile"));
        const int dev = witness.at("deviation").get<int>() - 1;
        Profile q = p;
        q.prefs[static_cast<std::size_t>(voter)] = dev;
        const Alt truth_outcome = f.at(p), dev_outcome = f.at(q);
        if (witness.at("local").get<bool>() &&
            !d.adjacent(p.prefs[static_cast<std::size_t>(voter)], dev))
            return result(false, "deviation is not adjacent to the truth");
        if (!d.pref(p.prefs[static_cast<std::size_t>(voter)]).prefers(dev_outcome, truth_outcome))
            return result(false, "deviation does not improve the outcome");
        return result(true, "voter gains by the recorded deviation");
    }
    if (kind == "tops-only") {
        Profile p = profile_from_json(witness.at("first"));
        Profile q = profile_from_json(witness.at("second"));
        for (std::size_t v = 0; v < p.prefs.size(); ++v)
            if (d.top(p.prefs[v]) != d.top(q.prefs[v]))
                return result(false, "profiles differ in their top vectors");
        if (f.at(p) == f.at(q)) return result(false, "outcomes agree after all");
        return result(true, "same tops, different outcomes");
    }
    if (kind == "non-dictator") {
        const int voter = witness.at("voter").get<int>() - 1;
        Profile p = profile_from_json(witness.at("profile"));
        if (f.at(p) == d.top(p.prefs[static_cast<std::size_t>(voter)]))
            return result(false, "outcome equals this voter's top here");
        return result(true, "outcome differs from this voter's top");
    }
    return result(false, "unknown witness kind");
}

ReplayResult replay_found_table(const SCFTable& f, const json& bundle) {
    auto fail = [&](std::string note) { return ReplayResult{"search/found", false, std::move(note)}; };
    if (bundle.at("unanimity").get<bool>() && !check_unanimity(f).holds)
        return fail("found table fails unanimity");
    const std::string inc = bundle.at("incentive").get<std::string>();
    if (inc == "local-sp" && !check_local_sp(f).holds)
        return fail("found table fails local strategy-proofness");
    if (inc == "sp" && !check_sp(f).holds) return fail("found table fails strategy-proofness");
    if (bundle.at("require_tops_only").get<bool>() && !check_tops_only(f).holds)
        return fail("found table fails tops-onlyness");
    if (bundle.at("forbid_tops_only").get<bool>() && check_tops_only(f).holds)
        return fail("found table is tops-only");
    if (bundle.at("forbid_dictatorship").get<bool>() && check_dictatorship(f))
        return fail("found table is dictatorial");
    return ReplayResult{"search/found", true, "found table satisfies the bundle"};
}

void replay_verdict_entry(const Domain& d, const std::string& property, const json& entry,
                          std::vector<ReplayResult>& out) {
    if (!entry.contains("holds") || entry.at("holds").get<bool>()) return;
    if (entry.at("witness").is_null()) {
        out.push_back({property, false, "failed verdict carries no witness"});
        return;
    }
    out.push_back(replay_domain_witness(d, property, entry.at("witness")));
}

}  // namespace

std::vector<ReplayResult> verify_report(const json& report) {
    std::vector<ReplayResult> out;
    const std::string command = report.at("command").get<std::string>();
    Domain d = domain_from_report(report);
    const auto& dj = report.at("inputs").at("domain");
    if (dj.contains("digest") && dj.at("digest").get<std::string>() != domain_digest(d)) {
        out.push_back({"inputs/domain", false, "digest mismatch"});
        return out;
    }
    out.push_back({"inputs/domain", true, "digest matches"});
    const auto& results = report.at("results");

    if (command == "check") {
        for (const auto& prop :
             {"minimally_rich", "connected", "cdn", "property_p", "scd", "disagreement"}) {
            if (!results.contains(prop)) continue;
            const auto& entry = results.at(prop);
            if (entry.contains("skipped")) continue;
            replay_verdict_entry(d, prop, entry, out);
        }
        if (results.contains("graph_structure") && !results.at("graph_structure").contains("skipped")) {
            for (const auto& sub : {"connected", "min_degree", "has_cycle", "bridge_paths"}) {
                const auto& entry = results.at("graph_structure").at(sub);
                if (entry.at("holds").get<bool>()) continue;
                if (entry.at("witness").is_null()) {
                    out.push_back({std::string("graph-structure/") + sub, false, "no witness"});
                    continue;
                }
                out.push_back(replay_graph_witness(d, sub, entry.at("witness")));
            }
        }
        return out;
    }

    if (command == "scf-check") {
        SCFTable f = scf_from_json(report.at("inputs").at("scf"), d);
        for (const auto& axiom : {"unanimity", "local_sp", "sp", "tops_only"}) {
            if (!results.contains(axiom)) continue;
            const auto& entry = results.at(axiom);
            if (entry.at("holds").get<bool>()) continue;
            if (entry.at("witness").is_null()) {
                out.push_back({axiom, false, "failed axiom carries no witness"});
                continue;
            }
            out.push_back(replay_scf_witness(f, axiom, entry.at("witness")));
        }
        if (results.contains("dictator")) {
            if (results.at("dictator").is_null()) {
                for (const auto& w : results.at("non_dictator_witnesses"))
                    out.push_back(replay_scf_witness(f, "dictatorship", w));
            } else {
                const int v = results.at("dictator").get<int>() - 1;
                const bool same = check_dictatorship(f) == v;
                out.push_back({"dictatorship", same,
                               same ? "recomputed dictator matches"
                                    : "recomputed dictator differs"});
            }
        }
        return out;
    }

    if (command == "scf-search") {
        const std::string status = results.at("status").get<std::string>();
        if (status == "found") {
            SCFTable f = scf_from_json(results.at("scf"), d);
            out.push_back(replay_found_table(f, results.at("bundle")));
        } else {
            out.push_back({"search/" + status, true,
                           "certificate records node counts only; nothing to replay"});
        }
        return out;
    }

    if (command == "scf-classify") {
        const auto& counter = results.at("counterexamples");
        auto replay_counter = [&](const char* key, json bundle) {
            if (!counter.contains(key)) return;
            SCFTable f = scf_from_json(counter.at(key), d);
            ReplayResult r = replay_found_table(f, bundle);
            r.item = std::string("classify/") + key;
            out.push_back(r);
        };
        json lsp_bundle = {{"unanimity", true},          {"incentive", "local-sp"},
                           {"require_tops_only", false}, {"forbid_tops_only", true},
                           {"forbid_dictatorship", false}};
        replay_counter("l_tops_only", lsp_bundle);
        json ldict_bundle = {{"unanimity", true},          {"incentive", "local-sp"},
                             {"require_tops_only", false}, {"forbid_tops_only", false},
                             {"forbid_dictatorship", true}};
        replay_counter("ldict", ldict_bundle);
        json dict_bundle = {{"unanimity", true},          {"incentive", "sp"},
                            {"require_tops_only", false}, {"forbid_tops_only", false},
                            {"forbid_dictatorship", true}};
        replay_counter("dict", dict_bundle);
        return out;
    }

    if (command == "scf-construct") {
        // The construction's contract is re-checked by `scf check`; the report
        // itself only carries the emitted table.
        out.push_back({"construct", true, "table emitted; check it with scf check"});
        return out;
    }

    out.push_back({"command", false, "unknown command '" + command + "'"});
    return out;
}

}  // namespace prefdom
