#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prefdom/fixtures.hpp"
#include "prefdom/graph.hpp"
#include "prefdom/io.hpp"
#include "prefdom/report.hpp"
#include "prefdom/search.hpp"

using nlohmann::json;
using namespace prefdom;

namespace {

// exit codes: 0 ok/found, 1 property failed or search exhausted, 2 usage or
// parse error, 3 budget timeout
constexpr int kOk = 0, kFailed = 1, kUsage = 2, kTimeout = 3;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string witness_text(const Domain& d, const DomainWitness& w) {
    if (const auto* miss = std::get_if<MissingTopWitness>(&w))
        return "alternative " + d.alts().label(miss->alternative) + " is never ranked first";
    if (const auto* disc = std::get_if<DisconnectedWitness>(&w))
        return "preferences " + std::to_string(disc->first + 1) + " and " +
               std::to_string(disc->second + 1) + " lie in different components";
    if (const auto* nb = std::get_if<NeighbourTopsWitness>(&w)) {
        std::string tops;
        for (Alt a : nb->neighbour_tops) tops += (tops.empty() ? "" : ", ") + d.alts().label(a);
        return "closure of preference " + std::to_string(nb->pref + 1) + " has neighbour tops {" +
               tops + "}";
    }
    if (const auto* rest = std::get_if<RestorationWitness>(&w))
        return "no restoration-free path from preference " + std::to_string(rest->from + 1) +
               " to preference " + std::to_string(rest->to + 1) + " for pair {" +
               d.alts().label(rest->a) + ", " + d.alts().label(rest->b) + "}";
    if (const auto* dis = std::get_if<DisagreementWitness>(&w))
        return "adjacent pair " + std::to_string(dis->first + 1) + "~" +
               std::to_string(dis->second + 1) + " with tops {" + d.alts().label(dis->a) + ", " +
               d.alts().label(dis->b) + "} lacks " +
               (dis->has_a_over_b ? d.alts().label(dis->b) + " over " + d.alts().label(dis->a)
                                  : d.alts().label(dis->a) + " over " + d.alts().label(dis->b));
    return "";
}

void print_verdict(const Domain& d, const std::string& name, const DomainVerdict& v) {
    std::cout << name << ": " << (v.holds ? "holds" : "fails");
    if (!v.holds && v.witness) std::cout << "  witness: " << witness_text(d, *v.witness);
    std::cout << "\n";
}

Domain load_domain(const std::string& path) {
    return parse_domain(read_file(path));
}

int cmd_check(const std::string& path, const std::vector<std::string>& only, bool as_json,
              const std::string& graph_out) {
    Domain d = load_domain(path);
    const std::vector<std::string> all = {"minimally-rich", "connected", "cdn",
                                          "property-p",     "scd",       "disagreement",
                                          "graph-structure"};
    std::vector<std::string> selected = only.empty() ? all : only;
    for (const auto& p : selected)
        if (std::find(all.begin(), all.end(), p) == all.end())
            throw CLI::ValidationError("--only", "unknown property '" + p + "'");

    json results;
    json timing;
    bool any_failed = false;
    auto run = [&](const std::string& name, auto&& decide) {
        if (std::find(selected.begin(), selected.end(), name) == selected.end()) return;
        Timer t;
        const std::string key = [&] {
            std::string k = name;
            std::replace(k.begin(), k.end(), '-', '_');
            return k;
        }();
        try {
            DomainVerdict v = decide();
            if (!as_json) print_verdict(d, name, v);
            results[key] = verdict_json(d, v);
            any_failed = any_failed || !v.holds;
        } catch (const std::invalid_argument& e) {
            if (!as_json) std::cout << name << ": skipped (" << e.what() << ")\n";
            results[key] = {{"skipped", e.what()}};
        }
        timing[key] = t.ms();
    };

    if (!as_json)
        std::cout << "domain: " << path << " (" << d.size() << " preferences, "
                  << d.alternatives() << " alternatives) digest=" << domain_digest(d) << "\n";
    run("minimally-rich", [&] { return is_minimally_rich(d); });
    run("connected", [&] { return is_connected(d); });
    run("cdn", [&] { return is_cdn(d); });
    run("property-p", [&] { return satisfies_property_p(d); });
    run("scd", [&] { return satisfies_scd(d); });
    run("disagreement", [&] { return satisfies_disagreement(d); });
    if (std::find(selected.begin(), selected.end(), "graph-structure") != selected.end()) {
        Timer t;
        GraphStructureReport r = graph_structure_check(d);
        results["graph_structure"] = graph_structure_json(d, r);
        timing["graph_structure"] = t.ms();
        any_failed = any_failed || !r.all_hold();
        if (!as_json)
            std::cout << "graph-structure: connected=" << (r.connected ? "holds" : "fails")
                      << " min-degree=" << (r.min_degree_ok ? "holds" : "fails")
                      << " has-cycle=" << (r.has_cycle ? "holds" : "fails")
                      << " bridge-paths=" << (r.bridge_paths_ok ? "holds" : "fails") << "\n";
    }
    if (!graph_out.empty()) {
        std::ofstream out(graph_out);
        out << to_edge_list(induced_graph(d));
    }
    if (as_json) {
        json report = {{"tool", "prefdom"},
                       {"command", "check"},
                       {"inputs", {{"domain", domain_json(d, path)}}},
                       {"results", results},
                       {"timing_ms", timing}};
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "result: " << (any_failed ? "some properties fail" : "all properties hold")
                  << "\n";
    }
    return any_failed ? kFailed : kOk;
}

int cmd_graph(const std::string& path) {
    std::cout << to_edge_list(induced_graph(load_domain(path)));
    return kOk;
}

int cmd_fixtures(const std::string& name, bool list, int m,
                 const std::vector<std::string>& spectrum) {
    if (list) {
        std::cout << "table1          circular domain, 8 preferences over 4 alternatives\n"
                  << "table2          single-crossing domain, 7 preferences\n"
                  << "table3          single-peaked domain, 8 preferences\n"
                  << "table4          union of single-peaked and single-dipped, 12 preferences\n"
                  << "table5          thirteen-preference cycle-with-pendant domain\n"
                  << "table6          nine-preference connected domain\n"
                  << "unrestricted    generator: all m! orders (--m)\n"
                  << "single-peaked   generator: single-peaked orders (--spectrum)\n"
                  << "single-dipped   generator: single-dipped orders (--spectrum)\n";
        return kOk;
    }
    if (name == "unrestricted") {
        if (m < 2) throw CLI::ValidationError("--m", "unrestricted requires --m <count>");
        std::cout << emit_domain(unrestricted(m));
        return kOk;
    }
    if (name == "single-peaked" || name == "single-dipped") {
        if (spectrum.size() < 2)
            throw CLI::ValidationError("--spectrum",
                                       name + " requires --spectrum with at least 2 labels");
        std::cout << emit_domain(name == "single-peaked" ? single_peaked(spectrum)
                                                         : single_dipped(spectrum));
        return kOk;
    }
    std::cout << fixture_text(name);
    return kOk;
}

int cmd_scf_check(const std::string& scf_path, const std::string& domain_path, bool with_sp,
                  bool with_tops_only, bool as_json, int threads) {
    Domain d = load_domain(domain_path);
    SCFTable f = parse_scf(read_file(scf_path), d, domain_path);

    json results;
    json timing;
    bool any_failed = false;

    Timer tu;
    auto u = check_unanimity(f);
    timing["unanimity"] = tu.ms();
    any_failed = any_failed || !u.holds;
    results["unanimity"]["holds"] = u.holds;
    results["unanimity"]["witness"] = nullptr;
    if (u.witness) {
        json prof = json::array();
        for (int i : u.witness->profile.prefs) prof.push_back(i + 1);
        results["unanimity"]["witness"] = {{"kind", "unanimity"},
                                           {"profile", prof},
                                           {"top", d.alts().label(u.witness->top)},
                                           {"outcome", d.alts().label(u.witness->outcome)}};
    }

    Timer tl;
    auto lsp = check_local_sp(f, threads);
    timing["local_sp"] = tl.ms();
    any_failed = any_failed || !lsp.holds;
    results["local_sp"]["holds"] = lsp.holds;
    results["local_sp"]["witness"] =
        lsp.witness ? manipulation_json(f, *lsp.witness) : json(nullptr);

    if (with_sp) {
        Timer ts;
        auto sp = check_sp(f, threads);
        timing["sp"] = ts.ms();
        any_failed = any_failed || !sp.holds;
        results["sp"]["holds"] = sp.holds;
        results["sp"]["witness"] = sp.witness ? manipulation_json(f, *sp.witness) : json(nullptr);
    }
    if (with_tops_only) {
        Timer tt;
        auto to = check_tops_only(f);
        timing["tops_only"] = tt.ms();
        any_failed = any_failed || !to.holds;
        results["tops_only"]["holds"] = to.holds;
        results["tops_only"]["witness"] = nullptr;
        if (to.witness) {
            json first = json::array(), second = json::array();
            for (int i : to.witness->first.prefs) first.push_back(i + 1);
            for (int i : to.witness->second.prefs) second.push_back(i + 1);
            results["tops_only"]["witness"] = {
                {"kind", "tops-only"}, {"first", first}, {"second", second}};
        }
    }

    Timer td;
    auto dict = check_dictatorship(f);
    timing["dictatorship"] = td.ms();
    results["dictator"] = dict ? json(*dict + 1) : json(nullptr);
    results["non_dictator_witnesses"] = json::array();
    if (!dict) {
        // one counterexample profile per voter
        for (int v = 0; v < f.voters(); ++v) {
            for (std::size_t idx = 0; idx < f.profile_count(); ++idx) {
                Profile p = f.decode(idx);
                if (f.at_index(idx) != d.top(p.prefs[static_cast<std::size_t>(v)])) {
                    json prof = json::array();
                    for (int i : p.prefs) prof.push_back(i + 1);
                    results["non_dictator_witnesses"].push_back(
                        {{"kind", "non-dictator"}, {"voter", v + 1}, {"profile", prof}});
                    break;
                }
            }
        }
    }

    if (as_json) {
        json report = {
            {"tool", "prefdom"},
            {"command", "scf-check"},
            {"inputs", {{"domain", domain_json(d, domain_path)}, {"scf", scf_json(f)}}},
            {"results", results},
            {"timing_ms", timing}};
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "scf: " << scf_path << " n=" << f.voters() << " over " << domain_path << "\n";
        std::cout << "unanimity: " << (u.holds ? "holds" : "fails") << "\n";
        std::cout << "local-sp: " << (lsp.holds ? "holds" : "fails") << "\n";
        if (with_sp)
            std::cout << "sp: " << (results["sp"]["holds"].get<bool>() ? "holds" : "fails")
                      << "\n";
        if (with_tops_only)
            std::cout << "tops-only: "
                      << (results["tops_only"]["holds"].get<bool>() ? "holds" : "fails") << "\n";
        std::cout << "dictatorship: " << (dict ? "voter " + std::to_string(*dict + 1) : "none")
                  << "\n";
    }
    return any_failed ? kFailed : kOk;
}

int cmd_scf_construct(const std::string& kind, const std::string& domain_path, int n, int base,
                      int pstar, int v1, int v2, const std::string& out_path) {
    Domain d = load_domain(domain_path);
    SCFTable f = [&] {
        if (kind == "case1") {
            if (base < 1 || base > d.size())
                throw std::invalid_argument("case1 requires --base <preference index 1.." +
                                            std::to_string(d.size()) + ">");
            return construct_case1(d, base - 1, n, v1 - 1, v2 - 1);
        }
        if (pstar < 1 || pstar > d.size()) {
            std::string eligible;
            for (int i : eligible_case2_pstars(d))
                eligible += (eligible.empty() ? "" : ", ") + std::to_string(i + 1);
            throw std::invalid_argument("case2 requires --pstar <preference index>; eligible: {" +
                                        eligible + "}");
        }
        return construct_case2(d, pstar - 1, n, v1 - 1, v2 - 1);
    }();
    // digest-form domain reference: stays valid if the domain file moves
    const std::string text = emit_scf(f);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        out << text;
    }
    return kOk;
}

int cmd_scf_search(const std::string& domain_path, int n, bool unanimity, bool local_sp, bool sp,
                   bool tops_only, bool non_tops_only, bool non_dictatorial,
                   std::uint64_t budget_nodes, std::optional<std::uint64_t> seed, bool as_json) {
    Domain d = load_domain(domain_path);
    AxiomBundle bundle;
    bundle.require_unanimity = unanimity;
    if (local_sp && sp) throw std::invalid_argument("--local-sp and --sp are exclusive");
    if (local_sp) bundle.incentive = AxiomBundle::Incentive::local_sp;
    if (sp) bundle.incentive = AxiomBundle::Incentive::sp;
    bundle.require_tops_only = tops_only;
    bundle.forbid_tops_only = non_tops_only;
    bundle.forbid_dictatorship = non_dictatorial;

    Timer t;
    SearchOutcome outcome = search_scf(d, n, bundle, SearchBudget{budget_nodes}, seed);
    const std::string status = outcome.status == SearchStatus::found       ? "found"
                               : outcome.status == SearchStatus::exhausted ? "exhausted"
                                                                           : "timeout";
    if (as_json) {
        json results = {{"status", status},
                        {"bundle", bundle_json(bundle)},
                        {"certificate", certificate_json(outcome.certificate)}};
        if (outcome.table) results["scf"] = scf_json(*outcome.table);
        json report = {{"tool", "prefdom"},
                       {"command", "scf-search"},
                       {"inputs", {{"domain", domain_json(d, domain_path)}}},
                       {"results", results},
                       {"timing_ms", {{"search", t.ms()}}}};
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "search: " << status << " (nodes=" << outcome.certificate.nodes
                  << ", propagations=" << outcome.certificate.propagations << ")\n";
        if (outcome.table) std::cout << emit_scf(*outcome.table, domain_path);
    }
    if (outcome.status == SearchStatus::timeout) return kTimeout;
    return outcome.status == SearchStatus::found ? kOk : kFailed;
}

int cmd_scf_classify(const std::string& domain_path, int n, std::uint64_t budget_nodes,
                     bool as_json) {
    Domain d = load_domain(domain_path);
    Timer t;
    RegionReport r = classify_domain(d, n, SearchBudget{budget_nodes});
    if (as_json) {
        json report = {{"tool", "prefdom"},
                       {"command", "scf-classify"},
                       {"inputs", {{"domain", domain_json(d, domain_path)}}},
                       {"results", region_report_json(r)},
                       {"timing_ms", {{"classify", t.ms()}}}};
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "minimally-rich: " << (r.minimally_rich ? "holds" : "fails") << "\n"
                  << "cdn: " << (r.cdn ? "holds" : "fails") << "\n"
                  << "property-p: " << (r.property_p ? "holds" : "fails") << "\n"
                  << "scd: " << (r.scd ? "holds" : "fails") << "\n"
                  << "disagreement: " << (r.disagreement ? "holds" : "fails") << "\n"
                  << "l-tops-only: " << tri_name(r.l_tops_only) << "\n"
                  << "ldict: " << tri_name(r.ldict) << "\n"
                  << "dict: " << tri_name(r.dict) << "\n";
        if (r.conjecture_relevant)
            std::cout << "note: cdn holds with l-tops-only undecided at this budget\n";
    }
    const bool timed_out = r.l_tops_only == Tri::undecided || r.ldict == Tri::undecided ||
                           r.dict == Tri::undecided;
    return timed_out ? kTimeout : kOk;
}

int cmd_verify_witness(const std::string& report_path) {
    json report = json::parse(read_file(report_path));
    auto replays = verify_report(report);
    bool all_ok = true;
    for (const auto& r : replays) {
        std::cout << (r.ok ? "ok " : "FAIL ") << r.item << ": " << r.note << "\n";
        all_ok = all_ok && r.ok;
    }
    if (replays.empty()) std::cout << "no witnesses to verify\n";
    return all_ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prefdom: preference-domain structure and social choice function toolkit"};
    app.require_subcommand(1);

    std::string check_path, graph_out;
    std::vector<std::string> only;
    bool check_json = false;
    auto* check = app.add_subcommand("check", "decide structural properties of a domain file");
    check->add_option("domain", check_path, "domain file")->required();
    check->add_option("--only", only, "subset of properties to run")->delimiter(',');
    check->add_flag("--json", check_json, "machine-readable report");
    check->add_option("--export-graph", graph_out, "write the induced graph edge list to a file");

    std::string graph_path;
    auto* graph = app.add_subcommand("graph", "print the induced graph as an edge list");
    graph->add_option("domain", graph_path, "domain file")->required();

    std::string fixture_name;
    bool list_fixtures = false;
    int gen_m = 0;
    std::vector<std::string> spectrum;
    auto* fixtures = app.add_subcommand("fixtures", "emit built-in domains and generators");
    fixtures->add_option("name", fixture_name, "fixture or generator name");
    fixtures->add_flag("--list", list_fixtures, "list available fixtures");
    fixtures->add_option("--m", gen_m, "alternative count for the unrestricted generator");
    fixtures->add_option("--spectrum", spectrum, "spectrum labels, axis order")->delimiter(' ');

    auto* scf = app.add_subcommand("scf", "check, construct, and search social choice functions");
    scf->require_subcommand(1);

    std::string sc_scf_path, sc_domain_path;
    bool sc_sp = false, sc_tops = false, sc_json = false;
    int sc_threads = 1;
    auto* scf_check = scf->add_subcommand("check", "verify an scf file against the axioms");
    scf_check->add_option("scf", sc_scf_path, "scf file")->required();
    scf_check->add_option("--domain", sc_domain_path, "domain file")->required();
    scf_check->add_flag("--sp", sc_sp, "also check full strategy-proofness");
    scf_check->add_flag("--tops-only", sc_tops, "also check tops-onlyness");
    scf_check->add_flag("--json", sc_json, "machine-readable report");
    scf_check->add_option("--threads", sc_threads, "parallelism for the incentive scans");

    std::string con_kind, con_domain, con_out;
    int con_n = 2, con_base = 0, con_pstar = 0, con_v1 = 1, con_v2 = 2;
    auto* scf_construct = scf->add_subcommand("construct", "emit a counterexample scf");
    scf_construct->add_option("kind", con_kind, "case1 or case2")
        ->required()
        ->check(CLI::IsMember({"case1", "case2"}));
    scf_construct->add_option("domain", con_domain, "domain file")->required();
    scf_construct->add_option("--n", con_n, "voter count")->required();
    scf_construct->add_option("--base", con_base,
                              "case1: preference selecting the component (1-based)");
    scf_construct->add_option("--pstar", con_pstar, "case2: pivot preference (1-based)");
    scf_construct->add_option("--v1", con_v1, "first distinguished voter (1-based)");
    scf_construct->add_option("--v2", con_v2, "second distinguished voter (1-based)");
    scf_construct->add_option("-o,--output", con_out, "output scf file (default stdout)");

    std::string search_domain;
    int search_n = 2;
    bool search_unanimity = false, search_local = false, search_sp = false;
    bool search_tops = false, search_non_tops = false, search_non_dict = false;
    bool search_json = false;
    std::uint64_t search_budget = SearchBudget{}.max_nodes;
    std::uint64_t search_seed = 0;
    auto* scf_search = scf->add_subcommand("search", "search for an scf satisfying a bundle");
    scf_search->add_option("domain", search_domain, "domain file")->required();
    scf_search->add_option("--n", search_n, "voter count")->required();
    scf_search->add_flag("--unanimity", search_unanimity, "require unanimity");
    scf_search->add_flag("--local-sp", search_local, "require local strategy-proofness");
    scf_search->add_flag("--sp", search_sp, "require strategy-proofness");
    scf_search->add_flag("--tops-only", search_tops, "require tops-onlyness (top-vector search)");
    scf_search->add_flag("--non-tops-only", search_non_tops, "forbid tops-onlyness");
    scf_search->add_flag("--non-dictatorial", search_non_dict, "forbid dictatorship");
    scf_search->add_option("--budget", search_budget, "node budget");
    auto* seed_opt =
        scf_search->add_option("--seed", search_seed, "seed for randomized value ordering");
    scf_search->add_flag("--json", search_json, "machine-readable report");

    std::string classify_path;
    int classify_n = 2;
    std::uint64_t classify_budget = SearchBudget{}.max_nodes;
    bool classify_json = false;
    auto* scf_classify = scf->add_subcommand("classify", "report domain class memberships");
    scf_classify->add_option("domain", classify_path, "domain file")->required();
    scf_classify->add_option("--n", classify_n, "voter count")->required();
    scf_classify->add_option("--budget", classify_budget, "node budget per search");
    scf_classify->add_flag("--json", classify_json, "machine-readable report");

    std::string report_path;
    auto* verify = app.add_subcommand("verify-witness", "replay the witnesses in a report");
    verify->add_option("report", report_path, "json report produced with --json")->required();

    try {
        app.parse(argc, argv);
        if (check->parsed()) return cmd_check(check_path, only, check_json, graph_out);
        if (graph->parsed()) return cmd_graph(graph_path);
        if (fixtures->parsed()) {
            if (!list_fixtures && fixture_name.empty())
                throw std::invalid_argument("fixtures requires a name or --list");
            return cmd_fixtures(fixture_name, list_fixtures, gen_m, spectrum);
        }
        if (scf_check->parsed())
            return cmd_scf_check(sc_scf_path, sc_domain_path, sc_sp, sc_tops, sc_json,
                                 sc_threads);
        if (scf_construct->parsed())
            return cmd_scf_construct(con_kind, con_domain, con_n, con_base, con_pstar, con_v1,
                                     con_v2, con_out);
        if (scf_search->parsed())
            return cmd_scf_search(search_domain, search_n, search_unanimity, search_local,
                                  search_sp, search_tops, search_non_tops, search_non_dict,
                                  search_budget,
                                  seed_opt->count() ? std::optional<std::uint64_t>(search_seed)
                                                    : std::nullopt,
                                  search_json);
        if (scf_classify->parsed())
            return cmd_scf_classify(classify_path, classify_n, classify_budget, classify_json);
        if (verify->parsed()) return cmd_verify_witness(report_path);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
