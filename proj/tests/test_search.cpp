#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>
#include <vector>

#include "prefdom/fixtures.hpp"
#include "prefdom/graph.hpp"
#include "prefdom/search.hpp"
#include "support.hpp"

using namespace prefdom;
using testsupport::enumerate_tables;

namespace {

AxiomBundle bundle(bool unanimity, AxiomBundle::Incentive inc, bool forbid_dict = false,
                   bool forbid_tops = false, bool require_tops = false) {
    AxiomBundle b;
    b.require_unanimity = unanimity;
    b.incentive = inc;
    b.forbid_dictatorship = forbid_dict;
    b.forbid_tops_only = forbid_tops;
    b.require_tops_only = require_tops;
    return b;
}

constexpr auto kLocal = AxiomBundle::Incentive::local_sp;
constexpr auto kFull = AxiomBundle::Incentive::sp;

}  // namespace

TEST_CASE("unrestricted three-alternative instance exhausts") {
    auto out = search_scf(unrestricted(3), 2, bundle(true, kFull, true));
    CHECK(out.status == SearchStatus::exhausted);
    CHECK(!out.table.has_value());
}

TEST_CASE("the circular domain admits non-dictatorial locally strategy-proof rules") {
    auto out = search_scf(fixture("table1"), 2, bundle(true, kLocal, true));
    REQUIRE(out.status == SearchStatus::found);
    CHECK(check_unanimity(*out.table).holds);
    CHECK(check_local_sp(*out.table).holds);
    CHECK(!check_dictatorship(*out.table).has_value());
}

TEST_CASE("forbidden tops-onlyness exhausts on the union fixture") {
    auto out = search_scf(fixture("table4"), 2, bundle(true, kLocal, false, true));
    CHECK(out.status == SearchStatus::exhausted);
}

TEST_CASE("non-cdn fixtures all admit the forbidden rule") {
    for (const char* name : {"table1", "table2", "table3", "table6"}) {
        auto out = search_scf(fixture(name), 2, bundle(true, kLocal, true));
        REQUIRE(out.status == SearchStatus::found);
        CHECK(check_unanimity(*out.table).holds);
        CHECK(check_local_sp(*out.table).holds);
        CHECK(!check_dictatorship(*out.table).has_value());
    }
}

TEST_CASE("cdn fixtures exhaust under full strategy-proofness") {
    for (const char* name : {"table4", "table5"}) {
        auto out = search_scf(fixture(name), 2, bundle(true, kFull, true));
        CHECK(out.status == SearchStatus::exhausted);
    }
    CHECK(search_scf(unrestricted(3), 2, bundle(true, kFull, true)).status ==
          SearchStatus::exhausted);
    CHECK(search_scf(unrestricted(4), 2, bundle(true, kFull, true)).status ==
          SearchStatus::exhausted);
    // the two-voter result lifts to three voters on the desk instance
    CHECK(search_scf(unrestricted(3), 3, bundle(true, kFull, true)).status ==
          SearchStatus::exhausted);
}

TEST_CASE("top-vector search exhausts the tops-only non-dictatorial bundle on cdn fixtures") {
    for (const char* name : {"table4", "table5"}) {
        auto b = bundle(true, kLocal, true, false, true);
        auto out = search_scf(fixture(name), 2, b);
        CHECK(out.status == SearchStatus::exhausted);
        CHECK(out.certificate.collapsed);
    }
}

TEST_CASE("top-vector search finds dictatorships when nothing is forbidden") {
    for (const char* name : {"table4", "table5"}) {
        Domain d = fixture(name);
        auto out = search_scf(d, 2, bundle(true, kLocal, false, false, true));
        REQUIRE(out.status == SearchStatus::found);
        CHECK(check_tops_only(*out.table).holds);
        CHECK(check_unanimity(*out.table).holds);
        CHECK(check_local_sp(*out.table).holds);

        // unanimous tops-only lsp rules on a cdn domain settle every top-swap
        // edge the same way across all profiles with those tops
        auto g = induced_graph(d);
        for (auto [a, b] : g.edges) {
            Alt seen = -1;
            for (int i = 0; i < d.size(); ++i)
                for (int j = 0; j < d.size(); ++j) {
                    if (d.top(i) != a || d.top(j) != b) continue;
                    const Alt got = out.table->at(Profile{{i, j}});
                    CHECK((got == a || got == b));
                    if (seen < 0) seen = got;
                    CHECK(got == seen);
                }
        }
    }
}

TEST_CASE("bundle validation") {
    Domain u3 = unrestricted(3);
    AxiomBundle both = bundle(true, kLocal, false, true, true);
    CHECK_THROWS_AS(search_scf(u3, 2, both), std::invalid_argument);
    AxiomBundle collapsed_forbid = bundle(true, kLocal, false, true);
    collapsed_forbid.restrict_search_to_tops_only = true;
    CHECK_THROWS_AS(search_scf(u3, 2, collapsed_forbid), std::invalid_argument);
    CHECK_THROWS_AS(search_scf(u3, 1, bundle(true, kLocal)), std::invalid_argument);
    CHECK_THROWS_AS(search_scf(u3, 2, bundle(true, kLocal), SearchBudget{0}),
                    std::invalid_argument);
}

TEST_CASE("a one-node budget reports timeout, not exhaustion") {
    auto out = search_scf(fixture("table1"), 2, bundle(true, kLocal, true), SearchBudget{1});
    CHECK(out.status == SearchStatus::timeout);
}

TEST_CASE("identical inputs produce identical certificates and tables") {
    auto a = search_scf(fixture("table1"), 2, bundle(true, kLocal, true));
    auto b = search_scf(fixture("table1"), 2, bundle(true, kLocal, true));
    CHECK(a.certificate.nodes == b.certificate.nodes);
    CHECK(a.certificate.propagations == b.certificate.propagations);
    CHECK(a.table->table() == b.table->table());

    auto c = search_scf(fixture("table1"), 2, bundle(true, kLocal, true), SearchBudget{}, 99);
    CHECK(c.status == SearchStatus::found);
    CHECK(c.certificate.ordering != a.certificate.ordering);
}

TEST_CASE("engine answers match brute-force enumeration on small sub-domains") {
    Domain base = unrestricted(3);
    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < 64; ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) > 4) continue;
        std::vector<int> subset;
        for (int i = 0; i < 6; ++i)
            if (mask & (1 << i)) subset.push_back(i);
        if (subset.size() >= 2) subsets.push_back(subset);
    }
    struct Case {
        AxiomBundle b;
        int incentive;
    };
    std::vector<Case> cases = {{bundle(true, kLocal, true), 1},
                               {bundle(true, kFull, true), 2},
                               {bundle(true, kLocal, false, true), 1}};
    for (const auto& subset : subsets) {
        std::vector<LinearOrder> prefs;
        for (int i : subset) prefs.push_back(base.pref(i));
        Domain d(base.alts(), prefs);
        for (const auto& c : cases) {
            bool exists = false;
            enumerate_tables(d, 2, true, c.incentive, [&](const std::vector<Alt>& table) {
                SCFTable f(d, 2, table);
                if (c.b.forbid_dictatorship && check_dictatorship(f).has_value()) return true;
                if (c.b.forbid_tops_only && check_tops_only(f).holds) return true;
                exists = true;
                return false;  // stop at the first satisfying table
            });
            auto out = search_scf(d, 2, c.b);
            REQUIRE(out.status != SearchStatus::timeout);
            CHECK((out.status == SearchStatus::found) == exists);
        }
    }
}

TEST_CASE("engine answers match brute-force enumeration on four-alternative sub-domains") {
    Domain base = unrestricted(4);
    std::mt19937 rng(24111);
    struct Case {
        AxiomBundle b;
        int incentive;
    };
    std::vector<Case> cases = {{bundle(true, kLocal, true), 1},
                               {bundle(true, kFull, true), 2},
                               {bundle(true, kLocal, false, true), 1}};
    for (int round = 0; round < 30; ++round) {
        Domain d = testsupport::random_connected_subdomain(base, rng, 2 + static_cast<int>(rng() % 2));
        for (const auto& c : cases) {
            bool exists = false;
            enumerate_tables(d, 2, true, c.incentive, [&](const std::vector<Alt>& table) {
                SCFTable f(d, 2, table);
                if (c.b.forbid_dictatorship && check_dictatorship(f).has_value()) return true;
                if (c.b.forbid_tops_only && check_tops_only(f).holds) return true;
                exists = true;
                return false;
            });
            auto out = search_scf(d, 2, c.b);
            REQUIRE(out.status != SearchStatus::timeout);
            CHECK((out.status == SearchStatus::found) == exists);
        }
    }
}

TEST_CASE("l-tops-only verdicts") {
    auto t1 = is_l_tops_only(fixture("table1"), 2);
    CHECK(t1.verdict == Tri::fails);
    REQUIRE(t1.counterexample.has_value());
    CHECK(check_unanimity(*t1.counterexample).holds);
    CHECK(check_local_sp(*t1.counterexample).holds);
    CHECK(!check_tops_only(*t1.counterexample).holds);

    CHECK(is_l_tops_only(fixture("table4"), 2).verdict == Tri::holds);
    CHECK(is_l_tops_only(fixture("table5"), 2).verdict == Tri::holds);
}

TEST_CASE("an explicit second-rank rule certifies the circular domain verdict") {
    Domain t1 = fixture("table1");
    SCFTable f = SCFTable::from_function(t1, 2, [&t1](const Profile& p) {
        bool same = t1.top(p.prefs[0]) == t1.top(p.prefs[1]);
        return same ? t1.top(p.prefs[0]) : t1.pref(p.prefs[0]).kth(2);
    });
    CHECK(check_unanimity(f).holds);
    CHECK(check_local_sp(f).holds);
    CHECK(!check_tops_only(f).holds);
}

TEST_CASE("classification of the fixtures") {
    auto t4 = classify_domain(fixture("table4"), 2);
    CHECK(t4.minimally_rich);
    CHECK(t4.cdn);
    CHECK(t4.l_tops_only == Tri::holds);
    CHECK(t4.ldict == Tri::holds);
    CHECK(t4.dict == Tri::holds);
    CHECK(t4.property_p);
    CHECK(t4.scd);
    CHECK(t4.disagreement);
    CHECK(!t4.conjecture_relevant);

    auto t2 = classify_domain(fixture("table2"), 2);
    CHECK(!t2.cdn);
    CHECK(t2.dict == Tri::fails);
    REQUIRE(t2.dict_counterexample.has_value());
    CHECK(check_unanimity(*t2.dict_counterexample).holds);
    CHECK(check_sp(*t2.dict_counterexample).holds);
    CHECK(!check_dictatorship(*t2.dict_counterexample).has_value());
    CHECK(t2.l_tops_only == Tri::holds);
    CHECK(t2.ldict == Tri::fails);

    auto t1 = classify_domain(fixture("table1"), 2);
    CHECK(!t1.cdn);
    CHECK(t1.dict == Tri::holds);
    CHECK(t1.ldict == Tri::fails);
    CHECK(t1.l_tops_only == Tri::fails);

    auto t5 = classify_domain(fixture("table5"), 2);
    CHECK(t5.cdn);
    CHECK(!t5.property_p);
    CHECK(!t5.scd);
    CHECK(t5.l_tops_only == Tri::holds);
    CHECK(t5.ldict == Tri::holds);
    CHECK(t5.dict == Tri::holds);

    CHECK_THROWS_AS(classify_domain(unrestricted(2), 2), std::invalid_argument);
}

TEST_CASE("classification marks non-minimally-rich domains outside the classes") {
    Domain base = unrestricted(4);
    std::vector<LinearOrder> prefs;
    for (int i = 0; i < base.size(); ++i)
        if (base.top(i) != 3) prefs.push_back(base.pref(i));
    Domain d(base.alts(), prefs);
    auto r = classify_domain(d, 2);
    CHECK(!r.minimally_rich);
    CHECK(r.dict == Tri::fails);
    CHECK(r.ldict == Tri::fails);
}
