#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "prefdom/fixtures.hpp"
#include "prefdom/scf.hpp"
#include "support.hpp"

using namespace prefdom;
using testsupport::ord;

namespace {

Alt alt(const Domain& d, const std::string& label) { return *d.alts().index_of(label); }

SCFTable projection(const Domain& d, int n, int voter) {
    return SCFTable::from_function(d, n, [&d, voter](const Profile& p) {
        return d.top(p.prefs[static_cast<std::size_t>(voter)]);
    });
}

SCFTable constant(const Domain& d, int n, Alt a) {
    return SCFTable::from_function(d, n, [a](const Profile&) { return a; });
}

// second-ranked alternative of voter 0 unless the tops agree
SCFTable second_rank_rule(const Domain& d, int n) {
    return SCFTable::from_function(d, n, [&d](const Profile& p) {
        bool same = true;
        for (int i : p.prefs) same = same && d.top(i) == d.top(p.prefs[0]);
        return same ? d.top(p.prefs[0]) : d.pref(p.prefs[0]).kth(2);
    });
}

// median of the two tops and a phantom at a2, on the a1<a2<a3<a4 axis
SCFTable median_phantom_rule(const Domain& d) {
    const Alt phantom = alt(d, "a2");
    return SCFTable::from_function(d, 2, [&d, phantom](const Profile& p) {
        std::vector<Alt> tops{d.top(p.prefs[0]), d.top(p.prefs[1]), phantom};
        std::sort(tops.begin(), tops.end());
        return tops[1];
    });
}

SCFTable plurality_min_tiebreak(const Domain& d) {
    return SCFTable::from_function(d, 2, [&d](const Profile& p) {
        return std::min(d.top(p.prefs[0]), d.top(p.prefs[1]));
    });
}

// everything the unit suite constructs, for the cross-cutting invariants
std::vector<SCFTable> rule_collection() {
    std::vector<SCFTable> out;
    Domain t1 = fixture("table1"), t2 = fixture("table2"), t3 = fixture("table3");
    out.push_back(projection(t2, 2, 0));
    out.push_back(projection(t1, 2, 1));
    out.push_back(constant(t2, 2, 0));
    out.push_back(second_rank_rule(t1, 2));
    out.push_back(median_phantom_rule(t1));
    out.push_back(plurality_min_tiebreak(t2));
    out.push_back(construct_case1(t1, 0, 2));
    for (int pstar : eligible_case2_pstars(t2)) out.push_back(construct_case2(t2, pstar, 2));
    for (int pstar : eligible_case2_pstars(t3)) out.push_back(construct_case2(t3, pstar, 2));
    return out;
}

}  // namespace

TEST_CASE("profiles encode and decode in row-major order") {
    Domain t2 = fixture("table2");
    SCFTable f = projection(t2, 2, 0);
    CHECK(f.profile_count() == 49);
    CHECK(f.encode(Profile{{0, 0}}) == 0);
    CHECK(f.encode(Profile{{0, 1}}) == 1);
    CHECK(f.encode(Profile{{1, 0}}) == 7);
    for (std::size_t idx = 0; idx < f.profile_count(); ++idx)
        CHECK(f.encode(f.decode(idx)) == idx);
    CHECK_THROWS_AS(f.encode(Profile{{0}}), std::invalid_argument);
    CHECK_THROWS_AS(f.at(Profile{{0, 9}}), std::out_of_range);
}

TEST_CASE("table validation") {
    Domain t2 = fixture("table2");
    CHECK_THROWS_AS(SCFTable(t2, 2, std::vector<Alt>(48, 0)), std::invalid_argument);
    CHECK_THROWS_AS(SCFTable(t2, 2, std::vector<Alt>(49, 7)), std::invalid_argument);
    CHECK_THROWS_AS(SCFTable(t2, 1, std::vector<Alt>(7, 0)), std::invalid_argument);
}

TEST_CASE("unanimity checker") {
    Domain t2 = fixture("table2");
    CHECK(check_unanimity(projection(t2, 2, 0)).holds);

    auto v = check_unanimity(constant(t2, 2, 0));
    CHECK(!v.holds);
    REQUIRE(v.witness.has_value());
    // first failing profile in row-major order: both voters report pref 2
    CHECK(v.witness->profile == Profile{{1, 1}});
    CHECK(v.witness->top == alt(t2, "a2"));
    CHECK(v.witness->outcome == alt(t2, "a1"));

    for (int pstar : eligible_case2_pstars(t2))
        CHECK(check_unanimity(construct_case2(t2, pstar, 2)).holds);
}

TEST_CASE("local strategy-proofness checker") {
    Domain t1 = fixture("table1");
    // no adjacent pairs: every table is locally strategy-proof
    CHECK(check_local_sp(second_rank_rule(t1, 2)).holds);
    CHECK(check_local_sp(median_phantom_rule(t1)).holds);
    std::mt19937 rng(5150);
    for (int round = 0; round < 50; ++round) {
        std::vector<Alt> table(64);
        for (auto& a : table) a = static_cast<Alt>(rng() % 4);
        CHECK(check_local_sp(SCFTable(t1, 2, table)).holds);
    }

    Domain t2 = fixture("table2");
    CHECK(check_local_sp(projection(t2, 2, 0)).holds);
    CHECK(check_local_sp(plurality_min_tiebreak(t2)).holds);

    // a rule rewarding a deviation: pick voter 1's second choice when the
    // reports are adjacent
    SCFTable bad = SCFTable::from_function(t2, 2, [&t2](const Profile& p) {
        if (t2.adjacent(p.prefs[0], p.prefs[1])) return t2.pref(p.prefs[0]).kth(2);
        return t2.top(p.prefs[0]);
    });
    auto v = check_local_sp(bad);
    CHECK(!v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->local);
    // the witness replays: the deviation strictly improves the outcome
    Profile q = v.witness->profile;
    q.prefs[static_cast<std::size_t>(v.witness->voter)] = v.witness->deviation;
    const auto& truth = t2.pref(v.witness->profile.prefs[static_cast<std::size_t>(v.witness->voter)]);
    CHECK(truth.prefers(bad.at(q), bad.at(v.witness->profile)));
    CHECK(t2.adjacent(v.witness->profile.prefs[static_cast<std::size_t>(v.witness->voter)],
                      v.witness->deviation));
}

TEST_CASE("parallel incentive scans report the sequential witness") {
    Domain t2 = fixture("table2");
    SCFTable bad = SCFTable::from_function(t2, 2, [&t2](const Profile& p) {
        if (t2.adjacent(p.prefs[0], p.prefs[1])) return t2.pref(p.prefs[0]).kth(2);
        return t2.top(p.prefs[0]);
    });
    auto seq = check_local_sp(bad, 1);
    auto par = check_local_sp(bad, 4);
    REQUIRE((!seq.holds && !par.holds));
    CHECK(seq.witness->profile == par.witness->profile);
    CHECK(seq.witness->voter == par.witness->voter);
    CHECK(seq.witness->deviation == par.witness->deviation);
    CHECK(check_sp(projection(t2, 2, 0), 4).holds);
}

TEST_CASE("full strategy-proofness checker") {
    Domain t1 = fixture("table1");
    CHECK(check_sp(projection(t1, 2, 0)).holds);

    SCFTable median = median_phantom_rule(t1);
    CHECK(check_unanimity(median).holds);
    CHECK(check_local_sp(median).holds);
    auto v = check_sp(median);
    CHECK(!v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(!v.witness->local);
}

TEST_CASE("strategy-proofness implies local strategy-proofness") {
    for (const auto& f : rule_collection())
        if (check_sp(f).holds) CHECK(check_local_sp(f).holds);
}

TEST_CASE("tops-only checker") {
    Domain t1 = fixture("table1");
    CHECK(check_tops_only(projection(t1, 2, 0)).holds);

    auto v = check_tops_only(second_rank_rule(t1, 2));
    CHECK(!v.holds);
    REQUIRE(v.witness.has_value());
    for (int i = 0; i < 2; ++i)
        CHECK(t1.top(v.witness->first.prefs[static_cast<std::size_t>(i)]) ==
              t1.top(v.witness->second.prefs[static_cast<std::size_t>(i)]));

    // the disconnected-domain construction is not tops-only here
    CHECK(!check_tops_only(construct_case1(t1, 0, 2)).holds);
}

TEST_CASE("dictatorship checker") {
    Domain t2 = fixture("table2");
    CHECK(check_dictatorship(projection(t2, 2, 0)) == 0);
    CHECK(check_dictatorship(projection(t2, 2, 1)) == 1);
    CHECK(!check_dictatorship(construct_case2(t2, 0, 2)).has_value());
    CHECK(!check_dictatorship(plurality_min_tiebreak(t2)).has_value());
}

TEST_CASE("dictatorship implies unanimity, strategy-proofness, and tops-onlyness") {
    for (const auto& f : rule_collection()) {
        if (!check_dictatorship(f)) continue;
        CHECK(check_unanimity(f).holds);
        CHECK(check_sp(f).holds);
        CHECK(check_tops_only(f).holds);
    }
}

TEST_CASE("decisiveness") {
    Domain t2 = fixture("table2");
    SCFTable dict = projection(t2, 2, 0);
    for (Alt a = 0; a < t2.alternatives(); ++a) CHECK(check_decisive(dict, 0, a).holds);

    // case-2 rule with pivot 1 (pair a1/a2): voter 0 decides everything except a1
    SCFTable f = construct_case2(t2, 0, 2);
    CHECK(check_decisive(f, 0, alt(t2, "a2")).holds);
    CHECK(check_decisive(f, 0, alt(t2, "a3")).holds);
    CHECK(check_decisive(f, 0, alt(t2, "a4")).holds);
    auto v = check_decisive(f, 0, alt(t2, "a1"));
    CHECK(!v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(t2.top(v.witness->profile.prefs[0]) == alt(t2, "a1"));
    CHECK(f.at(v.witness->profile) != alt(t2, "a1"));

    CHECK_THROWS_AS(check_decisive(f, 5, 0), std::out_of_range);
}

TEST_CASE("no two voters are decisive over distinct alternatives") {
    for (const auto& f : rule_collection()) {
        const Domain& d = f.domain();
        std::set<Alt> tops;
        for (int i = 0; i < d.size(); ++i) tops.insert(d.top(i));
        for (Alt a : tops)
            for (Alt b : tops) {
                if (a == b) continue;
                CHECK(!(check_decisive(f, 0, a).holds && check_decisive(f, 1, b).holds));
            }
    }
}

TEST_CASE("case-1 construction") {
    Domain t1 = fixture("table1");
    SCFTable f = construct_case1(t1, 0, 2);
    CHECK(check_unanimity(f).holds);
    CHECK(check_local_sp(f).holds);
    CHECK(!check_dictatorship(f).has_value());

    // while voter 0 reports inside the base component the outcome is its top
    for (int j = 0; j < t1.size(); ++j) CHECK(f.at(Profile{{0, j}}) == t1.top(0));
    // otherwise voter 1 decides (components here are singletons)
    for (int j = 0; j < t1.size(); ++j) CHECK(f.at(Profile{{1, j}}) == t1.top(j));

    SCFTable f3 = construct_case1(t1, 0, 3);
    CHECK(check_unanimity(f3).holds);
    CHECK(check_local_sp(f3).holds);
    CHECK(!check_dictatorship(f3).has_value());

    CHECK_THROWS_AS(construct_case1(fixture("table2"), 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(construct_case1(t1, 0, 2, 0, 0), std::invalid_argument);
}

TEST_CASE("case-2 construction") {
    Domain t2 = fixture("table2");
    CHECK(eligible_case2_pstars(t2) == std::vector<int>{0, 6});
    for (int pstar : {0, 6}) {
        SCFTable f = construct_case2(t2, pstar, 2);
        CHECK(check_unanimity(f).holds);
        CHECK(check_local_sp(f).holds);
        CHECK(!check_dictatorship(f).has_value());
    }

    Domain t3 = fixture("table3");
    CHECK(eligible_case2_pstars(t3) == std::vector<int>{0, 7});
    SCFTable f8 = construct_case2(t3, 7, 2);
    CHECK(check_unanimity(f8).holds);
    CHECK(check_local_sp(f8).holds);
    CHECK(!check_dictatorship(f8).has_value());

    // outside the closure the rule is voter-0 projection
    SCFTable f = construct_case2(t2, 0, 2);
    for (int i = 1; i < t2.size(); ++i)
        for (int j = 0; j < t2.size(); ++j) CHECK(f.at(Profile{{i, j}}) == t2.top(i));
    // inside: voter 1's preferred of the pair {a1, a2}
    for (int j = 0; j < t2.size(); ++j) {
        const Alt expect =
            t2.pref(j).prefers(alt(t2, "a1"), alt(t2, "a2")) ? alt(t2, "a1") : alt(t2, "a2");
        CHECK(f.at(Profile{{0, j}}) == expect);
    }

    SCFTable f3 = construct_case2(t2, 0, 3);
    CHECK(check_unanimity(f3).holds);
    CHECK(check_local_sp(f3).holds);
    CHECK(!check_dictatorship(f3).has_value());

    // preference 2's closure has neighbours topping a1 and a3
    CHECK_THROWS_WITH_AS(construct_case2(t2, 1, 2),
                         "case-2 construction: the closure of preference 2 has neighbours with "
                         "two distinct tops",
                         std::invalid_argument);
    CHECK_THROWS_AS(construct_case2(fixture("table1"), 0, 2), std::invalid_argument);
    // a cdn domain has no eligible pivot at all
    CHECK(eligible_case2_pstars(fixture("table4")).empty());
    CHECK_THROWS_AS(construct_case2(fixture("table4"), 0, 2), std::invalid_argument);
}

TEST_CASE("construction voter indices are configurable") {
    Domain t2 = fixture("table2");
    SCFTable f = construct_case2(t2, 0, 3, 2, 0);  // v1 = voter 2, v2 = voter 0
    for (int i = 1; i < t2.size(); ++i) CHECK(f.at(Profile{{0, 4, i}}) == t2.top(i));
    CHECK(check_local_sp(f).holds);
}

TEST_CASE("clone_reduce") {
    Domain t2 = fixture("table2");
    for (int dictator : {0, 1}) {
        SCFTable g = clone_reduce(projection(t2, 3, dictator));
        CHECK(g.voters() == 2);
        CHECK(check_dictatorship(g) == 0);  // the cloned seat
    }
    CHECK(check_dictatorship(clone_reduce(projection(t2, 3, 2))) == 1);

    SCFTable f = construct_case2(t2, 0, 3);
    SCFTable g = clone_reduce(f);
    CHECK(check_unanimity(g).holds);
    CHECK(check_local_sp(g).holds);
    CHECK(check_tops_only(f).holds == check_tops_only(g).holds);
    for (int i = 0; i < t2.size(); ++i)
        for (int j = 0; j < t2.size(); ++j)
            CHECK(g.at(Profile{{i, j}}) == f.at(Profile{{i, i, j}}));

    CHECK_THROWS_AS(clone_reduce(projection(t2, 2, 0)), std::invalid_argument);
}

TEST_CASE("two_voter_slice") {
    Domain t2 = fixture("table2");
    SCFTable dict = projection(t2, 3, 0);
    std::vector<int> tail{4};
    SCFTable h = two_voter_slice(dict, tail);
    CHECK(check_dictatorship(h) == 0);

    SCFTable third = projection(t2, 3, 2);
    SCFTable hc = two_voter_slice(third, tail);
    for (std::size_t idx = 0; idx < hc.profile_count(); ++idx)
        CHECK(hc.at_index(idx) == t2.top(4));

    SCFTable f = construct_case2(t2, 0, 3);
    SCFTable hf = two_voter_slice(f, tail);
    CHECK(check_unanimity(hf).holds);
    CHECK(check_local_sp(hf).holds);
    CHECK(check_tops_only(hf).holds);

    CHECK_THROWS_AS(two_voter_slice(projection(t2, 2, 0), tail), std::invalid_argument);
    std::vector<int> wrong_tail{1, 2};
    CHECK_THROWS_AS(two_voter_slice(dict, wrong_tail), std::invalid_argument);
}

TEST_CASE("restrict_to") {
    Domain t5 = fixture("table5");
    SCFTable dict = projection(t5, 2, 1);
    SCFTable same = restrict_to(dict, t5);
    CHECK(same.table() == dict.table());

    // the twelve-preference cdn fixture is a sub-domain of this one in a
    // different indexing; restriction keeps the axioms and the dictator
    Domain t4 = fixture("table4");
    SCFTable restricted = restrict_to(dict, t4);
    CHECK(check_unanimity(restricted).holds);
    CHECK(check_local_sp(restricted).holds);
    CHECK(check_dictatorship(restricted) == 1);
    for (int i = 0; i < t4.size(); ++i)
        for (int j = 0; j < t4.size(); ++j) CHECK(restricted.at(Profile{{i, j}}) == t4.top(j));

    // restriction of the non-dictatorial construction stays unanimous and lsp
    Domain t2 = fixture("table2");
    SCFTable f = construct_case2(t2, 0, 2);
    AlternativeSet alts = t2.alts();
    Domain sub(alts, {t2.pref(0), t2.pref(1), t2.pref(2)});
    SCFTable fr = restrict_to(f, sub);
    CHECK(check_unanimity(fr).holds);
    CHECK(check_local_sp(fr).holds);

    Domain other(alts, {ord(alts, "a4 a2 a3 a1")});
    CHECK_THROWS_AS(restrict_to(f, other), std::invalid_argument);
}
