#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "prefdom/fixtures.hpp"
#include "prefdom/orders.hpp"
#include "support.hpp"

using namespace prefdom;
using testsupport::kendall_tau;
using testsupport::ord;

TEST_CASE("alternative set validation") {
    CHECK_THROWS_AS(AlternativeSet({"a1"}), std::invalid_argument);
    CHECK_THROWS_AS(AlternativeSet({"a1", "a1"}), std::invalid_argument);
    CHECK_THROWS_AS(AlternativeSet({"a1", ""}), std::invalid_argument);
    AlternativeSet alts({"x", "y", "z"});
    CHECK(alts.size() == 3);
    CHECK(alts.label(1) == "y");
    CHECK(alts.index_of("z") == 2);
    CHECK(!alts.index_of("w").has_value());
    CHECK_THROWS_AS(alts.label(3), std::out_of_range);
}

TEST_CASE("linear order validation and views") {
    CHECK_THROWS_AS(LinearOrder({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(LinearOrder({0, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(LinearOrder({0}), std::invalid_argument);
    LinearOrder p({2, 0, 1});
    CHECK(p.top() == 2);
    CHECK(p.kth(2) == 0);
    CHECK(p.rank_of(1) == 3);
}

TEST_CASE("kth on the table fixtures") {
    Domain t1 = fixture("table1");
    CHECK(t1.pref(1).kth(2) == *t1.alts().index_of("a4"));
    Domain t5 = fixture("table5");
    CHECK(t5.pref(12).kth(3) == *t5.alts().index_of("a2"));
    for (int i = 0; i < t1.size(); ++i) CHECK(t1.pref(i).kth(1) == t1.pref(i).top());
    CHECK_THROWS_AS(t1.pref(0).kth(0), std::out_of_range);
    CHECK_THROWS_AS(t1.pref(0).kth(5), std::out_of_range);
}

TEST_CASE("rank_of on the table fixtures") {
    Domain t2 = fixture("table2");
    CHECK(t2.pref(3).rank_of(*t2.alts().index_of("a1")) == 3);
    Domain t6 = fixture("table6");
    CHECK(t6.pref(0).rank_of(*t6.alts().index_of("a3")) == 4);
    for (int i = 0; i < t2.size(); ++i) CHECK(t2.pref(i).rank_of(t2.pref(i).top()) == 1);
    CHECK_THROWS_AS(t2.pref(0).rank_of(7), std::out_of_range);
}

TEST_CASE("kth and rank_of are mutually inverse for every order up to m=5") {
    for (int m : {2, 3, 4, 5}) {
        Domain all = unrestricted(m);
        for (int i = 0; i < all.size(); ++i) {
            const LinearOrder& p = all.pref(i);
            for (Rank k = 1; k <= m; ++k) CHECK(p.rank_of(p.kth(k)) == k);
            for (Alt a = 0; a < m; ++a) CHECK(p.kth(p.rank_of(a)) == a);
        }
    }
}

TEST_CASE("prefers") {
    Domain t3 = fixture("table3");
    const Alt a1 = *t3.alts().index_of("a1"), a2 = *t3.alts().index_of("a2");
    CHECK(t3.pref(4).prefers(a2, a1));
    Domain t5 = fixture("table5");
    CHECK(t5.pref(8).prefers(*t5.alts().index_of("a3"), *t5.alts().index_of("a2")));
    for (int i = 0; i < t3.size(); ++i)
        for (Alt x = 0; x < 4; ++x)
            if (x != t3.pref(i).top()) CHECK(t3.pref(i).prefers(t3.pref(i).top(), x));
    CHECK_THROWS_AS(t3.pref(0).prefers(a1, a1), std::invalid_argument);
    // exactly one direction holds
    for (int i = 0; i < t3.size(); ++i)
        for (Alt x = 0; x < 4; ++x)
            for (Alt y = 0; y < 4; ++y)
                if (x != y) CHECK(t3.pref(i).prefers(x, y) != t3.pref(i).prefers(y, x));
}

TEST_CASE("adjacency basics") {
    Domain t2 = fixture("table2");
    CHECK(is_adjacent(t2.pref(0), t2.pref(1)));
    CHECK(!is_adjacent(t2.pref(0), t2.pref(0)));
    Domain t1 = fixture("table1");
    for (int i = 0; i < t1.size(); ++i)
        for (int j = 0; j < t1.size(); ++j)
            if (i != j) CHECK(!is_adjacent(t1.pref(i), t1.pref(j)));
    LinearOrder small({0, 1});
    CHECK_THROWS_AS(is_adjacent(small, t2.pref(0)), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric, irreflexive, and is exactly Kendall tau one") {
    Domain all = unrestricted(4);
    for (int i = 0; i < all.size(); ++i)
        for (int j = 0; j < all.size(); ++j) {
            const bool adj = is_adjacent(all.pref(i), all.pref(j));
            CHECK(adj == is_adjacent(all.pref(j), all.pref(i)));
            if (i == j) CHECK(!adj);
            CHECK(adj == (kendall_tau(all.pref(i), all.pref(j)) == 1));
        }
}

TEST_CASE("adjacent_swaps enumerates exactly the adjacent orders") {
    AlternativeSet abc({"a", "b", "c"});
    LinearOrder p = ord(abc, "a b c");
    auto swaps = adjacent_swaps(p);
    REQUIRE(swaps.size() == 2);
    CHECK(swaps[0] == ord(abc, "b a c"));
    CHECK(swaps[1] == ord(abc, "a c b"));

    Domain t1 = fixture("table1");
    auto from_t1 = adjacent_swaps(t1.pref(0));
    Domain t3 = fixture("table3");
    CHECK(std::find(from_t1.begin(), from_t1.end(), t3.pref(1)) != from_t1.end());

    for (int m : {3, 4}) {
        Domain all = unrestricted(m);
        for (int i = 0; i < all.size(); ++i) {
            auto swaps_i = adjacent_swaps(all.pref(i));
            CHECK(static_cast<int>(swaps_i.size()) == m - 1);
            std::set<LinearOrder> expected;
            for (int j = 0; j < all.size(); ++j)
                if (is_adjacent(all.pref(i), all.pref(j))) expected.insert(all.pref(j));
            CHECK(std::set<LinearOrder>(swaps_i.begin(), swaps_i.end()) == expected);
        }
    }
}

TEST_CASE("canonical text form") {
    Domain t1 = fixture("table1");
    CHECK(to_string(t1.alts(), t1.pref(1)) == "a1 a4 a3 a2");
}
