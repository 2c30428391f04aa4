#pragma once

#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "prefdom/domain.hpp"
#include "prefdom/scf.hpp"

namespace testsupport {

using namespace prefdom;

// Builds a LinearOrder from a label string like "a2 a1 a3 a4".
inline LinearOrder ord(const AlternativeSet& alts, const std::string& labels) {
    std::istringstream in(labels);
    std::vector<Alt> seq;
    std::string tok;
    while (in >> tok) seq.push_back(*alts.index_of(tok));
    return LinearOrder(seq);
}

// Independent Kendall tau distance: count discordant pairs directly.
inline int kendall_tau(const LinearOrder& p, const LinearOrder& q) {
    int dist = 0;
    for (Alt a = 0; a < p.size(); ++a)
        for (Alt b = a + 1; b < p.size(); ++b)
            if ((p.rank_of(a) < p.rank_of(b)) != (q.rank_of(a) < q.rank_of(b))) ++dist;
    return dist;
}

// Independent restoration oracle: materialize the full flip sequence.
inline int naive_flip_count(const Domain& d, const std::vector<int>& path, Alt a, Alt b) {
    int flips = 0;
    for (std::size_t t = 0; t + 1 < path.size(); ++t) {
        const bool before = d.pref(path[t]).rank_of(a) < d.pref(path[t]).rank_of(b);
        const bool after = d.pref(path[t + 1]).rank_of(a) < d.pref(path[t + 1]).rank_of(b);
        if (before != after) ++flips;
    }
    return flips;
}

// Independent simple-path enumerator (recursive, no shared code with the
// library's DFS).
inline void enumerate_simple_paths(const Domain& d, int from, int to,
                                   const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> path{from};
    std::vector<bool> used(static_cast<std::size_t>(d.size()), false);
    used[static_cast<std::size_t>(from)] = true;
    std::function<void(int)> rec = [&](int u) {
        if (u == to) {
            visit(path);
            return;
        }
        for (int v = 0; v < d.size(); ++v) {
            if (used[static_cast<std::size_t>(v)] || !d.adjacent(u, v)) continue;
            used[static_cast<std::size_t>(v)] = true;
            path.push_back(v);
            rec(v);
            path.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    if (from == to)
        visit(path);
    else
        rec(from);
}

// Grows a random connected sub-domain of `base` by repeatedly absorbing a
// random neighbour of the current set.
inline Domain random_connected_subdomain(const Domain& base, std::mt19937& rng, int target_size) {
    std::uniform_int_distribution<int> start(0, base.size() - 1);
    std::set<int> chosen{start(rng)};
    while (static_cast<int>(chosen.size()) < target_size) {
        std::vector<int> frontier;
        for (int i : chosen)
            for (int j : base.adjacent_to(i))
                if (!chosen.count(j)) frontier.push_back(j);
        if (frontier.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
        chosen.insert(frontier[pick(rng)]);
    }
    std::vector<LinearOrder> orders;
    for (int i : chosen) orders.push_back(base.pref(i));
    return Domain(base.alts(), std::move(orders));
}

// Brute-force enumeration of all total scf tables satisfying the requested
// axioms, with pruning against already-assigned profiles. Independent of the
// search engine: plain rank comparisons, no masks, no propagation.
// incentive: 0 none, 1 local, 2 full. visit returns false to stop early.
inline void enumerate_tables(const Domain& d, int n, bool unanimity, int incentive,
                             const std::function<bool(const std::vector<Alt>&)>& visit) {
    std::size_t total = 1;
    for (int v = 0; v < n; ++v) total *= static_cast<std::size_t>(d.size());
    std::vector<Alt> table(total, -1);

    std::vector<std::vector<int>> profiles(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::size_t rest = idx;
        for (int v = n - 1; v >= 0; --v) {
            p[static_cast<std::size_t>(v)] = static_cast<int>(rest % static_cast<std::size_t>(d.size()));
            rest /= static_cast<std::size_t>(d.size());
        }
        profiles[idx] = std::move(p);
    }

    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (stop) return;
        if (idx == total) {
            if (!visit(table)) stop = true;
            return;
        }
        const auto& p = profiles[idx];
        Alt forced = -1;
        if (unanimity) {
            bool same = true;
            for (int v = 1; v < n && same; ++v)
                same = d.pref(p[static_cast<std::size_t>(v)]).top() == d.pref(p[0]).top();
            if (same) forced = d.pref(p[0]).top();
        }
        for (Alt val = 0; val < d.alternatives(); ++val) {
            if (forced >= 0 && val != forced) continue;
            bool ok = true;
            if (incentive > 0) {
                for (int v = 0; v < n && ok; ++v) {
                    const int r = p[static_cast<std::size_t>(v)];
                    std::size_t stride = 1;
                    for (int w = n - 1; w > v; --w) stride *= static_cast<std::size_t>(d.size());
                    for (int r2 = 0; r2 < d.size() && ok; ++r2) {
                        if (r2 == r) continue;
                        if (incentive == 1 && !d.adjacent(r, r2)) continue;
                        const std::size_t other = static_cast<std::size_t>(
                            static_cast<long long>(idx) +
                            static_cast<long long>(r2 - r) * static_cast<long long>(stride));
                        if (table[other] < 0) continue;
                        const Alt y = table[other];
                        if (y != val && d.pref(r).rank_of(y) < d.pref(r).rank_of(val)) ok = false;
                        if (y != val && d.pref(r2).rank_of(val) < d.pref(r2).rank_of(y)) ok = false;
                    }
                }
            }
            if (!ok) continue;
            table[idx] = val;
            rec(idx + 1);
            table[idx] = -1;
            if (stop) return;
        }
    };
    rec(0);
}

}  // namespace testsupport
