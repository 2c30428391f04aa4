#include "prefdom/domain.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace prefdom {

Domain::Domain(AlternativeSet alts, std::vector<LinearOrder> prefs)
    : alts_(std::move(alts)), prefs_(std::move(prefs)) {
    if (prefs_.empty()) throw std::invalid_argument("domain needs at least one preference");
    const int k = size();
    for (int i = 0; i < k; ++i)
        if (prefs_[static_cast<std::size_t>(i)].size() != alts_.size())
            throw std::invalid_argument("preference " + std::to_string(i + 1) +
                                        " does not range over the alternative set");
    std::map<LinearOrder, int> seen;
    for (int i = 0; i < k; ++i) {
        auto [it, inserted] = seen.emplace(prefs_[static_cast<std::size_t>(i)], i);
        if (!inserted)
            throw std::invalid_argument(
                "duplicate preference at indices " + std::to_string(it->second + 1) + " and " +
                std::to_string(i + 1) + ": " + to_string(alts_, prefs_[static_cast<std::size_t>(i)]));
    }
    adj_.assign(static_cast<std::size_t>(k), {});
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (is_adjacent(prefs_[static_cast<std::size_t>(i)], prefs_[static_cast<std::size_t>(j)])) {
                adj_[static_cast<std::size_t>(i)].push_back(j);
                adj_[static_cast<std::size_t>(j)].push_back(i);
            }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

const LinearOrder& Domain::pref(int i) const {
    if (i < 0 || i >= size())
        throw std::out_of_range("preference index " + std::to_string(i) + " out of range");
    return prefs_[static_cast<std::size_t>(i)];
}

bool Domain::adjacent(int i, int j) const {
    const auto& row = adjacent_to(i);
    if (j < 0 || j >= size())
        throw std::out_of_range("preference index " + std::to_string(j) + " out of range");
    return std::binary_search(row.begin(), row.end(), j);
}

const std::vector<int>& Domain::adjacent_to(int i) const {
    if (i < 0 || i >= size())
        throw std::out_of_range("preference index " + std::to_string(i) + " out of range");
    return adj_[static_cast<std::size_t>(i)];
}

std::optional<int> Domain::index_of(const LinearOrder& order) const {
    for (int i = 0; i < size(); ++i)
        if (prefs_[static_cast<std::size_t>(i)] == order) return i;
    return std::nullopt;
}

Domain build_domain(AlternativeSet alts, std::vector<LinearOrder> orders) {
    return Domain(std::move(alts), std::move(orders));
}

namespace {

std::vector<int> component_ids(const Domain& d) {
    std::vector<int> comp(static_cast<std::size_t>(d.size()), -1);
    int next = 0;
    for (int s = 0; s < d.size(); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        comp[static_cast<std::size_t>(s)] = next;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : d.adjacent_to(u))
                if (comp[static_cast<std::size_t>(v)] < 0) {
                    comp[static_cast<std::size_t>(v)] = next;
                    q.push_back(v);
                }
        }
        ++next;
    }
    return comp;
}

int count_flips(const Domain& d, std::span<const int> path, Alt a, Alt b) {
    int flips = 0;
    for (std::size_t t = 0; t + 1 < path.size(); ++t)
        if (d.pref(path[t]).prefers(a, b) != d.pref(path[t + 1]).prefers(a, b)) ++flips;
    return flips;
}

// Remove cycles from a walk; flip counts never increase when a loop is cut at
// a repeated preference, so a <=1-flip walk yields a <=1-flip simple path.
std::vector<int> simplify_walk(const std::vector<int>& walk) {
    std::vector<int> out;
    for (int v : walk) {
        auto it = std::find(out.begin(), out.end(), v);
        if (it != out.end())
            out.erase(it + 1, out.end());
        else
            out.push_back(v);
    }
    return out;
}

}  // namespace

DomainVerdict is_minimally_rich(const Domain& d) {
    std::vector<bool> topped(static_cast<std::size_t>(d.alternatives()), false);
    for (int i = 0; i < d.size(); ++i) topped[static_cast<std::size_t>(d.top(i))] = true;
    for (Alt a = 0; a < d.alternatives(); ++a)
        if (!topped[static_cast<std::size_t>(a)])
            return {false, MissingTopWitness{a}};
    return {true, std::nullopt};
}

std::optional<PrefPath> find_path(const Domain& d, int from, int to) {
    d.pref(from);
    d.pref(to);
    if (from == to) return PrefPath{{from}};
    std::vector<int> parent(static_cast<std::size_t>(d.size()), -1);
    parent[static_cast<std::size_t>(from)] = from;
    std::deque<int> q{from};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : d.adjacent_to(u)) {
            if (parent[static_cast<std::size_t>(v)] >= 0) continue;
            parent[static_cast<std::size_t>(v)] = u;
            if (v == to) {
                std::vector<int> path{v};
                while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
                std::reverse(path.begin(), path.end());
                return PrefPath{std::move(path)};
            }
            q.push_back(v);
        }
    }
    return std::nullopt;
}

DomainVerdict is_connected(const Domain& d) {
    auto comp = component_ids(d);
    for (int j = 1; j < d.size(); ++j)
        if (comp[static_cast<std::size_t>(j)] != comp[0])
            return {false, DisconnectedWitness{0, j, comp}};
    return {true, std::nullopt};
}

std::vector<int> tcc(const Domain& d, int i) {
    const Alt t = d.top(i);
    std::vector<bool> seen(static_cast<std::size_t>(d.size()), false);
    seen[static_cast<std::size_t>(i)] = true;
    std::deque<int> q{i};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : d.adjacent_to(u))
            if (!seen[static_cast<std::size_t>(v)] && d.top(v) == t) {
                seen[static_cast<std::size_t>(v)] = true;
                q.push_back(v);
            }
    }
    std::vector<int> out;
    for (int j = 0; j < d.size(); ++j)
        if (seen[static_cast<std::size_t>(j)]) out.push_back(j);
    return out;
}

std::vector<int> neighbours(const Domain& d, std::span<const int> within) {
    std::vector<bool> in(static_cast<std::size_t>(d.size()), false);
    for (int i : within) {
        d.pref(i);
        in[static_cast<std::size_t>(i)] = true;
    }
    std::set<int> out;
    for (int i : within)
        for (int j : d.adjacent_to(i))
            if (!in[static_cast<std::size_t>(j)]) out.insert(j);
    return {out.begin(), out.end()};
}

DomainVerdict has_two_distinct_neighbours(const Domain& d, int i) {
    auto closure = tcc(d, i);
    auto nb = neighbours(d, closure);
    std::set<Alt> tops;
    for (int j : nb) tops.insert(d.top(j));
    if (tops.size() >= 2) return {true, std::nullopt};
    return {false, NeighbourTopsWitness{i, {tops.begin(), tops.end()}}};
}

DomainVerdict is_cdn(const Domain& d) {
    if (d.alternatives() < 3)
        throw std::invalid_argument(
            "connected-with-two-distinct-neighbours requires m >= 3 alternatives");
    auto conn = is_connected(d);
    if (!conn.holds) return conn;
    for (int i = 0; i < d.size(); ++i) {
        auto v = has_two_distinct_neighbours(d, i);
        if (!v.holds) return v;
    }
    return {true, std::nullopt};
}

bool is_valid_path(const Domain& d, const PrefPath& path) {
    if (path.indices.empty()) return false;
    std::set<int> seen;
    for (std::size_t t = 0; t < path.indices.size(); ++t) {
        int i = path.indices[t];
        if (i < 0 || i >= d.size()) return false;
        if (!seen.insert(i).second) return false;
        if (t > 0 && !d.adjacent(path.indices[t - 1], i)) return false;
    }
    return true;
}

bool path_restoration_free(const Domain& d, const PrefPath& path, Alt a, Alt b) {
    if (a == b) throw std::invalid_argument("restoration check requires two distinct alternatives");
    if (!is_valid_path(d, path)) throw std::invalid_argument("not a valid path in the domain");
    return count_flips(d, path.indices, a, b) <= 1;
}

std::optional<PrefPath> restoration_free_path(const Domain& d, int from, int to, Alt a, Alt b) {
    if (a == b) throw std::invalid_argument("restoration check requires two distinct alternatives");
    d.pref(from);
    d.pref(to);
    if (from == to) return PrefPath{{from}};
    // BFS over (preference, flips-used) with flips capped at 1. A walk found
    // here simplifies to a path with at most as many flips.
    const int k = d.size();
    std::vector<int> parent(static_cast<std::size_t>(2 * k), -1);
    auto id = [k](int pref, int flips) { return flips * k + pref; };
    std::deque<int> q;
    parent[static_cast<std::size_t>(id(from, 0))] = id(from, 0);
    q.push_back(id(from, 0));
    int goal = -1;
    while (!q.empty() && goal < 0) {
        int cur = q.front();
        q.pop_front();
        int u = cur % k, f = cur / k;
        for (int v : d.adjacent_to(u)) {
            int nf = f + (d.pref(u).prefers(a, b) != d.pref(v).prefers(a, b) ? 1 : 0);
            if (nf > 1) continue;
            int nid = id(v, nf);
            if (parent[static_cast<std::size_t>(nid)] >= 0) continue;
            parent[static_cast<std::size_t>(nid)] = cur;
            if (v == to) {
                goal = nid;
                break;
            }
            q.push_back(nid);
        }
    }
    if (goal < 0) return std::nullopt;
    std::vector<int> walk;
    for (int cur = goal;; cur = parent[static_cast<std::size_t>(cur)]) {
        walk.push_back(cur % k);
        if (parent[static_cast<std::size_t>(cur)] == cur) break;
    }
    std::reverse(walk.begin(), walk.end());
    auto path = simplify_walk(walk);
    PrefPath result{std::move(path)};
    if (is_valid_path(d, result) && count_flips(d, result.indices, a, b) <= 1) return result;
    // Fallback: bounded DFS over simple paths. The simplification argument
    // makes this unreachable; kept as a guard.
    std::vector<int> stack{from};
    std::vector<bool> on(static_cast<std::size_t>(k), false);
    on[static_cast<std::size_t>(from)] = true;
    std::optional<PrefPath> found;
    auto dfs = [&](auto&& self, int u) -> bool {
        if (u == to) {
            if (count_flips(d, stack, a, b) <= 1) {
                found = PrefPath{stack};
                return true;
            }
            return false;
        }
        for (int v : d.adjacent_to(u)) {
            if (on[static_cast<std::size_t>(v)]) continue;
            on[static_cast<std::size_t>(v)] = true;
            stack.push_back(v);
            if (self(self, v)) return true;
            stack.pop_back();
            on[static_cast<std::size_t>(v)] = false;
        }
        return false;
    };
    dfs(dfs, from);
    return found;
}

namespace {

template <typename PairFilter>
DomainVerdict no_restoration_scan(const Domain& d, PairFilter&& qualifies) {
    const int m = d.alternatives();
    for (int i = 0; i < d.size(); ++i)
        for (int j = i + 1; j < d.size(); ++j)
            for (Alt a = 0; a < m; ++a)
                for (Alt b = a + 1; b < m; ++b) {
                    if (!qualifies(a, b)) continue;
                    if (!restoration_free_path(d, i, j, a, b))
                        return {false, RestorationWitness{j, i, a, b}};
                }
    return {true, std::nullopt};
}

}  // namespace

DomainVerdict satisfies_property_p(const Domain& d) {
    return no_restoration_scan(d, [](Alt, Alt) { return true; });
}

DomainVerdict satisfies_scd(const Domain& d) {
    std::vector<bool> topped(static_cast<std::size_t>(d.alternatives()), false);
    for (int i = 0; i < d.size(); ++i) topped[static_cast<std::size_t>(d.top(i))] = true;
    return no_restoration_scan(d, [&](Alt a, Alt b) {
        return topped[static_cast<std::size_t>(a)] || topped[static_cast<std::size_t>(b)];
    });
}

DomainVerdict satisfies_disagreement(const Domain& d) {
    for (int i = 0; i < d.size(); ++i)
        for (int j : d.adjacent_to(i)) {
            if (j < i) continue;
            const Alt a = d.top(i), b = d.top(j);
            if (a == b) continue;
            bool has_ab = false, has_ba = false;
            for (int p = 0; p < d.size(); ++p) {
                const Alt t = d.top(p);
                if (t == a || t == b) continue;
                if (d.pref(p).prefers(a, b))
                    has_ab = true;
                else
                    has_ba = true;
            }
            if (!has_ab || !has_ba)
                return {false, DisagreementWitness{i, j, a, b, has_ab, has_ba}};
        }
    return {true, std::nullopt};
}

std::vector<PrefPath> all_simple_paths(const Domain& d, int from, int to, std::size_t limit) {
    d.pref(from);
    d.pref(to);
    std::vector<PrefPath> out;
    std::vector<int> stack{from};
    std::vector<bool> on(static_cast<std::size_t>(d.size()), false);
    on[static_cast<std::size_t>(from)] = true;
    auto dfs = [&](auto&& self, int u) -> void {
        if (out.size() >= limit) return;
        if (u == to) {
            out.push_back(PrefPath{stack});
            return;
        }
        for (int v : d.adjacent_to(u)) {
            if (on[static_cast<std::size_t>(v)]) continue;
            on[static_cast<std::size_t>(v)] = true;
            stack.push_back(v);
            self(self, v);
            stack.pop_back();
            on[static_cast<std::size_t>(v)] = false;
        }
    };
    if (from == to)
        out.push_back(PrefPath{{from}});
    else
        dfs(dfs, from);
    return out;
}

}  // namespace prefdom
