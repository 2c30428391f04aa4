#include "prefdom/scf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace prefdom {

namespace {

std::size_t power(std::size_t base, int exp) {
    std::size_t out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

SCFTable::SCFTable(Domain domain, int voters, std::vector<Alt> table)
    : domain_(std::move(domain)), n_(voters), table_(std::move(table)) {
    if (n_ < 2) throw std::invalid_argument("an scf needs at least 2 voters");
    const std::size_t expect = power(static_cast<std::size_t>(domain_.size()), n_);
    if (table_.size() != expect)
        throw std::invalid_argument("scf table has " + std::to_string(table_.size()) +
                                    " entries, expected " + std::to_string(expect));
    for (Alt a : table_)
        if (a < 0 || a >= domain_.alternatives())
            throw std::invalid_argument("scf table entry is not a valid alternative");
}

SCFTable SCFTable::from_function(Domain domain, int voters,
                                 const std::function<Alt(const Profile&)>& f) {
    if (voters < 2) throw std::invalid_argument("an scf needs at least 2 voters");
    const std::size_t total = power(static_cast<std::size_t>(domain.size()), voters);
    std::vector<Alt> table(total);
    Profile p;
    p.prefs.assign(static_cast<std::size_t>(voters), 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (int v = voters - 1; v >= 0; --v) {
            p.prefs[static_cast<std::size_t>(v)] =
                static_cast<int>(rest % static_cast<std::size_t>(domain.size()));
            rest /= static_cast<std::size_t>(domain.size());
        }
        table[idx] = f(p);
    }
    return SCFTable(std::move(domain), voters, std::move(table));
}

std::size_t SCFTable::encode(const Profile& p) const {
    if (static_cast<int>(p.prefs.size()) != n_)
        throw std::invalid_argument("profile has wrong voter count");
    std::size_t idx = 0;
    for (int v = 0; v < n_; ++v) {
        const int i = p.prefs[static_cast<std::size_t>(v)];
        domain_.pref(i);
        idx = idx * static_cast<std::size_t>(domain_.size()) + static_cast<std::size_t>(i);
    }
    return idx;
}

Profile SCFTable::decode(std::size_t idx) const {
    Profile p;
    p.prefs.assign(static_cast<std::size_t>(n_), 0);
    for (int v = n_ - 1; v >= 0; --v) {
        p.prefs[static_cast<std::size_t>(v)] =
            static_cast<int>(idx % static_cast<std::size_t>(domain_.size()));
        idx /= static_cast<std::size_t>(domain_.size());
    }
    return p;
}

Check<UnanimityWitness> check_unanimity(const SCFTable& f) {
    const Domain& d = f.domain();
    for (std::size_t idx = 0; idx < f.profile_count(); ++idx) {
        Profile p = f.decode(idx);
        const Alt t = d.top(p.prefs[0]);
        bool unanimous = true;
        for (int v = 1; v < f.voters() && unanimous; ++v)
            unanimous = d.top(p.prefs[static_cast<std::size_t>(v)]) == t;
        if (unanimous && f.at_index(idx) != t)
            return {false, UnanimityWitness{std::move(p), t, f.at_index(idx)}};
    }
    return {true, std::nullopt};
}

namespace {

// Scans profiles [begin, end) for the first manipulation, local or global.
std::optional<ManipulationWitness> scan_manipulations(const SCFTable& f, bool local_only,
                                                      std::size_t begin, std::size_t end) {
    const Domain& d = f.domain();
    for (std::size_t idx = begin; idx < end; ++idx) {
        Profile p = f.decode(idx);
        const Alt outcome = f.at_index(idx);
        for (int v = 0; v < f.voters(); ++v) {
            const int truth = p.prefs[static_cast<std::size_t>(v)];
            auto try_deviation = [&](int dev) -> bool {
                Profile q = p;
                q.prefs[static_cast<std::size_t>(v)] = dev;
                const Alt alt_outcome = f.at(q);
                return alt_outcome != outcome && d.pref(truth).prefers(alt_outcome, outcome);
            };
            if (local_only) {
                for (int dev : d.adjacent_to(truth))
                    if (try_deviation(dev))
                        return ManipulationWitness{v, std::move(p), dev, true};
            } else {
                for (int dev = 0; dev < d.size(); ++dev) {
                    if (dev == truth) continue;
                    if (try_deviation(dev))
                        return ManipulationWitness{v, std::move(p), dev, d.adjacent(truth, dev)};
                }
            }
        }
    }
    return std::nullopt;
}

Check<ManipulationWitness> check_incentives(const SCFTable& f, bool local_only, int threads) {
    const std::size_t total = f.profile_count();
    if (threads <= 1 || total < 64) {
        auto w = scan_manipulations(f, local_only, 0, total);
        if (w) return {false, std::move(w)};
        return {true, std::nullopt};
    }
    const int t = std::min<int>(threads, 32);
    std::vector<std::optional<ManipulationWitness>> results(static_cast<std::size_t>(t));
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + static_cast<std::size_t>(t) - 1) / static_cast<std::size_t>(t);
    for (int i = 0; i < t; ++i) {
        const std::size_t lo = static_cast<std::size_t>(i) * chunk;
        const std::size_t hi = std::min(total, lo + chunk);
        pool.emplace_back([&f, local_only, lo, hi, i, &results] {
            results[static_cast<std::size_t>(i)] = scan_manipulations(f, local_only, lo, hi);
        });
    }
    for (auto& th : pool) th.join();
    // Chunks are ordered, so the first non-empty result is the row-major first
    // witness: identical to the sequential scan.
    for (auto& r : results)
        if (r) return {false, std::move(r)};
    return {true, std::nullopt};
}

}  // namespace

Check<ManipulationWitness> check_local_sp(const SCFTable& f, int threads) {
    return check_incentives(f, true, threads);
}

Check<ManipulationWitness> check_sp(const SCFTable& f, int threads) {
    return check_incentives(f, false, threads);
}

Check<TopsOnlyWitness> check_tops_only(const SCFTable& f) {
    const Domain& d = f.domain();
    // Map each top vector to the first profile carrying it.
    const std::size_t total = f.profile_count();
    const std::size_t keys = [&] {
        std::size_t out = 1;
        for (int v = 0; v < f.voters(); ++v) out *= static_cast<std::size_t>(d.alternatives());
        return out;
    }();
    std::vector<std::size_t> first(keys, total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        Profile p = f.decode(idx);
        std::size_t key = 0;
        for (int v = 0; v < f.voters(); ++v)
            key = key * static_cast<std::size_t>(d.alternatives()) +
                  static_cast<std::size_t>(d.top(p.prefs[static_cast<std::size_t>(v)]));
        if (first[key] == total) {
            first[key] = idx;
        } else if (f.at_index(first[key]) != f.at_index(idx)) {
            return {false, TopsOnlyWitness{f.decode(first[key]), std::move(p)}};
        }
    }
    return {true, std::nullopt};
}

std::optional<int> check_dictatorship(const SCFTable& f) {
    const Domain& d = f.domain();
    for (int v = 0; v < f.voters(); ++v) {
        bool dict = true;
        for (std::size_t idx = 0; idx < f.profile_count() && dict; ++idx)
            dict = f.at_index(idx) == d.top(f.decode(idx).prefs[static_cast<std::size_t>(v)]);
        if (dict) return v;
    }
    return std::nullopt;
}

Check<DecisiveWitness> check_decisive(const SCFTable& f, int voter, Alt a) {
    if (voter < 0 || voter >= f.voters()) throw std::out_of_range("voter index out of range");
    if (a < 0 || a >= f.domain().alternatives())
        throw std::out_of_range("alternative index out of range");
    for (std::size_t idx = 0; idx < f.profile_count(); ++idx) {
        Profile p = f.decode(idx);
        if (f.domain().top(p.prefs[static_cast<std::size_t>(voter)]) != a) continue;
        if (f.at_index(idx) != a) return {false, DecisiveWitness{std::move(p)}};
    }
    return {true, std::nullopt};
}

namespace {

void check_voter_pair(int n, int v1, int v2) {
    if (n < 2) throw std::invalid_argument("construction needs at least 2 voters");
    if (v1 < 0 || v1 >= n || v2 < 0 || v2 >= n || v1 == v2)
        throw std::invalid_argument("construction needs two distinct voters in range");
}

}  // namespace

SCFTable construct_case1(const Domain& d, int base, int n, int v1, int v2) {
    check_voter_pair(n, v1, v2);
    d.pref(base);
    auto conn = is_connected(d);
    if (conn.holds)
        throw std::invalid_argument("case-1 construction requires a disconnected domain");
    const auto& comp = std::get<DisconnectedWitness>(*conn.witness).component;
    const int keep = comp[static_cast<std::size_t>(base)];
    return SCFTable::from_function(d, n, [&d, &comp, keep, v1, v2](const Profile& p) {
        const int r = p.prefs[static_cast<std::size_t>(v1)];
        if (comp[static_cast<std::size_t>(r)] == keep) return d.top(r);
        return d.top(p.prefs[static_cast<std::size_t>(v2)]);
    });
}

std::vector<int> eligible_case2_pstars(const Domain& d) {
    std::vector<int> out;
    for (int i = 0; i < d.size(); ++i) {
        auto nb = neighbours(d, tcc(d, i));
        if (nb.empty()) continue;
        std::set<Alt> tops;
        for (int j : nb) tops.insert(d.top(j));
        if (tops.size() == 1) out.push_back(i);
    }
    return out;
}

SCFTable construct_case2(const Domain& d, int pstar, int n, int v1, int v2) {
    check_voter_pair(n, v1, v2);
    d.pref(pstar);
    if (!is_connected(d).holds)
        throw std::invalid_argument("case-2 construction requires a connected domain");
    auto closure = tcc(d, pstar);
    auto nb = neighbours(d, closure);
    if (nb.empty())
        throw std::invalid_argument("case-2 construction: the closure of preference " +
                                    std::to_string(pstar + 1) + " has no neighbours");
    std::set<Alt> tops;
    for (int j : nb) tops.insert(d.top(j));
    if (tops.size() != 1)
        throw std::invalid_argument("case-2 construction: the closure of preference " +
                                    std::to_string(pstar + 1) +
                                    " has neighbours with two distinct tops");
    const Alt a = d.top(pstar);
    const Alt b = *tops.begin();
    std::vector<bool> in_closure(static_cast<std::size_t>(d.size()), false);
    for (int i : closure) in_closure[static_cast<std::size_t>(i)] = true;
    return SCFTable::from_function(d, n, [&d, &in_closure, a, b, v1, v2](const Profile& p) {
        const int r1 = p.prefs[static_cast<std::size_t>(v1)];
        if (!in_closure[static_cast<std::size_t>(r1)]) return d.top(r1);
        return d.pref(p.prefs[static_cast<std::size_t>(v2)]).prefers(a, b) ? a : b;
    });
}

SCFTable clone_reduce(const SCFTable& f) {
    if (f.voters() < 3) throw std::invalid_argument("clone_reduce needs at least 3 voters");
    return SCFTable::from_function(f.domain(), f.voters() - 1, [&f](const Profile& p) {
        Profile full;
        full.prefs.reserve(static_cast<std::size_t>(f.voters()));
        full.prefs.push_back(p.prefs[0]);
        full.prefs.push_back(p.prefs[0]);
        for (std::size_t v = 1; v < p.prefs.size(); ++v) full.prefs.push_back(p.prefs[v]);
        return f.at(full);
    });
}

SCFTable two_voter_slice(const SCFTable& f, std::span<const int> others) {
    if (f.voters() < 3) throw std::invalid_argument("two_voter_slice needs at least 3 voters");
    if (static_cast<int>(others.size()) != f.voters() - 2)
        throw std::invalid_argument("two_voter_slice needs one fixed preference per voter 3..n");
    std::vector<int> tail(others.begin(), others.end());
    for (int i : tail) f.domain().pref(i);
    return SCFTable::from_function(f.domain(), 2, [&f, tail](const Profile& p) {
        Profile full;
        full.prefs = {p.prefs[0], p.prefs[1]};
        full.prefs.insert(full.prefs.end(), tail.begin(), tail.end());
        return f.at(full);
    });
}

SCFTable restrict_to(const SCFTable& f, const Domain& sub) {
    if (sub.alts() != f.domain().alts())
        throw std::invalid_argument("restriction requires the same alternative set");
    std::vector<int> to_parent;
    to_parent.reserve(static_cast<std::size_t>(sub.size()));
    for (int i = 0; i < sub.size(); ++i) {
        auto idx = f.domain().index_of(sub.pref(i));
        if (!idx)
            throw std::invalid_argument("restriction: preference " + std::to_string(i + 1) +
                                        " is not in the parent domain");
        to_parent.push_back(*idx);
    }
    return SCFTable::from_function(sub, f.voters(), [&f, &to_parent](const Profile& p) {
        Profile parent;
        parent.prefs.reserve(p.prefs.size());
        for (int i : p.prefs) parent.prefs.push_back(to_parent[static_cast<std::size_t>(i)]);
        return f.at(parent);
    });
}

}  // namespace prefdom
