#include "prefdom/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <variant>

namespace prefdom {

namespace {

constexpr int kMaxAlternatives = 16;

using Mask = std::uint32_t;

Mask bit(int v) { return Mask{1} << v; }

struct Con {
    int x = 0, y = 0;
    std::array<Mask, kMaxAlternatives> sxy{};  // sxy[v]: y-values supporting x=v
    std::array<Mask, kMaxAlternatives> syx{};  // syx[w]: x-values supporting y=w
};

struct DictLayer {
    int voter;
};
struct PairsLayer {
    std::vector<std::pair<int, int>> pairs;  // same-top-vector variable pairs
};
using Layer = std::variant<PairsLayer, DictLayer>;

enum class Res { found, exhausted, timeout };

struct Engine {
    int m = 0;
    int num_vars = 0;
    Mask full_mask = 0;
    std::vector<Con> cons;
    std::size_t base_cons = 0;
    std::vector<std::vector<int>> watch;  // var -> constraint ids
    std::vector<std::vector<int>> var_top;  // [voter][var] -> that voter's top

    std::vector<Mask> dom;
    std::vector<std::pair<int, Mask>> trail;
    std::uint64_t nodes = 0, props = 0, max_nodes = 0;
    std::vector<int> val_order;
    std::vector<Mask> solution;

    std::deque<std::pair<int, int>> queue;  // (constraint id, side: 0 revise x, 1 revise y)

    std::size_t mark() const { return trail.size(); }

    void undo(std::size_t to) {
        while (trail.size() > to) {
            auto [var, old] = trail.back();
            trail.pop_back();
            dom[static_cast<std::size_t>(var)] = old;
        }
    }

    bool shrink(int var, Mask mask) {
        Mask& cur = dom[static_cast<std::size_t>(var)];
        const Mask next = cur & mask;
        if (next == cur) return next != 0;
        trail.emplace_back(var, cur);
        cur = next;
        if (next == 0) return false;
        enqueue_var(var);
        return true;
    }

    void enqueue_var(int var) {
        for (int c : watch[static_cast<std::size_t>(var)]) {
            const Con& con = cons[static_cast<std::size_t>(c)];
            // a change at one endpoint requires revising the other
            if (con.x == var) queue.emplace_back(c, 1);
            if (con.y == var) queue.emplace_back(c, 0);
        }
    }

    bool propagate() {
        while (!queue.empty()) {
            auto [c, side] = queue.front();
            queue.pop_front();
            ++props;
            const Con& con = cons[static_cast<std::size_t>(c)];
            const int target = side == 0 ? con.x : con.y;
            const int other = side == 0 ? con.y : con.x;
            const auto& supp = side == 0 ? con.sxy : con.syx;
            const Mask other_dom = dom[static_cast<std::size_t>(other)];
            Mask keep = 0;
            Mask cur = dom[static_cast<std::size_t>(target)];
            for (Mask rest = cur; rest;) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (supp[static_cast<std::size_t>(v)] & other_dom) keep |= bit(v);
            }
            if (keep != cur) {
                if (!shrink(target, keep)) {
                    queue.clear();
                    return false;
                }
            }
        }
        return true;
    }

    void seed_all() {
        for (std::size_t c = 0; c < cons.size(); ++c) {
            queue.emplace_back(static_cast<int>(c), 0);
            queue.emplace_back(static_cast<int>(c), 1);
        }
    }

    void push_con(Con con) {
        watch[static_cast<std::size_t>(con.x)].push_back(static_cast<int>(cons.size()));
        watch[static_cast<std::size_t>(con.y)].push_back(static_cast<int>(cons.size()));
        cons.push_back(std::move(con));
    }

    void pop_cons(std::size_t to) {
        while (cons.size() > to) {
            const Con& con = cons.back();
            watch[static_cast<std::size_t>(con.x)].pop_back();
            watch[static_cast<std::size_t>(con.y)].pop_back();
            cons.pop_back();
        }
    }

    Res dfs() {
        int var = -1, best = kMaxAlternatives + 1;
        for (int i = 0; i < num_vars; ++i) {
            const int count = std::popcount(dom[static_cast<std::size_t>(i)]);
            if (count >= 2 && count < best) {
                best = count;
                var = i;
                if (count == 2) break;
            }
        }
        if (var < 0) {
            solution = dom;
            return Res::found;
        }
        for (int val : val_order) {
            if (!(dom[static_cast<std::size_t>(var)] & bit(val))) continue;
            if (++nodes > max_nodes) return Res::timeout;
            const std::size_t mk = mark();
            if (shrink(var, bit(val)) && propagate()) {
                const Res r = dfs();
                if (r != Res::exhausted) return r;
            } else {
                queue.clear();
            }
            undo(mk);
        }
        return Res::exhausted;
    }

    Res solve(std::span<const Layer> layers) {
        if (layers.empty()) return dfs();
        const Layer& layer = layers.front();
        const auto rest = layers.subspan(1);
        if (std::holds_alternative<DictLayer>(layer))
            return solve_dict(std::get<DictLayer>(layer), rest);
        return solve_pairs(std::get<PairsLayer>(layer), rest);
    }

    // Branches over the first profile where this voter's top is refused, with
    // earlier profiles forced to the voter's top so branches partition the
    // space.
    Res solve_dict(const DictLayer& layer, std::span<const Layer> rest) {
        const auto& tops = var_top[static_cast<std::size_t>(layer.voter)];
        for (int var = 0; var < num_vars; ++var)
            if (!(dom[static_cast<std::size_t>(var)] & bit(tops[static_cast<std::size_t>(var)])))
                return solve(rest);  // some completion already refuses the top
        const std::size_t layer_mark = mark();
        for (int var = 0; var < num_vars; ++var) {
            const Mask top = bit(tops[static_cast<std::size_t>(var)]);
            {
                if (++nodes > max_nodes) {
                    undo(layer_mark);
                    return Res::timeout;
                }
                const std::size_t mk = mark();
                Res r = Res::exhausted;
                if (shrink(var, ~top) && propagate())
                    r = solve(rest);
                else
                    queue.clear();
                undo(mk);
                if (r != Res::exhausted) {
                    undo(layer_mark);
                    return r;
                }
            }
            if (!(shrink(var, top) && propagate())) {
                queue.clear();
                undo(layer_mark);
                return Res::exhausted;
            }
        }
        undo(layer_mark);
        return Res::exhausted;
    }

    // Branches over the first same-tops pair forced to differ, with earlier
    // pairs forced equal.
    Res solve_pairs(const PairsLayer& layer, std::span<const Layer> rest) {
        for (auto [p, q] : layer.pairs)
            if (!(dom[static_cast<std::size_t>(p)] & dom[static_cast<std::size_t>(q)]))
                return solve(rest);
        const std::size_t layer_mark = mark();
        const std::size_t layer_cons = cons.size();
        for (auto [p, q] : layer.pairs) {
            {
                if (++nodes > max_nodes) {
                    undo(layer_mark);
                    pop_cons(layer_cons);
                    return Res::timeout;
                }
                const std::size_t mk = mark();
                const std::size_t cmk = cons.size();
                push_relation(p, q, /*equal=*/false);
                Res r = Res::exhausted;
                if (propagate())
                    r = solve(rest);
                else
                    queue.clear();
                undo(mk);
                pop_cons(cmk);
                if (r != Res::exhausted) {
                    undo(layer_mark);
                    pop_cons(layer_cons);
                    return r;
                }
            }
            push_relation(p, q, /*equal=*/true);
            if (!propagate()) {
                queue.clear();
                undo(layer_mark);
                pop_cons(layer_cons);
                return Res::exhausted;
            }
        }
        undo(layer_mark);
        pop_cons(layer_cons);
        return Res::exhausted;
    }

    void push_relation(int p, int q, bool equal) {
        Con con;
        con.x = p;
        con.y = q;
        for (int v = 0; v < m; ++v) {
            con.sxy[static_cast<std::size_t>(v)] = equal ? bit(v) : (full_mask & ~bit(v));
            con.syx[static_cast<std::size_t>(v)] = equal ? bit(v) : (full_mask & ~bit(v));
        }
        const int id = static_cast<int>(cons.size());
        push_con(std::move(con));
        queue.emplace_back(id, 0);
        queue.emplace_back(id, 1);
    }
};

// Strictly-below / strictly-above bitmasks per (preference, alternative).
struct RankMasks {
    std::vector<Mask> below, above;
    int m;
    Mask b(int pref, int alt) const {
        return below[static_cast<std::size_t>(pref * m + alt)];
    }
    Mask a(int pref, int alt) const {
        return above[static_cast<std::size_t>(pref * m + alt)];
    }
};

RankMasks rank_masks(const Domain& d) {
    const int m = d.alternatives();
    RankMasks out{{}, {}, m};
    out.below.assign(static_cast<std::size_t>(d.size() * m), 0);
    out.above.assign(static_cast<std::size_t>(d.size() * m), 0);
    for (int i = 0; i < d.size(); ++i) {
        Mask seen = 0;
        for (Rank k = 1; k <= m; ++k) {
            const Alt a = d.pref(i).kth(k);
            out.above[static_cast<std::size_t>(i * m + a)] = seen;
            seen |= bit(a);
        }
        for (Alt a = 0; a < m; ++a)
            out.below[static_cast<std::size_t>(i * m + a)] =
                ~(out.above[static_cast<std::size_t>(i * m + a)] | bit(a)) & ((Mask{1} << m) - 1);
    }
    return out;
}

std::size_t power(std::size_t base, int exp) {
    std::size_t out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

std::vector<int> decode_var(std::size_t idx, int n, int radix) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int v = n - 1; v >= 0; --v) {
        out[static_cast<std::size_t>(v)] = static_cast<int>(idx % static_cast<std::size_t>(radix));
        idx /= static_cast<std::size_t>(radix);
    }
    return out;
}

struct Instance {
    Engine engine;
    bool collapsed = false;
    std::vector<Alt> tops;                   // collapsed: distinct tops, ascending
    std::vector<std::vector<int>> by_top;    // collapsed: prefs per top entry
};

Instance build_instance(const Domain& d, int n, const AxiomBundle& bundle,
                        const SearchBudget& budget) {
    const int m = d.alternatives();
    if (m > kMaxAlternatives)
        throw std::invalid_argument("search supports at most " +
                                    std::to_string(kMaxAlternatives) + " alternatives");
    Instance inst;
    inst.collapsed = bundle.collapsed();
    Engine& e = inst.engine;
    e.m = m;
    e.full_mask = (Mask{1} << m) - 1;
    e.max_nodes = budget.max_nodes;
    e.val_order.resize(static_cast<std::size_t>(m));
    std::iota(e.val_order.begin(), e.val_order.end(), 0);

    const RankMasks masks = rank_masks(d);
    const bool local = bundle.incentive == AxiomBundle::Incentive::local_sp;
    const bool any_incentive = bundle.incentive != AxiomBundle::Incentive::none;

    if (!inst.collapsed) {
        const int k = d.size();
        const std::size_t total = power(static_cast<std::size_t>(k), n);
        if (total > 2'000'000 ||
            total * static_cast<std::size_t>(n) * static_cast<std::size_t>(k) > 20'000'000)
            throw std::invalid_argument("search instance too large");
        e.num_vars = static_cast<int>(total);
        e.dom.assign(total, e.full_mask);
        e.watch.assign(total, {});
        e.var_top.assign(static_cast<std::size_t>(n), std::vector<int>(total, 0));
        for (std::size_t idx = 0; idx < total; ++idx) {
            const auto prof = decode_var(idx, n, k);
            bool unanimous = true;
            for (int v = 0; v < n; ++v) {
                e.var_top[static_cast<std::size_t>(v)][idx] = d.top(prof[static_cast<std::size_t>(v)]);
                unanimous = unanimous && d.top(prof[static_cast<std::size_t>(v)]) == d.top(prof[0]);
            }
            if (bundle.require_unanimity && unanimous)
                e.dom[idx] = bit(d.top(prof[0]));
            if (!any_incentive) continue;
            // one constraint per (voter, higher report); lower-index partner owns it
            for (int v = 0; v < n; ++v) {
                const int r = prof[static_cast<std::size_t>(v)];
                const auto deviations = local ? d.adjacent_to(r) : [&] {
                    std::vector<int> all;
                    for (int x = 0; x < k; ++x)
                        if (x != r) all.push_back(x);
                    return all;
                }();
                std::size_t stride = 1;
                for (int w = n - 1; w > v; --w) stride *= static_cast<std::size_t>(k);
                for (int r2 : deviations) {
                    if (r2 < r) continue;
                    const std::size_t other =
                        idx + (static_cast<std::size_t>(r2) - static_cast<std::size_t>(r)) * stride;
                    Con con;
                    con.x = static_cast<int>(idx);
                    con.y = static_cast<int>(other);
                    for (int val = 0; val < m; ++val) {
                        con.sxy[static_cast<std::size_t>(val)] =
                            bit(val) | (masks.b(r, val) & masks.a(r2, val));
                        con.syx[static_cast<std::size_t>(val)] =
                            bit(val) | (masks.a(r, val) & masks.b(r2, val));
                    }
                    e.push_con(std::move(con));
                }
            }
        }
    } else {
        std::set<Alt> top_set;
        for (int i = 0; i < d.size(); ++i) top_set.insert(d.top(i));
        inst.tops.assign(top_set.begin(), top_set.end());
        const int t = static_cast<int>(inst.tops.size());
        inst.by_top.assign(static_cast<std::size_t>(t), {});
        for (int i = 0; i < d.size(); ++i) {
            const auto pos = std::lower_bound(inst.tops.begin(), inst.tops.end(), d.top(i)) -
                             inst.tops.begin();
            inst.by_top[static_cast<std::size_t>(pos)].push_back(i);
        }
        const std::size_t total = power(static_cast<std::size_t>(t), n);
        if (total > 2'000'000) throw std::invalid_argument("search instance too large");
        e.num_vars = static_cast<int>(total);
        e.dom.assign(total, e.full_mask);
        e.watch.assign(total, {});
        e.var_top.assign(static_cast<std::size_t>(n), std::vector<int>(total, 0));
        for (std::size_t idx = 0; idx < total; ++idx) {
            const auto vec = decode_var(idx, n, t);
            bool unanimous = true;
            for (int v = 0; v < n; ++v) {
                e.var_top[static_cast<std::size_t>(v)][idx] =
                    inst.tops[static_cast<std::size_t>(vec[static_cast<std::size_t>(v)])];
                unanimous = unanimous && vec[static_cast<std::size_t>(v)] == vec[0];
            }
            if (bundle.require_unanimity && unanimous)
                e.dom[idx] = bit(inst.tops[static_cast<std::size_t>(vec[0])]);
            if (!any_incentive) continue;
            for (int v = 0; v < n; ++v) {
                const int ti = vec[static_cast<std::size_t>(v)];
                std::size_t stride = 1;
                for (int w = n - 1; w > v; --w) stride *= static_cast<std::size_t>(t);
                for (int tj = ti + 1; tj < t; ++tj) {
                    // intersect supports over all representative report pairs
                    std::array<Mask, kMaxAlternatives> sxy{}, syx{};
                    for (int val = 0; val < m; ++val) {
                        sxy[static_cast<std::size_t>(val)] = e.full_mask;
                        syx[static_cast<std::size_t>(val)] = e.full_mask;
                    }
                    bool any_rep = false;
                    for (int r : inst.by_top[static_cast<std::size_t>(ti)])
                        for (int r2 : inst.by_top[static_cast<std::size_t>(tj)]) {
                            if (local && !d.adjacent(r, r2)) continue;
                            any_rep = true;
                            for (int val = 0; val < m; ++val) {
                                sxy[static_cast<std::size_t>(val)] &= masks.b(r, val) & masks.a(r2, val);
                                syx[static_cast<std::size_t>(val)] &= masks.a(r, val) & masks.b(r2, val);
                            }
                        }
                    if (!any_rep) continue;
                    Con con;
                    con.x = static_cast<int>(idx);
                    con.y = static_cast<int>(idx + (static_cast<std::size_t>(tj) -
                                                    static_cast<std::size_t>(ti)) *
                                                       stride);
                    for (int val = 0; val < m; ++val) {
                        con.sxy[static_cast<std::size_t>(val)] = bit(val) | sxy[static_cast<std::size_t>(val)];
                        con.syx[static_cast<std::size_t>(val)] = bit(val) | syx[static_cast<std::size_t>(val)];
                    }
                    e.push_con(std::move(con));
                }
            }
        }
    }
    e.base_cons = e.cons.size();
    return inst;
}

SCFTable expand_solution(const Domain& d, int n, const Instance& inst) {
    const Engine& e = inst.engine;
    std::vector<Alt> values(static_cast<std::size_t>(e.num_vars));
    for (int i = 0; i < e.num_vars; ++i) {
        const Mask mask = e.solution[static_cast<std::size_t>(i)];
        if (std::popcount(mask) != 1) throw std::logic_error("search produced a partial table");
        values[static_cast<std::size_t>(i)] = std::countr_zero(mask);
    }
    if (!inst.collapsed) return SCFTable(d, n, std::move(values));
    const int t = static_cast<int>(inst.tops.size());
    std::vector<int> top_pos(static_cast<std::size_t>(d.alternatives()), -1);
    for (int i = 0; i < t; ++i) top_pos[static_cast<std::size_t>(inst.tops[static_cast<std::size_t>(i)])] = i;
    return SCFTable::from_function(d, n, [&](const Profile& p) {
        std::size_t idx = 0;
        for (int i : p.prefs)
            idx = idx * static_cast<std::size_t>(t) +
                  static_cast<std::size_t>(top_pos[static_cast<std::size_t>(d.top(i))]);
        return values[idx];
    });
}

void verify_found(const SCFTable& table, const AxiomBundle& bundle) {
    if (bundle.require_unanimity && !check_unanimity(table).holds)
        throw std::logic_error("search soundness violation: found table fails unanimity");
    if (bundle.incentive == AxiomBundle::Incentive::local_sp && !check_local_sp(table).holds)
        throw std::logic_error("search soundness violation: found table fails local strategy-proofness");
    if (bundle.incentive == AxiomBundle::Incentive::sp && !check_sp(table).holds)
        throw std::logic_error("search soundness violation: found table fails strategy-proofness");
    if (bundle.require_tops_only && !check_tops_only(table).holds)
        throw std::logic_error("search soundness violation: found table fails tops-onlyness");
    if (bundle.forbid_tops_only && check_tops_only(table).holds)
        throw std::logic_error("search soundness violation: found table is tops-only");
    if (bundle.forbid_dictatorship && check_dictatorship(table).has_value())
        throw std::logic_error("search soundness violation: found table is dictatorial");
}

}  // namespace

SearchOutcome search_scf(const Domain& d, int n, const AxiomBundle& bundle,
                         const SearchBudget& budget, std::optional<std::uint64_t> seed) {
    if (n < 2) throw std::invalid_argument("search needs at least 2 voters");
    if (budget.max_nodes == 0) throw std::invalid_argument("search budget must be positive");
    if (bundle.require_tops_only && bundle.forbid_tops_only)
        throw std::invalid_argument("require_tops_only and forbid_tops_only are exclusive");
    if (bundle.collapsed() && bundle.forbid_tops_only)
        throw std::invalid_argument("cannot forbid tops-onlyness in a tops-only search");

    Instance inst = build_instance(d, n, bundle, budget);
    Engine& e = inst.engine;

    std::string ordering = "mrv-lowest-var/values-ascending/layers:tops-pairs,dict-by-voter";
    if (seed) {
        std::mt19937_64 rng(*seed);
        std::shuffle(e.val_order.begin(), e.val_order.end(), rng);
        ordering = "mrv-lowest-var/values-seeded-" + std::to_string(*seed) +
                   "/layers:tops-pairs,dict-by-voter";
    }

    auto outcome = [&](SearchStatus status) {
        SearchOutcome out;
        out.status = status;
        out.certificate = SearchCertificate{e.nodes, e.props, ordering, inst.collapsed};
        return out;
    };

    e.seed_all();
    if (!e.propagate()) return outcome(SearchStatus::exhausted);

    std::vector<Layer> layers;
    if (bundle.forbid_tops_only) {
        // group full-profile variables by top vector
        std::map<std::vector<int>, std::vector<int>> groups;
        for (int var = 0; var < e.num_vars; ++var) {
            std::vector<int> key(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                key[static_cast<std::size_t>(v)] = e.var_top[static_cast<std::size_t>(v)][static_cast<std::size_t>(var)];
            groups[std::move(key)].push_back(var);
        }
        PairsLayer pl;
        for (const auto& [key, vars] : groups)
            for (std::size_t i = 0; i < vars.size(); ++i)
                for (std::size_t j = i + 1; j < vars.size(); ++j)
                    pl.pairs.emplace_back(vars[i], vars[j]);
        std::sort(pl.pairs.begin(), pl.pairs.end());
        layers.emplace_back(std::move(pl));
    }
    if (bundle.forbid_dictatorship)
        for (int v = 0; v < n; ++v) layers.emplace_back(DictLayer{v});

    const Res r = e.solve(layers);
    if (r == Res::timeout) return outcome(SearchStatus::timeout);
    if (r == Res::exhausted) return outcome(SearchStatus::exhausted);
    SearchOutcome out = outcome(SearchStatus::found);
    out.table = expand_solution(d, n, inst);
    verify_found(*out.table, bundle);
    return out;
}

LTopsOnlyResult is_l_tops_only(const Domain& d, int n, const SearchBudget& budget) {
    AxiomBundle bundle;
    bundle.require_unanimity = true;
    bundle.incentive = AxiomBundle::Incentive::local_sp;
    bundle.forbid_tops_only = true;
    auto outcome = search_scf(d, n, bundle, budget);
    LTopsOnlyResult result;
    result.certificate = outcome.certificate;
    switch (outcome.status) {
        case SearchStatus::exhausted: result.verdict = Tri::holds; break;
        case SearchStatus::found:
            result.verdict = Tri::fails;
            result.counterexample = std::move(outcome.table);
            break;
        case SearchStatus::timeout: result.verdict = Tri::undecided; break;
    }
    return result;
}

RegionReport classify_domain(const Domain& d, int n, const SearchBudget& budget) {
    if (d.alternatives() < 3)
        throw std::invalid_argument("classification requires m >= 3 alternatives");
    RegionReport report;
    report.minimally_rich = is_minimally_rich(d).holds;
    report.cdn = is_cdn(d).holds;
    report.property_p = satisfies_property_p(d).holds;
    report.scd = satisfies_scd(d).holds;
    report.disagreement = satisfies_disagreement(d).holds;

    if (!report.minimally_rich) {
        // The dictatorship classes contain minimally rich domains only.
        report.l_tops_only = Tri::fails;
        report.ldict = Tri::fails;
        report.dict = Tri::fails;
        return report;
    }

    auto lt = is_l_tops_only(d, n, budget);
    report.l_tops_only = lt.verdict;
    report.l_tops_only_certificate = lt.certificate;
    report.l_tops_only_counterexample = std::move(lt.counterexample);

    AxiomBundle ldict_bundle;
    ldict_bundle.require_unanimity = true;
    ldict_bundle.incentive = AxiomBundle::Incentive::local_sp;
    ldict_bundle.forbid_dictatorship = true;
    auto ldict_search = search_scf(d, n, ldict_bundle, budget);
    report.ldict_certificate = ldict_search.certificate;
    Tri ldict_direct = Tri::undecided;
    if (ldict_search.status == SearchStatus::exhausted) ldict_direct = Tri::holds;
    if (ldict_search.status == SearchStatus::found) {
        ldict_direct = Tri::fails;
        report.ldict_counterexample = std::move(ldict_search.table);
    }

    // Primary route: the cdn/l-tops-only intersection; the direct search is a
    // consistency check on top.
    Tri combined = Tri::undecided;
    if (!report.cdn || report.l_tops_only == Tri::fails)
        combined = Tri::fails;
    else if (report.cdn && report.l_tops_only == Tri::holds)
        combined = Tri::holds;
    if (combined != Tri::undecided && ldict_direct != Tri::undecided && combined != ldict_direct)
        throw std::logic_error(
            "classification inconsistency: the cdn/l-tops-only intersection disagrees with the "
            "direct dictatorship search");
    report.ldict = combined != Tri::undecided ? combined : ldict_direct;

    AxiomBundle dict_bundle;
    dict_bundle.require_unanimity = true;
    dict_bundle.incentive = AxiomBundle::Incentive::sp;
    dict_bundle.forbid_dictatorship = true;
    auto dict_search = search_scf(d, n, dict_bundle, budget);
    report.dict_certificate = dict_search.certificate;
    if (dict_search.status == SearchStatus::exhausted) report.dict = Tri::holds;
    if (dict_search.status == SearchStatus::found) {
        report.dict = Tri::fails;
        report.dict_counterexample = std::move(dict_search.table);
    }

    report.conjecture_relevant = report.cdn && report.l_tops_only == Tri::undecided;
    return report;
}

}  // namespace prefdom
