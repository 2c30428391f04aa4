#include "prefdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace prefdom {

bool InducedGraph::has_edge(Alt a, Alt b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

std::vector<Alt> InducedGraph::adjacent_to(Alt a) const {
    std::vector<Alt> out;
    for (auto [x, y] : edges) {
        if (x == a) out.push_back(y);
        if (y == a) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

InducedGraph induced_graph(const Domain& d) {
    InducedGraph g{d.alts(), {}, {}};
    for (int i = 0; i < d.size(); ++i)
        for (int j : d.adjacent_to(i)) {
            if (j < i) continue;
            const Alt a = d.top(i), b = d.top(j);
            if (a == b) continue;
            auto e = std::minmax(a, b);
            g.edge_witness.emplace(std::make_pair(e.first, e.second), std::make_pair(i, j));
        }
    for (const auto& [e, w] : g.edge_witness) g.edges.push_back(e);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

int degree(const InducedGraph& g, Alt a) {
    g.alts.label(a);
    int deg = 0;
    for (auto [x, y] : g.edges) deg += (x == a || y == a) ? 1 : 0;
    return deg;
}

std::vector<std::vector<Alt>> all_cycles(const InducedGraph& g) {
    const int m = g.vertex_count();
    std::vector<std::vector<Alt>> adj(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v) adj[static_cast<std::size_t>(v)] = g.adjacent_to(v);
    std::vector<std::vector<Alt>> cycles;
    std::vector<Alt> path;
    std::vector<bool> on(static_cast<std::size_t>(m), false);
    // Canonical: cycles start at their smallest vertex and take the direction
    // whose second vertex is smaller than its last.
    auto dfs = [&](auto&& self, Alt start, Alt u) -> void {
        for (Alt v : adj[static_cast<std::size_t>(u)]) {
            if (v == start && path.size() >= 3) {
                if (path[1] < path.back()) cycles.push_back(path);
            } else if (v > start && !on[static_cast<std::size_t>(v)]) {
                on[static_cast<std::size_t>(v)] = true;
                path.push_back(v);
                self(self, start, v);
                path.pop_back();
                on[static_cast<std::size_t>(v)] = false;
            }
        }
    };
    for (Alt s = 0; s < m; ++s) {
        path = {s};
        on.assign(static_cast<std::size_t>(m), false);
        on[static_cast<std::size_t>(s)] = true;
        dfs(dfs, s, s);
    }
    return cycles;
}

std::optional<std::vector<Alt>> find_cycle_through(const InducedGraph& g, Alt a) {
    g.alts.label(a);
    for (const auto& cyc : all_cycles(g))
        if (std::find(cyc.begin(), cyc.end(), a) != cyc.end()) return cyc;
    return std::nullopt;
}

namespace {

std::vector<int> graph_components(const InducedGraph& g) {
    const int m = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(m), -1);
    int next = 0;
    for (Alt s = 0; s < m; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        comp[static_cast<std::size_t>(s)] = next;
        std::deque<Alt> q{s};
        while (!q.empty()) {
            Alt u = q.front();
            q.pop_front();
            for (Alt v : g.adjacent_to(u))
                if (comp[static_cast<std::size_t>(v)] < 0) {
                    comp[static_cast<std::size_t>(v)] = next;
                    q.push_back(v);
                }
        }
        ++next;
    }
    return comp;
}

// All simple paths from v, as vertex sequences starting at v.
std::vector<std::vector<Alt>> paths_from(const InducedGraph& g, Alt v) {
    std::vector<std::vector<Alt>> out;
    std::vector<Alt> path{v};
    std::vector<bool> on(static_cast<std::size_t>(g.vertex_count()), false);
    on[static_cast<std::size_t>(v)] = true;
    auto dfs = [&](auto&& self, Alt u) -> void {
        out.push_back(path);
        for (Alt w : g.adjacent_to(u)) {
            if (on[static_cast<std::size_t>(w)]) continue;
            on[static_cast<std::size_t>(w)] = true;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            on[static_cast<std::size_t>(w)] = false;
        }
    };
    dfs(dfs, v);
    return out;
}

}  // namespace

GraphStructureReport graph_structure_check(const Domain& d) {
    const InducedGraph g = induced_graph(d);
    const int m = g.vertex_count();
    GraphStructureReport report;

    auto comp = graph_components(g);
    report.connected = true;
    for (Alt v = 1; v < m; ++v)
        if (comp[static_cast<std::size_t>(v)] != comp[0]) {
            report.connected = false;
            report.disconnected = GraphDisconnectedWitness{0, v};
            break;
        }

    LowDegreeWitness low;
    for (Alt v = 0; v < m; ++v)
        if (degree(g, v) < 2) low.vertices.push_back(v);
    report.min_degree_ok = low.vertices.empty();
    if (!report.min_degree_ok) report.low_degree = std::move(low);

    const auto cycles = all_cycles(g);
    report.has_cycle = !cycles.empty();
    if (!report.has_cycle) {
        int comps = 1 + *std::max_element(comp.begin(), comp.end());
        report.acyclic = AcyclicWitness{static_cast<int>(g.edges.size()), comps};
    }

    std::vector<bool> on_cycle(static_cast<std::size_t>(m), false);
    for (const auto& cyc : cycles)
        for (Alt v : cyc) on_cycle[static_cast<std::size_t>(v)] = true;

    NoBridgePathWitness stuck;
    for (Alt v = 0; v < m; ++v) {
        if (on_cycle[static_cast<std::size_t>(v)]) continue;
        // Look for two arms out of v, disjoint except at v, whose far ends lie
        // on vertex-disjoint cycles.
        bool found = false;
        auto arms = paths_from(g, v);
        for (std::size_t i = 0; i < arms.size() && !found; ++i) {
            if (arms[i].size() < 2) continue;
            std::set<Alt> left(arms[i].begin(), arms[i].end());
            for (std::size_t j = 0; j < arms.size() && !found; ++j) {
                if (arms[j].size() < 2) continue;
                bool overlap = false;
                for (Alt x : arms[j])
                    if (x != v && left.count(x)) {
                        overlap = true;
                        break;
                    }
                if (overlap) continue;
                const Alt x = arms[i].back(), y = arms[j].back();
                for (const auto& c1 : cycles) {
                    if (std::find(c1.begin(), c1.end(), x) == c1.end()) continue;
                    std::set<Alt> c1set(c1.begin(), c1.end());
                    for (const auto& c2 : cycles) {
                        if (std::find(c2.begin(), c2.end(), y) == c2.end()) continue;
                        bool disjoint = true;
                        for (Alt z : c2)
                            if (c1set.count(z)) {
                                disjoint = false;
                                break;
                            }
                        if (disjoint) {
                            found = true;
                            break;
                        }
                    }
                    if (found) break;
                }
            }
        }
        if (!found) stuck.vertices.push_back(v);
    }
    report.bridge_paths_ok = stuck.vertices.empty();
    if (!report.bridge_paths_ok) report.no_bridge = std::move(stuck);
    return report;
}

std::vector<Alt> project_tops_path(const Domain& d, const PrefPath& path, Alt a, Alt b) {
    if (a == b) throw std::invalid_argument("projection requires two distinct alternatives");
    if (!is_valid_path(d, path)) throw std::invalid_argument("not a valid path in the domain");
    const auto& idx = path.indices;
    if (d.top(idx.front()) != a || d.top(idx.back()) != b)
        throw std::invalid_argument("path endpoints must top the requested alternatives");
    // Walk the tops sequence, always jumping to the last occurrence of the
    // current top before stepping to the next distinct one.
    std::size_t cur = 0;
    for (std::size_t t = 0; t < idx.size(); ++t)
        if (d.top(idx[t]) == a) cur = t;
    std::vector<Alt> out{a};
    while (d.top(idx[cur]) != b) {
        const Alt next = d.top(idx[cur + 1]);
        std::size_t last = cur + 1;
        for (std::size_t t = cur + 1; t < idx.size(); ++t)
            if (d.top(idx[t]) == next) last = t;
        cur = last;
        out.push_back(next);
    }
    return out;
}

std::string to_edge_list(const InducedGraph& g) {
    std::vector<std::string> lines;
    for (auto [a, b] : g.edges) {
        auto pair = std::minmax(g.alts.label(a), g.alts.label(b));
        lines.push_back(pair.first + " " + pair.second + "\n");
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& line : lines) out += line;
    return out;
}

}  // namespace prefdom
