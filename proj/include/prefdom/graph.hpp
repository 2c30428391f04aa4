#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prefdom/domain.hpp"

namespace prefdom {

/// Undirected graph on alternatives induced by a domain: (a,b) is an edge iff
/// some adjacent preference pair swaps tops a and b. Each edge carries a
/// witnessing preference pair.
struct InducedGraph {
    AlternativeSet alts;
    std::vector<std::pair<Alt, Alt>> edges;  // a < b, sorted
    std::map<std::pair<Alt, Alt>, std::pair<int, int>> edge_witness;

    bool has_edge(Alt a, Alt b) const;
    std::vector<Alt> adjacent_to(Alt a) const;  // ascending
    int vertex_count() const { return alts.size(); }
};

InducedGraph induced_graph(const Domain& d);

int degree(const InducedGraph& g, Alt a);

/// Some simple cycle (>= 3 distinct vertices, closing edge) through `a`, in
/// canonical enumeration order, or nullopt.
std::optional<std::vector<Alt>> find_cycle_through(const InducedGraph& g, Alt a);

/// All simple cycles, canonical form: smallest vertex first, the smaller of
/// the two possible directions.
std::vector<std::vector<Alt>> all_cycles(const InducedGraph& g);

struct GraphDisconnectedWitness {
    Alt first = 0, second = 0;
};
struct LowDegreeWitness {
    std::vector<Alt> vertices;  // every vertex of degree < 2
};
struct AcyclicWitness {
    int edge_count = 0;
    int component_count = 0;  // a forest: edges = vertices - components
};
struct NoBridgePathWitness {
    std::vector<Alt> vertices;  // off-cycle vertices with no qualifying path
};

/// The four structural checks on G(D), each evaluated independently:
/// (a) connected, (b) min degree 2, (c) some cycle exists, (d) every
/// off-cycle vertex sits strictly inside a path whose endpoints lie on
/// vertex-disjoint cycles.
struct GraphStructureReport {
    bool connected = false;
    std::optional<GraphDisconnectedWitness> disconnected;
    bool min_degree_ok = false;
    std::optional<LowDegreeWitness> low_degree;
    bool has_cycle = false;
    std::optional<AcyclicWitness> acyclic;
    bool bridge_paths_ok = false;
    std::optional<NoBridgePathWitness> no_bridge;
    bool all_hold() const { return connected && min_degree_ok && has_cycle && bridge_paths_ok; }
};

GraphStructureReport graph_structure_check(const Domain& d);

/// Projects a preference path onto a path in G(D) from a to b via the
/// stepwise last-occurrence-of-top construction. The path must start at a
/// preference topping a and end at one topping b, with a != b.
std::vector<Alt> project_tops_path(const Domain& d, const PrefPath& path, Alt a, Alt b);

/// One `a b` line per edge, lexicographic, for external tooling.
std::string to_edge_list(const InducedGraph& g);

}  // namespace prefdom
