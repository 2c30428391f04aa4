#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "prefdom/orders.hpp"

namespace prefdom {

/// A sequence of preference indices into a Domain; a valid path has pairwise
/// distinct entries with consecutive entries adjacent.
struct PrefPath {
    std::vector<int> indices;
    bool operator==(const PrefPath&) const = default;
};

/// A finite set of distinct linear orders over a shared alternative set,
/// together with its precomputed adjacency relation. Immutable after
/// construction; all deciders below are pure functions.
class Domain {
public:
    Domain(AlternativeSet alts, std::vector<LinearOrder> prefs);

    int size() const { return static_cast<int>(prefs_.size()); }
    int alternatives() const { return alts_.size(); }
    const AlternativeSet& alts() const { return alts_; }
    const LinearOrder& pref(int i) const;
    const std::vector<LinearOrder>& prefs() const { return prefs_; }
    Alt top(int i) const { return pref(i).top(); }
    bool adjacent(int i, int j) const;
    /// Indices adjacent to i, ascending.
    const std::vector<int>& adjacent_to(int i) const;
    std::optional<int> index_of(const LinearOrder& order) const;

private:
    AlternativeSet alts_;
    std::vector<LinearOrder> prefs_;
    std::vector<std::vector<int>> adj_;
};

Domain build_domain(AlternativeSet alts, std::vector<LinearOrder> orders);

// --- verdict certificates ---------------------------------------------------

struct MissingTopWitness {
    Alt alternative = 0;  // never ranked first in the domain
};

struct DisconnectedWitness {
    int first = 0, second = 0;   // preferences in different components
    std::vector<int> component;  // component id per preference index
};

struct NeighbourTopsWitness {
    int pref = 0;                      // preference whose TCC lacks diversity
    std::vector<Alt> neighbour_tops;   // distinct tops of N(TCC(pref), D); size <= 1
};

struct RestorationWitness {
    int from = 0, to = 0;  // no restoration-free path between these
    Alt a = 0, b = 0;      // for this pair of alternatives
};

struct DisagreementWitness {
    int first = 0, second = 0;  // adjacent preferences with tops a, b
    Alt a = 0, b = 0;
    bool has_a_over_b = false;  // some other-topped preference ranks a over b
    bool has_b_over_a = false;
};

using DomainWitness = std::variant<MissingTopWitness, DisconnectedWitness, NeighbourTopsWitness,
                                   RestorationWitness, DisagreementWitness>;

/// Two-state verdict; when the property fails the witness re-validates
/// independently against the domain.
struct DomainVerdict {
    bool holds = false;
    std::optional<DomainWitness> witness;
};

// --- deciders ----------------------------------------------------------------

/// Every alternative is top-ranked by some preference.
DomainVerdict is_minimally_rich(const Domain& d);

/// Shortest path (BFS, neighbour indices ascending) between two preferences,
/// or nullopt if they are in different components. from == to yields the
/// single-node path.
std::optional<PrefPath> find_path(const Domain& d, int from, int to);

/// The preference adjacency graph has a single component.
DomainVerdict is_connected(const Domain& d);

/// Top-connected closure of preference i: all indices reachable via paths
/// whose every node shares i's top alternative. Sorted ascending; contains i.
std::vector<int> tcc(const Domain& d, int i);

/// N(within, D): preferences outside `within` adjacent to some member of it.
/// Sorted ascending.
std::vector<int> neighbours(const Domain& d, std::span<const int> within);

/// N(TCC(i), D) contains two preferences with distinct tops.
DomainVerdict has_two_distinct_neighbours(const Domain& d, int i);

/// Connected and every preference's TCC has two distinct neighbours.
/// Requires m >= 3 (the structural theorems assume it).
DomainVerdict is_cdn(const Domain& d);

/// The relative ranking of a and b flips at most once along the path.
/// The path must be valid in d (distinct, consecutively adjacent); a != b.
bool path_restoration_free(const Domain& d, const PrefPath& path, Alt a, Alt b);

/// A path from `from` to `to` along which {a,b} flips at most once, if one
/// exists. Decided by BFS over (preference, flips-used) states; the returned
/// path always has distinct preferences.
std::optional<PrefPath> restoration_free_path(const Domain& d, int from, int to, Alt a, Alt b);

/// For every pair of distinct preferences and every pair {a,b}, some
/// connecting path is restoration-free for {a,b}. The witness names the
/// higher-indexed endpoint first.
DomainVerdict satisfies_property_p(const Domain& d);

/// Property P restricted to pairs {a,b} where at least one of a, b is
/// top-ranked somewhere in the domain.
DomainVerdict satisfies_scd(const Domain& d);

/// Every adjacent pair with distinct tops a, b is countered by preferences
/// topped outside {a,b} ranking a over b and b over a respectively.
DomainVerdict satisfies_disagreement(const Domain& d);

/// All simple paths between two preferences, DFS order, up to `limit`.
std::vector<PrefPath> all_simple_paths(const Domain& d, int from, int to, std::size_t limit);

bool is_valid_path(const Domain& d, const PrefPath& path);

}  // namespace prefdom
