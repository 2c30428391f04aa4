#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "prefdom/domain.hpp"

namespace prefdom {

/// One preference index per voter.
struct Profile {
    std::vector<int> prefs;
    bool operator==(const Profile&) const = default;
};

/// A social choice function as a total table over all |D|^n profiles, stored
/// densely in row-major profile order (voter 0 most significant). Immutable.
class SCFTable {
public:
    SCFTable(Domain domain, int voters, std::vector<Alt> table);

    /// Builds the table by evaluating `f` on every profile in row-major order.
    static SCFTable from_function(Domain domain, int voters,
                                  const std::function<Alt(const Profile&)>& f);

    const Domain& domain() const { return domain_; }
    int voters() const { return n_; }
    std::size_t profile_count() const { return table_.size(); }

    Alt at(const Profile& p) const { return table_[encode(p)]; }
    Alt at_index(std::size_t idx) const { return table_[idx]; }
    const std::vector<Alt>& table() const { return table_; }

    std::size_t encode(const Profile& p) const;
    Profile decode(std::size_t idx) const;

private:
    Domain domain_;
    int n_;
    std::vector<Alt> table_;
};

// --- axiom checks (exhaustive scans; first witness in row-major order) -------

template <typename W>
struct Check {
    bool holds = false;
    std::optional<W> witness;
};

struct UnanimityWitness {
    Profile profile;
    Alt top = 0;      // the shared top
    Alt outcome = 0;  // what the table chose instead
};

struct ManipulationWitness {
    int voter = 0;
    Profile profile;    // truthful profile
    int deviation = 0;  // misreport for `voter`
    bool local = false; // deviation adjacent to the truthful preference
};

struct TopsOnlyWitness {
    Profile first, second;  // same top vector, different outcomes
};

struct DecisiveWitness {
    Profile profile;  // voter tops the alternative here, outcome differs
};

Check<UnanimityWitness> check_unanimity(const SCFTable& f);

/// No voter gains by deviating to an adjacent preference. `threads` splits the
/// profile scan; the reported witness is always the row-major first.
Check<ManipulationWitness> check_local_sp(const SCFTable& f, int threads = 1);

/// No voter gains by any unilateral deviation.
Check<ManipulationWitness> check_sp(const SCFTable& f, int threads = 1);

Check<TopsOnlyWitness> check_tops_only(const SCFTable& f);

/// The smallest-index voter whose top is always selected, if any.
std::optional<int> check_dictatorship(const SCFTable& f);

/// Every profile where `voter` tops `a` maps to `a`.
Check<DecisiveWitness> check_decisive(const SCFTable& f, int voter, Alt a);

// --- constructions ------------------------------------------------------------

/// Disconnected-domain rule: voter v1's top while v1 reports inside the
/// component of `base`, voter v2's top otherwise. Requires d disconnected.
SCFTable construct_case1(const Domain& d, int base, int n, int v1 = 0, int v2 = 1);

/// Single-neighbour-top rule around TCC(pstar): with a = top(pstar) and b the
/// common top of N(TCC(pstar), D), picks voter v2's preferred of {a, b} while
/// v1 reports inside the closure, else voter v1's top. Requires d connected
/// with a non-empty, single-topped neighbour set.
SCFTable construct_case2(const Domain& d, int pstar, int n, int v1 = 0, int v2 = 1);

/// Preferences eligible as case-2 pivots: non-empty neighbour set whose tops
/// coincide.
std::vector<int> eligible_case2_pstars(const Domain& d);

/// Merge voters 0 and 1 into one seat: g(P0, P2, ..., P_{n-1}) =
/// f(P0, P0, P2, ..., P_{n-1}). Requires n >= 3.
SCFTable clone_reduce(const SCFTable& f);

/// Fix voters 2..n-1 to `others`: h(P0, P1) = f(P0, P1, others...).
/// Requires n >= 3.
SCFTable two_voter_slice(const SCFTable& f, std::span<const int> others);

/// Restriction of f to a sub-domain whose preferences all appear in f's
/// domain (any order).
SCFTable restrict_to(const SCFTable& f, const Domain& sub);

}  // namespace prefdom
