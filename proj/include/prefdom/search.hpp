#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "prefdom/scf.hpp"

namespace prefdom {

/// The hypothesis set for a search: which axioms the table must satisfy and
/// which structures it must avoid.
struct AxiomBundle {
    enum class Incentive { none, local_sp, sp };
    bool require_unanimity = false;
    Incentive incentive = Incentive::none;
    bool require_tops_only = false;
    bool forbid_tops_only = false;
    bool forbid_dictatorship = false;
    /// Search over top-vectors instead of full profiles; the result is a
    /// tops-only SCF expanded to full profiles. Implied by require_tops_only.
    bool restrict_search_to_tops_only = false;

    bool collapsed() const { return require_tops_only || restrict_search_to_tops_only; }
};

struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000;
};

struct SearchCertificate {
    std::uint64_t nodes = 0;
    std::uint64_t propagations = 0;
    std::string ordering;   // recorded branching/value ordering id
    bool collapsed = false; // variables were top-vectors
};

enum class SearchStatus { found, exhausted, timeout };

struct SearchOutcome {
    SearchStatus status = SearchStatus::timeout;
    std::optional<SCFTable> table;  // present iff found; re-verified post hoc
    SearchCertificate certificate;
};

/// Backtracking search with arc-consistency propagation over one variable per
/// profile (or per top-vector when collapsed). Found tables are re-verified
/// against the bundle by the independent scf checkers; a budget overrun is
/// reported as timeout, never as exhausted.
SearchOutcome search_scf(const Domain& d, int n, const AxiomBundle& bundle,
                         const SearchBudget& budget = {},
                         std::optional<std::uint64_t> seed = std::nullopt);

enum class Tri { holds, fails, undecided };

struct LTopsOnlyResult {
    Tri verdict = Tri::undecided;
    std::optional<SCFTable> counterexample;  // unanimous LSP non-tops-only table
    SearchCertificate certificate;
};

/// Is every unanimous, locally strategy-proof SCF on d tops-only? Decided by
/// exhausting (or finding a counterexample in) the corresponding bundle.
LTopsOnlyResult is_l_tops_only(const Domain& d, int n, const SearchBudget& budget = {});

/// Membership report for the domain classes. The exact structural deciders
/// always resolve; the search-backed classes may come back undecided at the
/// given budget. Class memberships (dict, ldict, l_tops_only) are gated on
/// minimal richness, which all of the classes presuppose.
struct RegionReport {
    bool minimally_rich = false;
    bool cdn = false;          // structural connected-with-two-distinct-neighbours
    bool property_p = false;
    bool scd = false;
    bool disagreement = false;
    Tri l_tops_only = Tri::undecided;
    Tri ldict = Tri::undecided;
    Tri dict = Tri::undecided;
    /// CDN holds but L-tops-only is undecided: relevant to the open inclusion
    /// question, not resolvable per instance at budget.
    bool conjecture_relevant = false;
    SearchCertificate l_tops_only_certificate, ldict_certificate, dict_certificate;
    std::optional<SCFTable> l_tops_only_counterexample, ldict_counterexample,
        dict_counterexample;
};

RegionReport classify_domain(const Domain& d, int n, const SearchBudget& budget = {});

}  // namespace prefdom
