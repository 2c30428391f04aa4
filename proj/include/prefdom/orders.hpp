#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prefdom {

/// Dense 0-based alternative index. Labels live in AlternativeSet only.
using Alt = int;

/// 1-based rank: rank 1 is the best alternative.
using Rank = int;

/// The finite set of alternatives. Requires at least two pairwise-distinct,
/// non-empty labels; the label order fixes the alternative indices.
class AlternativeSet {
public:
    explicit AlternativeSet(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(Alt a) const;
    std::optional<Alt> index_of(std::string_view label) const;
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const AlternativeSet&) const = default;

private:
    std::vector<std::string> labels_;
};

/// A strict linear order over m alternatives, stored best-to-worst together
/// with the eagerly maintained inverse (rank) array. Immutable after
/// construction.
class LinearOrder {
public:
    /// `best_to_worst` must be a permutation of 0..m-1.
    explicit LinearOrder(std::vector<Alt> best_to_worst);

    int size() const { return static_cast<int>(order_.size()); }

    /// The k-th ranked alternative, k in 1..m.
    Alt kth(Rank k) const;

    /// The rank of alternative `a`, inverse of kth.
    Rank rank_of(Alt a) const;

    Alt top() const { return order_.front(); }

    /// True iff `a` is ranked strictly above `b`. Requires a != b.
    bool prefers(Alt a, Alt b) const;

    const std::vector<Alt>& best_to_worst() const { return order_; }

    bool operator==(const LinearOrder& other) const { return order_ == other.order_; }
    bool operator<(const LinearOrder& other) const { return order_ < other.order_; }

private:
    std::vector<Alt> order_;  // order_[k] = alternative at rank k+1
    std::vector<Rank> rank_;  // rank_[a] = 1-based rank of alternative a
};

/// True iff p and q differ by exactly one swap of consecutively ranked
/// alternatives. Requires both orders to range over the same alternative set.
bool is_adjacent(const LinearOrder& p, const LinearOrder& q);

/// All m-1 orders adjacent to p in the unrestricted space, obtained by
/// swapping each consecutive pair, in rank order of the swapped position.
std::vector<LinearOrder> adjacent_swaps(const LinearOrder& p);

/// Canonical textual form: best-to-worst labels joined by single spaces.
std::string to_string(const AlternativeSet& alts, const LinearOrder& order);

}  // namespace prefdom
