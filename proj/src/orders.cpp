#include "prefdom/orders.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace prefdom {

AlternativeSet::AlternativeSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() < 2)
        throw std::invalid_argument("alternative set needs at least 2 alternatives, got " +
                                    std::to_string(labels_.size()));
    std::set<std::string_view> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw std::invalid_argument("alternative labels must be non-empty");
        if (!seen.insert(l).second)
            throw std::invalid_argument("duplicate alternative label '" + l + "'");
    }
}

const std::string& AlternativeSet::label(Alt a) const {
    if (a < 0 || a >= size())
        throw std::out_of_range("alternative index " + std::to_string(a) + " out of range");
    return labels_[static_cast<std::size_t>(a)];
}

std::optional<Alt> AlternativeSet::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<Alt>(i);
    return std::nullopt;
}

LinearOrder::LinearOrder(std::vector<Alt> best_to_worst) : order_(std::move(best_to_worst)) {
    const int m = static_cast<int>(order_.size());
    if (m < 2) throw std::invalid_argument("linear order needs at least 2 alternatives");
    rank_.assign(static_cast<std::size_t>(m), 0);
    for (int k = 0; k < m; ++k) {
        const Alt a = order_[static_cast<std::size_t>(k)];
        if (a < 0 || a >= m || rank_[static_cast<std::size_t>(a)] != 0)
            throw std::invalid_argument("ranking is not a permutation of 0.." +
                                        std::to_string(m - 1));
        rank_[static_cast<std::size_t>(a)] = k + 1;
    }
}

Alt LinearOrder::kth(Rank k) const {
    if (k < 1 || k > size())
        throw std::out_of_range("rank " + std::to_string(k) + " out of range 1.." +
                                std::to_string(size()));
    return order_[static_cast<std::size_t>(k - 1)];
}

Rank LinearOrder::rank_of(Alt a) const {
    if (a < 0 || a >= size())
        throw std::out_of_range("alternative index " + std::to_string(a) + " out of range");
    return rank_[static_cast<std::size_t>(a)];
}

bool LinearOrder::prefers(Alt a, Alt b) const {
    if (a == b) throw std::invalid_argument("prefers requires two distinct alternatives");
    return rank_of(a) < rank_of(b);
}

bool is_adjacent(const LinearOrder& p, const LinearOrder& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("adjacency requires orders over the same alternative set");
    const auto& po = p.best_to_worst();
    const auto& qo = q.best_to_worst();
    int first = -1;
    for (int k = 0; k < p.size(); ++k) {
        if (po[static_cast<std::size_t>(k)] == qo[static_cast<std::size_t>(k)]) continue;
        if (first >= 0 && k != first + 1) return false;
        if (first >= 0 && k == first + 1) {
            // positions first and first+1 must hold the same two alternatives, swapped
            if (po[static_cast<std::size_t>(first)] != qo[static_cast<std::size_t>(k)] ||
                po[static_cast<std::size_t>(k)] != qo[static_cast<std::size_t>(first)])
                return false;
            // any further difference disqualifies; keep scanning
            for (int r = k + 1; r < p.size(); ++r)
                if (po[static_cast<std::size_t>(r)] != qo[static_cast<std::size_t>(r)]) return false;
            return true;
        }
        first = k;
    }
    return false;
}

std::vector<LinearOrder> adjacent_swaps(const LinearOrder& p) {
    std::vector<LinearOrder> out;
    out.reserve(static_cast<std::size_t>(p.size() - 1));
    for (int k = 0; k + 1 < p.size(); ++k) {
        auto seq = p.best_to_worst();
        std::swap(seq[static_cast<std::size_t>(k)], seq[static_cast<std::size_t>(k + 1)]);
        out.emplace_back(std::move(seq));
    }
    return out;
}

std::string to_string(const AlternativeSet& alts, const LinearOrder& order) {
    std::string out;
    for (int k = 1; k <= order.size(); ++k) {
        if (k > 1) out += ' ';
        out += alts.label(order.kth(k));
    }
    return out;
}

}  // namespace prefdom
