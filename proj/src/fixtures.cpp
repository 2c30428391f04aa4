#include "prefdom/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "prefdom/io.hpp"

namespace prefdom {

namespace {

// Embedded as data; preference order matches the printed column order.
constexpr std::string_view kTable1 =
    "alternatives: a1 a2 a3 a4\n"
    "a1 a2 a3 a4\n"
    "a1 a4 a3 a2\n"
    "a2 a1 a4 a3\n"
    "a2 a3 a4 a1\n"
    "a3 a2 a1 a4\n"
    "a3 a4 a1 a2\n"
    "a4 a1 a2 a3\n"
    "a4 a3 a2 a1\n";

constexpr std::string_view kTable2 =
    "alternatives: a1 a2 a3 a4\n"
    "a1 a2 a3 a4\n"
    "a2 a1 a3 a4\n"
    "a2 a3 a1 a4\n"
    "a3 a2 a1 a4\n"
    "a3 a2 a4 a1\n"
    "a3 a4 a2 a1\n"
    "a4 a3 a2 a1\n";

constexpr std::string_view kTable3 =
    "alternatives: a1 a2 a3 a4\n"
    "a1 a2 a3 a4\n"
    "a2 a1 a3 a4\n"
    "a2 a3 a1 a4\n"
    "a2 a3 a4 a1\n"
    "a3 a2 a4 a1\n"
    "a3 a2 a1 a4\n"
    "a3 a4 a2 a1\n"
    "a4 a3 a2 a1\n";

constexpr std::string_view kTable4 =
    "alternatives: a1 a2 a3 a4\n"
    "a1 a2 a3 a4\n"
    "a2 a1 a3 a4\n"
    "a2 a3 a1 a4\n"
    "a3 a2 a1 a4\n"
    "a3 a2 a4 a1\n"
    "a3 a4 a2 a1\n"
    "a4 a3 a2 a1\n"
    "a1 a2 a4 a3\n"
    "a1 a4 a2 a3\n"
    "a4 a1 a2 a3\n"
    "a4 a1 a3 a2\n"
    "a4 a3 a1 a2\n";

constexpr std::string_view kTable5 =
    "alternatives: a1 a2 a3 a4\n"
    "a1 a2 a3 a4\n"
    "a2 a1 a3 a4\n"
    "a2 a3 a1 a4\n"
    "a3 a2 a1 a4\n"
    "a3 a2 a4 a1\n"
    "a3 a4 a2 a1\n"
    "a4 a3 a2 a1\n"
    "a4 a3 a1 a2\n"
    "a4 a1 a3 a2\n"
    "a4 a1 a2 a3\n"
    "a1 a4 a2 a3\n"
    "a1 a2 a4 a3\n"
    "a1 a3 a2 a4\n";

constexpr std::string_view kTable6 =
    "alternatives: a1 a2 a3 a4\n"
    "a1 a2 a4 a3\n"
    "a1 a2 a3 a4\n"
    "a2 a1 a3 a4\n"
    "a2 a3 a1 a4\n"
    "a3 a2 a1 a4\n"
    "a3 a2 a4 a1\n"
    "a3 a4 a2 a1\n"
    "a4 a3 a2 a1\n"
    "a4 a3 a1 a2\n";

struct Entry {
    std::string_view name;
    std::string_view text;
};

constexpr Entry kTables[] = {
    {"table1", kTable1}, {"table2", kTable2}, {"table3", kTable3},
    {"table4", kTable4}, {"table5", kTable5}, {"table6", kTable6},
};

std::vector<std::string> default_labels(int m) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) labels.push_back("a" + std::to_string(i));
    return labels;
}

bool prefix_is_interval(const std::vector<Alt>& seq, std::size_t upto) {
    Alt lo = seq[0], hi = seq[0];
    for (std::size_t t = 0; t < upto; ++t) {
        lo = std::min(lo, seq[t]);
        hi = std::max(hi, seq[t]);
    }
    return hi - lo == static_cast<Alt>(upto) - 1;
}

Domain generate_filtered(AlternativeSet alts, bool (*keep)(const std::vector<Alt>&)) {
    const int m = alts.size();
    std::vector<Alt> seq(static_cast<std::size_t>(m));
    std::iota(seq.begin(), seq.end(), 0);
    std::vector<LinearOrder> orders;
    do {
        if (keep(seq)) orders.emplace_back(seq);
    } while (std::next_permutation(seq.begin(), seq.end()));
    return Domain(std::move(alts), std::move(orders));
}

}  // namespace

Domain fixture(std::string_view name) {
    return parse_domain(fixture_text(name));
}

std::string_view fixture_text(std::string_view name) {
    for (const auto& e : kTables)
        if (e.name == name) return e.text;
    std::string msg = "unknown fixture '" + std::string(name) + "'; available:";
    for (const auto& e : kTables) msg += " " + std::string(e.name);
    throw std::invalid_argument(msg);
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& e : kTables) out.emplace_back(e.name);
    return out;
}

Domain unrestricted(int m) {
    if (m < 2) throw std::invalid_argument("unrestricted domain requires m >= 2");
    return generate_filtered(AlternativeSet(default_labels(m)),
                             [](const std::vector<Alt>&) { return true; });
}

Domain single_peaked(const std::vector<std::string>& spectrum) {
    return generate_filtered(AlternativeSet(spectrum), [](const std::vector<Alt>& seq) {
        for (std::size_t k = 1; k <= seq.size(); ++k)
            if (!prefix_is_interval(seq, k)) return false;
        return true;
    });
}

Domain single_dipped(const std::vector<std::string>& spectrum) {
    return generate_filtered(AlternativeSet(spectrum), [](const std::vector<Alt>& seq) {
        std::vector<Alt> rev(seq.rbegin(), seq.rend());
        for (std::size_t k = 1; k <= rev.size(); ++k)
            if (!prefix_is_interval(rev, k)) return false;
        return true;
    });
}

}  // namespace prefdom
