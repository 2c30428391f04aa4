#include "prefdom/io.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace prefdom {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    return out;
}

struct Line {
    std::string text;
    int number;  // 1-based
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
        ++number;
        auto first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#')
            out.push_back({std::string(line), number});
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return out;
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

Domain parse_domain(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty domain file", 1, 1);

    std::vector<std::string> labels;
    std::size_t start = 0;
    {
        auto toks = split_tokens(lines[0].text);
        if (!toks.empty() && toks[0].text == "alternatives:") {
            for (std::size_t t = 1; t < toks.size(); ++t) labels.push_back(toks[t].text);
            if (labels.size() < 2)
                throw ParseError("header must list at least 2 alternatives", lines[0].number,
                                 toks[0].column);
            start = 1;
        }
    }
    if (start == lines.size()) throw ParseError("no preference lines", lines[0].number, 1);
    if (labels.empty()) {
        for (const auto& tok : split_tokens(lines[start].text)) labels.push_back(tok.text);
        if (labels.size() < 2)
            throw ParseError("first preference line must list at least 2 alternatives",
                             lines[start].number, 1);
    }

    AlternativeSet alts = [&] {
        try {
            return AlternativeSet(labels);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), lines[0].number, 1);
        }
    }();

    std::vector<LinearOrder> orders;
    std::map<std::vector<Alt>, int> seen;  // ranking -> 1-based preference ordinal
    for (std::size_t li = start; li < lines.size(); ++li) {
        auto toks = split_tokens(lines[li].text);
        std::vector<Alt> seq;
        std::vector<bool> used(labels.size(), false);
        for (const auto& tok : toks) {
            auto idx = alts.index_of(tok.text);
            if (!idx)
                throw ParseError("unknown alternative '" + tok.text + "'", lines[li].number,
                                 tok.column);
            if (used[static_cast<std::size_t>(*idx)])
                throw ParseError("alternative '" + tok.text + "' listed twice", lines[li].number,
                                 tok.column);
            used[static_cast<std::size_t>(*idx)] = true;
            seq.push_back(*idx);
        }
        if (seq.size() != labels.size())
            throw ParseError("preference lists " + std::to_string(seq.size()) + " of " +
                                 std::to_string(labels.size()) + " alternatives",
                             lines[li].number, 1);
        auto [it, inserted] = seen.emplace(seq, static_cast<int>(orders.size()) + 1);
        if (!inserted)
            throw ParseError("duplicate preference (same as preference " +
                                 std::to_string(it->second) + ")",
                             lines[li].number, 1);
        orders.emplace_back(std::move(seq));
    }
    return Domain(std::move(alts), std::move(orders));
}

std::string emit_domain(const Domain& d) {
    std::string out = "alternatives:";
    for (const auto& l : d.alts().labels()) out += " " + l;
    out += '\n';
    for (int i = 0; i < d.size(); ++i) out += to_string(d.alts(), d.pref(i)) + '\n';
    return out;
}

std::string domain_digest(const Domain& d) {
    std::uint64_t h = fnv1a(emit_domain(d));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

SCFTable parse_scf(std::string_view text, const Domain& d, std::string_view domain_ref) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty scf file", 1, 1);

    auto head = split_tokens(lines[0].text);
    if (head.empty() || head[0].text != "scf")
        throw ParseError("scf file must start with an `scf n=<n> domain=<ref>` header",
                         lines[0].number, 1);
    int n = -1;
    std::string domain_field;
    for (std::size_t t = 1; t < head.size(); ++t) {
        const auto& tok = head[t].text;
        if (tok.rfind("n=", 0) == 0) {
            try {
                n = std::stoi(tok.substr(2));
            } catch (...) {
                throw ParseError("bad voter count '" + tok + "'", lines[0].number, head[t].column);
            }
        } else if (tok.rfind("domain=", 0) == 0) {
            domain_field = tok.substr(7);
        } else {
            throw ParseError("unknown header field '" + tok + "'", lines[0].number,
                             head[t].column);
        }
    }
    if (n < 2) throw ParseError("header must set n=<voters>, n >= 2", lines[0].number, 1);
    if (!domain_field.empty()) {
        const std::string digest = domain_digest(d);
        const bool matches = domain_field == digest ||
                             (!domain_ref.empty() && domain_field == domain_ref);
        if (!matches)
            throw ParseError("scf header names domain '" + domain_field +
                                 "' but the provided domain has digest " + digest,
                             lines[0].number, 1);
    }

    std::size_t expect = 1;
    for (int v = 0; v < n; ++v) expect *= static_cast<std::size_t>(d.size());
    std::vector<Alt> table(expect, -1);
    std::size_t filled = 0;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        auto toks = split_tokens(lines[li].text);
        if (toks.size() != static_cast<std::size_t>(n) + 2 || toks[static_cast<std::size_t>(n)].text != "->")
            throw ParseError("expected `i1 ... i" + std::to_string(n) + " -> alt-label`",
                             lines[li].number, 1);
        std::size_t idx = 0;
        for (int v = 0; v < n; ++v) {
            int i;
            try {
                i = std::stoi(toks[static_cast<std::size_t>(v)].text);
            } catch (...) {
                throw ParseError("bad preference index '" + toks[static_cast<std::size_t>(v)].text + "'",
                                 lines[li].number, toks[static_cast<std::size_t>(v)].column);
            }
            if (i < 1 || i > d.size())
                throw ParseError("preference index " + std::to_string(i) + " out of range 1.." +
                                     std::to_string(d.size()),
                                 lines[li].number, toks[static_cast<std::size_t>(v)].column);
            idx = idx * static_cast<std::size_t>(d.size()) + static_cast<std::size_t>(i - 1);
        }
        const auto& label = toks[static_cast<std::size_t>(n) + 1];
        auto a = d.alts().index_of(label.text);
        if (!a)
            throw ParseError("unknown alternative '" + label.text + "'", lines[li].number,
                             label.column);
        if (table[idx] != -1)
            throw ParseError("profile assigned twice", lines[li].number, 1);
        table[idx] = *a;
        ++filled;
    }
    if (filled != expect)
        throw ParseError("scf table is not total: " + std::to_string(filled) + " of " +
                             std::to_string(expect) + " profiles assigned",
                         static_cast<int>(lines.size()), 1);
    return SCFTable(d, n, std::move(table));
}

std::string emit_scf(const SCFTable& f, std::string_view domain_ref) {
    std::string out = "scf n=" + std::to_string(f.voters()) + " domain=";
    out += domain_ref.empty() ? domain_digest(f.domain()) : std::string(domain_ref);
    out += '\n';
    for (std::size_t idx = 0; idx < f.profile_count(); ++idx) {
        Profile p = f.decode(idx);
        for (int v = 0; v < f.voters(); ++v) {
            if (v > 0) out += ' ';
            out += std::to_string(p.prefs[static_cast<std::size_t>(v)] + 1);
        }
        out += " -> " + f.domain().alts().label(f.at_index(idx)) + '\n';
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace prefdom
