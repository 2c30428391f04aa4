#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "prefdom/domain.hpp"
#include "prefdom/scf.hpp"

namespace prefdom {

struct ParseError : std::runtime_error {
    ParseError(std::string message, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line(line),
          column(column) {}
    int line;
    int column;
};

/// Domain file format: optional header `alternatives: <labels>`, then one
/// preference per non-empty, non-# line, best to worst, whitespace-separated.
/// Without a header the alternative labels are collected from the first
/// preference line. Preference order in the file defines the indices.
Domain parse_domain(std::string_view text);

/// Canonical emission: header line plus one line per preference, single
/// spaces. Fixture texts round-trip byte-exactly.
std::string emit_domain(const Domain& d);

/// FNV-1a 64 digest of the canonical domain text, 16 hex digits.
std::string domain_digest(const Domain& d);

/// SCF file format: header `scf n=<n> domain=<digest-or-name>`, then one line
/// per profile `i1 i2 ... in -> alt-label` with 1-based preference indices.
/// Every profile must appear exactly once. `domain_ref`, when non-empty, must
/// match the header's domain field (the digest always matches).
SCFTable parse_scf(std::string_view text, const Domain& d, std::string_view domain_ref = {});

std::string emit_scf(const SCFTable& f, std::string_view domain_ref = {});

std::string read_file(const std::string& path);

}  // namespace prefdom
