// .poly text files (vertex lists) and JSON certificates.
#pragma once

#include "polystab/kstability.hpp"

#include <iosfwd>
#include <string>

namespace polystab {

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Format: header "n k", then k lines of n whitespace-separated exact scalars
// ("p/q" or integer); '#' starts a comment. The polytope is the convex hull
// of the listed points.
Polytope parse_polytope(const std::string& text);
Polytope load_polytope(const std::string& path);

// Canonical vertex order; parse(serialize(p)) reproduces the vertex set
// bit-exactly.
std::string serialize_polytope(const Polytope& p);

// Deterministic JSON certificate; all exact values as "p/q" strings, approx
// fields rendered at `digits` significant digits. The timing block is the
// only run-dependent part.
std::string certificate_to_json(const StabilityCertificate& cert, int digits = 15);

// One CSV row per analyzed file; `error` is empty on success.
std::string certificate_csv_header();
std::string certificate_csv_row(const std::string& name, const StabilityCertificate& cert,
                                int digits);
std::string certificate_csv_error_row(const std::string& name, const std::string& error);

}  // namespace polystab
