#pragma once

#include <string>

#include <json.hpp>

#include "trihedral/resolution.hpp"

namespace trihedral {

using ordered_json = nlohmann::ordered_json;

/// Parsed group specification: {"r": int, "generators": [[a,b,c],...],
/// "label": optional string}.
struct GroupSpec {
    Int r = 1;
    std::vector<std::array<Int, 3>> generators;
    std::string label;
};

/// Parses and validates a spec document.  Throws input_error with the
/// offending triple on an SL-condition violation, or on malformed JSON.
GroupSpec parse_spec(const std::string& text);

/// Reads a spec file; throws input_error when unreadable.
GroupSpec load_spec_file(const std::string& path);

DiagonalGroup group_from_spec(const GroupSpec& spec);

ordered_json report_to_json(const ResolutionReport& rep);
ResolutionReport report_from_json(const ordered_json& j);
std::string report_to_text(const ResolutionReport& rep);

/// Triangulation export: numerator triples over a common denominator
/// plus index triples and the orbit partition.
ordered_json triangulation_to_json(const Triangulation& tri);

/// Static SVG figure: barycentric projection onto an equilateral
/// triangle, one polygon per triangle face (central faces highlighted),
/// one circle per vertex.
std::string triangulation_to_svg(const Triangulation& tri);

}  // namespace trihedral
