#pragma once

#include "chowlab/cycle.hpp"

#include <string>

namespace chowlab {

// Canonical JSON text: two-space indent, keys sorted, no trailing newline.
// Parsers throw StructuralError on malformed documents; parsed objects pass
// through the same validation as programmatic construction.

std::string to_json(const GradedPoly& p);
std::string to_json(const ChowElement& e);
std::string to_json(const StandardCycle& z);

GradedPoly parse_graded_poly(const std::string& text);
ChowElement parse_chow_element(const std::string& text);
StandardCycle parse_standard_cycle(const std::string& text);

// Variety spec mini-language: cells are products of projective spaces joined
// by 'x' ("P1xP1"), a variety is a '+'-separated sum of cells of one
// dimension ("P2 + P1xP1"). Whitespace-insensitive.
FormalVariety parse_variety_spec(const std::string& spec);

} // namespace chowlab
