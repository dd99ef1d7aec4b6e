#pragma once

#include <string>

#include "projlab/family.hpp"
#include "projlab/semialg.hpp"

namespace projlab {

/// Family file: a JSON document with exact rational coefficient strings,
/// ascending by degree ("num" or "num/den"; floats are refused):
///   { "name": "example",
///     "b1": [["1"], ["0"], ["0","1"], ["0","0","1"]],
///     "b2": [["0"], ["1"], ["0","0","1"], ["0","0","0","-1"]] }
FamilySpec parse_family_file(const std::string& path);
FamilySpec parse_family_json(const std::string& text, const std::string& default_name);
void write_family_file(const FamilySpec& f, const std::string& path);

/// Semialgebraic spec file: constraint records with monomial exponent triples:
///   { "name": "...", "constraints": [ { "relation": "eq_thick",
///     "monomials": [ {"e": [0,1,0], "c": "1"}, {"e": [1,0,1], "c": "-1"} ] } ] }
SemialgebraicSpec parse_surface_file(const std::string& path,
                                     int complexity_max = kDefaultComplexityMax);
void write_surface_file(const SemialgebraicSpec& s, const std::string& path);

}  // namespace projlab
