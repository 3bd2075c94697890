#pragma once

#include <iosfwd>
#include <string>

#include "simplexity/cayley.hpp"
#include "simplexity/simplicial_complex.hpp"

namespace simplexity {

/// { "dim": d, "label": "...", "points": [[...], ...], "simplices": [[...], ...] }
void write_triangulation_json(std::ostream& os, const Triangulation& t);
/// Labeled inputs must list the points of the canonical configuration in
/// canonical order; throws std::runtime_error otherwise.
Triangulation read_triangulation_json(std::istream& is);

/// { "base": "cube(l)", "m": m, "cells": [[[B_1], ..., [B_m]], ...] }
void write_mixed_json(std::ostream& os, const MixedSubdivision& s);
MixedSubdivision read_mixed_json(std::istream& is);

void save_triangulation(const std::string& path, const Triangulation& t);
Triangulation load_triangulation(const std::string& path);

} // namespace simplexity
