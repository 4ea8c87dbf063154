#pragma once

#include <string>

#include "ckt/grid.hpp"
#include "ckt/moves.hpp"

namespace ckt {

// Canonical grid document: {"rows": m, "cols": n, "filled": [[r,c], ...]}
// with the cell list sorted row-major. Parsing also accepts the builder
// shorthands {"cyclic_diagonal": {"n":..,"k":..}} and
// {"holed": {"m":..,"n":..,"corner":"sw"|"se","a":..,"b":..}}.
Grid grid_from_json(const std::string& text);
std::string grid_to_json(const Grid& g);

// {"cycles": [[[r,c], ...], ...]} in the decomposition's canonical order.
std::string cycles_to_json(const CycleDecomposition& dec);

// Digraph with one edge per cell, cell -> image.
std::string cycles_to_dot(const CycleDecomposition& dec);

}  // namespace ckt
