#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckt/moves.hpp"

namespace ckt {

// How a solution was produced. Closed-form constructions rank before
// extensions, which rank before raw search, when duplicates merge.
struct Provenance {
    enum class Kind { Coprime, Case1, Case2, Extension, Search };
    Kind kind = Kind::Search;
    int base_n = 0;            // Extension: size the record was grown from
    int lambda = 0;            // Extension: growth steps of k-1
    bool reused_base = false;  // Extension: base row set carried over unchanged
};

std::string to_string(const Provenance& p);
int provenance_rank(const Provenance& p);

// A certified direction assignment for one board instance.
struct SolutionRecord {
    int n = 0;
    int k = 0;
    Directions dirs;
    std::optional<std::vector<int>> e_rows;  // backward rows when all columns forward
    Provenance provenance;
    bool verified = false;
};

// Re-runs the tour check on the record's own board.
bool reverify(const SolutionRecord& rec);

}  // namespace ckt
