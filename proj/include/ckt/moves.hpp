#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ckt/grid.hpp"

namespace ckt {

// Per-row and per-column direction prescriptions, entries in {-1, +1}.
struct Directions {
    std::vector<std::int8_t> row_dir;
    std::vector<std::int8_t> col_dir;

    static Directions all_forward(int rows, int cols);
    // row i moves backward exactly when i is listed; every column forward.
    static Directions from_backward_rows(int rows, int cols,
                                         const std::vector<int>& backward_rows);

    void validate(const Grid& g) const;
    bool columns_all_forward() const;
};

Cell crazy_knight_step(const Grid& g, const Directions& dirs, Cell c);
// `a` filled-cell steps along the row (sign picks the direction), then one
// step down the column.
Cell a_knight_step(const Grid& g, int a, Cell c);
Cell bishop_step(const Grid& g, Cell c);
Cell reversed_bishop_step(const Grid& g, Cell c);

// A move function bound to its grid.
using StepFn = std::function<Cell(Cell)>;

StepFn crazy_knight(const Grid& g, Directions dirs);
StepFn a_knight(const Grid& g, int a);
StepFn bishop(const Grid& g);
StepFn reversed_bishop(const Grid& g);

// Materialized permutation of the filled-cell indices of one grid.
class MoveTable {
public:
    static MoveTable build(const Grid& g, const StepFn& step);
    int apply(int index) const { return image_[index]; }
    int size() const { return static_cast<int>(image_.size()); }
    const std::vector<std::int32_t>& images() const { return image_; }

private:
    std::vector<std::int32_t> image_;
};

struct CycleDecomposition {
    // Each cycle starts at its minimal cell (row-major); cycles sorted by
    // that cell, so output is byte-stable.
    std::vector<std::vector<Cell>> cycles;
    int covered = 0;
    bool single_cycle() const { return cycles.size() == 1; }
};

// Disjoint cycles of `step` over the filled cells. Verifies along the way
// that the step is a permutation of the filled-cell set.
CycleDecomposition cycle_decomposition(const Grid& g, const StepFn& step);
CycleDecomposition cycle_decomposition(const Grid& g, const MoveTable& table);

// True when the decomposition is one cycle covering every filled cell.
bool is_tour(const Grid& g, const StepFn& step);

}  // namespace ckt
