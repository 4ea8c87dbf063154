#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ckt/diagonal.hpp"
#include "ckt/grid.hpp"
#include "ckt/moves.hpp"

namespace ckt {

// Shape of the reduced board: full_rows + 1 rows by stride + block_size
// columns, fully filled except the last tail_gap cells of the final row.
struct DSpec {
    int full_rows = 0;   // leading completely filled rows
    int block_size = 0;  // width of the trailing return block
    int tail_gap = 0;    // empty cells at the end of the last row
    int stride = 0;      // knight stride the board is built for

    int rows() const { return full_rows + 1; }
    int cols() const { return stride + block_size; }
    void validate() const;
};

Grid build_d(const DSpec& spec);

// The equivalent holed board: (full_rows+1)*block_size - tail_gap rows by
// stride + block_size columns with a south-east hole.
Grid build_dstar(const DSpec& spec);
HoleSpec dstar_hole(const DSpec& spec);

// Order-preserving bijection from E onto the filled cells of the last
// block_size columns of the reduced board.
class PhiMap {
public:
    Cell apply(int e) const;
    std::optional<int> inverse(Cell c) const;
    const std::vector<std::pair<int, Cell>>& pairs() const { return pairs_; }
    bool in_block(Cell c) const { return c.col > stride_; }

    friend PhiMap phi_from_groups(const std::vector<std::vector<int>>& groups,
                                  const DSpec& spec);

private:
    int stride_ = 0;
    std::vector<std::pair<int, Cell>> pairs_;  // sorted by element
};

// Groups are the chain blocks' sorted elements, full blocks first, the
// trimmed block last.
PhiMap phi_from_groups(const std::vector<std::vector<int>>& groups, const DSpec& spec);
PhiMap phi_bijection(const ESet& e, const DiagonalParams& p, const DSpec& spec);

// The DSpec induced by a conforming E: stride = k - 1 - |E|.
DSpec dspec_for(const ESet& e, const DiagonalParams& p);

// First cell satisfying `target` reached by iterating `step` from `from`
// (the start itself does not count); nullopt if not hit in max_steps.
std::optional<Cell> first_visit(const StepFn& step, Cell from,
                                const std::function<bool(Cell)>& target, int max_steps);

// ---- stacked boards -----------------------------------------------------

// Two blocks sharing a column count, glued vertically on the torus.
struct Stack {
    Grid grid;
    int cut = 0;  // rows of the top block

    bool in_bottom(Cell c) const { return c.row > cut; }
    Cell to_local(Cell c) const { return {c.row - cut, c.col}; }
    Cell from_local(Cell c) const { return {c.row + cut, c.col}; }
};

Stack stack_vertical(const Grid& top, const Grid& bottom);

using CellMap = std::vector<std::pair<Cell, Cell>>;

// First-return map of `step` onto the bottom block, bottom-local
// coordinates, sorted by source cell.
CellMap phi2_map(const Stack& s, const StepFn& step);

using StackStep = std::function<StepFn(const Stack&)>;
StackStep bishop_on_stack();
// Bishop below the cut, reversed bishop above it.
StackStep bishop_below_reversed_above();

struct EquivalenceReport {
    CellMap lhs_map, rhs_map;     // bottom-local first-return tables
    bool agrees = false;
    std::optional<Cell> witness;  // first bottom-local disagreement
};

// Verifies that swapping top_a for top_b preserves both the exit pattern
// from the bottom block and the first-return map onto it.
EquivalenceReport check_equivalence(const Grid& top_a, const Grid& top_b,
                                    const Grid& bottom, const StackStep& phi,
                                    const StackStep& sigma);

struct MainEqvReport {
    DSpec dspec;
    EquivalenceReport pointwise;  // E-walk against the pulled-back knight walk
    bool tour_a = false;
    bool tour_d = false;
    bool tour_dstar = false;
    bool agrees = false;
};

// Pointwise and tour-level agreement between the crazy knight on the
// diagonal board restricted to E, the stride-knight on the reduced board,
// and the bishop on the holed board.
MainEqvReport verify_main_eqv(int n, int k, const ESet& e);

// ---- cyclic-group addition on the reduced board ---------------------------

struct DemoAddResult {
    int modulus = 0;
    int stride = 0;
    int x = 0;
    int result = 0;  // x + stride reduced into [1, modulus]
    int alpha = 0;   // knight applications needed to re-enter the block
    DSpec dspec;
    std::vector<Cell> trace;  // start cell, knight landings, final row move
};

DemoAddResult demo_add(int modulus, int stride, int x);
DemoAddResult demo_add(int modulus, int stride, int x, int block_size);

}  // namespace ckt
