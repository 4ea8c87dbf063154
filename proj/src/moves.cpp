#include "ckt/moves.hpp"

#include <algorithm>
#include <utility>

namespace ckt {

Directions Directions::all_forward(int rows, int cols) {
    Directions d;
    d.row_dir.assign(rows, 1);
    d.col_dir.assign(cols, 1);
    return d;
}

Directions Directions::from_backward_rows(int rows, int cols,
                                          const std::vector<int>& backward_rows) {
    Directions d = all_forward(rows, cols);
    for (int r : backward_rows) {
        if (r < 1 || r > rows)
            throw ParameterError("backward row " + std::to_string(r) + " outside [1, " +
                                 std::to_string(rows) + "]");
        d.row_dir[r - 1] = -1;
    }
    return d;
}

void Directions::validate(const Grid& g) const {
    if (static_cast<int>(row_dir.size()) != g.rows())
        throw ParameterError("row direction vector has length " +
                             std::to_string(row_dir.size()) + ", expected " +
                             std::to_string(g.rows()));
    if (static_cast<int>(col_dir.size()) != g.cols())
        throw ParameterError("column direction vector has length " +
                             std::to_string(col_dir.size()) + ", expected " +
                             std::to_string(g.cols()));
    for (auto v : row_dir)
        if (v != 1 && v != -1) throw ParameterError("row direction entries must be +1 or -1");
    for (auto v : col_dir)
        if (v != 1 && v != -1) throw ParameterError("column direction entries must be +1 or -1");
}

bool Directions::columns_all_forward() const {
    return std::all_of(col_dir.begin(), col_dir.end(), [](std::int8_t v) { return v == 1; });
}

Cell crazy_knight_step(const Grid& g, const Directions& dirs, Cell c) {
    const int idx = g.index_of(c);
    if (idx < 0) throw ContractError("move from empty cell " + to_string(c));
    const int mid = g.successor_index(idx, Axis::Row, dirs.row_dir[c.row - 1]);
    const Cell landing = g.cell_at(mid);
    return g.cell_at(g.successor_index(mid, Axis::Col, dirs.col_dir[landing.col - 1]));
}

Cell a_knight_step(const Grid& g, int a, Cell c) {
    if (a == 0) throw ParameterError("knight stride must be nonzero");
    int idx = g.index_of(c);
    if (idx < 0) throw ContractError("move from empty cell " + to_string(c));
    const int dir = a > 0 ? 1 : -1;
    for (int t = 0; t < (a > 0 ? a : -a); ++t) idx = g.successor_index(idx, Axis::Row, dir);
    return g.cell_at(g.successor_index(idx, Axis::Col, 1));
}

Cell bishop_step(const Grid& g, Cell c) { return a_knight_step(g, 1, c); }

Cell reversed_bishop_step(const Grid& g, Cell c) { return a_knight_step(g, -1, c); }

StepFn crazy_knight(const Grid& g, Directions dirs) {
    dirs.validate(g);
    return [&g, dirs = std::move(dirs)](Cell c) { return crazy_knight_step(g, dirs, c); };
}

StepFn a_knight(const Grid& g, int a) {
    if (a == 0) throw ParameterError("knight stride must be nonzero");
    return [&g, a](Cell c) { return a_knight_step(g, a, c); };
}

StepFn bishop(const Grid& g) { return a_knight(g, 1); }

StepFn reversed_bishop(const Grid& g) { return a_knight(g, -1); }

MoveTable MoveTable::build(const Grid& g, const StepFn& step) {
    MoveTable t;
    t.image_.resize(g.filled_count());
    for (int i = 0; i < g.filled_count(); ++i) {
        const Cell image = step(g.cell_at(i));
        const int j = g.index_of(image);
        if (j < 0)
            throw ContractError("move image " + to_string(image) + " of " +
                                to_string(g.cell_at(i)) + " is not filled");
        t.image_[i] = j;
    }
    return t;
}

CycleDecomposition cycle_decomposition(const Grid& g, const MoveTable& table) {
    const int count = g.filled_count();
    std::vector<std::int32_t> preimage(count, -1);
    for (int i = 0; i < count; ++i) {
        const int j = table.apply(i);
        if (preimage[j] >= 0)
            throw ContractError("not a permutation: " + to_string(g.cell_at(preimage[j])) +
                                " and " + to_string(g.cell_at(i)) + " both map to " +
                                to_string(g.cell_at(j)));
        preimage[j] = i;
    }

    CycleDecomposition dec;
    std::vector<bool> seen(count, false);
    for (int start = 0; start < count; ++start) {
        if (seen[start]) continue;
        std::vector<Cell> cycle;
        int cur = start;
        do {
            seen[cur] = true;
            cycle.push_back(g.cell_at(cur));
            cur = table.apply(cur);
        } while (cur != start);
        dec.covered += static_cast<int>(cycle.size());
        dec.cycles.push_back(std::move(cycle));
    }
    return dec;
}

CycleDecomposition cycle_decomposition(const Grid& g, const StepFn& step) {
    return cycle_decomposition(g, MoveTable::build(g, step));
}

bool is_tour(const Grid& g, const StepFn& step) {
    return cycle_decomposition(g, step).single_cycle();
}

}  // namespace ckt
