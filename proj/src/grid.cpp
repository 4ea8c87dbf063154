#include "ckt/grid.hpp"

#include <algorithm>
#include <sstream>

namespace ckt {

std::string to_string(Cell c) {
    std::ostringstream os;
    os << "(" << c.row << "," << c.col << ")";
    return os.str();
}

Grid Grid::from_cells(int rows, int cols, std::vector<Cell> filled) {
    if (rows < 1 || cols < 1)
        throw ParameterError("grid dimensions must be positive");
    for (const Cell& c : filled) {
        if (c.row < 1 || c.row > rows || c.col < 1 || c.col > cols)
            throw ParameterError("cell " + to_string(c) + " outside " +
                                 std::to_string(rows) + "x" + std::to_string(cols));
    }
    std::sort(filled.begin(), filled.end());
    filled.erase(std::unique(filled.begin(), filled.end()), filled.end());

    Grid g;
    g.rows_ = rows;
    g.cols_ = cols;
    g.cells_ = std::move(filled);
    g.build_tables();
    return g;
}

Grid Grid::filled(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw ParameterError("grid dimensions must be positive");
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c) cells.push_back({r, c});
    return from_cells(rows, cols, std::move(cells));
}

Grid Grid::cyclic_diagonal(int n, int k) {
    if (n < 1) throw ParameterError("board size must be positive");
    if (k < 1 || k > n)
        throw ParameterError("diagonal count must be in [1, n]");
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(n) * k);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            if (mod1(r - c + 1, n) <= k) cells.push_back({r, c});
    return from_cells(n, n, std::move(cells));
}

Grid Grid::holed(int rows, int cols, HoleSpec hole) {
    if (rows < 1 || cols < 1)
        throw ParameterError("grid dimensions must be positive");
    if (hole.height < 1 || hole.height >= rows)
        throw ParameterError("hole height must be in [1, rows-1]");
    if (hole.width < 1 || hole.width >= cols)
        throw ParameterError("hole width must be in [1, cols-1]");
    const int row_lo = rows - hole.height + 1;
    const int col_lo = hole.corner == HoleSpec::Corner::SW ? 1 : cols - hole.width + 1;
    const int col_hi = col_lo + hole.width - 1;
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(rows) * cols - static_cast<std::size_t>(hole.height) * hole.width);
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c) {
            bool in_hole = r >= row_lo && c >= col_lo && c <= col_hi;
            if (!in_hole) cells.push_back({r, c});
        }
    return from_cells(rows, cols, std::move(cells));
}

Grid Grid::kron_rows(int h) const {
    if (h < 1) throw ParameterError("row expansion factor must be positive");
    std::vector<Cell> cells;
    cells.reserve(cells_.size() * static_cast<std::size_t>(h));
    for (int r = 1; r <= rows_ * h; ++r) {
        const int src = (r - 1) / h + 1;
        for (int c = 1; c <= cols_; ++c)
            if (is_filled(src, c)) cells.push_back({r, c});
    }
    return from_cells(rows_ * h, cols_, std::move(cells));
}

void Grid::build_tables() {
    index_.assign(static_cast<std::size_t>(rows_) * cols_, -1);
    for (std::size_t i = 0; i < cells_.size(); ++i)
        index_[flat(cells_[i].row, cells_[i].col)] = static_cast<std::int32_t>(i);

    const int count = filled_count();
    row_next_.assign(count, -1);
    row_prev_.assign(count, -1);
    col_next_.assign(count, -1);
    col_prev_.assign(count, -1);

    std::vector<std::vector<std::int32_t>> by_row(rows_ + 1), by_col(cols_ + 1);
    for (int i = 0; i < count; ++i) {
        by_row[cells_[i].row].push_back(i);  // column-ascending: cells_ is row-major sorted
        by_col[cells_[i].col].push_back(i);
    }
    for (int r = 1; r <= rows_; ++r) {
        if (by_row[r].empty())
            throw ParameterError("row " + std::to_string(r) + " has no filled cell");
        const auto& line = by_row[r];
        for (std::size_t t = 0; t < line.size(); ++t) {
            row_next_[line[t]] = line[(t + 1) % line.size()];
            row_prev_[line[t]] = line[(t + line.size() - 1) % line.size()];
        }
    }
    for (int c = 1; c <= cols_; ++c) {
        if (by_col[c].empty())
            throw ParameterError("column " + std::to_string(c) + " has no filled cell");
        const auto& line = by_col[c];  // row-ascending
        for (std::size_t t = 0; t < line.size(); ++t) {
            col_next_[line[t]] = line[(t + 1) % line.size()];
            col_prev_[line[t]] = line[(t + line.size() - 1) % line.size()];
        }
    }
}

Cell Grid::successor(Cell c, Axis axis, int dir) const {
    const int idx = index_of(c);
    if (idx < 0)
        throw ContractError("successor of empty cell " + to_string(c));
    return cells_[successor_index(idx, axis, dir)];
}

std::string Grid::render() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(rows_) * (cols_ + 1));
    for (int r = 1; r <= rows_; ++r) {
        for (int c = 1; c <= cols_; ++c) out.push_back(is_filled(r, c) ? '#' : '.');
        out.push_back('\n');
    }
    return out;
}

}  // namespace ckt
