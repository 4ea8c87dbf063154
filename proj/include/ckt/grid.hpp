#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckt {

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

// Representative of `value` modulo `modulus` in [1, modulus].
inline int mod1(long long value, int modulus) {
    long long r = value % modulus;
    if (r <= 0) r += modulus;
    return static_cast<int>(r);
}

// 1-based toroidal coordinates.
struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(Cell c);

enum class Axis : std::uint8_t { Row, Col };

// Rectangular block of empty cells anchored at the south-west or
// south-east corner: `height` rows by `width` columns.
struct HoleSpec {
    enum class Corner : std::uint8_t { SW, SE };
    Corner corner = Corner::SW;
    int height = 0;
    int width = 0;
};

// Immutable partially filled toroidal array. Every row and every column
// keeps at least one filled cell. Successor queries are O(1) through
// tables built once at construction; instances are safe to share across
// threads read-only.
class Grid {
public:
    static Grid from_cells(int rows, int cols, std::vector<Cell> filled);
    static Grid filled(int rows, int cols);
    // n x n board filled on the k cyclically consecutive diagonals that
    // start at the main one: (r,c) filled iff (r-c) mod n is in [0, k-1].
    static Grid cyclic_diagonal(int n, int k);
    static Grid holed(int rows, int cols, HoleSpec hole);

    // Every row repeated `h` times; empty cells stay empty.
    Grid kron_rows(int h) const;

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int filled_count() const { return static_cast<int>(cells_.size()); }
    const std::vector<Cell>& filled_cells() const { return cells_; }

    bool is_filled(int row, int col) const {
        return index_[flat(row, col)] >= 0;
    }
    bool is_filled(Cell c) const { return is_filled(c.row, c.col); }

    // Position of a filled cell in the row-major enumeration, -1 if empty.
    int index_of(Cell c) const { return index_[flat(c.row, c.col)]; }
    Cell cell_at(int index) const { return cells_[index]; }

    // Nearest filled cell from `c` along `axis`: dir=+1 scans right/down,
    // dir=-1 scans left/up. A cell alone on its line is its own successor.
    Cell successor(Cell c, Axis axis, int dir) const;

    int successor_index(int index, Axis axis, int dir) const {
        const std::vector<std::int32_t>& table =
            axis == Axis::Row ? (dir > 0 ? row_next_ : row_prev_)
                              : (dir > 0 ? col_next_ : col_prev_);
        return table[index];
    }

    // One line per row, '#' filled and '.' empty.
    std::string render() const;

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    Grid() = default;
    int flat(int row, int col) const {
        return (mod1(row, rows_) - 1) * cols_ + (mod1(col, cols_) - 1);
    }
    void build_tables();

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Cell> cells_;  // sorted row-major
    std::vector<std::int32_t> index_;
    std::vector<std::int32_t> row_next_, row_prev_, col_next_, col_prev_;
};

}  // namespace ckt
