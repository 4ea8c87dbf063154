#pragma once

// Test-only utilities: scan-based step oracles that never touch the grid's
// successor tables, plus generators for random instances.

#include <map>
#include <random>
#include <set>
#include <vector>

#include "ckt/grid.hpp"
#include "ckt/moves.hpp"

namespace testutil {

// Nearest filled cell by brute scan, one square at a time.
inline ckt::Cell naive_successor(const ckt::Grid& g, ckt::Cell c, ckt::Axis axis, int dir) {
    for (int t = 1;; ++t) {
        ckt::Cell probe = c;
        if (axis == ckt::Axis::Row)
            probe.col = ckt::mod1(c.col + dir * t, g.cols());
        else
            probe.row = ckt::mod1(c.row + dir * t, g.rows());
        if (g.is_filled(probe)) return probe;
    }
}

inline ckt::Cell naive_crazy(const ckt::Grid& g, const ckt::Directions& dirs, ckt::Cell c) {
    ckt::Cell mid = naive_successor(g, c, ckt::Axis::Row, dirs.row_dir[c.row - 1]);
    return naive_successor(g, mid, ckt::Axis::Col, dirs.col_dir[mid.col - 1]);
}

inline ckt::Cell naive_a_knight(const ckt::Grid& g, int a, ckt::Cell c) {
    for (int t = 0; t < (a > 0 ? a : -a); ++t)
        c = naive_successor(g, c, ckt::Axis::Row, a > 0 ? 1 : -1);
    return naive_successor(g, c, ckt::Axis::Col, 1);
}

// Orbit partition computed with std::map bookkeeping only.
template <typename Step>
std::vector<std::vector<ckt::Cell>> naive_cycles(const ckt::Grid& g, Step step) {
    std::set<ckt::Cell> seen;
    std::vector<std::vector<ckt::Cell>> cycles;
    for (ckt::Cell start : g.filled_cells()) {
        if (seen.count(start)) continue;
        std::vector<ckt::Cell> cycle;
        ckt::Cell cur = start;
        do {
            seen.insert(cur);
            cycle.push_back(cur);
            cur = step(cur);
        } while (cur != start);
        cycles.push_back(cycle);
    }
    return cycles;
}

template <typename Step>
bool naive_tour(const ckt::Grid& g, Step step) {
    auto cycles = naive_cycles(g, step);
    return cycles.size() == 1 &&
           static_cast<int>(cycles[0].size()) == g.filled_count();
}

// Random fill pattern with every row and column repaired to nonempty.
inline ckt::Grid random_grid(std::mt19937& rng, int max_rows = 6, int max_cols = 6,
                             double fill = 0.6) {
    std::uniform_int_distribution<int> rd(1, max_rows), cd(1, max_cols);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const int rows = rd(rng), cols = cd(rng);
    std::vector<std::vector<bool>> mask(rows + 1, std::vector<bool>(cols + 1, false));
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c) mask[r][c] = coin(rng) < fill;
    for (int r = 1; r <= rows; ++r) {
        bool any = false;
        for (int c = 1; c <= cols; ++c) any = any || mask[r][c];
        if (!any) mask[r][std::uniform_int_distribution<int>(1, cols)(rng)] = true;
    }
    for (int c = 1; c <= cols; ++c) {
        bool any = false;
        for (int r = 1; r <= rows; ++r) any = any || mask[r][c];
        if (!any) mask[std::uniform_int_distribution<int>(1, rows)(rng)][c] = true;
    }
    std::vector<ckt::Cell> cells;
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c)
            if (mask[r][c]) cells.push_back({r, c});
    return ckt::Grid::from_cells(rows, cols, cells);
}

inline ckt::Directions random_directions(std::mt19937& rng, int rows, int cols) {
    ckt::Directions d = ckt::Directions::all_forward(rows, cols);
    std::bernoulli_distribution coin(0.5);
    for (auto& v : d.row_dir) v = coin(rng) ? 1 : -1;
    for (auto& v : d.col_dir) v = coin(rng) ? 1 : -1;
    return d;
}

inline std::vector<int> random_subset(std::mt19937& rng, int n) {
    std::bernoulli_distribution coin(0.4);
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (coin(rng)) out.push_back(i);
    if (out.empty()) out.push_back(std::uniform_int_distribution<int>(1, n)(rng));
    return out;
}

}  // namespace testutil
