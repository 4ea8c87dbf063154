#include "ckt/grid.hpp"

#include <random>

#include "ckt/io.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ckt;

TEST_CASE("cyclic diagonal boards") {
    const Grid g = Grid::cyclic_diagonal(15, 7);
    CHECK(g.filled_count() == 105);
    for (int r = 1; r <= 15; ++r)
        for (int c = 1; c <= 15; ++c)
            CHECK(g.is_filled(r, c) == (mod1(r - c + 1, 15) <= 7));

    // full diagonal family is the completely filled board
    CHECK(Grid::cyclic_diagonal(4, 4) == Grid::filled(4, 4));

    // direct enumeration of the three diagonals of the 5x5 board
    std::vector<Cell> expected;
    for (int r = 1; r <= 5; ++r)
        for (int c = 1; c <= 5; ++c)
            if ((((r - c) % 5) + 5) % 5 <= 2) expected.push_back({r, c});
    const Grid g53 = Grid::cyclic_diagonal(5, 3);
    CHECK(g53.filled_cells() == expected);
    CHECK(g53.filled_count() == 15);

    CHECK_THROWS_AS(Grid::cyclic_diagonal(5, 6), ParameterError);
    CHECK_THROWS_AS(Grid::cyclic_diagonal(5, 0), ParameterError);
}

TEST_CASE("cyclic diagonal boards have k cells per line") {
    for (int n : {5, 9, 15})
        for (int k = 1; k <= n; k += 2) {
            const Grid g = Grid::cyclic_diagonal(n, k);
            for (int r = 1; r <= n; ++r) {
                int in_row = 0, in_col = 0;
                for (int c = 1; c <= n; ++c) {
                    in_row += g.is_filled(r, c);
                    in_col += g.is_filled(c, r);
                }
                CHECK(in_row == k);
                CHECK(in_col == k);
            }
        }
}

TEST_CASE("completely filled boards") {
    CHECK(Grid::filled(1, 1).filled_count() == 1);
    CHECK(Grid::filled(7, 12).filled_count() == 84);
    const Grid g = Grid::filled(3, 3);
    CHECK(g.successor({1, 3}, Axis::Row, 1) == Cell{1, 1});
    CHECK_THROWS_AS(Grid::filled(0, 3), ParameterError);
}

TEST_CASE("holed boards") {
    const Grid sw = Grid::holed(10, 15, {HoleSpec::Corner::SW, 1, 10});
    for (int c = 1; c <= 15; ++c) CHECK(sw.is_filled(10, c) == (c > 10));
    CHECK(sw.filled_count() == 10 * 15 - 10);

    const Grid se = Grid::holed(17, 18, {HoleSpec::Corner::SE, 3, 4});
    for (int r = 1; r <= 17; ++r)
        for (int c = 1; c <= 18; ++c)
            CHECK(se.is_filled(r, c) == !(r >= 15 && c >= 15));

    const Grid tiny = Grid::holed(2, 2, {HoleSpec::Corner::SE, 1, 1});
    CHECK(tiny.filled_count() == 3);
    CHECK_FALSE(tiny.is_filled(2, 2));
    CHECK(tiny.render() == "##\n#.\n");

    CHECK_THROWS_AS(Grid::holed(3, 3, {HoleSpec::Corner::SW, 3, 1}), ParameterError);
    CHECK_THROWS_AS(Grid::holed(3, 3, {HoleSpec::Corner::SW, 1, 3}), ParameterError);

    for (int m : {4, 7})
        for (int n : {5, 9})
            for (int a = 1; a < m; ++a)
                for (int b = 1; b < n; ++b)
                    for (auto corner : {HoleSpec::Corner::SW, HoleSpec::Corner::SE})
                        CHECK(Grid::holed(m, n, {corner, a, b}).filled_count() ==
                              m * n - a * b);
}

TEST_CASE("row expansion") {
    // 2x5 board with one empty cell grows to 6x5 with a 3x1 empty block
    const Grid d = Grid::from_cells(2, 5, {{1, 1}, {1, 3}, {1, 4}, {1, 5},
                                           {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}});
    const Grid expanded = d.kron_rows(3);
    CHECK(expanded.rows() == 6);
    CHECK(expanded.cols() == 5);
    CHECK(expanded.filled_count() == 3 * d.filled_count());
    for (int r = 1; r <= 3; ++r) CHECK_FALSE(expanded.is_filled(r, 2));
    for (int r = 4; r <= 6; ++r) CHECK(expanded.is_filled(r, 2));

    CHECK(d.kron_rows(1) == d);

    const Grid board = Grid::holed(3, 12, {HoleSpec::Corner::SE, 1, 2});
    CHECK(board.filled_count() == 34);
    CHECK(board.kron_rows(7).filled_count() == 238);

    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        const Grid g = testutil::random_grid(rng);
        CHECK(g.kron_rows(3).filled_count() == 3 * g.filled_count());
    }
}

TEST_CASE("successor queries") {
    const Grid g = Grid::cyclic_diagonal(15, 7);
    CHECK(g.successor({10, 10}, Axis::Row, 1) == Cell{10, 4});
    CHECK(g.successor({10, 4}, Axis::Col, 1) == Cell{4, 4});
    CHECK(Grid::filled(3, 3).successor({3, 2}, Axis::Col, 1) == Cell{1, 2});
    CHECK_THROWS_AS(g.successor({1, 2}, Axis::Row, 1), ContractError);
}

TEST_CASE("successors round-trip and match the scan oracle") {
    std::mt19937 rng(42);
    for (int t = 0; t < 60; ++t) {
        const Grid g = testutil::random_grid(rng);
        CHECK(g.filled_count() >= std::max(g.rows(), g.cols()));
        for (Cell c : g.filled_cells())
            for (Axis axis : {Axis::Row, Axis::Col})
                for (int dir : {1, -1}) {
                    const Cell fwd = g.successor(c, axis, dir);
                    CHECK(g.is_filled(fwd));
                    CHECK(fwd == testutil::naive_successor(g, c, axis, dir));
                    CHECK(g.successor(fwd, axis, -dir) == c);
                }
    }
}

TEST_CASE("boards with an empty line are rejected") {
    CHECK_THROWS_AS(Grid::from_cells(2, 2, {{1, 1}, {1, 2}}), ParameterError);
    CHECK_THROWS_AS(Grid::from_cells(2, 2, {{1, 1}, {2, 1}}), ParameterError);
    CHECK_THROWS_AS(Grid::from_cells(2, 2, {{1, 3}}), ParameterError);
}

TEST_CASE("grid documents round-trip losslessly") {
    std::mt19937 rng(77);
    for (int t = 0; t < 40; ++t) {
        const Grid g = testutil::random_grid(rng, 7, 7);
        CHECK(grid_from_json(grid_to_json(g)) == g);
    }
    CHECK(grid_from_json("{\"cyclic_diagonal\": {\"n\": 9, \"k\": 5}}") ==
          Grid::cyclic_diagonal(9, 5));
    CHECK(grid_from_json(
              "{\"holed\": {\"m\":4,\"n\":6,\"corner\":\"se\",\"a\":1,\"b\":2}}") ==
          Grid::holed(4, 6, {HoleSpec::Corner::SE, 1, 2}));
    CHECK_THROWS_AS(grid_from_json("not json"), ParameterError);
    CHECK_THROWS_AS(grid_from_json("{\"rows\": 2, \"cols\": 2}"), ParameterError);
    CHECK_THROWS_AS(grid_from_json("{\"rows\": 2, \"cols\": 2, \"filled\": [[1]]}"),
                    ParameterError);
}
