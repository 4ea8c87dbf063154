#pragma once

#include <optional>

#include "ckt/grid.hpp"
#include "ckt/moves.hpp"
#include "ckt/reduction.hpp"
#include "ckt/search.hpp"
#include "ckt/solution.hpp"

namespace ckt {

// Single backward row when n and k-1 are coprime.
SolutionRecord solve_coprime(int n, int k);

// Backward-row set of size gcd(n,k-1) + 1 when gcd(gcd(n,k-1)+1, k-1) = 2;
// cross-checked through the bishop criterion on the collapsed holed board.
SolutionRecord solve_case1(int n, int k);

// Backward rows [1, (n-1)/2] when n = m*g and k = 1 + (m-1)*g for odd
// m, g >= 3; cross-checked through the bishop tour on the holed board.
SolutionRecord solve_case2(int n, int k);

// Grows a verified all-columns-forward record by lambda steps of k-1:
// first retries the base row set on the larger board, then falls back to
// a bounded row-set search.
SolutionRecord extend_solution(const SolutionRecord& base, int lambda,
                               const SearchSpec& fallback = {});

struct BishopTourReport {
    std::vector<int> eta;        // images of 1..height+width
    std::vector<int> eta_cycle;  // orbit of 1 under eta
    bool eta_max = false;        // single cycle of full length
    bool tours = false;          // brute-force bishop tour on the board
};

// The inter-orbit permutation of the holed board's bishop walk plus an
// independent brute-force tour check. When gcd(rows, cols) equals
// height + width and gcd(height, width) = 1, both come out true.
BishopTourReport bishop_tour_check(const Grid& g, const HoleSpec& hole);

// Strategy chain: coprime, then the two closed-form families, then
// extension from the catalog, then search. nullopt when every strategy
// is exhausted within the budget.
std::optional<SolutionRecord> solve(int n, int k, const Catalog* catalog = nullptr,
                                    const SearchSpec& search_spec = {});

}  // namespace ckt
