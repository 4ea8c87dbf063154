#pragma once

#include <utility>
#include <vector>

#include "ckt/grid.hpp"

namespace ckt {

// Shape parameters of the diagonal move machinery for a cyclically
// k-diagonal board of odd size n > k >= 3: [1,n] splits into block_count
// blocks of block_size = gcd(n, k-1), and the diagonal rotation jumps
// block_shift blocks at a time.
struct DiagonalParams {
    int n = 0;
    int k = 0;
    int block_size = 0;   // gcd(n, k-1)
    int block_count = 0;  // n / block_size
    int block_shift = 0;  // (k-1) / block_size
};

DiagonalParams diagonal_params(int n, int k);

// Sorted nonempty set of backward-row indices; rows listed here move
// leftward while every column points down.
struct ESet {
    std::vector<int> elems;

    static ESet of(std::vector<int> elems, int n);
    bool contains(int e) const;
    int size() const { return static_cast<int>(elems.size()); }
    // 1-based position of e, -1 if absent.
    int rank(int e) const;
};

struct IntervalDecomposition {
    int block_size = 0;
    std::vector<int> theta;                      // block visiting order, theta[0] = 1
    std::vector<std::pair<int, int>> blocks;     // inclusive [lo, hi] of block j at blocks[j-1]
};

IntervalDecomposition theta_order(const DiagonalParams& p);

// Block index j with d in [1+(j-1)*block_size, j*block_size].
int block_of(const DiagonalParams& p, int d);

// The diagonal rotation: d + n - (k-1) reduced into [1, n]. Lands in the
// next block of the visiting order, same residue class mod block_size.
int theta_apply(const DiagonalParams& p, int d);

// Position shift inside E: the element (k-1) ranks later, cyclically.
int omega_apply(const ESet& e, const DiagonalParams& p, int d);

// Diagonal restriction of the crazy knight: omega first on backward rows,
// then the rotation.
int s_d_apply(const ESet& e, const DiagonalParams& p, int d);

// Diagonal move function with blocks disjoint from E removed from the
// rotation order.
struct ReducedSD {
    DiagonalParams params;
    ESet e;
    std::vector<int> theta;  // surviving blocks, visiting order preserved

    std::vector<int> domain() const;
    int apply(int d) const;
};

// Removes the lowest-indexed block disjoint from E; throws ParameterError
// when every block meets E.
ReducedSD reduce_interval(const ESet& e, const DiagonalParams& p);
// Repeats the removal until every surviving block meets E.
ReducedSD reduce_intervals_fully(const ESet& e, const DiagonalParams& p);

// Outcome of the shape test on E: the blocks meeting E must form a chain
// of the visiting order that is increasing in the natural order, with all
// blocks full except the last, which keeps its first block_size - tail_gap
// elements.
struct ConditionReport {
    bool ok = false;
    int full_blocks = 0;  // blocks wholly inside E
    int tail_gap = 0;     // elements trimmed from the chain's last block
    int start_block = 0;  // witness rotation start
    std::vector<int> chain;
};

ConditionReport check_conditions(const ESet& e, const DiagonalParams& p);

// First-return of the diagonal move to E: omega, then the rotation until
// the image lands back in E. Requires a conforming E.
int s_e_apply(const ESet& e, const DiagonalParams& p, int d);

// Both solvability conditions for E with all columns forward: E covers
// every residue class mod gcd(n, k-1), and the orbit of (1,1) visits
// (e,e) for every e in E.
bool solves_via_e(const ESet& e, int n, int k);

}  // namespace ckt
