#include "ckt/diagonal.hpp"

#include <algorithm>
#include <numeric>

#include "ckt/moves.hpp"

namespace ckt {

DiagonalParams diagonal_params(int n, int k) {
    if (k < 3 || n <= k) throw ParameterError("need n > k >= 3");
    if (n % 2 == 0 || k % 2 == 0) throw ParameterError("n and k must be odd");
    DiagonalParams p;
    p.n = n;
    p.k = k;
    p.block_size = std::gcd(n, k - 1);
    p.block_count = n / p.block_size;
    p.block_shift = (k - 1) / p.block_size;
    return p;
}

ESet ESet::of(std::vector<int> elems, int n) {
    if (elems.empty()) throw ParameterError("row set must be nonempty");
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.front() < 1 || elems.back() > n)
        throw ParameterError("row set must be a subset of [1, " + std::to_string(n) + "]");
    ESet e;
    e.elems = std::move(elems);
    return e;
}

bool ESet::contains(int e) const {
    return std::binary_search(elems.begin(), elems.end(), e);
}

int ESet::rank(int e) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), e);
    if (it == elems.end() || *it != e) return -1;
    return static_cast<int>(it - elems.begin()) + 1;
}

IntervalDecomposition theta_order(const DiagonalParams& p) {
    IntervalDecomposition dec;
    dec.block_size = p.block_size;
    dec.theta.reserve(p.block_count);
    int j = 1;
    for (int t = 0; t < p.block_count; ++t) {
        dec.theta.push_back(j);
        j = mod1(j - p.block_shift, p.block_count);
    }
    for (int b = 1; b <= p.block_count; ++b)
        dec.blocks.emplace_back(1 + (b - 1) * p.block_size, b * p.block_size);
    return dec;
}

int block_of(const DiagonalParams& p, int d) { return (d - 1) / p.block_size + 1; }

int theta_apply(const DiagonalParams& p, int d) {
    if (d < 1 || d > p.n) throw ParameterError("value outside [1, n]");
    return mod1(d + p.n - (p.k - 1), p.n);
}

int omega_apply(const ESet& e, const DiagonalParams& p, int d) {
    const int r = e.rank(d);
    if (r < 0) throw ContractError("omega argument " + std::to_string(d) + " not in E");
    return e.elems[(r - 1 + (p.k - 1)) % e.size()];
}

int s_d_apply(const ESet& e, const DiagonalParams& p, int d) {
    return theta_apply(p, e.contains(d) ? omega_apply(e, p, d) : d);
}

std::vector<int> ReducedSD::domain() const {
    std::vector<int> out;
    std::vector<int> sorted = theta;
    std::sort(sorted.begin(), sorted.end());
    for (int j : sorted)
        for (int d = 1 + (j - 1) * params.block_size; d <= j * params.block_size; ++d)
            out.push_back(d);
    return out;
}

int ReducedSD::apply(int d) const {
    const int from = e.contains(d) ? omega_apply(e, params, d) : d;
    const int j = block_of(params, from);
    auto it = std::find(theta.begin(), theta.end(), j);
    if (it == theta.end())
        throw ContractError("value " + std::to_string(d) + " outside the reduced domain");
    const int succ = theta[(it - theta.begin() + 1) % theta.size()];
    return 1 + (succ - 1) * params.block_size + (from - 1) % params.block_size;
}

ReducedSD reduce_interval(const ESet& e, const DiagonalParams& p) {
    IntervalDecomposition dec = theta_order(p);
    std::vector<bool> meets(p.block_count + 1, false);
    for (int x : e.elems) meets[block_of(p, x)] = true;
    int removed = 0;
    for (int j = 1; j <= p.block_count; ++j)
        if (!meets[j]) {
            removed = j;
            break;
        }
    if (removed == 0) throw ParameterError("nothing to reduce: every block meets E");

    ReducedSD r;
    r.params = p;
    r.e = e;
    for (int j : dec.theta)
        if (j != removed) r.theta.push_back(j);
    return r;
}

ReducedSD reduce_intervals_fully(const ESet& e, const DiagonalParams& p) {
    std::vector<bool> meets(p.block_count + 1, false);
    for (int x : e.elems) meets[block_of(p, x)] = true;
    ReducedSD r;
    r.params = p;
    r.e = e;
    for (int j : theta_order(p).theta)
        if (meets[j]) r.theta.push_back(j);
    return r;
}

ConditionReport check_conditions(const ESet& e, const DiagonalParams& p) {
    ConditionReport rep;
    if (e.elems.back() > p.n) return rep;

    std::vector<std::vector<int>> members(p.block_count + 1);
    for (int x : e.elems) members[block_of(p, x)].push_back(x);
    std::vector<int> touched;
    for (int j = 1; j <= p.block_count; ++j)
        if (!members[j].empty()) touched.push_back(j);
    const int len = static_cast<int>(touched.size());

    // The visiting order fixes consecutive differences only, so every
    // rotation is tried; the first conforming start wins.
    for (int start = 1; start <= p.block_count; ++start) {
        std::vector<int> chain;
        int j = start;
        for (int t = 0; t < len; ++t) {
            chain.push_back(j);
            j = mod1(j - p.block_shift, p.block_count);
        }
        std::vector<int> sorted = chain;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != touched) continue;
        if (!std::is_sorted(chain.begin(), chain.end())) continue;

        bool full_ok = true;
        for (int t = 0; t + 1 < len; ++t)
            if (static_cast<int>(members[chain[t]].size()) != p.block_size) full_ok = false;
        if (!full_ok) continue;

        const int last = chain.back();
        const int kept = static_cast<int>(members[last].size());
        const int gap = p.block_size - kept;
        if (gap < 1 || gap > p.block_size - 1) continue;
        bool prefix = true;
        for (int t = 0; t < kept; ++t)
            if (members[last][t] != 1 + (last - 1) * p.block_size + t) prefix = false;
        if (!prefix) continue;

        rep.ok = true;
        rep.full_blocks = len - 1;
        rep.tail_gap = gap;
        rep.start_block = start;
        rep.chain = chain;
        return rep;
    }
    return rep;
}

int s_e_apply(const ESet& e, const DiagonalParams& p, int d) {
    if (!e.contains(d)) throw ContractError("argument " + std::to_string(d) + " not in E");
    if (!check_conditions(e, p).ok)
        throw ParameterError("E does not satisfy the chain conditions");
    int x = omega_apply(e, p, d);
    for (int t = 1; t <= p.block_count; ++t) {
        x = theta_apply(p, x);
        if (e.contains(x)) return x;
    }
    throw ContractError("rotation never returned to E");
}

bool solves_via_e(const ESet& e, int n, int k) {
    const DiagonalParams p = diagonal_params(n, k);
    if (e.elems.back() > n) throw ParameterError("E must be a subset of [1, n]");

    std::vector<bool> classes(p.block_size, false);
    for (int x : e.elems) classes[x % p.block_size] = true;
    if (!std::all_of(classes.begin(), classes.end(), [](bool b) { return b; })) return false;

    const Grid a = Grid::cyclic_diagonal(n, k);
    const Directions dirs = Directions::from_backward_rows(n, n, e.elems);
    std::vector<bool> diag_hit(n + 1, false);
    const Cell start{1, 1};
    Cell cur = start;
    do {
        if (cur.row == cur.col) diag_hit[cur.row] = true;
        cur = crazy_knight_step(a, dirs, cur);
    } while (cur != start);
    return std::all_of(e.elems.begin(), e.elems.end(), [&](int x) { return diag_hit[x]; });
}

}  // namespace ckt
