#include "ckt/reduction.hpp"

#include <algorithm>

namespace ckt {

void DSpec::validate() const {
    if (full_rows < 1) throw ParameterError("reduced board needs at least one full row");
    if (block_size < 2 || tail_gap < 1 || tail_gap > block_size - 1)
        throw ParameterError("tail gap must be in [1, block_size-1]");
    if (stride < 1) throw ParameterError("knight stride must be positive");
}

Grid build_d(const DSpec& spec) {
    spec.validate();
    return Grid::holed(spec.rows(), spec.cols(),
                       {HoleSpec::Corner::SE, 1, spec.tail_gap});
}

HoleSpec dstar_hole(const DSpec& spec) {
    return {HoleSpec::Corner::SE, spec.block_size - spec.tail_gap, spec.tail_gap};
}

Grid build_dstar(const DSpec& spec) {
    spec.validate();
    return Grid::holed((spec.full_rows + 1) * spec.block_size - spec.tail_gap,
                       spec.cols(), dstar_hole(spec));
}

Cell PhiMap::apply(int e) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), e,
                               [](const auto& p, int v) { return p.first < v; });
    if (it == pairs_.end() || it->first != e)
        throw ContractError("element " + std::to_string(e) + " outside the bijection domain");
    return it->second;
}

std::optional<int> PhiMap::inverse(Cell c) const {
    for (const auto& [e, cell] : pairs_)
        if (cell == c) return e;
    return std::nullopt;
}

PhiMap phi_from_groups(const std::vector<std::vector<int>>& groups, const DSpec& spec) {
    spec.validate();
    if (static_cast<int>(groups.size()) != spec.full_rows + 1)
        throw ParameterError("expected one element group per board row");
    PhiMap phi;
    phi.stride_ = spec.stride;
    for (int u = 1; u <= static_cast<int>(groups.size()); ++u) {
        const auto& group = groups[u - 1];
        const int expected =
            u <= spec.full_rows ? spec.block_size : spec.block_size - spec.tail_gap;
        if (static_cast<int>(group.size()) != expected)
            throw ParameterError("group " + std::to_string(u) + " has " +
                                 std::to_string(group.size()) + " elements, expected " +
                                 std::to_string(expected));
        for (int v = 1; v <= expected; ++v)
            phi.pairs_.emplace_back(group[v - 1], Cell{u, spec.stride + v});
    }
    std::sort(phi.pairs_.begin(), phi.pairs_.end());
    return phi;
}

DSpec dspec_for(const ESet& e, const DiagonalParams& p) {
    const ConditionReport rep = check_conditions(e, p);
    if (!rep.ok) throw ParameterError("E does not satisfy the chain conditions");
    const int stride = p.k - 1 - e.size();
    if (stride < 1) throw ParameterError("knight stride k - 1 - |E| must be positive");
    return {rep.full_blocks, p.block_size, rep.tail_gap, stride};
}

PhiMap phi_bijection(const ESet& e, const DiagonalParams& p, const DSpec& spec) {
    const ConditionReport rep = check_conditions(e, p);
    if (!rep.ok) throw ParameterError("E does not satisfy the chain conditions");
    if (rep.full_blocks != spec.full_rows || rep.tail_gap != spec.tail_gap ||
        p.block_size != spec.block_size)
        throw ParameterError("board shape does not match the E decomposition");
    std::vector<std::vector<int>> groups;
    for (int j : rep.chain) {
        std::vector<int> group;
        for (int d = 1 + (j - 1) * p.block_size; d <= j * p.block_size; ++d)
            if (e.contains(d)) group.push_back(d);
        groups.push_back(std::move(group));
    }
    return phi_from_groups(groups, spec);
}

std::optional<Cell> first_visit(const StepFn& step, Cell from,
                                const std::function<bool(Cell)>& target, int max_steps) {
    Cell cur = from;
    for (int t = 0; t < max_steps; ++t) {
        cur = step(cur);
        if (target(cur)) return cur;
    }
    return std::nullopt;
}

Stack stack_vertical(const Grid& top, const Grid& bottom) {
    if (top.cols() != bottom.cols())
        throw ParameterError("stacked blocks must share the column count");
    std::vector<Cell> cells = top.filled_cells();
    for (Cell c : bottom.filled_cells()) cells.push_back({c.row + top.rows(), c.col});
    return {Grid::from_cells(top.rows() + bottom.rows(), top.cols(), std::move(cells)),
            top.rows()};
}

CellMap phi2_map(const Stack& s, const StepFn& step) {
    CellMap map;
    const int cap = s.grid.filled_count();
    for (Cell c : s.grid.filled_cells()) {
        if (!s.in_bottom(c)) continue;
        auto hit = first_visit(step, c, [&](Cell x) { return s.in_bottom(x); }, cap);
        if (!hit)
            throw ContractError("walk from " + to_string(c) +
                                " never re-entered the bottom block");
        map.emplace_back(s.to_local(c), s.to_local(*hit));
    }
    return map;
}

StackStep bishop_on_stack() {
    return [](const Stack& s) { return bishop(s.grid); };
}

StackStep bishop_below_reversed_above() {
    return [](const Stack& s) -> StepFn {
        return [&s](Cell c) {
            return s.in_bottom(c) ? bishop_step(s.grid, c) : reversed_bishop_step(s.grid, c);
        };
    };
}

EquivalenceReport check_equivalence(const Grid& top_a, const Grid& top_b,
                                    const Grid& bottom, const StackStep& phi,
                                    const StackStep& sigma) {
    const Stack sa = stack_vertical(top_a, bottom);
    const Stack sb = stack_vertical(top_b, bottom);
    const StepFn fa = phi(sa);
    const StepFn fb = sigma(sb);

    EquivalenceReport rep;
    rep.lhs_map = phi2_map(sa, fa);
    rep.rhs_map = phi2_map(sb, fb);
    rep.agrees = true;
    for (std::size_t i = 0; i < rep.lhs_map.size(); ++i) {
        const Cell local = rep.lhs_map[i].first;
        const Cell global_a = sa.from_local(local);
        const Cell global_b = sb.from_local(local);
        const bool exit_a = !sa.in_bottom(fa(global_a));
        const bool exit_b = !sb.in_bottom(fb(global_b));
        if (exit_a != exit_b || rep.lhs_map[i].second != rep.rhs_map[i].second) {
            rep.agrees = false;
            if (!rep.witness) rep.witness = local;
        }
    }
    return rep;
}

MainEqvReport verify_main_eqv(int n, int k, const ESet& e) {
    const DiagonalParams p = diagonal_params(n, k);
    MainEqvReport rep;
    rep.dspec = dspec_for(e, p);
    const Grid d = build_d(rep.dspec);
    const Grid dstar = build_dstar(rep.dspec);
    const PhiMap phi = phi_bijection(e, p, rep.dspec);
    const StepFn knight = a_knight(d, rep.dspec.stride);

    rep.pointwise.agrees = true;
    for (int x : e.elems) {
        const int lhs = s_e_apply(e, p, x);
        auto hit = first_visit(knight, phi.apply(x),
                               [&](Cell c) { return phi.in_block(c); }, d.filled_count());
        if (!hit) throw ContractError("knight walk never re-entered the return block");
        const auto rhs = phi.inverse(*hit);
        if (!rhs) throw ContractError("return cell " + to_string(*hit) + " has no preimage");
        rep.pointwise.lhs_map.emplace_back(Cell{x, x}, Cell{lhs, lhs});
        rep.pointwise.rhs_map.emplace_back(Cell{x, x}, Cell{*rhs, *rhs});
        if (lhs != *rhs) {
            rep.pointwise.agrees = false;
            if (!rep.pointwise.witness) rep.pointwise.witness = Cell{x, x};
        }
    }

    const Grid a = Grid::cyclic_diagonal(n, k);
    rep.tour_a = is_tour(a, crazy_knight(a, Directions::from_backward_rows(n, n, e.elems)));
    rep.tour_d = is_tour(d, knight);
    rep.tour_dstar = is_tour(dstar, bishop(dstar));
    rep.agrees = rep.pointwise.agrees && rep.tour_a == rep.tour_d && rep.tour_d == rep.tour_dstar;
    return rep;
}

DemoAddResult demo_add(int modulus, int stride, int x, int block_size) {
    if (modulus < 3) throw ParameterError("modulus must be at least 3");
    if (stride < 1) throw ParameterError("stride must be positive");
    if (x < 1 || x > modulus) throw ParameterError("operand must be in [1, modulus]");
    const int g = block_size;
    if (g < 2 || g >= modulus || (modulus + stride) % g != 0 || stride % g == 0)
        throw ParameterError("block size must divide modulus + stride, not stride");
    DemoAddResult out;
    out.modulus = modulus;
    out.stride = stride;
    out.x = x;
    out.dspec = {(modulus + stride % g) / g - 1, g, stride % g, stride};

    const Grid d = build_d(out.dspec);
    std::vector<std::vector<int>> groups;
    for (int lo = 1; lo <= modulus; lo += g) {
        std::vector<int> group;
        for (int v = lo; v <= std::min(lo + g - 1, modulus); ++v) group.push_back(v);
        groups.push_back(std::move(group));
    }
    const PhiMap phi = phi_from_groups(groups, out.dspec);

    Cell cur = phi.apply(x);
    out.trace.push_back(cur);
    for (int t = 1; t <= d.filled_count(); ++t) {
        int idx = d.index_of(cur);
        for (int s = 0; s < stride; ++s) idx = d.successor_index(idx, Axis::Row, 1);
        const Cell mid = d.cell_at(idx);
        if (phi.in_block(mid)) {
            out.alpha = t;
            out.trace.push_back(mid);
            const auto res = phi.inverse(mid);
            if (!res) throw ContractError("landing cell has no preimage");
            out.result = *res;
            if (out.result != mod1(x + stride, modulus))
                throw ContractError("board walk disagrees with modular addition");
            return out;
        }
        cur = d.cell_at(d.successor_index(idx, Axis::Col, 1));
        out.trace.push_back(cur);
    }
    throw ContractError("knight walk never re-entered the return block");
}

DemoAddResult demo_add(int modulus, int stride, int x) {
    auto usable = [&](int g) {
        return g >= 2 && g < modulus && (modulus + stride) % g == 0 && stride % g != 0 &&
               (modulus + stride % g) / g - 1 >= 1;
    };
    if (usable(5)) return demo_add(modulus, stride, x, 5);
    for (int g = 2; g < modulus; ++g)
        if (usable(g)) return demo_add(modulus, stride, x, g);
    throw ParameterError("no block size fits modulus " + std::to_string(modulus) +
                         " and stride " + std::to_string(stride));
}

}  // namespace ckt
