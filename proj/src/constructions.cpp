#include "ckt/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ckt/diagonal.hpp"

namespace ckt {

std::string to_string(const Provenance& p) {
    switch (p.kind) {
        case Provenance::Kind::Coprime: return "coprime";
        case Provenance::Kind::Case1: return "case1";
        case Provenance::Kind::Case2: return "case2";
        case Provenance::Kind::Search: return "search";
        case Provenance::Kind::Extension: {
            std::ostringstream os;
            os << "extension(base=" << p.base_n << ";lambda=" << p.lambda << ";"
               << (p.reused_base ? "reused" : "searched") << ")";
            return os.str();
        }
    }
    throw ContractError("unknown provenance kind");
}

int provenance_rank(const Provenance& p) {
    switch (p.kind) {
        case Provenance::Kind::Coprime:
        case Provenance::Kind::Case1:
        case Provenance::Kind::Case2: return 0;
        case Provenance::Kind::Extension: return 1;
        case Provenance::Kind::Search: return 2;
    }
    throw ContractError("unknown provenance kind");
}

bool reverify(const SolutionRecord& rec) {
    const Grid a = Grid::cyclic_diagonal(rec.n, rec.k);
    rec.dirs.validate(a);
    return is_tour(a, crazy_knight(a, rec.dirs));
}

namespace {

SolutionRecord verified_e_record(int n, int k, const std::vector<int>& rows,
                                 Provenance prov) {
    SolutionRecord rec;
    rec.n = n;
    rec.k = k;
    rec.e_rows = rows;
    rec.dirs = Directions::from_backward_rows(n, n, rows);
    rec.provenance = prov;
    rec.verified = reverify(rec);
    return rec;
}

}  // namespace

SolutionRecord solve_coprime(int n, int k) {
    const DiagonalParams p = diagonal_params(n, k);
    if (p.block_size != 1)
        throw ParameterError("not applicable: n and k-1 share a factor");
    SolutionRecord rec = verified_e_record(n, k, {1}, {Provenance::Kind::Coprime});
    if (!rec.verified) throw ContractError("coprime construction failed the tour check");
    return rec;
}

SolutionRecord solve_case1(int n, int k) {
    const DiagonalParams p = diagonal_params(n, k);
    const int g = p.block_size;
    if (g < 3) throw ParameterError("not applicable: gcd(n, k-1) below 3");
    if (std::gcd(g + 1, k - 1) != 2)
        throw ParameterError("not applicable: gcd(gcd(n,k-1)+1, k-1) is not 2");
    const int stride = k - 2 - g;
    if (stride < 1) throw ParameterError("not applicable: k - 2 - gcd(n,k-1) must be positive");

    // One full block plus the head of its visiting-order successor; the
    // lowest start whose successor lies above it keeps the output stable.
    std::vector<int> rows;
    for (int start = 1; start <= p.block_count; ++start) {
        const int succ = mod1(start - p.block_shift, p.block_count);
        if (succ <= start) continue;
        for (int d = 1 + (start - 1) * g; d <= start * g; ++d) rows.push_back(d);
        rows.push_back(1 + (succ - 1) * g);
        break;
    }
    if (rows.empty())
        throw ContractError("no conforming backward-row set among the rotations");

    SolutionRecord rec = verified_e_record(n, k, rows, {Provenance::Kind::Case1});
    const Grid collapsed = Grid::holed(stride, g + 1, {HoleSpec::Corner::SW, 1, 1});
    const BishopTourReport bishops =
        bishop_tour_check(collapsed, {HoleSpec::Corner::SW, 1, 1});
    if (!rec.verified || !bishops.tours)
        throw ContractError("construction failed its tour checks");
    return rec;
}

SolutionRecord solve_case2(int n, int k) {
    const DiagonalParams p = diagonal_params(n, k);
    const int g = p.block_size, m = p.block_count;
    if (g < 3 || m < 3 || g % 2 == 0 || m % 2 == 0 || k != 1 + (m - 1) * g)
        throw ParameterError("not applicable: need n = m*g, k = 1+(m-1)*g, odd m,g >= 3");

    // First (m+1)/2 blocks, with the last one losing its tail of (g+1)/2.
    std::vector<int> rows;
    for (int d = 1; d <= ((m + 1) / 2) * g - (g + 1) / 2; ++d) rows.push_back(d);

    SolutionRecord rec = verified_e_record(n, k, rows, {Provenance::Kind::Case2});
    const ESet e = ESet::of(rows, n);
    const DSpec spec = dspec_for(e, p);
    const Grid dstar = build_dstar(spec);
    if (!rec.verified || !is_tour(dstar, bishop(dstar)))
        throw ContractError("construction failed its tour checks");
    return rec;
}

SolutionRecord extend_solution(const SolutionRecord& base, int lambda,
                               const SearchSpec& fallback) {
    if (!base.verified) throw ParameterError("extension needs a verified base record");
    if (!base.dirs.columns_all_forward())
        throw ParameterError("extension needs all columns forward");
    if (!base.e_rows) throw ParameterError("extension needs the backward-row set");
    if (lambda < 0) throw ParameterError("extension steps must be nonnegative");
    if (lambda == 0) return base;

    const int n2 = base.n + lambda * (base.k - 1);
    Provenance prov{Provenance::Kind::Extension, base.n, lambda, true};
    SolutionRecord rec = verified_e_record(n2, base.k, *base.e_rows, prov);
    if (rec.verified) return rec;

    ESearchResult found = search_e(n2, base.k, fallback);
    if (!found.record)
        throw SearchExhausted("no solution found for n=" + std::to_string(n2) +
                              " k=" + std::to_string(base.k) + " within budget");
    prov.reused_base = false;
    found.record->provenance = prov;
    return *found.record;
}

BishopTourReport bishop_tour_check(const Grid& g, const HoleSpec& hole) {
    if (g != Grid::holed(g.rows(), g.cols(), hole))
        throw ParameterError("grid does not match the described holed board");
    const int a = hole.height, b = hole.width, s = a + b;

    BishopTourReport rep;
    rep.eta.resize(s);
    for (int i = 1; i <= s; ++i) rep.eta[i - 1] = i > a ? i - a : i + b;

    int cur = 1;
    do {
        rep.eta_cycle.push_back(cur);
        cur = rep.eta[cur - 1];
    } while (cur != 1 && static_cast<int>(rep.eta_cycle.size()) <= s);
    rep.eta_max = static_cast<int>(rep.eta_cycle.size()) == s && cur == 1;

    rep.tours = is_tour(g, bishop(g));
    return rep;
}

std::optional<SolutionRecord> solve(int n, int k, const Catalog* catalog,
                                    const SearchSpec& search_spec) {
    diagonal_params(n, k);  // validates shape and parity

    try {
        return solve_coprime(n, k);
    } catch (const ParameterError&) {
    }
    try {
        return solve_case2(n, k);
    } catch (const ParameterError&) {
    }
    try {
        return solve_case1(n, k);
    } catch (const ParameterError&) {
    }

    if (catalog) {
        for (int base_n = n - (k - 1); base_n > k; base_n -= (k - 1)) {
            const CatalogEntry* entry = catalog->find(base_n, k);
            if (!entry || !entry->record || !entry->record->verified ||
                !entry->record->dirs.columns_all_forward() || !entry->record->e_rows)
                continue;
            try {
                return extend_solution(*entry->record, (n - base_n) / (k - 1), search_spec);
            } catch (const SearchExhausted&) {
                break;  // extension search covers the same space as the direct one
            }
        }
    }

    ESearchResult found = search_e(n, k, search_spec);
    if (found.record) return found.record;
    return std::nullopt;
}

}  // namespace ckt
