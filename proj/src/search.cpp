#include "ckt/search.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace ckt {

namespace {

bool next_combination(std::vector<int>& comb, int n) {
    const int t = static_cast<int>(comb.size());
    int i = t - 1;
    while (i >= 0 && comb[i] == n - (t - 1 - i)) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < t; ++j) comb[j] = comb[j - 1] + 1;
    return true;
}

SolutionRecord make_e_record(int n, int k, const std::vector<int>& rows, Provenance prov) {
    SolutionRecord rec;
    rec.n = n;
    rec.k = k;
    rec.e_rows = rows;
    rec.dirs = Directions::from_backward_rows(n, n, rows);
    rec.provenance = prov;
    return rec;
}

}  // namespace

ESearchResult search_e(int n, int k, const SearchSpec& spec) {
    if (k < 3 || n <= k) throw ParameterError("need n > k >= 3");
    if (spec.shard_count < 1 || spec.shard_index < 0 || spec.shard_index >= spec.shard_count)
        throw ParameterError("shard index outside [0, shard_count)");

    ESearchResult out;
    if (n % 2 == 0 || k % 2 == 0) return out;  // nk even: no tour exists

    const Grid a = Grid::cyclic_diagonal(n, k);
    const int g = std::gcd(n, k - 1);
    const int count = a.filled_count();
    const int start = a.index_of({1, 1});

    std::vector<int> cell_row(count), diag_of(count, 0);
    for (int i = 0; i < count; ++i) {
        const Cell c = a.cell_at(i);
        cell_row[i] = c.row;
        if (c.row == c.col) diag_of[i] = c.row;
    }

    std::vector<std::uint32_t> diag_stamp(n + 1, 0);
    std::vector<std::uint8_t> backward(n + 1, 0);
    std::vector<std::uint32_t> class_stamp(g, 0);
    std::uint32_t epoch = 0;

    std::uint64_t index = 0;
    for (int size = 1; size <= n; ++size) {
        std::vector<int> comb(size);
        std::iota(comb.begin(), comb.end(), 1);
        do {
            if (index >= spec.budget) {
                out.budget_exhausted = true;
                return out;
            }
            const std::uint64_t my_index = index++;
            if (static_cast<int>(my_index % spec.shard_count) != spec.shard_index) continue;
            ++out.examined;
            ++epoch;

            // Every residue class mod g must be represented.
            int classes = 0;
            for (int e : comb)
                if (class_stamp[e % g] != epoch) {
                    class_stamp[e % g] = epoch;
                    ++classes;
                }
            if (classes < g) continue;

            for (int e : comb) backward[e] = 1;
            int cur = start;
            do {
                if (diag_of[cur]) diag_stamp[diag_of[cur]] = epoch;
                const int mid = a.successor_index(
                    cur, Axis::Row, backward[cell_row[cur]] ? -1 : 1);
                cur = a.successor_index(mid, Axis::Col, 1);
            } while (cur != start);
            for (int e : comb) backward[e] = 0;

            bool covered = true;
            for (int e : comb)
                if (diag_stamp[e] != epoch) {
                    covered = false;
                    break;
                }
            if (!covered) continue;

            SolutionRecord rec = make_e_record(n, k, comb, {Provenance::Kind::Search});
            if (!is_tour(a, crazy_knight(a, rec.dirs))) continue;
            rec.verified = true;
            out.record = std::move(rec);
            out.winner_index = my_index;
            return out;
        } while (next_combination(comb, n));
    }
    return out;
}

ESearchResult search_e_sharded(int n, int k, int shard_count, SearchSpec spec) {
    if (shard_count < 1) throw ParameterError("shard count must be positive");
    spec.shard_count = shard_count;
    std::vector<ESearchResult> results(shard_count);
    std::vector<std::thread> workers;
    workers.reserve(shard_count);
    for (int s = 0; s < shard_count; ++s)
        workers.emplace_back([&, s] {
            SearchSpec mine = spec;
            mine.shard_index = s;
            results[s] = search_e(n, k, mine);
        });
    for (auto& w : workers) w.join();

    ESearchResult merged;
    for (const ESearchResult& r : results) {
        merged.examined += r.examined;
        merged.budget_exhausted = merged.budget_exhausted || r.budget_exhausted;
        if (r.record && (!merged.record || r.winner_index < merged.winner_index)) {
            merged.record = r.record;
            merged.winner_index = r.winner_index;
        }
    }
    if (merged.record) merged.budget_exhausted = false;
    return merged;
}

FullSearchResult search_full(const Grid& g, const SearchSpec& spec) {
    const int m = g.rows(), n = g.cols();
    if (m + n > 24)
        throw ParameterError("direction space 2^" + std::to_string(m + n) + " too large");
    if (spec.shard_count < 1 || spec.shard_index < 0 || spec.shard_index >= spec.shard_count)
        throw ParameterError("shard index outside [0, shard_count)");

    FullSearchResult out;
    const int count = g.filled_count();
    std::vector<int> cell_row(count), cell_col(count);
    for (int i = 0; i < count; ++i) {
        cell_row[i] = g.cell_at(i).row;
        cell_col[i] = g.cell_at(i).col;
    }

    const std::uint64_t total = std::uint64_t{1} << (m + n);
    for (std::uint64_t cand = 0; cand < total && cand < spec.budget; ++cand) {
        if (static_cast<int>(cand % spec.shard_count) != spec.shard_index) continue;
        ++out.examined;
        const std::uint64_t r_mask = cand >> n;
        const std::uint64_t c_mask = cand & ((std::uint64_t{1} << n) - 1);

        int cur = 0;
        int len = 0;
        do {
            const int mid = g.successor_index(
                cur, Axis::Row, (r_mask >> (cell_row[cur] - 1)) & 1 ? -1 : 1);
            cur = g.successor_index(
                mid, Axis::Col, (c_mask >> (cell_col[mid] - 1)) & 1 ? -1 : 1);
            ++len;
        } while (cur != 0);

        if (len == count) {
            Directions dirs = Directions::all_forward(m, n);
            for (int i = 0; i < m; ++i)
                if ((r_mask >> i) & 1) dirs.row_dir[i] = -1;
            for (int j = 0; j < n; ++j)
                if ((c_mask >> j) & 1) dirs.col_dir[j] = -1;
            out.tours.emplace_back(cand, std::move(dirs));
            ++out.tour_count;
        }
    }
    return out;
}

// ---- catalog --------------------------------------------------------------

namespace {

using nlohmann::json;

json provenance_json(const Provenance& p) {
    switch (p.kind) {
        case Provenance::Kind::Coprime: return {{"kind", "coprime"}};
        case Provenance::Kind::Case1: return {{"kind", "case1"}};
        case Provenance::Kind::Case2: return {{"kind", "case2"}};
        case Provenance::Kind::Extension:
            return {{"kind", "extension"},
                    {"base_n", p.base_n},
                    {"lambda", p.lambda},
                    {"reused_base", p.reused_base}};
        case Provenance::Kind::Search: return {{"kind", "search"}};
    }
    throw ContractError("unknown provenance kind");
}

Provenance provenance_from(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    Provenance p;
    if (kind == "coprime") p.kind = Provenance::Kind::Coprime;
    else if (kind == "case1") p.kind = Provenance::Kind::Case1;
    else if (kind == "case2") p.kind = Provenance::Kind::Case2;
    else if (kind == "search") p.kind = Provenance::Kind::Search;
    else if (kind == "extension") {
        p.kind = Provenance::Kind::Extension;
        p.base_n = j.at("base_n").get<int>();
        p.lambda = j.at("lambda").get<int>();
        p.reused_base = j.value("reused_base", false);
    } else {
        throw ParameterError("unknown provenance kind '" + kind + "'");
    }
    return p;
}

}  // namespace

void Catalog::add(const SolutionRecord& rec) {
    if (!rec.verified) throw ParameterError("only verified records enter the catalog");
    auto [it, inserted] = entries.try_emplace({rec.n, rec.k}, CatalogEntry{rec, 0});
    if (inserted) return;
    CatalogEntry& mine = it->second;
    if (!mine.record) {
        mine = {rec, 0};
        return;
    }
    const int lhs = provenance_rank(mine.record->provenance);
    const int rhs = provenance_rank(rec.provenance);
    if (rhs < lhs) {
        mine.record = rec;
    } else if (rhs == lhs) {
        const auto& a = mine.record->e_rows;
        const auto& b = rec.e_rows;
        if (b && (!a || *b < *a)) mine.record = rec;
    }
}

void Catalog::mark_open(int n, int k, std::uint64_t budget) {
    auto [it, inserted] = entries.try_emplace({n, k}, CatalogEntry{std::nullopt, budget});
    if (!inserted && !it->second.record)
        it->second.searched_budget = std::max(it->second.searched_budget, budget);
}

const CatalogEntry* Catalog::find(int n, int k) const {
    auto it = entries.find({n, k});
    return it == entries.end() ? nullptr : &it->second;
}

std::string Catalog::to_json() const {
    json doc;
    doc["format_version"] = format_version;
    doc["entries"] = json::array();
    for (const auto& [key, entry] : entries) {
        json e;
        e["n"] = key.first;
        e["k"] = key.second;
        if (entry.record) {
            const SolutionRecord& rec = *entry.record;
            e["status"] = "solved";
            json r = json::array(), c = json::array();
            for (auto v : rec.dirs.row_dir) r.push_back(static_cast<int>(v));
            for (auto v : rec.dirs.col_dir) c.push_back(static_cast<int>(v));
            e["R"] = std::move(r);
            e["C"] = std::move(c);
            if (rec.e_rows) e["E"] = *rec.e_rows;
            e["provenance"] = provenance_json(rec.provenance);
        } else {
            e["status"] = "open";
            e["searched_budget"] = entry.searched_budget;
        }
        doc["entries"].push_back(std::move(e));
    }
    return doc.dump(2) + "\n";
}

Catalog Catalog::from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw ParameterError(std::string("catalog parse error: ") + ex.what());
    }
    if (doc.value("format_version", -1) != format_version)
        throw ParameterError("catalog format_version mismatch: migration required");

    Catalog cat;
    for (const json& e : doc.at("entries")) {
        const int n = e.at("n").get<int>();
        const int k = e.at("k").get<int>();
        if (e.at("status") == "open") {
            cat.mark_open(n, k, e.value("searched_budget", std::uint64_t{0}));
            continue;
        }
        SolutionRecord rec;
        rec.n = n;
        rec.k = k;
        for (int v : e.at("R")) rec.dirs.row_dir.push_back(static_cast<std::int8_t>(v));
        for (int v : e.at("C")) rec.dirs.col_dir.push_back(static_cast<std::int8_t>(v));
        if (e.contains("E")) rec.e_rows = e.at("E").get<std::vector<int>>();
        rec.provenance = provenance_from(e.at("provenance"));
        if (!reverify(rec))
            throw ParameterError("catalog record for n=" + std::to_string(n) +
                                 " k=" + std::to_string(k) + " failed re-verification");
        rec.verified = true;
        cat.add(rec);
    }
    return cat;
}

Catalog Catalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open catalog '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

void Catalog::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write catalog '" + path + "'");
    out << to_json();
}

std::string Catalog::to_csv() const {
    std::ostringstream os;
    os << "n,k,|E|,E,provenance\n";
    for (const auto& [key, entry] : entries) {
        os << key.first << "," << key.second << ",";
        if (entry.record && entry.record->e_rows) {
            const auto& rows = *entry.record->e_rows;
            os << rows.size() << ",";
            for (std::size_t i = 0; i < rows.size(); ++i)
                os << (i ? " " : "") << rows[i];
            os << "," << to_string(entry.record->provenance);
        } else if (entry.record) {
            os << ",," << to_string(entry.record->provenance);
        } else {
            os << ",,open(budget=" << entry.searched_budget << ")";
        }
        os << "\n";
    }
    return os.str();
}

Catalog catalog_merge(const Catalog& a, const Catalog& b) {
    Catalog out = a;
    for (const auto& [key, entry] : b.entries) {
        if (entry.record)
            out.add(*entry.record);
        else
            out.mark_open(key.first, key.second, entry.searched_budget);
    }
    return out;
}

}  // namespace ckt
