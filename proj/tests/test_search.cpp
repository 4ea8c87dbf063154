#include "ckt/search.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include "ckt/constructions.hpp"
#include "ckt/diagonal.hpp"
#include "doctest.h"

using namespace ckt;

TEST_CASE("row-set search") {
    const ESearchResult hit = search_e(5, 3);
    REQUIRE(hit.record.has_value());
    CHECK(hit.record->e_rows == std::vector<int>{1});
    CHECK(hit.record->verified);
    CHECK(hit.winner_index == 0);

    const ESearchResult big = search_e(15, 7);
    REQUIRE(big.record.has_value());
    CHECK(big.record->verified);
    CHECK(reverify(*big.record));

    // even side: no tour can exist, the space is dead on arrival
    const ESearchResult even = search_e(16, 7);
    CHECK_FALSE(even.record.has_value());
    CHECK_FALSE(even.budget_exhausted);
    CHECK(even.examined == 0);

    SearchSpec tiny;
    tiny.budget = 3;
    const ESearchResult starved = search_e(15, 7, tiny);
    CHECK_FALSE(starved.record.has_value());
    CHECK(starved.budget_exhausted);

    CHECK_THROWS_AS(search_e(15, 17), ParameterError);
}

TEST_CASE("sharded search is deterministic") {
    const ESearchResult one = search_e_sharded(15, 7, 1);
    const ESearchResult four = search_e_sharded(15, 7, 4);
    const ESearchResult eight = search_e_sharded(15, 7, 8);
    REQUIRE(one.record.has_value());
    REQUIRE(four.record.has_value());
    REQUIRE(eight.record.has_value());
    CHECK(one.winner_index == four.winner_index);
    CHECK(one.winner_index == eight.winner_index);
    CHECK(one.record->e_rows == four.record->e_rows);
    CHECK(one.record->e_rows == eight.record->e_rows);

    // shards partition the space: per-shard hits cover the merged one
    SearchSpec spec;
    spec.shard_count = 3;
    std::uint64_t best = UINT64_MAX;
    for (int s = 0; s < 3; ++s) {
        spec.shard_index = s;
        const ESearchResult r = search_e(9, 5, spec);
        if (r.record) best = std::min(best, r.winner_index);
    }
    CHECK(best == search_e(9, 5).winner_index);
}

TEST_CASE("pruned row sets never solve") {
    // sets skipping a residue class fail the tour check too
    const Grid a = Grid::cyclic_diagonal(15, 7);
    std::mt19937 rng(41);
    std::bernoulli_distribution coin(0.4);
    int sampled = 0;
    while (sampled < 50) {
        std::vector<int> rows;
        std::vector<bool> seen(3, false);
        for (int r = 1; r <= 15; ++r)
            if (coin(rng)) {
                rows.push_back(r);
                seen[r % 3] = true;
            }
        if (rows.empty() || (seen[0] && seen[1] && seen[2])) continue;
        CHECK_FALSE(is_tour(a, crazy_knight(a, Directions::from_backward_rows(15, 15, rows))));
        ++sampled;
    }
}

TEST_CASE("full direction search") {
    CHECK(search_full(Grid::filled(2, 2)).tour_count == 0);
    CHECK(search_full(Grid::filled(3, 3)).tour_count == 24);
    CHECK(search_full(Grid::filled(1, 1)).tour_count == 4);
    CHECK_THROWS_AS(search_full(Grid::filled(13, 12)), ParameterError);

    // tours really tour, and sharded runs find the same set
    const FullSearchResult all = search_full(Grid::filled(3, 4));
    for (const auto& [index, dirs] : all.tours) {
        const Grid g = Grid::filled(3, 4);
        CHECK(is_tour(g, crazy_knight(g, dirs)));
    }
    SearchSpec spec;
    spec.shard_count = 4;
    std::vector<std::uint64_t> indexes;
    for (int s = 0; s < 4; ++s) {
        spec.shard_index = s;
        for (const auto& [index, dirs] : search_full(Grid::filled(3, 4), spec).tours)
            indexes.push_back(index);
    }
    std::sort(indexes.begin(), indexes.end());
    std::vector<std::uint64_t> expect;
    for (const auto& [index, dirs] : all.tours) expect.push_back(index);
    CHECK(indexes == expect);
}

TEST_CASE("existence pattern for completely filled boards") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            const bool exists = search_full(Grid::filled(m, n)).tour_count > 0;
            CHECK(exists == !(m % 2 == 0 && n % 2 == 0));
        }
}

TEST_CASE("catalog bookkeeping") {
    Catalog cat;
    cat.add(solve_coprime(5, 3));
    cat.add(solve_coprime(9, 5));
    cat.mark_open(11, 5, 1000);

    // merge with empty is the identity
    const Catalog merged = catalog_merge(cat, Catalog{});
    CHECK(merged.entries.size() == cat.entries.size());

    // closed form beats search on conflicts
    Catalog other;
    {
        ESearchResult found = search_e(5, 3);
        other.add(*found.record);
    }
    const Catalog both = catalog_merge(other, cat);
    CHECK(both.find(5, 3)->record->provenance.kind == Provenance::Kind::Coprime);

    // two shards of one sweep merge to the union
    Catalog s1, s2;
    s1.add(solve_coprime(5, 3));
    s2.add(solve_coprime(7, 3));
    s2.add(solve_coprime(9, 5));
    CHECK(catalog_merge(s1, s2).entries.size() == 3);

    // solved entries win over open markers
    Catalog open_side;
    open_side.mark_open(5, 3, 42);
    CHECK(catalog_merge(open_side, s1).find(5, 3)->record.has_value());
    CHECK(catalog_merge(s1, open_side).find(5, 3)->record.has_value());
}

TEST_CASE("catalog round trip") {
    Catalog cat;
    cat.add(solve_coprime(5, 3));
    cat.add(solve_case2(9, 7));
    cat.mark_open(25, 17, 9999);

    const std::string text = cat.to_json();
    const Catalog back = Catalog::from_json(text);
    CHECK(back.entries.size() == 3);
    CHECK(back.find(5, 3)->record->verified);
    CHECK(back.find(9, 7)->record->provenance.kind == Provenance::Kind::Case2);
    CHECK_FALSE(back.find(25, 17)->record.has_value());
    CHECK(back.find(25, 17)->searched_budget == 9999);

    const std::string csv = back.to_csv();
    CHECK(csv.find("n,k,|E|,E,provenance\n") == 0);
    CHECK(csv.find("5,3,1,1,coprime") != std::string::npos);
    CHECK(csv.find("9,7,4,1 2 3 4,case2") != std::string::npos);

    // version mismatch is a migration error
    CHECK_THROWS_AS(Catalog::from_json("{\"format_version\": 99, \"entries\": []}"),
                    ParameterError);
    // a stored record that is not a tour fails re-verification on load
    std::string bad = "{\"format_version\": 1, \"entries\": [{\"n\": 15, \"k\": 7, "
                      "\"status\": \"solved\", \"R\": [-1";
    for (int i = 1; i < 15; ++i) bad += ",1";
    bad += "], \"C\": [1";
    for (int i = 1; i < 15; ++i) bad += ",1";
    bad += "], \"E\": [1], \"provenance\": {\"kind\": \"search\"}}]}";
    CHECK_THROWS_AS(Catalog::from_json(bad), ParameterError);

    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "ckt_catalog_test.json";
    cat.save(path.string());
    const Catalog loaded = Catalog::load(path.string());
    CHECK(loaded.entries.size() == 3);
    std::filesystem::remove(path);
}
