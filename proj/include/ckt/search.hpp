#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ckt/grid.hpp"
#include "ckt/moves.hpp"
#include "ckt/solution.hpp"

namespace ckt {

struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchSpec {
    enum class Mode { ESubset, FullDirections };
    Mode mode = Mode::ESubset;
    // Global cap on the candidate enumeration; shards share one index
    // space, so the cap is identical for any shard count.
    std::uint64_t budget = 50'000'000;
    int shard_index = 0;
    int shard_count = 1;
    std::uint64_t seed = 0;  // reserved for sampled modes
};

struct ESearchResult {
    std::optional<SolutionRecord> record;
    std::uint64_t winner_index = 0;  // global candidate index of the hit
    std::uint64_t examined = 0;
    bool budget_exhausted = false;
};

// Enumerates backward-row sets size-ascending then lexicographic, prunes
// sets missing a residue class mod gcd(n, k-1), walks the orbit of (1,1)
// for the survivors, and returns the first verified hit.
ESearchResult search_e(int n, int k, const SearchSpec& spec = {});

// Runs shard_count shards on worker threads; the merged result is the hit
// with the least global candidate index, identical to the unsharded run.
ESearchResult search_e_sharded(int n, int k, int shard_count, SearchSpec spec = {});

struct FullSearchResult {
    std::uint64_t tour_count = 0;
    std::vector<std::pair<std::uint64_t, Directions>> tours;  // candidate order
    std::uint64_t examined = 0;
};

// Exhausts every direction pair on the given board. Refuses boards with
// rows + cols > 24.
FullSearchResult search_full(const Grid& g, const SearchSpec& spec = {});

struct CatalogEntry {
    std::optional<SolutionRecord> record;  // nullopt marks an open instance
    std::uint64_t searched_budget = 0;     // candidates spent on open instances
};

// Persistent map from board instance to its best known record. Stored
// records are re-verified when a catalog is parsed.
struct Catalog {
    static constexpr int format_version = 1;
    std::map<std::pair<int, int>, CatalogEntry> entries;

    // Keeps the stronger entry on conflict: better provenance rank, then
    // lexicographically smaller backward-row set.
    void add(const SolutionRecord& rec);
    void mark_open(int n, int k, std::uint64_t budget);
    const CatalogEntry* find(int n, int k) const;

    std::string to_json() const;
    static Catalog from_json(const std::string& text);
    static Catalog load(const std::string& path);
    void save(const std::string& path) const;
    std::string to_csv() const;
};

Catalog catalog_merge(const Catalog& a, const Catalog& b);

}  // namespace ckt
