#pragma once

#include <optional>
#include <vector>

#include "ekr/core.hpp"

namespace ekr {

enum class SearchMode {
    EnumerateAll,
    CountOnly,
    FirstNonstar,
};

struct SearchLimits {
    std::uint64_t node_budget = 1'000'000'000;
    std::uint64_t wall_budget_ms = 300'000;
    std::uint32_t workers = 1;
};

struct SearchSpec {
    std::uint32_t q = 2;
    std::uint32_t m = 1;
    std::uint32_t r = 2;
    std::uint64_t target_size = 0; // 0 means the bound q^(m-1)
    SearchMode mode = SearchMode::EnumerateAll;
    SearchLimits limits;
};

struct SearchResult {
    std::vector<Family> families; // canonically sorted; elided in count-only mode
    std::uint64_t count = 0;
    std::uint64_t nodes_explored = 0;
    std::uint64_t pruned = 0;
    bool exhausted = false; // required for any certificate use
};

// Depth-first transversal over the coset cells in base order, one word per
// cell, shift ascending, pruning any partial choice whose newest word kills
// the r-wise condition. Complete for maximum families because a family of
// the bound size meets every cell exactly once.
SearchResult run_search(const SearchSpec& spec);

SearchResult enumerate_max_intersecting(std::uint32_t q, std::uint32_t m,
                                        const SearchLimits& limits = {},
                                        SearchMode mode = SearchMode::EnumerateAll);

SearchResult enumerate_max_rwise(std::uint32_t q, std::uint32_t m, std::uint32_t r,
                                 const SearchLimits& limits = {},
                                 SearchMode mode = SearchMode::EnumerateAll);

struct MaxFamily {
    std::uint64_t size = 0;
    Family witness;
};

// Exact maximum size of an r-wise intersecting family, with a witness.
// r in {2, 3} is answered by the bound plus a star; larger r runs a
// branch-and-bound over the cells and needs q^m <= 1024.
MaxFamily max_family_size(std::uint32_t q, std::uint32_t m, std::uint32_t r);

// Lexicographically first maximum family that is not a star, if any.
std::optional<Family> first_nonstar_max(std::uint32_t q, std::uint32_t m, std::uint32_t r,
                                        const SearchLimits& limits = {});

} // namespace ekr
