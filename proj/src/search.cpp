#include "ekr/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "ekr/partitions.hpp"

namespace ekr {
namespace {

using Clock = std::chrono::steady_clock;

// A search is admitted only while the raw transversal tree stays below
// 2^40 leaves; budgets handle everything finer-grained than that.
constexpr double kMaxLeafBits = 40.0;

std::uint64_t agree_mask(const Word& x, const Word& y) {
    const auto& a = x.letters();
    const auto& b = y.letters();
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == b[j]) mask |= std::uint64_t{1} << j;
    }
    return mask;
}

struct SharedBudget {
    std::uint64_t node_budget;
    Clock::time_point deadline;
    std::atomic<std::uint64_t> placements{0};
    std::atomic<bool> stop{false};

    // Placement-granular budget; the wall clock is polled sparsely.
    bool admit() {
        if (stop.load(std::memory_order_relaxed)) return false;
        std::uint64_t n = placements.fetch_add(1, std::memory_order_relaxed) + 1;
        if (n > node_budget || ((n & 1023) == 0 && Clock::now() > deadline)) {
            stop.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }
};

struct SeedOutcome {
    std::vector<Family> families;
    std::uint64_t count = 0;
    std::uint64_t pruned = 0;
    std::optional<Family> nonstar;
};

class Walker {
public:
    Walker(const SearchSpec& spec, const std::vector<CosetCell>& cells,
           std::uint64_t subset_size, SharedBudget& budget, SeedOutcome& out)
        : spec_(spec), cells_(cells), subset_size_(subset_size), budget_(budget), out_(out) {
        chosen_.reserve(cells.size());
        masks_.reserve(cells.size());
    }

    // Returns false when the budget tripped or a first-nonstar hit ended
    // the walk early.
    bool explore_from(const std::vector<letter_t>& seed_shifts) {
        for (letter_t c : seed_shifts) {
            if (!try_place(cells_[chosen_.size()].members[c])) return true; // seed dead, subtree done
        }
        bool complete = descend();
        chosen_.clear();
        masks_.clear();
        return complete;
    }

private:
    bool try_place(const Word& w) {
        if (compatible(w)) {
            if (!budget_.admit()) return false;
            chosen_.push_back(w);
            return true;
        }
        ++out_.pruned;
        return false;
    }

    bool compatible(const Word& w) {
        const std::size_t d = chosen_.size();
        masks_.resize(d);
        for (std::size_t j = 0; j < d; ++j) {
            masks_[j] = agree_mask(chosen_[j], w);
            if (masks_[j] == 0) return false; // a dead pair dooms every superset
        }
        if (subset_size_ == 3) {
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t k = j + 1; k < d; ++k) {
                    if ((masks_[j] & masks_[k]) == 0) return false;
                }
            }
            return true;
        }
        if (subset_size_ <= 3) return true;
        return subsets_alive(0, subset_size_ - 1, ~std::uint64_t{0});
    }

    // Anchored at the incoming word: the common coordinates of {w} plus a
    // chosen subset are the AND of the per-pair masks against w.
    bool subsets_alive(std::size_t next, std::uint64_t need, std::uint64_t alive) {
        if (need == 0) return true;
        for (std::size_t i = next; i + need <= masks_.size(); ++i) {
            std::uint64_t narrowed = alive & masks_[i];
            if (narrowed == 0) return false;
            if (!subsets_alive(i + 1, need - 1, narrowed)) return false;
        }
        return true;
    }

    bool descend() {
        if (budget_.stop.load(std::memory_order_relaxed)) return false;
        if (chosen_.size() == cells_.size()) return handle_leaf();
        const CosetCell& cell = cells_[chosen_.size()];
        for (const Word& w : cell.members) {
            if (!try_place(w)) {
                if (budget_.stop.load(std::memory_order_relaxed)) return false;
                continue;
            }
            bool keep_going = descend();
            chosen_.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }

    bool handle_leaf() {
        switch (spec_.mode) {
            case SearchMode::CountOnly:
                ++out_.count;
                return true;
            case SearchMode::EnumerateAll:
                ++out_.count;
                out_.families.emplace_back(Alphabet(spec_.q), spec_.m, chosen_);
                return true;
            case SearchMode::FirstNonstar: {
                Family f(Alphabet(spec_.q), spec_.m, chosen_);
                if (!classify_star(f).has_value()) {
                    out_.nonstar = std::move(f);
                    return false;
                }
                return true;
            }
        }
        return true;
    }

    const SearchSpec& spec_;
    const std::vector<CosetCell>& cells_;
    std::uint64_t subset_size_;
    SharedBudget& budget_;
    SeedOutcome& out_;
    std::vector<Word> chosen_;
    std::vector<std::uint64_t> masks_;
};

void validate(const SearchSpec& spec, std::uint64_t& target) {
    Alphabet alphabet(spec.q);
    if (spec.m < 1) throw invalid_input("word length m must be at least 1");
    if (spec.r < 2) throw invalid_input("intersection order r must be at least 2");
    if (spec.limits.workers < 1) throw invalid_input("worker count must be at least 1");
    require_universe(spec.q, spec.m);
    const std::uint64_t bound = *checked_pow(spec.q, spec.m - 1);
    target = spec.target_size == 0 ? bound : spec.target_size;
    if (target != bound) {
        throw invalid_input("transversal search enumerates families of the bound size " +
                            std::to_string(bound) + " only");
    }
    double leaf_bits = static_cast<double>(bound) * std::log2(static_cast<double>(spec.q));
    if (leaf_bits > kMaxLeafBits) {
        throw invalid_input(
            "instance is infeasible for exhaustive search (q^(m-1) cells with q "
            "choices each); guaranteed feasible: q=2 m<=5, q=3 m<=3, q=4 m<=2");
    }
    if (spec.m > 64) throw invalid_input("search supports word length up to 64");
}

std::vector<std::vector<letter_t>> seed_prefixes(std::uint32_t q, std::uint32_t depth) {
    std::vector<std::vector<letter_t>> seeds;
    std::uint64_t n = *checked_pow(q, depth);
    seeds.reserve(n);
    for (std::uint64_t rank = 0; rank < n; ++rank) {
        seeds.push_back(Word::from_rank(q, depth, rank).letters());
    }
    return seeds;
}

} // namespace

SearchResult run_search(const SearchSpec& spec) {
    std::uint64_t target = 0;
    validate(spec, target);

    const std::vector<CosetCell> cells = coset_cells(spec.q, spec.m);
    const std::uint64_t subset_size = std::min<std::uint64_t>(spec.r, target);

    SharedBudget budget;
    budget.node_budget = spec.limits.node_budget;
    budget.deadline = Clock::now() + std::chrono::milliseconds(spec.limits.wall_budget_ms);

    SearchResult result;

    if (spec.mode == SearchMode::FirstNonstar) {
        // Sequential walk in cell order: for q = 2 (the only alphabet with
        // non-star maxima) this emits leaves in family lexicographic order,
        // so the first hit is the lexicographically first witness.
        SeedOutcome out;
        Walker walker(spec, cells, subset_size, budget, out);
        walker.explore_from({});
        result.exhausted = !budget.stop.load();
        result.pruned = out.pruned;
        result.nodes_explored = budget.placements.load();
        if (out.nonstar) {
            result.families.push_back(std::move(*out.nonstar));
            result.count = 1;
            result.exhausted = true; // a witness settles the query
        }
        return result;
    }

    // Deterministic split: the first two cell choices form independent
    // subtrees whose outcomes merge in seed order whatever the worker count.
    const std::uint32_t seed_depth = std::min<std::uint32_t>(2, static_cast<std::uint32_t>(cells.size()));
    const auto seeds = seed_prefixes(spec.q, seed_depth);
    std::vector<SeedOutcome> outcomes(seeds.size());

    std::atomic<std::size_t> next_seed{0};
    auto drain = [&] {
        std::size_t idx;
        while ((idx = next_seed.fetch_add(1)) < seeds.size()) {
            if (budget.stop.load(std::memory_order_relaxed)) break;
            SeedOutcome& out = outcomes[idx];
            Walker walker(spec, cells, subset_size, budget, out);
            walker.explore_from(seeds[idx]);
        }
    };

    const std::uint32_t workers =
        std::min<std::uint32_t>(spec.limits.workers, static_cast<std::uint32_t>(seeds.size()));
    if (workers <= 1) {
        drain();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::uint32_t t = 0; t < workers; ++t) pool.emplace_back(drain);
        for (auto& th : pool) th.join();
    }

    result.exhausted = !budget.stop.load();
    result.nodes_explored = budget.placements.load();
    for (SeedOutcome& out : outcomes) {
        result.count += out.count;
        result.pruned += out.pruned;
        for (Family& f : out.families) result.families.push_back(std::move(f));
    }
    std::sort(result.families.begin(), result.families.end());
    return result;
}

SearchResult enumerate_max_intersecting(std::uint32_t q, std::uint32_t m,
                                        const SearchLimits& limits, SearchMode mode) {
    SearchSpec spec{q, m, 2, 0, mode, limits};
    return run_search(spec);
}

SearchResult enumerate_max_rwise(std::uint32_t q, std::uint32_t m, std::uint32_t r,
                                 const SearchLimits& limits, SearchMode mode) {
    SearchSpec spec{q, m, r, 0, mode, limits};
    return run_search(spec);
}

namespace {

// Branch and bound for r >= 4: one-or-none per cell, pruned by the
// remaining-cell bound. The first full transversal it meets is a star, so
// the bound collapses the rest of the tree.
struct BnB {
    const std::vector<CosetCell>& cells;
    std::uint64_t subset_cap;
    std::uint64_t budget_left = 100'000'000;
    std::vector<Word> chosen = {};
    std::vector<std::uint64_t> masks = {};
    std::size_t best_size = 0;
    std::vector<Word> best_words = {};

    bool compatible(const Word& w) {
        masks.resize(chosen.size());
        for (std::size_t j = 0; j < chosen.size(); ++j) {
            masks[j] = agree_mask(chosen[j], w);
            if (masks[j] == 0) return false;
        }
        std::uint64_t need = std::min<std::uint64_t>(subset_cap, chosen.size() + 1) - 1;
        return subsets_alive(0, need, ~std::uint64_t{0});
    }

    bool subsets_alive(std::size_t next, std::uint64_t need, std::uint64_t alive) {
        if (need == 0) return true;
        for (std::size_t i = next; i + need <= masks.size(); ++i) {
            std::uint64_t narrowed = alive & masks[i];
            if (narrowed == 0) return false;
            if (!subsets_alive(i + 1, need - 1, narrowed)) return false;
        }
        return true;
    }

    void dfs(std::size_t cell_idx) {
        if (budget_left == 0) throw budget_exceeded("branch-and-bound budget exhausted");
        --budget_left;
        if (chosen.size() + (cells.size() - cell_idx) <= best_size) return;
        if (cell_idx == cells.size()) {
            best_size = chosen.size();
            best_words = chosen;
            return;
        }
        for (const Word& w : cells[cell_idx].members) {
            if (!compatible(w)) continue;
            chosen.push_back(w);
            dfs(cell_idx + 1);
            chosen.pop_back();
        }
        dfs(cell_idx + 1); // leave this cell empty
    }
};

} // namespace

MaxFamily max_family_size(std::uint32_t q, std::uint32_t m, std::uint32_t r) {
    Alphabet alphabet(q);
    if (m < 1) throw invalid_input("word length m must be at least 1");
    if (r < 2) throw invalid_input("intersection order r must be at least 2");
    const std::uint64_t bound = max_bound(q, m);

    if (r <= 3) {
        // The coset occupancy bound meets the star from below.
        return MaxFamily{bound, star(q, m, StarSpec{1, 0})};
    }

    if (require_universe(q, m) > 1024) {
        throw invalid_input("max_family_size with r > 3 needs q^m <= 1024");
    }
    std::vector<CosetCell> cells = coset_cells(q, m);
    BnB bnb{cells, r};
    bnb.dfs(0);
    Family witness(alphabet, m, std::move(bnb.best_words));
    return MaxFamily{bnb.best_size, std::move(witness)};
}

std::optional<Family> first_nonstar_max(std::uint32_t q, std::uint32_t m, std::uint32_t r,
                                        const SearchLimits& limits) {
    SearchSpec spec{q, m, r, 0, SearchMode::FirstNonstar, limits};
    SearchResult result = run_search(spec);
    if (!result.exhausted) throw budget_exceeded("search budget exhausted before coverage");
    if (result.families.empty()) return std::nullopt;
    return std::move(result.families.front());
}

} // namespace ekr
