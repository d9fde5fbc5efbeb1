#pragma once

#include <map>
#include <vector>

#include "ekr/core.hpp"

namespace ekr {

// Diagonal coset {base, base+1, ..., base+(q-1)*1} under coordinatewise
// mod-q addition of constant vectors. The canonical base has first
// coordinate 0, so members are in shift order = lexicographic order.
struct CosetCell {
    Word base;
    std::vector<Word> members;

    friend bool operator==(const CosetCell&, const CosetCell&) = default;
};

// All q^(n-1) cells of Z_q^n, ordered by canonical base.
std::vector<CosetCell> coset_cells(std::uint32_t q, std::uint32_t n);

// The unique cell containing w; base = w - w_1 * 1.
CosetCell cell_of(const Word& w);

// S(delta) for an arbitrary base word, in shift order. Several bases name
// the same set; this is the lookup the double count iterates over.
std::vector<Word> diagonal_coset(const Word& base);

// A binary word and its bitwise complement; the q=2 coset cell.
struct ComplementaryPair {
    Word low;
    Word high;

    friend bool operator==(const ComplementaryPair&, const ComplementaryPair&) = default;
};

std::vector<ComplementaryPair> complementary_pairs(std::uint32_t m);

// One chosen word per complementary pair -> an intersecting family of size
// 2^(m-1), and back. selection_from_family rejects families that hit any
// pair twice or not at all.
Family family_from_selection(const std::vector<Word>& choices);
std::vector<Word> selection_from_family(const Family& f);

// Prefix selectors may be empty (k = 0 selects the whole family).
using Prefix = std::vector<letter_t>;

// A sub-family picked by a prefix, together with its suffix projection.
// First-letter slices are the k = 1 case.
struct SliceView {
    Prefix selector;
    Family selected;
    Family projected;
};

SliceView prefix_slice(const Family& f, const Prefix& delta);

// Complete table over all q^k prefixes (zeros included); values sum to |f|.
std::map<Prefix, std::size_t> prefix_counts(const Family& f, std::uint32_t k);

// The q first-letter slices with projections; requires m >= 2.
std::vector<SliceView> letter_slices(const Family& f);

} // namespace ekr
