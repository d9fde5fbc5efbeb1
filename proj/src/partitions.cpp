#include "ekr/partitions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ekr {
namespace {

Word shifted(const Word& base, letter_t c) {
    std::vector<letter_t> letters = base.letters();
    for (letter_t& v : letters) v = (v + c) % base.q();
    return Word(base.q(), std::move(letters));
}

} // namespace

std::vector<Word> diagonal_coset(const Word& base) {
    std::vector<Word> members;
    members.reserve(base.q());
    for (letter_t c = 0; c < base.q(); ++c) members.push_back(shifted(base, c));
    return members;
}

CosetCell cell_of(const Word& w) {
    if (w.length() < 1) throw invalid_input("cell_of requires a nonempty word");
    const std::uint32_t q = w.q();
    letter_t first = w.letters()[0];
    Word base = shifted(w, (q - first) % q);
    std::vector<Word> members = diagonal_coset(base);
    return CosetCell{std::move(base), std::move(members)};
}

std::vector<CosetCell> coset_cells(std::uint32_t q, std::uint32_t n) {
    Alphabet alphabet(q);
    if (n < 1) throw invalid_input("word length must be at least 1");
    require_universe(q, n);
    const std::uint64_t num_cells = *checked_pow(q, n - 1);
    std::vector<CosetCell> cells;
    cells.reserve(num_cells);
    // Canonical bases are exactly {0} x Z_q^(n-1), in lexicographic order.
    for (std::uint64_t rank = 0; rank < num_cells; ++rank) {
        Word tail = Word::from_rank(q, n - 1, rank);
        std::vector<letter_t> letters;
        letters.reserve(n);
        letters.push_back(0);
        letters.insert(letters.end(), tail.letters().begin(), tail.letters().end());
        Word base(q, std::move(letters));
        std::vector<Word> members = diagonal_coset(base);
        cells.push_back(CosetCell{std::move(base), std::move(members)});
    }
    return cells;
}

std::vector<ComplementaryPair> complementary_pairs(std::uint32_t m) {
    std::vector<ComplementaryPair> pairs;
    for (CosetCell& cell : coset_cells(2, m)) {
        pairs.push_back(ComplementaryPair{std::move(cell.members[0]), std::move(cell.members[1])});
    }
    return pairs;
}

Family family_from_selection(const std::vector<Word>& choices) {
    if (choices.empty()) throw invalid_input("selection must contain at least one word");
    const std::uint32_t m = choices[0].length();
    if (m < 1) throw invalid_input("selection words must have length at least 1");
    for (const Word& w : choices) {
        if (w.q() != 2) throw invalid_input("selections are defined for q = 2 only");
        if (w.length() != m) throw invalid_input("selection words must share one length");
    }
    const std::uint64_t expected = require_universe(2, m) / 2;
    if (choices.size() != expected) {
        throw invalid_input("selection must pick exactly one word per pair (" +
                            std::to_string(expected) + " words, got " +
                            std::to_string(choices.size()) + ")");
    }
    std::set<Word> bases;
    for (const Word& w : choices) {
        if (!bases.insert(cell_of(w).base).second) {
            throw invalid_input("selection picks both words of a complementary pair");
        }
    }
    return Family(Alphabet(2), m, choices);
}

std::vector<Word> selection_from_family(const Family& f) {
    if (f.q() != 2) throw invalid_input("selections are defined for q = 2 only");
    if (f.length() < 1) throw invalid_input("selections require length at least 1");
    const std::uint64_t pairs = require_universe(2, f.length()) / 2;
    std::map<Word, Word> by_base;
    for (const Word& w : f.words()) {
        auto [it, fresh] = by_base.emplace(cell_of(w).base, w);
        if (!fresh) {
            throw invalid_input("family contains both words of the pair with base " +
                                it->first.str());
        }
    }
    if (by_base.size() != pairs) {
        throw invalid_input("family misses " + std::to_string(pairs - by_base.size()) +
                            " complementary pair(s)");
    }
    std::vector<Word> choices;
    choices.reserve(pairs);
    for (auto& [base, w] : by_base) choices.push_back(std::move(w));
    return choices;
}

SliceView prefix_slice(const Family& f, const Prefix& delta) {
    const std::uint32_t m = f.length();
    const std::uint32_t k = static_cast<std::uint32_t>(delta.size());
    if (k > m) throw invalid_input("prefix longer than the words");
    for (letter_t v : delta) {
        if (v >= f.q()) throw invalid_input("prefix letter out of range");
    }
    std::vector<Word> selected;
    std::vector<Word> projected;
    for (const Word& w : f.words()) {
        if (!std::equal(delta.begin(), delta.end(), w.letters().begin())) continue;
        selected.push_back(w);
        projected.emplace_back(f.q(), std::vector<letter_t>(w.letters().begin() + k,
                                                            w.letters().end()));
    }
    return SliceView{delta, Family(f.alphabet(), m, std::move(selected)),
                     Family(f.alphabet(), m - k, std::move(projected))};
}

std::map<Prefix, std::size_t> prefix_counts(const Family& f, std::uint32_t k) {
    if (k > f.length()) throw invalid_input("prefix length exceeds word length");
    const std::uint64_t table = require_universe(f.q(), k);
    std::map<Prefix, std::size_t> counts;
    for (std::uint64_t rank = 0; rank < table; ++rank) {
        counts.emplace(Word::from_rank(f.q(), k, rank).letters(), 0);
    }
    for (const Word& w : f.words()) {
        Prefix head(w.letters().begin(), w.letters().begin() + k);
        ++counts[head];
    }
    return counts;
}

std::vector<SliceView> letter_slices(const Family& f) {
    if (f.length() < 2) throw invalid_input("letter slices require m >= 2");
    std::vector<SliceView> slices;
    slices.reserve(f.q());
    for (letter_t i = 0; i < f.q(); ++i) slices.push_back(prefix_slice(f, {i}));
    return slices;
}

} // namespace ekr
