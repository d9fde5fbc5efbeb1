#include "ekr/core.hpp"

#include <algorithm>
#include <cstdlib>

namespace ekr {
namespace {

std::uint64_t read_cap_from_env() {
    const char* raw = std::getenv("EKR_MAX_UNIVERSE");
    if (raw == nullptr || *raw == '\0') return kDefaultUniverseCap;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0) return kDefaultUniverseCap;
    return std::min<std::uint64_t>(v, kDefaultUniverseCap);
}

// Coordinate sets as bit blocks; m is unbounded for loaded families.
std::vector<std::uint64_t> agree_blocks(const Word& x, const Word& y) {
    const auto& a = x.letters();
    const auto& b = y.letters();
    std::vector<std::uint64_t> blocks((a.size() + 63) / 64, 0);
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == b[j]) blocks[j / 64] |= std::uint64_t{1} << (j % 64);
    }
    return blocks;
}

bool and_into(std::vector<std::uint64_t>& acc, const std::vector<std::uint64_t>& other) {
    bool any = false;
    for (std::size_t i = 0; i < acc.size(); ++i) {
        acc[i] &= other[i];
        any |= acc[i] != 0;
    }
    return any;
}

// True iff every subset of size `depth_left + 1` that contains `anchor` and
// extends the current partial choice keeps a live common coordinate. The
// running mask holds the coordinates where anchor agrees with every word
// chosen so far; a mask that empties early already dooms some superset.
bool anchored_subsets_ok(const std::vector<Word>& words, std::size_t anchor,
                         std::size_t next, std::uint32_t depth_left,
                         const std::vector<std::uint64_t>& alive) {
    if (depth_left == 0) return true;
    for (std::size_t i = next; i + depth_left <= words.size(); ++i) {
        auto mask = alive;
        if (!and_into(mask, agree_blocks(words[anchor], words[i]))) return false;
        if (!anchored_subsets_ok(words, anchor, i + 1, depth_left - 1, mask)) return false;
    }
    return true;
}

void require_same_shape(const Word& x, const Word& y) {
    if (x.q() != y.q()) throw invalid_input("alphabet mismatch between words");
    if (x.length() != y.length()) throw invalid_input("length mismatch between words");
}

} // namespace

std::uint64_t universe_cap() {
    static std::uint64_t cap = read_cap_from_env();
    return cap;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t result = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
        result *= base;
    }
    return result;
}

std::uint64_t require_universe(std::uint32_t q, std::uint32_t m) {
    auto u = checked_pow(q, m);
    if (!u || *u > universe_cap()) {
        throw invalid_input("universe size q^m = " + std::to_string(q) + "^" +
                            std::to_string(m) + " exceeds the cap of " +
                            std::to_string(universe_cap()) +
                            " words (see EKR_MAX_UNIVERSE)");
    }
    return *u;
}

Alphabet::Alphabet(std::uint32_t q) : q_(q) {
    if (q < 2) throw invalid_input("alphabet size q must be at least 2");
}

Word::Word(std::uint32_t q, std::vector<letter_t> letters)
    : q_(q), letters_(std::move(letters)) {
    if (q < 2) throw invalid_input("alphabet size q must be at least 2");
    for (letter_t v : letters_) {
        if (v >= q) {
            throw invalid_input("letter " + std::to_string(v) +
                                " out of range for alphabet of size " + std::to_string(q));
        }
    }
}

std::string Word::str() const {
    if (q_ > 10) throw invalid_input("digit strings support q <= 10 only");
    std::string s;
    s.reserve(letters_.size());
    for (letter_t v : letters_) s.push_back(static_cast<char>('0' + v));
    return s;
}

Word Word::parse(std::uint32_t q, std::string_view digits) {
    if (q > 10) throw invalid_input("digit strings support q <= 10 only");
    if (digits.empty()) throw invalid_input("empty word");
    std::vector<letter_t> letters;
    letters.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9') throw invalid_input(std::string("invalid digit '") + c + "'");
        letters.push_back(static_cast<letter_t>(c - '0'));
    }
    return Word(q, std::move(letters));
}

std::uint64_t Word::rank() const {
    std::uint64_t r = 0;
    for (letter_t v : letters_) r = r * q_ + v;
    return r;
}

Word Word::from_rank(std::uint32_t q, std::uint32_t m, std::uint64_t rank) {
    std::vector<letter_t> letters(m, 0);
    for (std::uint32_t j = m; j-- > 0;) {
        letters[j] = static_cast<letter_t>(rank % q);
        rank /= q;
    }
    return Word(q, std::move(letters));
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    if (auto c = q_ <=> other.q_; c != 0) return c;
    if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
    for (std::size_t j = 0; j < letters_.size(); ++j) {
        if (auto c = letters_[j] <=> other.letters_[j]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Family::Family(Alphabet alphabet, std::uint32_t m) : alphabet_(alphabet), m_(m) {}

Family::Family(Alphabet alphabet, std::uint32_t m, std::vector<Word> members)
    : alphabet_(alphabet), m_(m), members_(std::move(members)) {
    for (const Word& w : members_) {
        if (w.q() != alphabet_.q()) throw invalid_input("family member has mismatched alphabet");
        if (w.length() != m_) throw invalid_input("family member has mismatched length");
    }
    std::sort(members_.begin(), members_.end());
    auto dup = std::adjacent_find(members_.begin(), members_.end());
    if (dup != members_.end()) {
        throw invalid_input("duplicate word in family: " +
                            (alphabet_.q() <= 10 ? dup->str() : std::string("(rank ") +
                             std::to_string(dup->rank()) + ")"));
    }
}

bool Family::contains(const Word& w) const {
    return std::binary_search(members_.begin(), members_.end(), w);
}

std::strong_ordering Family::operator<=>(const Family& other) const {
    if (auto c = q() <=> other.q(); c != 0) return c;
    if (auto c = m_ <=> other.m_; c != 0) return c;
    return members_ <=> other.members_;
}

bool intersects(const Word& x, const Word& y) {
    require_same_shape(x, y);
    const auto& a = x.letters();
    const auto& b = y.letters();
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == b[j]) return true;
    }
    return false;
}

std::optional<std::uint32_t> common_position(const std::vector<Word>& words) {
    if (words.empty()) throw invalid_input("common_position requires a nonempty list");
    for (std::size_t i = 1; i < words.size(); ++i) require_same_shape(words[0], words[i]);
    const std::uint32_t m = words[0].length();
    for (std::uint32_t j = 0; j < m; ++j) {
        letter_t v = words[0].letters()[j];
        bool all = true;
        for (std::size_t i = 1; i < words.size(); ++i) {
            if (words[i].letters()[j] != v) {
                all = false;
                break;
            }
        }
        if (all) return j + 1;
    }
    return std::nullopt;
}

bool is_intersecting(const Family& f) {
    const auto& w = f.words();
    if (w.size() <= 1) return true;
    if (f.q() == 2) {
        // Binary words fail to intersect exactly when they are complements.
        for (const Word& x : w) {
            std::vector<letter_t> comp(x.letters());
            for (letter_t& v : comp) v = 1 - v;
            Word bar(2, std::move(comp));
            if (x < bar && f.contains(bar)) return false;
        }
        return true;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (!intersects(w[i], w[j])) return false;
        }
    }
    return true;
}

bool is_r_wise_intersecting(const Family& f, std::uint32_t r) {
    if (r < 2) throw invalid_input("intersection order r must be at least 2");
    const auto& w = f.words();
    if (w.size() <= 1) return true;
    if (common_position(w).has_value()) return true;
    const std::size_t s = std::min<std::size_t>(r, w.size());
    if (s == 2) return is_intersecting(f);
    // Every s-subset must keep a live coordinate. Anchoring on each word in
    // turn, the common coordinates of a subset are exactly the coordinates
    // where the anchor agrees with every other member.
    std::vector<std::uint64_t> full((f.length() + 63) / 64, ~std::uint64_t{0});
    for (std::size_t anchor = 0; anchor + s <= w.size(); ++anchor) {
        if (!anchored_subsets_ok(w, anchor, anchor + 1,
                                 static_cast<std::uint32_t>(s - 1), full)) {
            return false;
        }
    }
    return true;
}

Family star(std::uint32_t q, std::uint32_t m, StarSpec spec) {
    Alphabet alphabet(q);
    if (m < 1) throw invalid_input("word length m must be at least 1");
    if (spec.position < 1 || spec.position > m) {
        throw invalid_input("star position must lie in 1..m");
    }
    if (spec.letter >= q) throw invalid_input("star letter out of range");
    auto size = checked_pow(q, m - 1);
    if (!size || *size > universe_cap()) {
        throw invalid_input("star of size q^(m-1) exceeds the universe cap");
    }
    std::vector<Word> members;
    members.reserve(*size);
    for (std::uint64_t rank = 0; rank < *size; ++rank) {
        Word suffix = Word::from_rank(q, m - 1, rank);
        std::vector<letter_t> letters = suffix.letters();
        letters.insert(letters.begin() + (spec.position - 1), spec.letter);
        members.emplace_back(q, std::move(letters));
    }
    return Family(alphabet, m, std::move(members));
}

std::optional<StarSpec> classify_star(const Family& f) {
    if (f.length() < 1 || f.empty()) return std::nullopt;
    auto expected = checked_pow(f.q(), f.length() - 1);
    if (!expected || f.size() != *expected) return std::nullopt;
    const auto& w = f.words();
    for (std::uint32_t j = 0; j < f.length(); ++j) {
        letter_t v = w[0].letters()[j];
        bool constant = true;
        for (const Word& x : w) {
            if (x.letters()[j] != v) {
                constant = false;
                break;
            }
        }
        // |f| = q^(m-1) distinct words inside a star of the same size is the
        // star itself, so a constant coordinate settles it.
        if (constant) return StarSpec{j + 1, v};
    }
    return std::nullopt;
}

std::uint64_t count_stars(std::uint32_t q, std::uint32_t m) {
    Alphabet alphabet(q);
    if (m < 1) throw invalid_input("word length m must be at least 1");
    return static_cast<std::uint64_t>(q) * m;
}

std::uint64_t max_bound(std::uint32_t q, std::uint32_t m) {
    Alphabet alphabet(q);
    if (m < 1) throw invalid_input("word length m must be at least 1");
    require_universe(q, m);
    return *checked_pow(q, m - 1);
}

} // namespace ekr
