#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ekr/errors.hpp"

namespace ekr {

using letter_t = std::uint32_t;

// Operations that materialize whole word sets refuse instances with
// q^m beyond this cap. EKR_MAX_UNIVERSE may lower it, never raise it.
inline constexpr std::uint64_t kDefaultUniverseCap = std::uint64_t{1} << 20;

std::uint64_t universe_cap();

// base^exp, or nullopt on uint64 overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp);

// q^m, throwing invalid_input when it overflows or exceeds universe_cap().
std::uint64_t require_universe(std::uint32_t q, std::uint32_t m);

// The alphabet is identified with the residues 0..q-1.
class Alphabet {
public:
    explicit Alphabet(std::uint32_t q);

    std::uint32_t q() const { return q_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::uint32_t q_;
};

// A fixed-length word over Z_q. Coordinates are 1-based in every public
// report; the backing vector is 0-based. Zero-length words are permitted so
// that full-length prefix projections stay total.
class Word {
public:
    Word(std::uint32_t q, std::vector<letter_t> letters);

    std::uint32_t q() const { return q_; }
    std::uint32_t length() const { return static_cast<std::uint32_t>(letters_.size()); }
    const std::vector<letter_t>& letters() const { return letters_; }

    // Digit string, leftmost digit = coordinate 1. Requires q <= 10.
    std::string str() const;
    static Word parse(std::uint32_t q, std::string_view digits);

    // Lexicographic rank within X^m and back.
    std::uint64_t rank() const;
    static Word from_rank(std::uint32_t q, std::uint32_t m, std::uint64_t rank);

    friend bool operator==(const Word&, const Word&) = default;
    std::strong_ordering operator<=>(const Word& other) const;

private:
    std::uint32_t q_;
    std::vector<letter_t> letters_;
};

// A set of distinct equal-length words over a shared alphabet, kept in
// lexicographic order.
class Family {
public:
    Family(Alphabet alphabet, std::uint32_t m);
    Family(Alphabet alphabet, std::uint32_t m, std::vector<Word> members);

    const Alphabet& alphabet() const { return alphabet_; }
    std::uint32_t q() const { return alphabet_.q(); }
    std::uint32_t length() const { return m_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<Word>& words() const { return members_; }
    bool contains(const Word& w) const;

    friend bool operator==(const Family&, const Family&) = default;
    std::strong_ordering operator<=>(const Family& other) const;

private:
    Alphabet alphabet_;
    std::uint32_t m_;
    std::vector<Word> members_; // sorted, distinct
};

// A star fixes `letter` at 1-based coordinate `position`.
struct StarSpec {
    std::uint32_t position;
    letter_t letter;

    friend bool operator==(const StarSpec&, const StarSpec&) = default;
};

// True iff x and y agree in at least one coordinate.
bool intersects(const Word& x, const Word& y);

// Smallest 1-based coordinate at which all words agree, if any.
// The list must be nonempty and share (q, m).
std::optional<std::uint32_t> common_position(const std::vector<Word>& words);

bool is_intersecting(const Family& f);

// Multiset semantics: every subset of size min(r, |f|) must share a
// coordinate value. r >= 2.
bool is_r_wise_intersecting(const Family& f, std::uint32_t r);

Family star(std::uint32_t q, std::uint32_t m, StarSpec spec);

// The spec (smallest position) such that f equals that full star exactly.
std::optional<StarSpec> classify_star(const Family& f);

std::uint64_t count_stars(std::uint32_t q, std::uint32_t m); // q*m
std::uint64_t max_bound(std::uint32_t q, std::uint32_t m);   // q^(m-1)

} // namespace ekr
