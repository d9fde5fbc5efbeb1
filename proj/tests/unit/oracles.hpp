#pragma once

// Brute-force reference implementations, written independently of the
// library internals so the tests can freeze derived expected values.

#include <cstdint>
#include <optional>
#include <vector>

#include "ekr/core.hpp"

namespace oracle {

// All q^m words, generated by digit counting rather than Word::from_rank.
inline std::vector<ekr::Word> all_words(std::uint32_t q, std::uint32_t m) {
    std::vector<ekr::Word> out;
    std::vector<ekr::letter_t> digits(m, 0);
    while (true) {
        out.emplace_back(q, digits);
        std::uint32_t j = m;
        while (j > 0) {
            --j;
            if (++digits[j] < q) break;
            digits[j] = 0;
            if (j == 0) return out;
        }
        if (m == 0) return out;
    }
}

inline bool intersects(const ekr::Word& x, const ekr::Word& y) {
    for (std::uint32_t j = 0; j < x.length(); ++j) {
        if (x.letters()[j] == y.letters()[j]) return true;
    }
    return false;
}

inline bool pairwise_intersecting(const std::vector<ekr::Word>& words) {
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            if (!oracle::intersects(words[i], words[j])) return false;
        }
    }
    return true;
}

inline std::optional<std::uint32_t> common_position(const std::vector<ekr::Word>& words) {
    for (std::uint32_t j = 0; j < words[0].length(); ++j) {
        bool all = true;
        for (const ekr::Word& w : words) {
            if (w.letters()[j] != words[0].letters()[j]) all = false;
        }
        if (all) return j + 1;
    }
    return std::nullopt;
}

// Multiset semantics: every subset of size min(r, n) must share a position.
inline bool r_wise_intersecting(const std::vector<ekr::Word>& words, std::uint32_t r) {
    const std::size_t n = words.size();
    if (n <= 1) return true;
    const std::size_t s = std::min<std::size_t>(r, n);
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
        std::vector<ekr::Word> subset;
        for (std::size_t i : idx) subset.push_back(words[i]);
        if (!oracle::common_position(subset).has_value()) return false;
        std::size_t k = s;
        while (k > 0) {
            --k;
            if (idx[k] + (s - k) < n) {
                ++idx[k];
                for (std::size_t t = k + 1; t < s; ++t) idx[t] = idx[t - 1] + 1;
                break;
            }
            if (k == 0) return true;
        }
    }
}

// Every subset of the given size, filtered by a predicate; the subsets come
// out in lexicographic index order.
template <typename Pred>
std::vector<std::vector<ekr::Word>> subsets_where(const std::vector<ekr::Word>& words,
                                                  std::size_t size, Pred&& pred) {
    std::vector<std::vector<ekr::Word>> hits;
    std::vector<std::size_t> idx(size);
    if (size == 0 || size > words.size()) return hits;
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        std::vector<ekr::Word> subset;
        for (std::size_t i : idx) subset.push_back(words[i]);
        if (pred(subset)) hits.push_back(subset);
        std::size_t k = size;
        bool advanced = false;
        while (k > 0) {
            --k;
            if (idx[k] + (size - k) < words.size()) {
                ++idx[k];
                for (std::size_t t = k + 1; t < size; ++t) idx[t] = idx[t - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return hits;
    }
}

} // namespace oracle
