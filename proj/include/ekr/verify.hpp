#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ekr/core.hpp"
#include "ekr/search.hpp"

namespace ekr {

struct CheckReport {
    std::string name;
    bool passed = false;
    // Violations when failing, evidence lines when passing; first violation
    // always comes in lexicographic order so failures reproduce exactly.
    std::vector<std::string> witnesses;
    std::map<std::string, std::int64_t> metrics;
};

// |T| <= q^(m-1) with the per-cell occupancies as evidence. The input must
// be intersecting; the check validates the partition device, so it passes
// on every valid input.
CheckReport check_lemma_bound(const Family& f);

// Diagnostic for the binary prefix law |T_delta| = 2^(m-k-1). Honest stars
// fixing an early coordinate are expected to fail it; it is a trace tool,
// not a theorem checker.
CheckReport claim1_check(const Family& f);

enum class Claim2Kind {
    Deficient,         // sum < q
    UniqueContainment, // S(delta) inside exactly one suffix family
    CommonSingleton,   // every suffix family meets S(delta) in the same word
};

struct Claim2Case {
    Word delta;
    Claim2Kind classification;
    // Letter i for UniqueContainment, shift k for CommonSingleton.
    std::uint32_t detail = 0;
    std::vector<std::size_t> counts; // |T~_i ∩ S(delta)| per first letter
    std::size_t sum = 0;
};

// Requires q >= 3, m >= 2 and an intersecting family.
Claim2Case claim2_analyze(const Family& f, const Word& delta);

// Sums |T~_j ∩ S(delta)| over every delta in Z_q^(m-1) and every first
// letter; the total equals q|T|, and equals q^m exactly for maximum
// families.
CheckReport double_count_check(const Family& f);

// Any residue mod q splits into two nonzero summands once q >= 3.
std::pair<std::uint32_t, std::uint32_t> two_nonzero_summands(std::uint32_t q,
                                                             std::uint32_t target);

// Machine-readable record of an exhaustive verification run.
struct Certificate {
    std::uint32_t schema_version = 1;
    std::string theorem; // "thm2" | "thm3" | "count-q2" | "lemma1"
    std::uint32_t q = 0;
    std::uint32_t m = 0;
    std::uint64_t bound = 0;
    std::uint64_t extremal_size = 0;
    std::uint64_t num_extremal_families = 0;
    std::uint64_t num_stars_expected = 0;
    bool all_stars = false;
    std::optional<std::vector<Family>> families; // recorded while count <= 4096
    std::optional<std::string> families_hash;    // replaces the list when elided
    std::vector<CheckReport> checks;
    std::int64_t elapsed_ms = 0;
};

inline constexpr std::uint64_t kCertificateFamilyCap = 4096;

// Enumerates every intersecting family of the bound size, classifies each,
// and re-runs the counting devices on each one. q = 2 is allowed so the
// theorem's failure there is surfaced rather than refused.
Certificate theorem2_certificate(std::uint32_t q, std::uint32_t m,
                                 const SearchLimits& limits = {});

// Same for maximum 3-wise intersecting binary families, plus the endgame
// check that words with all-equal prefixes share the last letter.
Certificate theorem3_certificate(std::uint32_t m, const SearchLimits& limits = {});

// Counts maximum binary intersecting families two independent ways
// (pair selections vs. transversal search) and compares against
// 2^(2^(m-1)). Feasible for m <= 5.
CheckReport binary_count_check(std::uint32_t m);
Certificate count_certificate(std::uint32_t m, const SearchLimits& limits = {});

// Exhaustively certifies the coset partition, the within-cell
// non-intersection, and star attainment of the bound. Needs q^m <= 2^12.
Certificate lemma1_certificate(std::uint32_t q, std::uint32_t m);

// Whether the certificate's checks support the named theorem's conclusion.
bool conclusion_holds(const Certificate& cert);

// Fixed-field-order structured text (JSON), round-trippable.
std::string certificate_to_text(const Certificate& cert);
Certificate certificate_from_text(const std::string& text);

// Hash over the document with elapsed_ms zeroed, so reruns and worker
// counts cannot change it.
std::string certificate_content_hash(const Certificate& cert);

// Re-classifies a certificate's recorded family list and confirms it
// reproduces all_stars and the counts.
bool revalidate(const Certificate& cert);

void write_certificate_file(const std::string& path, const Certificate& cert);
Certificate read_certificate_file(const std::string& path);

} // namespace ekr
