#include "ekr/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ekr/family_io.hpp"
#include "ekr/partitions.hpp"

namespace ekr {
namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxWitnessLines = 64;

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string words_line(const std::vector<Word>& words) {
    std::string line;
    for (const Word& w : words) {
        if (!line.empty()) line += ' ';
        line += w.str();
    }
    return line;
}

std::string prefix_str(const std::vector<letter_t>& prefix) {
    if (prefix.empty()) return "()";
    std::string s;
    for (letter_t v : prefix) s += static_cast<char>('0' + v);
    return s;
}

std::string hash_family_list(const std::vector<Family>& families) {
    std::string blob;
    for (const Family& f : families) {
        blob += words_line(f.words());
        blob += '\n';
    }
    return hex64(fnv1a64(blob));
}

void add_witness(CheckReport& rep, std::string line) {
    if (rep.witnesses.size() < kMaxWitnessLines) {
        rep.witnesses.push_back(std::move(line));
    } else if (rep.witnesses.size() == kMaxWitnessLines) {
        rep.witnesses.push_back("...");
    }
}

CheckReport classify_families(const std::vector<Family>& families, std::uint64_t expected_stars,
                              std::uint64_t* stars_out) {
    CheckReport rep{"star-classification", true, {}, {}};
    std::uint64_t stars = 0;
    for (const Family& f : families) {
        if (classify_star(f).has_value()) {
            ++stars;
        } else {
            rep.passed = false;
            add_witness(rep, "nonstar: " + words_line(f.words()));
        }
    }
    rep.metrics["families"] = static_cast<std::int64_t>(families.size());
    rep.metrics["stars"] = static_cast<std::int64_t>(stars);
    rep.metrics["expected_stars"] = static_cast<std::int64_t>(expected_stars);
    if (stars_out != nullptr) *stars_out = stars;
    return rep;
}

CheckReport star_count_check(std::uint64_t actual, std::uint64_t expected) {
    CheckReport rep{"star-count", actual == expected, {}, {}};
    rep.metrics["families"] = static_cast<std::int64_t>(actual);
    rep.metrics["expected"] = static_cast<std::int64_t>(expected);
    if (!rep.passed) {
        add_witness(rep, "enumerated " + std::to_string(actual) + " maximum families, expected " +
                             std::to_string(expected));
    }
    return rep;
}

CheckReport aggregate_double_count(const std::vector<Family>& families) {
    CheckReport rep{"double-count", true, {}, {}};
    for (const Family& f : families) {
        CheckReport one = double_count_check(f);
        if (!one.passed || one.metrics.at("maximal") != 1) {
            rep.passed = false;
            add_witness(rep, "family " + words_line(f.words()) + ": double sum " +
                                 std::to_string(one.metrics.at("double_sum")) + " != q^m");
        }
    }
    rep.metrics["families_checked"] = static_cast<std::int64_t>(families.size());
    return rep;
}

CheckReport aggregate_claim2(const std::vector<Family>& families, std::uint32_t q,
                             std::uint32_t m) {
    CheckReport rep{"claim2-equality", true, {}, {}};
    const std::uint64_t deltas = *checked_pow(q, m - 1);
    for (const Family& f : families) {
        for (std::uint64_t rank = 0; rank < deltas; ++rank) {
            Word delta = Word::from_rank(q, m - 1, rank);
            Claim2Case c = claim2_analyze(f, delta);
            if (c.sum != q || c.classification == Claim2Kind::Deficient) {
                rep.passed = false;
                add_witness(rep, "family " + words_line(f.words()) + " delta=" + delta.str() +
                                     " sum=" + std::to_string(c.sum));
            }
        }
    }
    rep.metrics["families_checked"] = static_cast<std::int64_t>(families.size());
    rep.metrics["deltas_per_family"] = static_cast<std::int64_t>(deltas);
    return rep;
}

CheckReport thm3_endgame_check(const std::vector<Family>& families, std::uint32_t m) {
    CheckReport rep{"endgame-last-letter", true, {}, {}};
    const Prefix zeros(m - 1, 0);
    const Prefix ones(m - 1, 1);
    for (const Family& f : families) {
        Family zero_slice = prefix_slice(f, zeros).selected;
        Family one_slice = prefix_slice(f, ones).selected;
        for (const Word& x : zero_slice.words()) {
            for (const Word& y : one_slice.words()) {
                if (x.letters().back() != y.letters().back()) {
                    rep.passed = false;
                    add_witness(rep, "family " + words_line(f.words()) + ": " + x.str() +
                                         " and " + y.str() + " disagree in the last letter");
                }
            }
        }
    }
    rep.metrics["families_checked"] = static_cast<std::int64_t>(families.size());
    return rep;
}

void attach_families(Certificate& cert, std::vector<Family>&& families) {
    if (families.size() <= kCertificateFamilyCap) {
        cert.families = std::move(families);
    } else {
        cert.families_hash = hash_family_list(families);
    }
}

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

} // namespace

CheckReport check_lemma_bound(const Family& f) {
    if (!is_intersecting(f)) {
        throw invalid_input("check_lemma_bound requires an intersecting family");
    }
    CheckReport rep{"lemma-bound", true, {}, {}};
    std::map<Word, std::size_t> occupancy;
    for (const Word& w : f.words()) ++occupancy[cell_of(w).base];

    std::size_t max_occ = 0;
    for (const auto& [base, n] : occupancy) {
        max_occ = std::max(max_occ, n);
        add_witness(rep, "cell " + base.str() + ": " + std::to_string(n));
        if (n > 1) rep.passed = false;
    }
    auto bound = checked_pow(f.q(), f.length() - 1);
    if (bound && f.size() > *bound) rep.passed = false;

    rep.metrics["size"] = static_cast<std::int64_t>(f.size());
    rep.metrics["bound"] = bound && *bound <= INT64_MAX ? static_cast<std::int64_t>(*bound) : -1;
    rep.metrics["occupied_cells"] = static_cast<std::int64_t>(occupancy.size());
    rep.metrics["max_occupancy"] = static_cast<std::int64_t>(max_occ);
    return rep;
}

CheckReport claim1_check(const Family& f) {
    if (f.q() != 2) throw invalid_input("claim1_check is defined for q = 2");
    const std::uint32_t m = f.length();
    if (m < 1) throw invalid_input("claim1_check requires m >= 1");
    require_universe(2, m - 1);

    CheckReport rep{"claim1-prefix-law", true, {}, {}};
    std::int64_t tables = 0;
    for (std::uint32_t k = 0; k < m; ++k) {
        const std::uint64_t expected = *checked_pow(2, m - k - 1);
        for (const auto& [prefix, count] : prefix_counts(f, k)) {
            ++tables;
            if (count != expected) {
                rep.passed = false;
                add_witness(rep, "k=" + std::to_string(k) + " delta=" + prefix_str(prefix) +
                                     " count=" + std::to_string(count) + " expected=" +
                                     std::to_string(expected));
            }
        }
    }
    rep.metrics["prefixes_checked"] = tables;
    return rep;
}

Claim2Case claim2_analyze(const Family& f, const Word& delta) {
    const std::uint32_t q = f.q();
    if (q < 3) throw invalid_input("claim2_analyze requires q >= 3");
    if (f.length() < 2) throw invalid_input("claim2_analyze requires m >= 2");
    if (delta.q() != q || delta.length() != f.length() - 1) {
        throw invalid_input("delta must be a word of length m-1 over the family's alphabet");
    }
    if (!is_intersecting(f)) {
        throw invalid_input("claim2_analyze applies to intersecting families");
    }

    std::vector<SliceView> slices = letter_slices(f);
    std::vector<Word> coset = diagonal_coset(delta);

    Claim2Case result{delta, Claim2Kind::Deficient, 0, std::vector<std::size_t>(q, 0), 0};
    // hit_shift[i] = the shift c with delta + c in T~_i, when the count is 1
    std::vector<std::optional<letter_t>> hit_shift(q);
    for (std::uint32_t i = 0; i < q; ++i) {
        for (letter_t c = 0; c < q; ++c) {
            if (slices[i].projected.contains(coset[c])) {
                ++result.counts[i];
                hit_shift[i] = c;
            }
        }
        result.sum += result.counts[i];
    }

    if (result.sum > q) {
        throw std::logic_error("claim 2 inequality violated on an intersecting family");
    }
    if (result.sum < q) {
        result.classification = Claim2Kind::Deficient;
        return result;
    }
    for (std::uint32_t i = 0; i < q; ++i) {
        if (result.counts[i] == q) {
            result.classification = Claim2Kind::UniqueContainment;
            result.detail = i;
            return result;
        }
    }
    // sum = q without a containing slice forces one hit per slice, all equal.
    for (std::uint32_t i = 0; i < q; ++i) {
        if (result.counts[i] != 1 || hit_shift[i] != hit_shift[0]) {
            throw std::logic_error("claim 2 dichotomy violated on an intersecting family");
        }
    }
    result.classification = Claim2Kind::CommonSingleton;
    result.detail = *hit_shift[0];
    return result;
}

CheckReport double_count_check(const Family& f) {
    const std::uint32_t q = f.q();
    const std::uint32_t m = f.length();
    if (m < 2) throw invalid_input("double_count_check requires m >= 2");
    const std::uint64_t num_deltas = require_universe(q, m - 1);

    std::vector<SliceView> slices = letter_slices(f);
    std::uint64_t total = 0;
    for (std::uint64_t rank = 0; rank < num_deltas; ++rank) {
        Word delta = Word::from_rank(q, m - 1, rank);
        for (const Word& w : diagonal_coset(delta)) {
            for (std::uint32_t j = 0; j < q; ++j) {
                if (slices[j].projected.contains(w)) ++total;
            }
        }
    }

    const std::uint64_t expected = static_cast<std::uint64_t>(q) * f.size();
    const std::uint64_t universe = num_deltas * q;
    CheckReport rep{"double-count", total == expected, {}, {}};
    rep.metrics["double_sum"] = static_cast<std::int64_t>(total);
    rep.metrics["q_times_size"] = static_cast<std::int64_t>(expected);
    rep.metrics["universe"] = static_cast<std::int64_t>(universe);
    rep.metrics["maximal"] = total == universe ? 1 : 0;
    if (!rep.passed) {
        add_witness(rep, "double sum " + std::to_string(total) + " != q|T| = " +
                             std::to_string(expected));
    }
    return rep;
}

std::pair<std::uint32_t, std::uint32_t> two_nonzero_summands(std::uint32_t q,
                                                             std::uint32_t target) {
    if (q < 3) throw invalid_input("two nonzero summands need q >= 3");
    if (target >= q) throw invalid_input("target must be a residue mod q");
    if (target != 1) return {1, (target + q - 1) % q};
    return {2, q - 1};
}

Certificate theorem2_certificate(std::uint32_t q, std::uint32_t m, const SearchLimits& limits) {
    const auto start = Clock::now();
    SearchResult result = enumerate_max_intersecting(q, m, limits);
    if (!result.exhausted) {
        throw budget_exceeded("theorem 2 enumeration exceeded its budget; nothing certified");
    }

    Certificate cert;
    cert.theorem = "thm2";
    cert.q = q;
    cert.m = m;
    cert.bound = max_bound(q, m);
    cert.extremal_size = cert.bound;
    cert.num_extremal_families = result.count;
    cert.num_stars_expected = count_stars(q, m);

    std::uint64_t stars = 0;
    cert.checks.push_back(classify_families(result.families, cert.num_stars_expected, &stars));
    cert.all_stars = stars == result.count;
    cert.checks.push_back(star_count_check(result.count, cert.num_stars_expected));
    if (m >= 2) {
        cert.checks.push_back(aggregate_double_count(result.families));
        if (q >= 3) cert.checks.push_back(aggregate_claim2(result.families, q, m));
    }
    attach_families(cert, std::move(result.families));
    cert.elapsed_ms = ms_since(start);
    return cert;
}

Certificate theorem3_certificate(std::uint32_t m, const SearchLimits& limits) {
    const auto start = Clock::now();
    SearchResult result = enumerate_max_rwise(2, m, 3, limits);
    if (!result.exhausted) {
        throw budget_exceeded("theorem 3 enumeration exceeded its budget; nothing certified");
    }

    Certificate cert;
    cert.theorem = "thm3";
    cert.q = 2;
    cert.m = m;
    cert.bound = max_bound(2, m);
    cert.extremal_size = cert.bound;
    cert.num_extremal_families = result.count;
    cert.num_stars_expected = count_stars(2, m);

    std::uint64_t stars = 0;
    cert.checks.push_back(classify_families(result.families, cert.num_stars_expected, &stars));
    cert.all_stars = stars == result.count;
    cert.checks.push_back(star_count_check(result.count, cert.num_stars_expected));
    cert.checks.push_back(thm3_endgame_check(result.families, m));
    if (m >= 2) cert.checks.push_back(aggregate_double_count(result.families));
    attach_families(cert, std::move(result.families));
    cert.elapsed_ms = ms_since(start);
    return cert;
}

CheckReport binary_count_check(std::uint32_t m) {
    if (m < 1) throw invalid_input("binary_count_check requires m >= 1");
    if (m > 5) throw invalid_input("binary_count_check enumerates 2^(2^(m-1)) families; m <= 5");

    const std::vector<ComplementaryPair> pairs = complementary_pairs(m);
    const std::uint64_t selections = std::uint64_t{1} << pairs.size();

    std::vector<Family> by_selection;
    by_selection.reserve(selections);
    for (std::uint64_t mask = 0; mask < selections; ++mask) {
        std::vector<Word> choice;
        choice.reserve(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            choice.push_back((mask >> i) & 1 ? pairs[i].high : pairs[i].low);
        }
        by_selection.emplace_back(Alphabet(2), m, std::move(choice));
    }
    std::sort(by_selection.begin(), by_selection.end());

    SearchResult searched = enumerate_max_intersecting(2, m);
    if (!searched.exhausted) throw budget_exceeded("binary census search exceeded its budget");

    CheckReport rep{"binary-census", true, {}, {}};
    rep.metrics["selection_count"] = static_cast<std::int64_t>(by_selection.size());
    rep.metrics["search_count"] = static_cast<std::int64_t>(searched.count);
    rep.metrics["expected"] = static_cast<std::int64_t>(selections);
    if (by_selection.size() != selections || searched.count != selections) {
        rep.passed = false;
        add_witness(rep, "counts disagree with 2^(2^(m-1)) = " + std::to_string(selections));
    }
    if (by_selection != searched.families) {
        rep.passed = false;
        add_witness(rep, "selection families and searched families differ as sets");
    }
    return rep;
}

Certificate count_certificate(std::uint32_t m, const SearchLimits& limits) {
    const auto start = Clock::now();
    CheckReport census = binary_count_check(m);

    SearchResult result = enumerate_max_intersecting(2, m, limits);
    if (!result.exhausted) throw budget_exceeded("binary census search exceeded its budget");

    Certificate cert;
    cert.theorem = "count-q2";
    cert.q = 2;
    cert.m = m;
    cert.bound = max_bound(2, m);
    cert.extremal_size = cert.bound;
    cert.num_extremal_families = result.count;
    cert.num_stars_expected = count_stars(2, m);

    std::uint64_t stars = 0;
    CheckReport classification = classify_families(result.families, cert.num_stars_expected, &stars);
    classification.passed = stars == cert.num_stars_expected; // stars among many non-star maxima
    classification.witnesses.clear();
    cert.all_stars = stars == result.count;
    cert.checks.push_back(std::move(classification));
    cert.checks.push_back(std::move(census));
    attach_families(cert, std::move(result.families));
    cert.elapsed_ms = ms_since(start);
    return cert;
}

Certificate lemma1_certificate(std::uint32_t q, std::uint32_t m) {
    const auto start = Clock::now();
    Alphabet alphabet(q);
    if (m < 1) throw invalid_input("word length m must be at least 1");
    const auto universe = checked_pow(q, m);
    if (!universe || *universe > 4096) {
        throw invalid_input("lemma1 certificate verifies every cell pair; needs q^m <= 4096");
    }

    Certificate cert;
    cert.theorem = "lemma1";
    cert.q = q;
    cert.m = m;
    cert.bound = max_bound(q, m);
    cert.extremal_size = cert.bound;
    cert.num_stars_expected = count_stars(q, m);

    const std::vector<CosetCell> cells = coset_cells(q, m);

    CheckReport partition{"coset-partition", true, {}, {}};
    std::vector<bool> covered(*universe, false);
    std::uint64_t duplicates = 0;
    for (const CosetCell& cell : cells) {
        if (cell.members.size() != q) partition.passed = false;
        for (const Word& w : cell.members) {
            std::uint64_t rank = w.rank();
            if (covered[rank]) {
                ++duplicates;
                partition.passed = false;
                add_witness(partition, "word " + w.str() + " covered twice");
            }
            covered[rank] = true;
        }
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
        partition.passed = false;
        add_witness(partition, "some word is not covered by any cell");
    }
    if (cells.size() != cert.bound) partition.passed = false;
    partition.metrics["cells"] = static_cast<std::int64_t>(cells.size());
    partition.metrics["expected_cells"] = static_cast<std::int64_t>(cert.bound);
    partition.metrics["duplicates"] = static_cast<std::int64_t>(duplicates);
    cert.checks.push_back(std::move(partition));

    CheckReport disjoint{"cell-nonintersection", true, {}, {}};
    std::uint64_t pairs_checked = 0;
    for (const CosetCell& cell : cells) {
        for (std::size_t i = 0; i < cell.members.size(); ++i) {
            for (std::size_t j = i + 1; j < cell.members.size(); ++j) {
                ++pairs_checked;
                if (intersects(cell.members[i], cell.members[j])) {
                    disjoint.passed = false;
                    add_witness(disjoint, "cell " + cell.base.str() + ": " +
                                              cell.members[i].str() + " intersects " +
                                              cell.members[j].str());
                }
            }
        }
    }
    disjoint.metrics["pairs_checked"] = static_cast<std::int64_t>(pairs_checked);
    cert.checks.push_back(std::move(disjoint));

    Family witness = star(q, m, StarSpec{1, 0});
    CheckReport attain{"bound-attainment", true, {}, {}};
    attain.metrics["witness_size"] = static_cast<std::int64_t>(witness.size());
    attain.metrics["bound"] = static_cast<std::int64_t>(cert.bound);
    attain.metrics["stars"] = classify_star(witness).has_value() ? 1 : 0;
    if (witness.size() != cert.bound || !is_intersecting(witness)) attain.passed = false;
    CheckReport occupancy = check_lemma_bound(witness);
    if (!occupancy.passed ||
        occupancy.metrics.at("occupied_cells") != static_cast<std::int64_t>(cells.size())) {
        attain.passed = false;
    }
    attain.metrics["occupied_cells"] = occupancy.metrics.at("occupied_cells");
    cert.checks.push_back(std::move(attain));

    cert.num_extremal_families = 1; // the recorded witness
    cert.all_stars = true;
    std::vector<Family> families{std::move(witness)};
    attach_families(cert, std::move(families));
    cert.elapsed_ms = ms_since(start);
    return cert;
}

bool conclusion_holds(const Certificate& cert) {
    for (const CheckReport& rep : cert.checks) {
        if (!rep.passed) return false;
    }
    if (cert.theorem == "thm2" || cert.theorem == "thm3") {
        return cert.all_stars && cert.num_extremal_families == cert.num_stars_expected;
    }
    return true;
}

std::string certificate_to_text(const Certificate& cert) {
    ordered_json j;
    j["schema_version"] = cert.schema_version;
    j["theorem"] = cert.theorem;
    j["q"] = cert.q;
    j["m"] = cert.m;
    j["bound"] = cert.bound;
    j["extremal_size"] = cert.extremal_size;
    j["num_extremal_families"] = cert.num_extremal_families;
    j["num_stars_expected"] = cert.num_stars_expected;
    j["all_stars"] = cert.all_stars;
    if (cert.families) {
        ordered_json list = ordered_json::array();
        for (const Family& f : *cert.families) {
            ordered_json words = ordered_json::array();
            for (const Word& w : f.words()) words.push_back(w.str());
            list.push_back(std::move(words));
        }
        j["families"] = std::move(list);
    }
    if (cert.families_hash) j["families_hash"] = *cert.families_hash;
    ordered_json checks = ordered_json::array();
    for (const CheckReport& rep : cert.checks) {
        ordered_json c;
        c["name"] = rep.name;
        c["passed"] = rep.passed;
        c["witnesses"] = rep.witnesses;
        ordered_json metrics;
        for (const auto& [key, value] : rep.metrics) metrics[key] = value;
        c["metrics"] = std::move(metrics);
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    j["elapsed_ms"] = cert.elapsed_ms;
    return j.dump(2) + "\n";
}

Certificate certificate_from_text(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    Certificate cert;
    cert.schema_version = j.at("schema_version").get<std::uint32_t>();
    cert.theorem = j.at("theorem").get<std::string>();
    cert.q = j.at("q").get<std::uint32_t>();
    cert.m = j.at("m").get<std::uint32_t>();
    cert.bound = j.at("bound").get<std::uint64_t>();
    cert.extremal_size = j.at("extremal_size").get<std::uint64_t>();
    cert.num_extremal_families = j.at("num_extremal_families").get<std::uint64_t>();
    cert.num_stars_expected = j.at("num_stars_expected").get<std::uint64_t>();
    cert.all_stars = j.at("all_stars").get<bool>();
    if (j.contains("families")) {
        std::vector<Family> families;
        for (const auto& entry : j.at("families")) {
            std::vector<Word> words;
            for (const auto& s : entry) words.push_back(Word::parse(cert.q, s.get<std::string>()));
            families.emplace_back(Alphabet(cert.q), cert.m, std::move(words));
        }
        cert.families = std::move(families);
    }
    if (j.contains("families_hash")) cert.families_hash = j.at("families_hash").get<std::string>();
    for (const auto& entry : j.at("checks")) {
        CheckReport rep;
        rep.name = entry.at("name").get<std::string>();
        rep.passed = entry.at("passed").get<bool>();
        rep.witnesses = entry.at("witnesses").get<std::vector<std::string>>();
        for (const auto& [key, value] : entry.at("metrics").items()) {
            rep.metrics[key] = value.get<std::int64_t>();
        }
        cert.checks.push_back(std::move(rep));
    }
    cert.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return cert;
}

std::string certificate_content_hash(const Certificate& cert) {
    Certificate normalized = cert;
    normalized.elapsed_ms = 0;
    return hex64(fnv1a64(certificate_to_text(normalized)));
}

bool revalidate(const Certificate& cert) {
    if (!cert.families) return true; // nothing recorded to recheck
    std::uint64_t stars = 0;
    for (const Family& f : *cert.families) {
        if (f.size() != cert.extremal_size) return false;
        if (classify_star(f).has_value()) ++stars;
    }
    if (cert.families->size() != cert.num_extremal_families) return false;
    return cert.all_stars == (stars == cert.num_extremal_families);
}

void write_certificate_file(const std::string& path, const Certificate& cert) {
    std::ofstream out(path);
    if (!out) throw invalid_input("cannot write certificate file: " + path);
    out << certificate_to_text(cert);
    out << "# content-hash " << certificate_content_hash(cert) << '\n';
}

Certificate read_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open certificate file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();

    std::string body;
    std::optional<std::string> recorded_hash;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind("# content-hash ", 0) == 0) {
            recorded_hash = line.substr(std::string("# content-hash ").size());
        } else {
            body += line;
            body += '\n';
        }
    }
    Certificate cert = certificate_from_text(body);
    if (recorded_hash && *recorded_hash != certificate_content_hash(cert)) {
        throw invalid_input("certificate content hash mismatch in " + path);
    }
    return cert;
}

} // namespace ekr
