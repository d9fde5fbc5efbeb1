#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ekr/family_io.hpp"
#include "ekr/partitions.hpp"
#include "ekr/search.hpp"
#include "ekr/verify.hpp"
#include "oracles.hpp"

using namespace ekr;

namespace {

Word w(std::uint32_t q, std::string_view digits) { return Word::parse(q, digits); }

Family fam(std::uint32_t q, std::uint32_t m, std::initializer_list<std::string_view> digits) {
    std::vector<Word> words;
    for (auto d : digits) words.push_back(Word::parse(q, d));
    return Family(Alphabet(q), m, std::move(words));
}

const Family kEvenWeight = fam(2, 3, {"000", "011", "101", "110"});

} // namespace

TEST_SUITE("verify") {

TEST_CASE("lemma bound check reports per-cell occupancies") {
    CheckReport rep = check_lemma_bound(fam(3, 2, {"00", "01", "02"}));
    CHECK(rep.passed);
    CHECK(rep.metrics.at("size") == 3);
    CHECK(rep.metrics.at("bound") == 3);
    CHECK(rep.metrics.at("occupied_cells") == 3); // one word in each of 3 cells
    CHECK(rep.metrics.at("max_occupancy") == 1);

    CheckReport star_rep = check_lemma_bound(star(2, 4, StarSpec{2, 1}));
    CHECK(star_rep.passed);
    CHECK(star_rep.metrics.at("size") == 8);
    CHECK(star_rep.metrics.at("bound") == 8);

    CHECK_THROWS_AS(check_lemma_bound(fam(2, 2, {"00", "11"})), invalid_input);
}

TEST_CASE("claim1 diagnostic traces the binary prefix law") {
    CheckReport pass = claim1_check(star(2, 3, StarSpec{3, 0}));
    CHECK(pass.passed);
    CHECK(pass.metrics.at("prefixes_checked") == 7); // 1 + 2 + 4

    CheckReport fail = claim1_check(star(2, 3, StarSpec{1, 0}));
    CHECK_FALSE(fail.passed);
    REQUIRE(!fail.witnesses.empty());
    // first violation in lexicographic (k, delta) order
    CHECK(fail.witnesses.front() == "k=1 delta=0 count=4 expected=2");

    CHECK(claim1_check(kEvenWeight).passed);

    CHECK_THROWS_AS(claim1_check(fam(3, 2, {"00"})), invalid_input);
}

TEST_CASE("claim2 classifies the equality dichotomy") {
    Claim2Case common = claim2_analyze(star(3, 2, StarSpec{2, 1}), w(3, "0"));
    CHECK(common.classification == Claim2Kind::CommonSingleton);
    CHECK(common.detail == 1); // the common element is delta + 1
    CHECK(common.counts == std::vector<std::size_t>{1, 1, 1});
    CHECK(common.sum == 3);

    Claim2Case contained = claim2_analyze(star(3, 2, StarSpec{1, 0}), w(3, "0"));
    CHECK(contained.classification == Claim2Kind::UniqueContainment);
    CHECK(contained.detail == 0);
    CHECK(contained.counts == std::vector<std::size_t>{3, 0, 0});

    Claim2Case deficient = claim2_analyze(fam(3, 2, {"00"}), w(3, "0"));
    CHECK(deficient.classification == Claim2Kind::Deficient);
    CHECK(deficient.sum == 1);

    CHECK_THROWS_AS(claim2_analyze(fam(2, 2, {"00"}), w(2, "0")), invalid_input);
    CHECK_THROWS_AS(claim2_analyze(fam(3, 2, {"00", "11", "21"}), w(3, "0")), invalid_input);
    CHECK_THROWS_AS(claim2_analyze(fam(3, 2, {"00"}), w(3, "00")), invalid_input);
}

TEST_CASE("stars classify uniformly under claim2") {
    for (std::uint32_t m : {2u, 3u}) {
        const std::uint64_t deltas = *checked_pow(3, m - 1);
        for (std::uint32_t pos = 1; pos <= m; ++pos) {
            for (letter_t letter = 0; letter < 3; ++letter) {
                Family s = star(3, m, StarSpec{pos, letter});
                for (std::uint64_t rank = 0; rank < deltas; ++rank) {
                    Claim2Case c = claim2_analyze(s, Word::from_rank(3, m - 1, rank));
                    CHECK(c.sum == 3);
                    if (pos == 1) {
                        CHECK(c.classification == Claim2Kind::UniqueContainment);
                        CHECK(c.detail == letter);
                    } else {
                        CHECK(c.classification == Claim2Kind::CommonSingleton);
                    }
                }
            }
        }
    }
}

TEST_CASE("double count equals q times the family size") {
    CheckReport maximal = double_count_check(star(3, 2, StarSpec{2, 0}));
    CHECK(maximal.passed);
    CHECK(maximal.metrics.at("double_sum") == 9);
    CHECK(maximal.metrics.at("q_times_size") == 9);
    CHECK(maximal.metrics.at("maximal") == 1);

    CheckReport single = double_count_check(fam(3, 2, {"00"}));
    CHECK(single.passed);
    CHECK(single.metrics.at("double_sum") == 3);
    CHECK(single.metrics.at("maximal") == 0);

    CheckReport empty = double_count_check(Family(Alphabet(3), 2));
    CHECK(empty.passed);
    CHECK(empty.metrics.at("double_sum") == 0);

    // every maximum family satisfies the identity with value q^m
    for (const Family& f : enumerate_max_intersecting(2, 3).families) {
        CheckReport rep = double_count_check(f);
        CHECK(rep.passed);
        CHECK(rep.metrics.at("maximal") == 1);
    }
    for (const Family& f : enumerate_max_intersecting(3, 2).families) {
        CHECK(double_count_check(f).metrics.at("maximal") == 1);
    }
}

TEST_CASE("residues split into two nonzero summands when q >= 3") {
    for (std::uint32_t q = 3; q <= 7; ++q) {
        for (std::uint32_t target = 0; target < q; ++target) {
            auto [a, b] = two_nonzero_summands(q, target);
            CHECK(a >= 1);
            CHECK(a < q);
            CHECK(b >= 1);
            CHECK(b < q);
            CHECK((a + b) % q == target);
        }
    }
    CHECK_THROWS_AS(two_nonzero_summands(2, 1), invalid_input);
}

TEST_CASE("theorem 2 certificates hold for q = 3") {
    Certificate c32 = theorem2_certificate(3, 2);
    CHECK(c32.num_extremal_families == 6);
    CHECK(c32.all_stars);
    CHECK(conclusion_holds(c32));
    REQUIRE(c32.families.has_value());
    CHECK(c32.families->size() == 6);

    Certificate c33 = theorem2_certificate(3, 3);
    CHECK(c33.num_extremal_families == 9);
    CHECK(c33.all_stars);
    CHECK(conclusion_holds(c33));
}

TEST_CASE("theorem 2 fails at q = 2 and the certificate says so") {
    Certificate cert = theorem2_certificate(2, 3);
    CHECK(cert.num_extremal_families == 16);
    CHECK_FALSE(cert.all_stars);
    CHECK_FALSE(conclusion_holds(cert));

    REQUIRE(cert.families.has_value());
    CHECK(std::find(cert.families->begin(), cert.families->end(), kEvenWeight) !=
          cert.families->end());

    // the classification check lists non-star witnesses
    bool found_witnesses = false;
    for (const CheckReport& rep : cert.checks) {
        if (rep.name == "star-classification") {
            CHECK_FALSE(rep.passed);
            CHECK(rep.metrics.at("stars") == 6);
            CHECK_FALSE(rep.witnesses.empty());
            found_witnesses = true;
        }
    }
    CHECK(found_witnesses);
}

TEST_CASE("theorem 3 certificates hold for m = 2..4") {
    for (std::uint32_t m = 2; m <= 4; ++m) {
        Certificate cert = theorem3_certificate(m);
        CHECK(cert.num_extremal_families == 2 * m);
        CHECK(cert.all_stars);
        CHECK(conclusion_holds(cert));
        bool endgame_seen = false;
        for (const CheckReport& rep : cert.checks) {
            if (rep.name == "endgame-last-letter") {
                CHECK(rep.passed);
                endgame_seen = true;
            }
        }
        CHECK(endgame_seen);
    }
}

TEST_CASE("binary census counts match 2^(2^(m-1)) both ways") {
    const std::uint64_t expected[] = {0, 2, 4, 16, 256};
    for (std::uint32_t m = 1; m <= 4; ++m) {
        CheckReport rep = binary_count_check(m);
        CHECK(rep.passed);
        CHECK(rep.metrics.at("selection_count") == static_cast<std::int64_t>(expected[m]));
        CHECK(rep.metrics.at("search_count") == static_cast<std::int64_t>(expected[m]));
    }
    CHECK_THROWS_AS(binary_count_check(6), invalid_input);
}

TEST_CASE("count certificate records the census") {
    Certificate cert = count_certificate(3);
    CHECK(cert.theorem == "count-q2");
    CHECK(cert.num_extremal_families == 16);
    CHECK_FALSE(cert.all_stars);
    CHECK(conclusion_holds(cert)); // the census itself is the conclusion
}

TEST_CASE("family lists past the cap are elided behind a hash") {
    Certificate cert = count_certificate(5); // 65536 maxima
    CHECK(cert.num_extremal_families == 65536);
    CHECK_FALSE(cert.families.has_value());
    REQUIRE(cert.families_hash.has_value());
    CHECK(cert.families_hash->rfind("fnv1a64:", 0) == 0);
    CHECK(conclusion_holds(cert));
    CHECK(revalidate(cert)); // nothing recorded, nothing contradicted

    std::string text = certificate_to_text(cert);
    CHECK(text.find("\"families\": [") == std::string::npos); // no recorded list
    Certificate back = certificate_from_text(text);
    CHECK(back.families_hash == cert.families_hash);
}

TEST_CASE("lemma 1 certificate verifies partition, disjointness, attainment") {
    for (auto [q, m] : {std::pair<std::uint32_t, std::uint32_t>{3, 2}, {2, 4}, {4, 2}}) {
        Certificate cert = lemma1_certificate(q, m);
        CHECK(cert.theorem == "lemma1");
        CHECK(conclusion_holds(cert));
        CHECK(cert.bound == *checked_pow(q, m - 1));
    }
    CHECK_THROWS_AS(lemma1_certificate(10, 4), invalid_input);
}

TEST_CASE("certificates serialize with fixed field order and round-trip") {
    Certificate cert = theorem2_certificate(3, 2);
    std::string text = certificate_to_text(cert);

    const char* keys[] = {"\"schema_version\"", "\"theorem\"",     "\"q\"",
                          "\"m\"",              "\"bound\"",       "\"extremal_size\"",
                          "\"num_extremal_families\"", "\"num_stars_expected\"",
                          "\"all_stars\"",      "\"families\"",    "\"checks\"",
                          "\"elapsed_ms\""};
    std::size_t last = 0;
    for (const char* key : keys) {
        std::size_t at = text.find(key);
        REQUIRE(at != std::string::npos);
        CHECK(at > last);
        last = at;
    }

    Certificate back = certificate_from_text(text);
    CHECK(certificate_to_text(back) == text);
    CHECK(back.num_extremal_families == cert.num_extremal_families);
    CHECK(revalidate(back));
}

TEST_CASE("content hash ignores elapsed time") {
    Certificate cert = theorem2_certificate(3, 2);
    Certificate later = cert;
    later.elapsed_ms = cert.elapsed_ms + 12345;
    CHECK(certificate_content_hash(cert) == certificate_content_hash(later));
    CHECK(certificate_to_text(cert) != certificate_to_text(later));
}

TEST_CASE("certificate files round-trip and detect tampering") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ekr_verify_test";
    fs::create_directories(dir);
    fs::path path = dir / "thm2_32.cert";

    Certificate cert = theorem2_certificate(3, 2);
    write_certificate_file(path.string(), cert);
    Certificate back = read_certificate_file(path.string());
    CHECK(certificate_to_text(back) == certificate_to_text(cert));
    CHECK(revalidate(back));

    // flip a byte in the body; the recorded hash must catch it
    std::string text;
    {
        std::ifstream in(path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    std::size_t at = text.find("\"all_stars\": true");
    REQUIRE(at != std::string::npos);
    text.replace(at, std::string("\"all_stars\": true").size(), "\"all_stars\": false");
    fs::path bad = dir / "tampered.cert";
    {
        std::ofstream out(bad);
        out << text;
    }
    CHECK_THROWS_AS(read_certificate_file(bad.string()), invalid_input);

    Certificate tampered = cert;
    tampered.all_stars = false;
    CHECK_FALSE(revalidate(tampered));

    fs::remove_all(dir);
}

} // TEST_SUITE
