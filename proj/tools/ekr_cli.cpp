#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ekr/core.hpp"
#include "ekr/family_io.hpp"
#include "ekr/partitions.hpp"
#include "ekr/search.hpp"
#include "ekr/verify.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string words_line(const std::vector<ekr::Word>& words) {
    std::string line;
    for (const ekr::Word& w : words) {
        if (!line.empty()) line += ' ';
        line += w.str();
    }
    return line;
}

std::string star_label(const std::optional<ekr::StarSpec>& spec) {
    if (!spec) return "none";
    return "(position=" + std::to_string(spec->position) + ",letter=" +
           std::to_string(spec->letter) + ")";
}

// Lexicographically first subset of size min(r, |f|) with no common
// coordinate, pruning branches whose running agreement already died.
std::optional<std::vector<ekr::Word>> first_rwise_violation(const ekr::Family& f,
                                                            std::uint32_t r) {
    const auto& words = f.words();
    const std::size_t s = std::min<std::size_t>(r, words.size());
    if (s < 2) return std::nullopt;

    std::vector<ekr::Word> chosen;
    std::optional<std::vector<ekr::Word>> found;

    auto search = [&](auto&& self, std::size_t next) -> bool {
        if (chosen.size() == s) {
            if (!ekr::common_position(chosen).has_value()) {
                found = chosen;
                return true;
            }
            return false;
        }
        for (std::size_t i = next; i + (s - chosen.size()) <= words.size(); ++i) {
            chosen.push_back(words[i]);
            bool hit = self(self, i + 1);
            chosen.pop_back();
            if (hit) return true;
        }
        return false;
    };
    search(search, 0);
    return found;
}

struct CheckOutcome {
    bool property_holds = false;
    std::string text;
    ordered_json json;
};

CheckOutcome run_check(const ekr::Family& f, std::uint32_t r) {
    CheckOutcome out;
    std::ostringstream os;
    ordered_json j;

    os << "family q=" << f.q() << " m=" << f.length() << " size=" << f.size() << '\n';
    j["q"] = f.q();
    j["m"] = f.length();
    j["size"] = f.size();
    j["r"] = r;

    const bool rwise = ekr::is_r_wise_intersecting(f, r);
    out.property_holds = rwise;
    if (r == 2) {
        os << "intersecting=" << (rwise ? "true" : "false") << '\n';
    } else {
        os << "intersecting(r=" << r << ")=" << (rwise ? "true" : "false") << '\n';
    }
    j["intersecting"] = rwise;
    if (!rwise) {
        if (auto witness = first_rwise_violation(f, r)) {
            os << "witness " << words_line(*witness) << '\n';
            ordered_json arr = ordered_json::array();
            for (const ekr::Word& w : *witness) arr.push_back(w.str());
            j["witness"] = std::move(arr);
        }
    }

    auto spec = ekr::classify_star(f);
    os << "star=" << star_label(spec) << '\n';
    if (spec) {
        j["star"] = ordered_json{{"position", spec->position}, {"letter", spec->letter}};
    } else {
        j["star"] = nullptr;
    }

    const bool pairwise = ekr::is_intersecting(f);
    if (pairwise) {
        ekr::CheckReport lemma = ekr::check_lemma_bound(f);
        os << "lemma_bound=" << (lemma.passed ? "pass" : "fail") << " size="
           << lemma.metrics.at("size") << " bound=" << lemma.metrics.at("bound")
           << " occupied_cells=" << lemma.metrics.at("occupied_cells")
           << " max_occupancy=" << lemma.metrics.at("max_occupancy") << '\n';
        j["lemma_bound"] = ordered_json{{"passed", lemma.passed}, {"metrics", lemma.metrics}};
    } else {
        os << "lemma_bound=skipped (family not intersecting)\n";
        j["lemma_bound"] = nullptr;
    }

    // The table-driven reports materialize q^(m-1) prefixes; skip them
    // rather than fail when the family itself is legal but oversized.
    auto tables = f.length() >= 1 ? ekr::checked_pow(f.q(), f.length() - 1) : std::nullopt;
    const bool tables_fit = tables && *tables <= ekr::universe_cap();

    if (f.q() == 2) {
        if (tables_fit) {
            ekr::CheckReport claim1 = ekr::claim1_check(f);
            os << "claim1=" << (claim1.passed ? "pass" : "fail");
            if (!claim1.passed) os << " first_violation: " << claim1.witnesses.front();
            os << '\n';
            j["claim1"] = ordered_json{{"passed", claim1.passed}, {"witnesses", claim1.witnesses}};
        } else {
            os << "claim1=skipped (past universe cap)\n";
            j["claim1"] = nullptr;
        }
    }

    if (f.length() >= 2 && tables_fit) {
        os << "prefix_counts k=1:";
        ordered_json table = ordered_json::object();
        for (const auto& [prefix, count] : ekr::prefix_counts(f, 1)) {
            os << ' ' << prefix[0] << ':' << count;
            table[std::to_string(prefix[0])] = count;
        }
        os << '\n';
        j["prefix_counts_k1"] = std::move(table);

        ekr::CheckReport dc = ekr::double_count_check(f);
        os << "double_count=" << dc.metrics.at("double_sum") << " q_times_size="
           << dc.metrics.at("q_times_size") << " universe=" << dc.metrics.at("universe")
           << " maximal=" << (dc.metrics.at("maximal") == 1 ? "true" : "false") << '\n';
        j["double_count"] = dc.metrics;

        if (f.q() >= 3 && pairwise) {
            std::uint64_t deficient = 0, containment = 0, singleton = 0;
            const std::uint64_t deltas = *ekr::checked_pow(f.q(), f.length() - 1);
            for (std::uint64_t rank = 0; rank < deltas; ++rank) {
                ekr::Word delta = ekr::Word::from_rank(f.q(), f.length() - 1, rank);
                switch (ekr::claim2_analyze(f, delta).classification) {
                    case ekr::Claim2Kind::Deficient: ++deficient; break;
                    case ekr::Claim2Kind::UniqueContainment: ++containment; break;
                    case ekr::Claim2Kind::CommonSingleton: ++singleton; break;
                }
            }
            os << "claim2 deltas=" << deltas << " deficient=" << deficient
               << " unique_containment=" << containment << " common_singleton=" << singleton
               << '\n';
            j["claim2"] = ordered_json{{"deltas", deltas},
                                       {"deficient", deficient},
                                       {"unique_containment", containment},
                                       {"common_singleton", singleton}};
        }
    } else if (f.length() >= 2) {
        os << "double_count=skipped (past universe cap)\n";
        j["double_count"] = nullptr;
    }

    out.text = os.str();
    out.json = std::move(j);
    return out;
}

void print_certificate_summary(const ekr::Certificate& cert, std::uint64_t stars) {
    std::cout << "theorem=" << cert.theorem << " q=" << cert.q << " m=" << cert.m << '\n';
    std::cout << "bound=" << cert.bound << " extremal_size=" << cert.extremal_size << '\n';
    std::cout << "families=" << cert.num_extremal_families << " stars=" << stars
              << " expected_stars=" << cert.num_stars_expected << '\n';
    std::cout << "all_stars=" << (cert.all_stars ? "true" : "false") << '\n';
    for (const ekr::CheckReport& rep : cert.checks) {
        std::cout << "check " << rep.name << ": " << (rep.passed ? "pass" : "FAIL") << '\n';
        if (!rep.passed) {
            for (const std::string& w : rep.witnesses) std::cout << "  " << w << '\n';
        }
    }
    std::cout << "conclusion=" << (ekr::conclusion_holds(cert) ? "holds" : "fails") << '\n';
}

std::uint64_t stars_metric(const ekr::Certificate& cert) {
    for (const ekr::CheckReport& rep : cert.checks) {
        auto it = rep.metrics.find("stars");
        if (it != rep.metrics.end()) return static_cast<std::uint64_t>(it->second);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"intersecting families of words: bounds, searches, certificates"};
    app.require_subcommand(1);

    std::uint32_t q = 2, m = 1, r = 2;
    std::uint32_t workers = 1;
    std::uint64_t node_budget = 1'000'000'000;
    std::uint64_t wall_ms = 300'000;

    auto* cmd_bound = app.add_subcommand("bound", "print q^(m-1) and the star count q*m");
    cmd_bound->add_option("-q", q, "alphabet size")->required();
    cmd_bound->add_option("-m", m, "word length")->required();

    std::string family_path;
    bool as_json = false;
    auto* cmd_check = app.add_subcommand("check", "analyze a family file");
    cmd_check->add_option("path", family_path, "family text file")->required();
    cmd_check->add_option("-r", r, "intersection order (default 2)");
    cmd_check->add_flag("--json", as_json, "structured output");

    bool count_only = false;
    bool first_nonstar = false;
    std::string out_path;
    auto* cmd_enum = app.add_subcommand("enumerate", "enumerate maximum r-wise families");
    cmd_enum->add_option("-q", q, "alphabet size")->required();
    cmd_enum->add_option("-m", m, "word length")->required();
    cmd_enum->add_option("-r", r, "intersection order (default 2)");
    auto* count_flag = cmd_enum->add_flag("--count-only", count_only, "suppress the family list");
    cmd_enum->add_flag("--first-nonstar", first_nonstar, "stop at the first non-star maximum")
        ->excludes(count_flag);
    cmd_enum->add_option("--out", out_path, "also write the listing to a file");
    cmd_enum->add_option("--workers", workers, "worker threads");
    cmd_enum->add_option("--node-budget", node_budget, "search node budget");
    cmd_enum->add_option("--wall-ms", wall_ms, "search wall-clock budget (ms)");

    std::string theorem;
    std::string cert_path;
    auto* cmd_verify = app.add_subcommand("verify", "produce an exhaustive certificate");
    cmd_verify->add_option("theorem", theorem, "thm2 | thm3 | count-q2 | lemma1")
        ->required()
        ->check(CLI::IsMember({"thm2", "thm3", "count-q2", "lemma1"}));
    cmd_verify->add_option("-q", q, "alphabet size (default 2)");
    cmd_verify->add_option("-m", m, "word length")->required();
    cmd_verify->add_option("--cert", cert_path, "write the certificate here");
    cmd_verify->add_option("--workers", workers, "worker threads");
    cmd_verify->add_option("--node-budget", node_budget, "search node budget");
    cmd_verify->add_option("--wall-ms", wall_ms, "search wall-clock budget (ms)");

    std::string out_dir = ".";
    auto* cmd_stars = app.add_subcommand("stars", "emit all q*m star families to files");
    cmd_stars->add_option("-q", q, "alphabet size")->required();
    cmd_stars->add_option("-m", m, "word length")->required();
    cmd_stars->add_option("--out-dir", out_dir, "target directory (default .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cmd_bound->parsed()) {
            std::cout << "bound=" << ekr::max_bound(q, m) << " stars=" << ekr::count_stars(q, m)
                      << '\n';
            return kExitHolds;
        }

        if (cmd_check->parsed()) {
            ekr::Family f = ekr::read_family_file(family_path);
            CheckOutcome outcome = run_check(f, r);
            if (as_json) {
                std::cout << outcome.json.dump(2) << '\n';
            } else {
                std::cout << outcome.text;
            }
            return outcome.property_holds ? kExitHolds : kExitFails;
        }

        if (cmd_enum->parsed()) {
            ekr::SearchSpec spec;
            spec.q = q;
            spec.m = m;
            spec.r = r;
            spec.mode = first_nonstar ? ekr::SearchMode::FirstNonstar
                        : count_only  ? ekr::SearchMode::CountOnly
                                      : ekr::SearchMode::EnumerateAll;
            spec.limits = ekr::SearchLimits{node_budget, wall_ms, workers};
            ekr::SearchResult result = ekr::run_search(spec);
            if (!result.exhausted) {
                std::cerr << "error: budget exhausted before the search space was covered\n";
                return kExitBudget;
            }
            if (first_nonstar) {
                if (result.families.empty()) {
                    std::cout << "first_nonstar=none\n";
                } else {
                    std::cout << "first_nonstar=" << words_line(result.families.front().words())
                              << '\n';
                }
                return kExitHolds;
            }
            std::ostringstream os;
            std::uint64_t stars = 0;
            for (const ekr::Family& f : result.families) {
                auto spec_opt = ekr::classify_star(f);
                if (spec_opt) ++stars;
                os << words_line(f.words()) << " star=" << star_label(spec_opt) << '\n';
            }
            os << "count=" << result.count;
            if (!count_only) os << " stars=" << stars;
            os << " nodes=" << result.nodes_explored << " pruned=" << result.pruned
               << " exhausted=" << (result.exhausted ? "true" : "false") << '\n';
            std::cout << os.str();
            if (!out_path.empty()) {
                std::ofstream file(out_path);
                if (!file) throw ekr::invalid_input("cannot write listing to " + out_path);
                file << os.str();
            }
            return kExitHolds;
        }

        if (cmd_verify->parsed()) {
            ekr::SearchLimits limits{node_budget, wall_ms, workers};
            ekr::Certificate cert;
            if (theorem == "thm2") {
                cert = ekr::theorem2_certificate(q, m, limits);
            } else if (theorem == "thm3") {
                cert = ekr::theorem3_certificate(m, limits);
            } else if (theorem == "count-q2") {
                cert = ekr::count_certificate(m, limits);
            } else {
                cert = ekr::lemma1_certificate(q, m);
            }
            print_certificate_summary(cert, stars_metric(cert));
            if (!cert_path.empty()) {
                ekr::write_certificate_file(cert_path, cert);
                std::cout << "certificate=" << cert_path << '\n';
            }
            return ekr::conclusion_holds(cert) ? kExitHolds : kExitFails;
        }

        if (cmd_stars->parsed()) {
            std::uint64_t written = 0;
            std::filesystem::create_directories(out_dir);
            for (std::uint32_t pos = 1; pos <= m; ++pos) {
                for (ekr::letter_t letter = 0; letter < q; ++letter) {
                    ekr::Family f = ekr::star(q, m, ekr::StarSpec{pos, letter});
                    std::string name = "star_p" + std::to_string(pos) + "_l" +
                                       std::to_string(letter) + ".txt";
                    std::filesystem::path path = std::filesystem::path(out_dir) / name;
                    ekr::write_family_file(path.string(), f);
                    std::cout << "wrote " << path.string() << '\n';
                    ++written;
                }
            }
            std::cout << "stars=" << written << '\n';
            return kExitHolds;
        }
    } catch (const ekr::budget_exceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const ekr::invalid_input& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitUsage;
    }

    return kExitUsage;
}
