#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ekr/core.hpp"
#include "ekr/family_io.hpp"
#include "ekr/partitions.hpp"
#include "ekr/search.hpp"
#include "ekr/verify.hpp"

namespace py = pybind11;

namespace {

ekr::Family family_from_strings(std::uint32_t q, std::uint32_t m,
                                const std::vector<std::string>& words) {
    std::vector<ekr::Word> members;
    members.reserve(words.size());
    for (const std::string& s : words) members.push_back(ekr::Word::parse(q, s));
    return ekr::Family(ekr::Alphabet(q), m, std::move(members));
}

std::vector<std::string> family_strings(const ekr::Family& f) {
    std::vector<std::string> out;
    out.reserve(f.size());
    for (const ekr::Word& w : f.words()) out.push_back(w.str());
    return out;
}

} // namespace

PYBIND11_MODULE(_ekrwords, mod) {
    mod.doc() = "intersecting families of words: bounds, partitions, search, certificates";

    py::register_exception<ekr::invalid_input>(mod, "InvalidInput", PyExc_ValueError);
    py::register_exception<ekr::budget_exceeded>(mod, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<ekr::Word>(mod, "Word")
        .def(py::init<std::uint32_t, std::vector<ekr::letter_t>>(), py::arg("q"),
             py::arg("letters"))
        .def_static("parse", &ekr::Word::parse, py::arg("q"), py::arg("digits"))
        .def_static("from_rank", &ekr::Word::from_rank, py::arg("q"), py::arg("m"),
                    py::arg("rank"))
        .def_property_readonly("q", &ekr::Word::q)
        .def_property_readonly("letters", &ekr::Word::letters)
        .def("__len__", &ekr::Word::length)
        .def("__str__", &ekr::Word::str)
        .def("__repr__", [](const ekr::Word& w) { return "Word('" + w.str() + "')"; })
        .def("rank", &ekr::Word::rank)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__hash__", [](const ekr::Word& w) { return py::hash(py::str(w.str())); });

    py::class_<ekr::Family>(mod, "Family")
        .def(py::init(&family_from_strings), py::arg("q"), py::arg("m"), py::arg("words"))
        .def(py::init([](std::uint32_t q, std::uint32_t m, std::vector<ekr::Word> members) {
                 return ekr::Family(ekr::Alphabet(q), m, std::move(members));
             }),
             py::arg("q"), py::arg("m"), py::arg("members"))
        .def_property_readonly("q", &ekr::Family::q)
        .def_property_readonly("m", &ekr::Family::length)
        .def("__len__", &ekr::Family::size)
        .def("words", &family_strings)
        .def("members", &ekr::Family::words)
        .def("contains", &ekr::Family::contains)
        .def("to_text", &ekr::family_to_text)
        .def("__repr__",
             [](const ekr::Family& f) {
                 return "Family(q=" + std::to_string(f.q()) + ", m=" + std::to_string(f.length()) +
                        ", size=" + std::to_string(f.size()) + ")";
             })
        .def(py::self == py::self)
        .def(py::self < py::self);

    py::class_<ekr::StarSpec>(mod, "StarSpec")
        .def(py::init<std::uint32_t, ekr::letter_t>(), py::arg("position"), py::arg("letter"))
        .def_readwrite("position", &ekr::StarSpec::position)
        .def_readwrite("letter", &ekr::StarSpec::letter)
        .def(py::self == py::self)
        .def("__repr__", [](const ekr::StarSpec& s) {
            return "StarSpec(position=" + std::to_string(s.position) +
                   ", letter=" + std::to_string(s.letter) + ")";
        });

    mod.def("intersects", &ekr::intersects, py::arg("x"), py::arg("y"));
    mod.def("common_position", &ekr::common_position, py::arg("words"));
    mod.def("is_intersecting", &ekr::is_intersecting, py::arg("family"));
    mod.def("is_r_wise_intersecting", &ekr::is_r_wise_intersecting, py::arg("family"),
            py::arg("r"));
    mod.def("star", &ekr::star, py::arg("q"), py::arg("m"), py::arg("spec"));
    mod.def("classify_star", &ekr::classify_star, py::arg("family"));
    mod.def("count_stars", &ekr::count_stars, py::arg("q"), py::arg("m"));
    mod.def("max_bound", &ekr::max_bound, py::arg("q"), py::arg("m"));
    mod.def("universe_cap", &ekr::universe_cap);

    py::class_<ekr::CosetCell>(mod, "CosetCell")
        .def_readonly("base", &ekr::CosetCell::base)
        .def_readonly("members", &ekr::CosetCell::members);

    py::class_<ekr::ComplementaryPair>(mod, "ComplementaryPair")
        .def_readonly("low", &ekr::ComplementaryPair::low)
        .def_readonly("high", &ekr::ComplementaryPair::high);

    py::class_<ekr::SliceView>(mod, "SliceView")
        .def_readonly("selector", &ekr::SliceView::selector)
        .def_readonly("selected", &ekr::SliceView::selected)
        .def_readonly("projected", &ekr::SliceView::projected);

    mod.def("coset_cells", &ekr::coset_cells, py::arg("q"), py::arg("n"));
    mod.def("cell_of", &ekr::cell_of, py::arg("word"));
    mod.def("diagonal_coset", &ekr::diagonal_coset, py::arg("base"));
    mod.def("complementary_pairs", &ekr::complementary_pairs, py::arg("m"));
    mod.def("family_from_selection", &ekr::family_from_selection, py::arg("choices"));
    mod.def("selection_from_family", &ekr::selection_from_family, py::arg("family"));
    mod.def("prefix_slice", &ekr::prefix_slice, py::arg("family"), py::arg("delta"));
    mod.def("prefix_counts", &ekr::prefix_counts, py::arg("family"), py::arg("k"));
    mod.def("letter_slices", &ekr::letter_slices, py::arg("family"));

    py::class_<ekr::CheckReport>(mod, "CheckReport")
        .def_readonly("name", &ekr::CheckReport::name)
        .def_readonly("passed", &ekr::CheckReport::passed)
        .def_readonly("witnesses", &ekr::CheckReport::witnesses)
        .def_readonly("metrics", &ekr::CheckReport::metrics);

    py::enum_<ekr::Claim2Kind>(mod, "Claim2Kind")
        .value("Deficient", ekr::Claim2Kind::Deficient)
        .value("UniqueContainment", ekr::Claim2Kind::UniqueContainment)
        .value("CommonSingleton", ekr::Claim2Kind::CommonSingleton);

    py::class_<ekr::Claim2Case>(mod, "Claim2Case")
        .def_readonly("delta", &ekr::Claim2Case::delta)
        .def_readonly("classification", &ekr::Claim2Case::classification)
        .def_readonly("detail", &ekr::Claim2Case::detail)
        .def_readonly("counts", &ekr::Claim2Case::counts)
        .def_readonly("sum", &ekr::Claim2Case::sum);

    mod.def("check_lemma_bound", &ekr::check_lemma_bound, py::arg("family"));
    mod.def("claim1_check", &ekr::claim1_check, py::arg("family"));
    mod.def("claim2_analyze", &ekr::claim2_analyze, py::arg("family"), py::arg("delta"));
    mod.def("double_count_check", &ekr::double_count_check, py::arg("family"));
    mod.def("two_nonzero_summands", &ekr::two_nonzero_summands, py::arg("q"), py::arg("target"));

    py::enum_<ekr::SearchMode>(mod, "SearchMode")
        .value("EnumerateAll", ekr::SearchMode::EnumerateAll)
        .value("CountOnly", ekr::SearchMode::CountOnly)
        .value("FirstNonstar", ekr::SearchMode::FirstNonstar);

    py::class_<ekr::SearchLimits>(mod, "SearchLimits")
        .def(py::init<>())
        .def(py::init<std::uint64_t, std::uint64_t, std::uint32_t>(), py::arg("node_budget"),
             py::arg("wall_budget_ms"), py::arg("workers"))
        .def_readwrite("node_budget", &ekr::SearchLimits::node_budget)
        .def_readwrite("wall_budget_ms", &ekr::SearchLimits::wall_budget_ms)
        .def_readwrite("workers", &ekr::SearchLimits::workers);

    py::class_<ekr::SearchResult>(mod, "SearchResult")
        .def_readonly("families", &ekr::SearchResult::families)
        .def_readonly("count", &ekr::SearchResult::count)
        .def_readonly("nodes_explored", &ekr::SearchResult::nodes_explored)
        .def_readonly("pruned", &ekr::SearchResult::pruned)
        .def_readonly("exhausted", &ekr::SearchResult::exhausted);

    mod.def("enumerate_max_intersecting", &ekr::enumerate_max_intersecting, py::arg("q"),
            py::arg("m"), py::arg("limits") = ekr::SearchLimits{},
            py::arg("mode") = ekr::SearchMode::EnumerateAll);
    mod.def("enumerate_max_rwise", &ekr::enumerate_max_rwise, py::arg("q"), py::arg("m"),
            py::arg("r"), py::arg("limits") = ekr::SearchLimits{},
            py::arg("mode") = ekr::SearchMode::EnumerateAll);

    py::class_<ekr::MaxFamily>(mod, "MaxFamily")
        .def_readonly("size", &ekr::MaxFamily::size)
        .def_readonly("witness", &ekr::MaxFamily::witness);

    mod.def("max_family_size", &ekr::max_family_size, py::arg("q"), py::arg("m"), py::arg("r"));
    mod.def("first_nonstar_max", &ekr::first_nonstar_max, py::arg("q"), py::arg("m"),
            py::arg("r"), py::arg("limits") = ekr::SearchLimits{});

    py::class_<ekr::Certificate>(mod, "Certificate")
        .def_readonly("schema_version", &ekr::Certificate::schema_version)
        .def_readonly("theorem", &ekr::Certificate::theorem)
        .def_readonly("q", &ekr::Certificate::q)
        .def_readonly("m", &ekr::Certificate::m)
        .def_readonly("bound", &ekr::Certificate::bound)
        .def_readonly("extremal_size", &ekr::Certificate::extremal_size)
        .def_readonly("num_extremal_families", &ekr::Certificate::num_extremal_families)
        .def_readonly("num_stars_expected", &ekr::Certificate::num_stars_expected)
        .def_readonly("all_stars", &ekr::Certificate::all_stars)
        .def_readonly("families", &ekr::Certificate::families)
        .def_readonly("families_hash", &ekr::Certificate::families_hash)
        .def_readonly("checks", &ekr::Certificate::checks)
        .def_readonly("elapsed_ms", &ekr::Certificate::elapsed_ms)
        .def("to_text", &ekr::certificate_to_text)
        .def("content_hash", &ekr::certificate_content_hash);

    mod.def("theorem2_certificate", &ekr::theorem2_certificate, py::arg("q"), py::arg("m"),
            py::arg("limits") = ekr::SearchLimits{});
    mod.def("theorem3_certificate", &ekr::theorem3_certificate, py::arg("m"),
            py::arg("limits") = ekr::SearchLimits{});
    mod.def("binary_count_check", &ekr::binary_count_check, py::arg("m"));
    mod.def("count_certificate", &ekr::count_certificate, py::arg("m"),
            py::arg("limits") = ekr::SearchLimits{});
    mod.def("lemma1_certificate", &ekr::lemma1_certificate, py::arg("q"), py::arg("m"));
    mod.def("conclusion_holds", &ekr::conclusion_holds, py::arg("certificate"));
    mod.def("certificate_from_text", &ekr::certificate_from_text, py::arg("text"));
    mod.def("revalidate", &ekr::revalidate, py::arg("certificate"));
    mod.def("write_certificate_file", &ekr::write_certificate_file, py::arg("path"),
            py::arg("certificate"));
    mod.def("read_certificate_file", &ekr::read_certificate_file, py::arg("path"));

    mod.def("read_family_text", &ekr::read_family_text, py::arg("text"));
    mod.def("read_family_file", &ekr::read_family_file, py::arg("path"));
    mod.def("family_to_text", &ekr::family_to_text, py::arg("family"));
    mod.def("write_family_file", &ekr::write_family_file, py::arg("path"), py::arg("family"));
}
