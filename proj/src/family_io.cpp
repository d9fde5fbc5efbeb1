#include "ekr/family_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace ekr {
namespace {

std::string trimmed(const std::string& line) {
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    std::size_t end = line.find_last_not_of(" \t\r");
    return line.substr(begin, end - begin + 1);
}

} // namespace

Family read_family(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    std::uint32_t q = 0;
    std::uint32_t m = 0;
    bool have_header = false;
    std::vector<Word> members;
    std::set<Word> seen;

    while (std::getline(in, line)) {
        ++line_no;
        std::string body = trimmed(line);
        if (body.empty() || body[0] == '#') continue;

        if (!have_header) {
            std::istringstream header(body);
            long long qv = 0, mv = 0;
            char extra = 0;
            if (!(header >> qv >> mv) || (header >> extra)) {
                throw parse_error(line_no, "expected header \"q m\"");
            }
            if (qv < 2 || qv > 10) throw parse_error(line_no, "q must lie in 2..10");
            if (mv < 1) throw parse_error(line_no, "m must be at least 1");
            q = static_cast<std::uint32_t>(qv);
            m = static_cast<std::uint32_t>(mv);
            have_header = true;
            continue;
        }

        if (body.size() != m) {
            throw parse_error(line_no, "word has " + std::to_string(body.size()) +
                                           " digits, expected " + std::to_string(m));
        }
        Word w = [&] {
            try {
                return Word::parse(q, body);
            } catch (const invalid_input& e) {
                throw parse_error(line_no, e.what());
            }
        }();
        if (!seen.insert(w).second) throw parse_error(line_no, "duplicate word " + body);
        members.push_back(std::move(w));
    }

    if (!have_header) throw parse_error(line_no, "missing header \"q m\"");
    return Family(Alphabet(q), m, std::move(members));
}

Family read_family_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_family(in);
}

Family read_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open family file: " + path);
    return read_family(in);
}

std::string family_to_text(const Family& f) {
    std::ostringstream out;
    out << f.q() << ' ' << f.length() << '\n';
    for (const Word& w : f.words()) out << w.str() << '\n';
    return out.str();
}

void write_family_file(const std::string& path, const Family& f) {
    std::ofstream out(path);
    if (!out) throw invalid_input("cannot write family file: " + path);
    out << family_to_text(f);
}

} // namespace ekr
