#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "ekr/core.hpp"

namespace ekr {

// Family text format: first line "q m", then one word per nonempty line as m
// digits. Lines starting with '#' are ignored. Duplicates are rejected and
// q must be at most 10.
struct parse_error : invalid_input {
    parse_error(std::size_t line, const std::string& message)
        : invalid_input("line " + std::to_string(line) + ": " + message), line_no(line) {}

    std::size_t line_no;
};

Family read_family(std::istream& in);
Family read_family_text(std::string_view text);
Family read_family_file(const std::string& path);

std::string family_to_text(const Family& f);
void write_family_file(const std::string& path, const Family& f);

} // namespace ekr
