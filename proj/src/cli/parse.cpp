#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rulerwrap/cli.hpp"

namespace rulerwrap::cli {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

}  // namespace

Ruler parse_lengths(std::string_view text) {
    std::vector<Length> values;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        const std::string_view line = text.substr(pos, eol - pos);
        ++line_no;

        std::size_t i = 0;
        while (i < line.size() && is_blank(line[i])) ++i;
        if (i < line.size() && line[i] != '#') {
            while (i < line.size()) {
                while (i < line.size() && is_blank(line[i])) ++i;
                if (i == line.size()) break;
                std::size_t end = i;
                while (end < line.size() && !is_blank(line[end])) ++end;
                const std::string_view tok = line.substr(i, end - i);
                const std::size_t column = i + 1;

                bool negative = false;
                std::string_view digits = tok;
                if (digits.front() == '-' || digits.front() == '+') {
                    negative = digits.front() == '-';
                    digits.remove_prefix(1);
                }
                if (digits.empty() ||
                    digits.find_first_not_of("0123456789") != std::string_view::npos) {
                    throw ParseError(line_no, column,
                                     "malformed token '" + std::string(tok) + "'");
                }
                Length v = 0;
                const auto [ptr, ec] =
                    std::from_chars(digits.data(), digits.data() + digits.size(), v);
                if (ec == std::errc::result_out_of_range) {
                    throw DomainError("line " + std::to_string(line_no) + ", column " +
                                      std::to_string(column) + ": value '" + std::string(tok) +
                                      "' overflows 64 bits");
                }
                if (negative || v == 0) {
                    throw DomainError("line " + std::to_string(line_no) + ", column " +
                                      std::to_string(column) + ": segment length '" +
                                      std::string(tok) + "' is not positive");
                }
                values.push_back(v);
                i = end;
            }
        }
        pos = eol + 1;
    }
    return Ruler(std::move(values));
}

std::string read_input(const std::string& path, std::istream& stdin_stream) {
    std::ostringstream buf;
    if (path == "-") {
        buf << stdin_stream.rdbuf();
        return buf.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot open '" + path + "'");
    }
    buf << f.rdbuf();
    return buf.str();
}

}  // namespace rulerwrap::cli
