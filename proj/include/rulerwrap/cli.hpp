#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rulerwrap/core_types.hpp"
#include "rulerwrap/wrap_algorithms.hpp"

namespace rulerwrap::cli {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Whitespace-separated decimal integers; lines whose first non-blank
/// character is '#' are skipped. Malformed tokens raise ParseError, values
/// outside the ruler domain raise DomainError.
Ruler parse_lengths(std::string_view text);

/// Reads a whole file, or standard input when path is "-".
std::string read_input(const std::string& path, std::istream& stdin_stream);

/// Table of the pair array after every step, one row per step, with a final
/// column naming the pairs discarded during that step.
std::string format_trace(std::span<const TraceStep> trace, std::size_t n);

/// Arc diagram: baseline for the ruler, one semicircle of radius y_i centred
/// at x_i per hinge i >= 1, apex dots, and the answer's last fold highlighted.
std::string render_svg(const Ruler& ruler, std::span<const ArcPair> pairs,
                       const WrapAnswer& answer);

/// Entry point for the rulerwrap tool. Exit codes: 0 success, 1 domain or
/// parse error, 2 usage error.
int dispatch(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace rulerwrap::cli
