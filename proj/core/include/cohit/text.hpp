#pragma once

#include <cohit/termset.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cohit {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Grammar shared by monomials, divided-power monomials and lambda words:
//   sum   := "0" | tuple ('+' tuple)*
//   tuple := int (',' int)* | "()"
// Whitespace is ignored between tokens.
std::vector<IntTuple> parse_tuple_sum(std::string_view s);
IntTuple parse_tuple(std::string_view s);

std::string format_tuple(const IntTuple& t);
std::string format_tuple_sum(const std::vector<IntTuple>& terms);

template <class Tag>
std::string to_text(const TermSet<Tag>& s) {
    return format_tuple_sum(s.terms());
}

}  // namespace cohit
