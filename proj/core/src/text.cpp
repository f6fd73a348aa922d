#include <cohit/text.hpp>

#include <cctype>
#include <limits>

namespace cohit {

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool at_end() {
        skip();
        return i >= s.size();
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    int integer() {
        skip();
        std::size_t start = i;
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > std::numeric_limits<int>::max()) throw ParseError(start, "integer too large");
            ++i;
        }
        if (i == start) throw ParseError(start, "expected a nonnegative integer");
        return static_cast<int>(v);
    }
    IntTuple tuple() {
        IntTuple t;
        skip();
        if (eat('(')) {
            if (!eat(')')) throw ParseError(i, "expected ')'");
            return t;
        }
        t.push_back(integer());
        while (eat(',')) t.push_back(integer());
        return t;
    }
};

}  // namespace

std::vector<IntTuple> parse_tuple_sum(std::string_view s) {
    Cursor c{s};
    std::vector<IntTuple> out;
    if (c.at_end()) throw ParseError(0, "empty input");
    // A lone "0" is the zero element; "0,..." is an ordinary tuple.
    {
        Cursor probe = c;
        probe.skip();
        std::size_t start = probe.i;
        if (probe.i < s.size() && s[probe.i] == '0') {
            ++probe.i;
            if (probe.at_end()) return out;
            probe.i = start;
        }
    }
    out.push_back(c.tuple());
    while (!c.at_end()) {
        if (!c.eat('+')) throw ParseError(c.i, "expected '+' or end of input");
        out.push_back(c.tuple());
    }
    return out;
}

IntTuple parse_tuple(std::string_view s) {
    Cursor c{s};
    IntTuple t = c.tuple();
    if (!c.at_end()) throw ParseError(c.i, "trailing characters");
    return t;
}

std::string format_tuple(const IntTuple& t) {
    if (t.empty()) return "()";
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t[i]);
    }
    return out;
}

std::string format_tuple_sum(const std::vector<IntTuple>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " + ";
        out += format_tuple(terms[i]);
    }
    return out;
}

}  // namespace cohit
