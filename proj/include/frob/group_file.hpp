// Text format for describing a permutation group by generators:
//
//   # comment
//   degree 3
//   gen (0 1 2)
//   gen (1 2)
//   zero 0        # optional
//   one 1         # optional
//
// `gen id` names the identity permutation.  Errors carry 1-based line and
// column positions.
#pragma once

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "frob/permutation.hpp"

namespace frob {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + msg),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

struct GroupFile {
    point_t degree = 0;
    std::vector<Permutation> generators;
    std::optional<point_t> zero;
    std::optional<point_t> one;

    friend bool operator==(const GroupFile&, const GroupFile&) = default;
};

namespace detail {

// Cursor over one line; columns are 1-based for error reporting.
struct LineCursor {
    std::string_view text;
    int line;
    std::size_t pos = 0;

    int col() const { return static_cast<int>(pos) + 1; }
    bool at_end() const { return pos >= text.size() || text[pos] == '#'; }
    char peek() const { return text[pos]; }

    void skip_spaces() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    std::string_view take_word() {
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')' && text[pos] != '#')
            ++pos;
        return text.substr(start, pos - start);
    }

    point_t take_number(const char* what) {
        skip_spaces();
        int start_col = col();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(line, start_col, std::string("expected ") + what);
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1000000) throw ParseError(line, start_col, "number too large");
            ++pos;
        }
        return static_cast<point_t>(value);
    }
};

inline Permutation parse_cycles(LineCursor& cur, point_t degree) {
    std::vector<std::vector<point_t>> cycles;
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    cur.skip_spaces();
    if (cur.at_end()) throw ParseError(cur.line, cur.col(), "expected cycle or 'id'");
    if (cur.peek() != '(') {
        int word_col = cur.col();
        std::string_view word = cur.take_word();
        if (word == "id") {
            cur.skip_spaces();
            if (!cur.at_end())
                throw ParseError(cur.line, cur.col(), "unexpected text after 'id'");
            return Permutation::identity(degree);
        }
        throw ParseError(cur.line, word_col, "expected cycle or 'id'");
    }
    while (true) {
        cur.skip_spaces();
        if (cur.at_end()) break;
        if (cur.peek() != '(')
            throw ParseError(cur.line, cur.col(), "expected '('");
        ++cur.pos;
        std::vector<point_t> cycle;
        while (true) {
            cur.skip_spaces();
            if (cur.pos >= cur.text.size())
                throw ParseError(cur.line, cur.col(), "unterminated cycle: expected ')'");
            if (cur.peek() == ')') {
                ++cur.pos;
                break;
            }
            int num_col = cur.col();
            point_t pt = cur.take_number("point");
            if (pt >= degree)
                throw ParseError(cur.line, num_col,
                                 "point " + std::to_string(pt) + " out of range for degree " +
                                     std::to_string(degree));
            if (used[static_cast<std::size_t>(pt)])
                throw ParseError(cur.line, num_col,
                                 "point " + std::to_string(pt) + " repeated in cycles");
            used[static_cast<std::size_t>(pt)] = true;
            cycle.push_back(pt);
        }
        if (cycle.empty())
            throw ParseError(cur.line, cur.col(), "empty cycle");
        cycles.push_back(std::move(cycle));
    }
    return from_cycles(degree, cycles);
}

}  // namespace detail

inline GroupFile parse_group_file(std::string_view text) {
    GroupFile out;
    bool have_degree = false;
    int line_no = 0;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        ++line_no;
        detail::LineCursor cur{text.substr(line_start, line_end - line_start), line_no};

        cur.skip_spaces();
        if (!cur.at_end()) {
            int key_col = cur.col();
            std::string_view key = cur.take_word();
            if (key == "degree") {
                if (have_degree)
                    throw ParseError(line_no, key_col, "duplicate 'degree' directive");
                point_t d = cur.take_number("degree value");
                if (d <= 0) throw ParseError(line_no, key_col, "degree must be positive");
                out.degree = d;
                have_degree = true;
            } else if (key == "gen") {
                if (!have_degree)
                    throw ParseError(line_no, key_col, "'gen' before 'degree'");
                out.generators.push_back(detail::parse_cycles(cur, out.degree));
            } else if (key == "zero" || key == "one") {
                if (!have_degree)
                    throw ParseError(line_no, key_col,
                                     "'" + std::string(key) + "' before 'degree'");
                auto& slot = (key == "zero") ? out.zero : out.one;
                if (slot.has_value())
                    throw ParseError(line_no, key_col,
                                     "duplicate '" + std::string(key) + "' directive");
                cur.skip_spaces();
                int num_col = cur.col();
                point_t p = cur.take_number("point");
                if (p >= out.degree)
                    throw ParseError(line_no, num_col,
                                     "point " + std::to_string(p) + " out of range for degree " +
                                         std::to_string(out.degree));
                slot = p;
            } else if (key.empty()) {
                throw ParseError(line_no, key_col, "expected directive");
            } else {
                throw ParseError(line_no, key_col,
                                 "unknown directive '" + std::string(key) + "'");
            }
            cur.skip_spaces();
            if (!cur.at_end() && key != "gen")
                throw ParseError(line_no, cur.col(), "unexpected text after directive");
        }

        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }
    if (!have_degree) throw ParseError(line_no, 1, "missing 'degree' directive");
    if (out.zero && out.one && *out.zero == *out.one)
        throw ParseError(line_no, 1, "'zero' and 'one' must differ");
    return out;
}

inline std::string serialize_group_file(const GroupFile& gf) {
    std::string out = "degree " + std::to_string(gf.degree) + "\n";
    for (const auto& g : gf.generators) out += "gen " + cycle_string(g) + "\n";
    if (gf.zero) out += "zero " + std::to_string(*gf.zero) + "\n";
    if (gf.one) out += "one " + std::to_string(*gf.one) + "\n";
    return out;
}

}  // namespace frob
