// The ternary operation (x, a, y) derived from a Frobenius context:
//   (x, zero, y) = x,  (x, one, y) = y,  otherwise (x, a, y) = alpha(x, a)(y).
// For each a the binary slice A_a(x, y) = (x, a, y) is materialized as an
// n x n table; for a outside {zero, one} it is an idempotent Latin square.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "frob/frobenius.hpp"
#include "frob/permutation.hpp"

namespace frob {

struct OperationTable {
    point_t label = 0;  // the middle-slot value a
    point_t n = 0;
    point_t zero = 0;
    point_t one = 1;
    std::vector<point_t> cells;  // row-major: cells[x*n + y] = (x, a, y)

    point_t at(point_t x, point_t y) const {
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw std::invalid_argument("table index out of range");
        return cells[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(y)];
    }

    bool is_projection() const { return label == zero || label == one; }
};

inline point_t ternary_eval(const FrobeniusContext& ctx, point_t x, point_t a, point_t y) {
    if (x < 0 || x >= ctx.degree() || y < 0 || y >= ctx.degree())
        throw std::invalid_argument("ternary_eval: point out of range");
    if (!ctx.in_e_star(a))
        throw std::invalid_argument("ternary_eval: middle slot " + std::to_string(a) +
                                    " not in e_star");
    if (a == ctx.zero()) return x;
    if (a == ctx.one()) return y;
    return ctx.alpha(x, a)(y);
}

inline OperationTable binary_table(const FrobeniusContext& ctx, point_t a) {
    if (!ctx.in_e_star(a))
        throw std::invalid_argument("binary_table: label " + std::to_string(a) +
                                    " not in e_star");
    const point_t n = ctx.degree();
    OperationTable t{a, n, ctx.zero(), ctx.one(), {}};
    t.cells.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (point_t x = 0; x < n; ++x) {
        if (a == ctx.zero()) {
            t.cells.insert(t.cells.end(), static_cast<std::size_t>(n), x);
        } else if (a == ctx.one()) {
            for (point_t y = 0; y < n; ++y) t.cells.push_back(y);
        } else {
            const Permutation row = ctx.alpha(x, a);
            t.cells.insert(t.cells.end(), row.images().begin(), row.images().end());
        }
    }
    return t;
}

struct TableViolation {
    enum class Kind { row_repeat, column_repeat, diagonal };

    Kind kind = Kind::row_repeat;
    point_t index = -1;   // the row/column, or the diagonal point
    point_t first = -1;   // the two positions holding the repeated value
    point_t second = -1;
    point_t value = -1;

    std::string describe() const {
        switch (kind) {
            case Kind::row_repeat:
                return "row " + std::to_string(index) + " repeats value " +
                       std::to_string(value) + " at columns " + std::to_string(first) +
                       " and " + std::to_string(second);
            case Kind::column_repeat:
                return "column " + std::to_string(index) + " repeats value " +
                       std::to_string(value) + " at rows " + std::to_string(first) + " and " +
                       std::to_string(second);
            case Kind::diagonal:
                return "diagonal cell (" + std::to_string(index) + ", " +
                       std::to_string(index) + ") holds " + std::to_string(value);
        }
        return "";
    }
};

struct QuasigroupCheck {
    bool ok = true;
    std::optional<TableViolation> violation;
};

// Latin-square + idempotence scan.  Rows first, then columns, then the
// diagonal, each in ascending order, so the reported witness is canonical.
inline QuasigroupCheck check_idempotent_quasigroup(const OperationTable& t) {
    if (t.is_projection())
        throw std::invalid_argument("check_idempotent_quasigroup: projection table (label " +
                                    std::to_string(t.label) + ")");
    std::vector<point_t> seen_at(static_cast<std::size_t>(t.n));
    for (point_t x = 0; x < t.n; ++x) {
        std::fill(seen_at.begin(), seen_at.end(), -1);
        for (point_t y = 0; y < t.n; ++y) {
            point_t v = t.at(x, y);
            if (seen_at[static_cast<std::size_t>(v)] >= 0)
                return {false,
                        TableViolation{TableViolation::Kind::row_repeat, x,
                                       seen_at[static_cast<std::size_t>(v)], y, v}};
            seen_at[static_cast<std::size_t>(v)] = y;
        }
    }
    for (point_t y = 0; y < t.n; ++y) {
        std::fill(seen_at.begin(), seen_at.end(), -1);
        for (point_t x = 0; x < t.n; ++x) {
            point_t v = t.at(x, y);
            if (seen_at[static_cast<std::size_t>(v)] >= 0)
                return {false,
                        TableViolation{TableViolation::Kind::column_repeat, y,
                                       seen_at[static_cast<std::size_t>(v)], x, v}};
            seen_at[static_cast<std::size_t>(v)] = x;
        }
    }
    for (point_t x = 0; x < t.n; ++x)
        if (t.at(x, x) != x)
            return {false,
                    TableViolation{TableViolation::Kind::diagonal, x, x, x, t.at(x, x)}};
    return {true, std::nullopt};
}

// The constant c with (x, a, (x, b, y)) = (x, c, y) for all y.  Independent
// of x; every call re-verifies the identity across all y and throws
// std::logic_error if the construction ever disagrees with itself.
inline point_t composition_constant(const FrobeniusContext& ctx, point_t x, point_t a,
                                    point_t b) {
    if (!ctx.in_e_star(a) || !ctx.in_e_star(b))
        throw std::invalid_argument("composition_constant: arguments must lie in e_star");
    if (x < 0 || x >= ctx.degree())
        throw std::invalid_argument("composition_constant: point out of range");

    point_t c;
    if (a == ctx.zero() || b == ctx.zero())
        c = ctx.zero();
    else if (a == ctx.one())
        c = b;
    else if (b == ctx.one())
        c = a;
    else
        c = ctx.h(a)(b);

    if (!ctx.in_e_star(c))
        throw std::logic_error("composition_constant: result " + std::to_string(c) +
                               " escapes e_star");
    for (point_t y = 0; y < ctx.degree(); ++y)
        if (ternary_eval(ctx, x, a, ternary_eval(ctx, x, b, y)) != ternary_eval(ctx, x, c, y))
            throw std::logic_error("composition_constant: verification failed at x=" +
                                   std::to_string(x) + ", a=" + std::to_string(a) +
                                   ", b=" + std::to_string(b) + ", y=" + std::to_string(y));
    return c;
}

// CLI dump format: header then one row per line.
inline std::string dump_table(const OperationTable& t) {
    std::string out =
        "# a=" + std::to_string(t.label) + " n=" + std::to_string(t.n) + "\n";
    for (point_t x = 0; x < t.n; ++x) {
        for (point_t y = 0; y < t.n; ++y) {
            if (y) out += ' ';
            out += std::to_string(t.at(x, y));
        }
        out += '\n';
    }
    return out;
}

}  // namespace frob
