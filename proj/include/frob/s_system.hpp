// The binary operations star and circ induced on e_star by the ternary
// operation, the group they form on e_star \ {zero} (isomorphic to H0 via
// a -> h[a]), right-S-system verification for the table family {A_a}, and
// pairwise orthogonality checks.
#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frob/frobenius.hpp"
#include "frob/ternary.hpp"

namespace frob {

// a * b is the middle-slot constant of the composition law:
// (x, a, (x, b, y)) = (x, a*b, y).  zero is absorbing.
inline point_t star(const FrobeniusContext& ctx, point_t a, point_t b) {
    if (!ctx.in_e_star(a) || !ctx.in_e_star(b))
        throw std::invalid_argument("star: arguments must lie in e_star");
    if (a == ctx.zero() || b == ctx.zero()) return ctx.zero();
    return composition_constant(ctx, ctx.zero(), a, b);
}

// a o b = (zero, a, b); coincides with star on all of e_star.
inline point_t circ(const FrobeniusContext& ctx, point_t a, point_t b) {
    if (!ctx.in_e_star(a) || !ctx.in_e_star(b))
        throw std::invalid_argument("circ: arguments must lie in e_star");
    return ternary_eval(ctx, ctx.zero(), a, b);
}

inline point_t star_inverse(const FrobeniusContext& ctx, point_t a) {
    if (!ctx.in_e_star(a) || a == ctx.zero())
        throw std::invalid_argument("star_inverse: argument must lie in e_star \\ {zero}");
    for (point_t b : ctx.e_star()) {
        if (b == ctx.zero()) continue;
        if (star(ctx, a, b) == ctx.one() && star(ctx, b, a) == ctx.one()) return b;
    }
    throw std::logic_error("star_inverse: no two-sided inverse for " + std::to_string(a));
}

namespace detail {

// First group-axiom violation of an operation table over `carrier`, or
// nullopt.  Checked in order: closure, identity, associativity, inverses.
inline std::optional<std::string> find_group_axiom_violation(
    const std::vector<point_t>& carrier, point_t identity,
    const std::function<point_t(point_t, point_t)>& op) {
    auto in_carrier = [&](point_t v) {
        return std::find(carrier.begin(), carrier.end(), v) != carrier.end();
    };
    if (!in_carrier(identity)) return "identity element not in carrier";
    for (point_t a : carrier)
        for (point_t b : carrier)
            if (!in_carrier(op(a, b)))
                return "closure fails: " + std::to_string(a) + " * " + std::to_string(b) +
                       " = " + std::to_string(op(a, b)) + " outside carrier";
    for (point_t a : carrier) {
        if (op(identity, a) != a || op(a, identity) != a)
            return "identity fails at " + std::to_string(a);
    }
    for (point_t a : carrier)
        for (point_t b : carrier)
            for (point_t c : carrier)
                if (op(op(a, b), c) != op(a, op(b, c)))
                    return "associativity fails at (" + std::to_string(a) + ", " +
                           std::to_string(b) + ", " + std::to_string(c) + ")";
    for (point_t a : carrier) {
        bool found = false;
        for (point_t b : carrier)
            if (op(a, b) == identity && op(b, a) == identity) {
                found = true;
                break;
            }
        if (!found) return "no two-sided inverse for " + std::to_string(a);
    }
    return std::nullopt;
}

}  // namespace detail

// The group <e_star \ {zero}, star, one> with a precomputed Cayley table.
class StarGroup {
public:
    StarGroup(std::vector<point_t> carrier, point_t identity, point_t degree,
              std::vector<point_t> table, std::vector<point_t> inverse)
        : carrier_(std::move(carrier)),
          identity_(identity),
          index_(static_cast<std::size_t>(degree), -1),
          table_(std::move(table)),
          inverse_(std::move(inverse)) {
        for (std::size_t i = 0; i < carrier_.size(); ++i)
            index_[static_cast<std::size_t>(carrier_[i])] = static_cast<point_t>(i);
    }

    const std::vector<point_t>& carrier() const { return carrier_; }
    point_t identity() const { return identity_; }
    std::size_t order() const { return carrier_.size(); }

    point_t op(point_t a, point_t b) const {
        return table_[static_cast<std::size_t>(index_of(a)) * carrier_.size() +
                      static_cast<std::size_t>(index_of(b))];
    }

    point_t inverse(point_t a) const {
        return inverse_[static_cast<std::size_t>(index_of(a))];
    }

    // Abstract structure of the Cayley table, for reports.
    std::string describe() const {
        const std::size_t m = order();
        if (m == 1) return "C1";
        bool abelian = true;
        for (point_t a : carrier_)
            for (point_t b : carrier_)
                if (op(a, b) != op(b, a)) abelian = false;
        auto element_order = [&](point_t a) {
            std::size_t k = 1;
            point_t cur = a;
            while (cur != identity_) {
                cur = op(cur, a);
                ++k;
            }
            return k;
        };
        bool cyclic = false;
        for (point_t a : carrier_)
            if (element_order(a) == m) cyclic = true;
        if (cyclic) return "C" + std::to_string(m);
        if (m == 4 && abelian) return "C2 x C2";
        if (m == 6 && !abelian) return "S3";
        return (abelian ? "abelian, order " : "non-abelian, order ") + std::to_string(m);
    }

private:
    point_t index_of(point_t a) const {
        if (a < 0 || static_cast<std::size_t>(a) >= index_.size() ||
            index_[static_cast<std::size_t>(a)] < 0)
            throw std::invalid_argument("star group: " + std::to_string(a) +
                                        " not in carrier");
        return index_[static_cast<std::size_t>(a)];
    }

    std::vector<point_t> carrier_;
    point_t identity_;
    std::vector<point_t> index_;
    std::vector<point_t> table_;
    std::vector<point_t> inverse_;
};

// Builds the star group and verifies the group axioms plus the isomorphism
// h[a * b] = h[a] * h[b] onto H0.  Violations throw std::logic_error (they
// would signal a construction bug, not bad input).
inline StarGroup build_star_group(const FrobeniusContext& ctx) {
    std::vector<point_t> carrier;
    for (point_t a : ctx.e_star())
        if (a != ctx.zero()) carrier.push_back(a);

    auto op = [&](point_t a, point_t b) { return star(ctx, a, b); };
    if (auto violation = detail::find_group_axiom_violation(carrier, ctx.one(), op))
        throw std::logic_error("star group axiom violation: " + *violation);

    const std::size_t m = carrier.size();
    std::vector<point_t> table(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) table[i * m + j] = op(carrier[i], carrier[j]);
    std::vector<point_t> inverse(m);
    for (std::size_t i = 0; i < m; ++i) inverse[i] = star_inverse(ctx, carrier[i]);

    for (point_t a : carrier)
        for (point_t b : carrier)
            if (ctx.h(star(ctx, a, b)) != compose(ctx.h(a), ctx.h(b)))
                throw std::logic_error("star group: h[" + std::to_string(a) + " * " +
                                       std::to_string(b) + "] != h[" + std::to_string(a) +
                                       "] * h[" + std::to_string(b) + "]");

    return StarGroup(std::move(carrier), ctx.one(), ctx.degree(), std::move(table),
                     std::move(inverse));
}

struct SSystemReport {
    bool projections_ok = true;     // A_zero and A_one are the two projections
    bool closure_ok = true;         // (x,i,(x,j,y)) = (x,k,y) with k in e_star
    bool group_ok = true;           // <e_star \ {zero}, star> satisfies the group axioms
    bool quasigroups_ok = true;     // every other A_a is an idempotent Latin square
    bool star_circ_ok = true;       // star = circ on e_star x e_star
    bool isomorphism_ok = true;     // a -> h[a] carries star to composition in H0
    bool right_division_ok = true;  // (x,b,y) = (x, b*a^-1, (x,a,y))
    std::size_t star_order = 0;
    std::string star_structure;
    std::vector<std::string> failures;

    bool ok() const {
        return projections_ok && closure_ok && group_ok && quasigroups_ok && star_circ_ok &&
               isomorphism_ok && right_division_ok;
    }
};

inline std::vector<OperationTable> build_family(const FrobeniusContext& ctx) {
    std::vector<OperationTable> family;
    for (point_t a : ctx.e_star()) family.push_back(binary_table(ctx, a));
    return family;
}

// Right-S-system verification over an explicit table family (normally the
// output of build_family; tests pass corrupted copies).
inline SSystemReport verify_right_s_system(const FrobeniusContext& ctx,
                                           const std::vector<OperationTable>& family) {
    SSystemReport r;
    const point_t n = ctx.degree();

    auto table_for = [&](point_t a) -> const OperationTable& {
        for (const auto& t : family)
            if (t.label == a) return t;
        throw std::invalid_argument("family is missing the table for a = " +
                                    std::to_string(a));
    };

    const OperationTable& t_zero = table_for(ctx.zero());
    const OperationTable& t_one = table_for(ctx.one());
    for (point_t x = 0; x < n && r.projections_ok; ++x)
        for (point_t y = 0; y < n; ++y)
            if (t_zero.at(x, y) != x || t_one.at(x, y) != y) {
                r.projections_ok = false;
                r.failures.push_back("projection table wrong at (" + std::to_string(x) +
                                     ", " + std::to_string(y) + ")");
                break;
            }

    // Item 2: for each pair (i, j) the composite (x,i,(x,j,y)) must be some
    // family member (x,k,y), with k != zero whenever i, j != zero.
    for (point_t i : ctx.e_star()) {
        const OperationTable& ti = table_for(i);
        for (point_t j : ctx.e_star()) {
            const OperationTable& tj = table_for(j);
            std::optional<point_t> found;
            for (point_t k : ctx.e_star()) {
                const OperationTable& tk = table_for(k);
                bool match = true;
                for (point_t x = 0; x < n && match; ++x)
                    for (point_t y = 0; y < n; ++y)
                        if (ti.at(x, tj.at(x, y)) != tk.at(x, y)) {
                            match = false;
                            break;
                        }
                if (match) {
                    found = k;
                    break;
                }
            }
            bool bad = !found.has_value() ||
                       (i != ctx.zero() && j != ctx.zero() && *found == ctx.zero());
            if (bad) {
                r.closure_ok = false;
                r.failures.push_back(
                    "composition of tables (" + std::to_string(i) + ", " + std::to_string(j) +
                    ") " +
                    (found ? "lands on zero" : std::string("matches no family member")));
            }
        }
    }

    try {
        StarGroup sg = build_star_group(ctx);
        r.star_order = sg.order();
        r.star_structure = sg.describe();
    } catch (const std::logic_error& e) {
        r.group_ok = false;
        r.failures.push_back(e.what());
    }

    for (point_t a : ctx.e_star()) {
        if (a == ctx.zero() || a == ctx.one()) continue;
        QuasigroupCheck qc = check_idempotent_quasigroup(table_for(a));
        if (!qc.ok) {
            r.quasigroups_ok = false;
            r.failures.push_back("table a=" + std::to_string(a) + ": " +
                                 qc.violation->describe());
        }
    }

    for (point_t a : ctx.e_star())
        for (point_t b : ctx.e_star())
            if (star(ctx, a, b) != circ(ctx, a, b)) {
                r.star_circ_ok = false;
                r.failures.push_back("star(" + std::to_string(a) + ", " + std::to_string(b) +
                                     ") != circ(" + std::to_string(a) + ", " +
                                     std::to_string(b) + ")");
            }

    for (point_t a : ctx.e_star()) {
        if (a == ctx.zero()) continue;
        for (point_t b : ctx.e_star()) {
            if (b == ctx.zero()) continue;
            if (ctx.h(star(ctx, a, b)) != compose(ctx.h(a), ctx.h(b))) {
                r.isomorphism_ok = false;
                r.failures.push_back("h[" + std::to_string(a) + " * " + std::to_string(b) +
                                     "] != h[" + std::to_string(a) + "] * h[" +
                                     std::to_string(b) + "]");
            }
        }
    }

    // Right division: (x, b, y) = (x, b * a^-1, (x, a, y)) for a, b != zero.
    if (r.group_ok) {
        for (point_t a : ctx.e_star()) {
            if (a == ctx.zero()) continue;
            for (point_t b : ctx.e_star()) {
                if (b == ctx.zero()) continue;
                point_t k = star(ctx, b, star_inverse(ctx, a));
                const OperationTable& ta = table_for(a);
                const OperationTable& tb = table_for(b);
                const OperationTable& tk = table_for(k);
                for (point_t x = 0; x < n && r.right_division_ok; ++x)
                    for (point_t y = 0; y < n; ++y)
                        if (tb.at(x, y) != tk.at(x, ta.at(x, y))) {
                            r.right_division_ok = false;
                            r.failures.push_back("right division fails at a=" +
                                                 std::to_string(a) + ", b=" +
                                                 std::to_string(b));
                            break;
                        }
            }
        }
    }

    return r;
}

inline SSystemReport verify_right_s_system(const FrobeniusContext& ctx) {
    return verify_right_s_system(ctx, build_family(ctx));
}

struct OrthogonalityCheck {
    bool ok = true;
    point_t c = -1;  // first (c, d) whose solution count differs from 1
    point_t d = -1;
    std::size_t count = 1;

    std::string describe() const {
        if (ok) return "orthogonal";
        return "target (" + std::to_string(c) + ", " + std::to_string(d) + ") has " +
               std::to_string(count) + " solutions";
    }
};

// Two tables are orthogonal when the system (x,a,y) = c, (x,b,y) = d has
// exactly one solution (x, y) for every (c, d).
inline OrthogonalityCheck check_orthogonal(const FrobeniusContext& ctx, point_t a, point_t b) {
    if (!ctx.in_e_star(a) || !ctx.in_e_star(b))
        throw std::invalid_argument("check_orthogonal: arguments must lie in e_star");
    if (a == b) throw std::invalid_argument("check_orthogonal: arguments must differ");
    const point_t n = ctx.degree();
    OperationTable ta = binary_table(ctx, a);
    OperationTable tb = binary_table(ctx, b);
    std::vector<std::size_t> counts(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (point_t x = 0; x < n; ++x)
        for (point_t y = 0; y < n; ++y)
            ++counts[static_cast<std::size_t>(ta.at(x, y)) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(tb.at(x, y))];
    for (point_t c = 0; c < n; ++c)
        for (point_t d = 0; d < n; ++d) {
            std::size_t cnt = counts[static_cast<std::size_t>(c) * static_cast<std::size_t>(n) +
                                     static_cast<std::size_t>(d)];
            if (cnt != 1) return {false, c, d, cnt};
        }
    return {true, -1, -1, 1};
}

}  // namespace frob
