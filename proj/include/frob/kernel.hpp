// The kernel construction: translation permutations phi(b, a) = x -> (b,a,x),
// their composites psi(b, a, d) = phi(b, a) * phi(d, a^-1), the candidate
// kernel T = {psi(b, a0, zero) : b in E}, the brute-force oracle (all
// fixed-point-free elements plus the identity), and the transversal /
// subgroup / normality verifiers that certify T.
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "frob/frobenius.hpp"
#include "frob/perm_group.hpp"
#include "frob/permutation.hpp"
#include "frob/s_system.hpp"
#include "frob/ternary.hpp"

namespace frob {

// x -> (b, a, x).  Excludes a = zero, whose map is the constant b.  The
// result is checked to be a bijection and an element of the group.
inline Permutation phi(const FrobeniusContext& ctx, point_t b, point_t a) {
    if (b < 0 || b >= ctx.degree())
        throw std::invalid_argument("phi: point out of range");
    if (!ctx.in_e_star(a) || a == ctx.zero())
        throw std::invalid_argument("phi: middle slot " + std::to_string(a) +
                                    " not in e_star \\ {zero}");
    std::vector<point_t> images;
    images.reserve(static_cast<std::size_t>(ctx.degree()));
    for (point_t x = 0; x < ctx.degree(); ++x)
        images.push_back(ternary_eval(ctx, b, a, x));
    Permutation p(std::move(images));
    if (!ctx.group().contains(p))
        throw std::logic_error("phi(" + std::to_string(b) + ", " + std::to_string(a) +
                               ") = " + cycle_string(p) + " is not a group element");
    return p;
}

inline Permutation psi(const FrobeniusContext& ctx, point_t b, point_t a, point_t d) {
    Permutation p = compose(phi(ctx, b, a), phi(ctx, d, star_inverse(ctx, a)));
    if (!ctx.group().contains(p))
        throw std::logic_error("psi(" + std::to_string(b) + ", " + std::to_string(a) + ", " +
                               std::to_string(d) + ") is not a group element");
    return p;
}

// {phi(b, a) : a in e_star \ {zero}}, canonically ordered; the maps are
// pairwise distinct and fill the stabilizer of b exactly.
inline std::vector<Permutation> phi_family(const FrobeniusContext& ctx, point_t b) {
    std::vector<Permutation> family;
    for (point_t a : ctx.e_star()) {
        if (a == ctx.zero()) continue;
        family.push_back(phi(ctx, b, a));
    }
    std::sort(family.begin(), family.end());
    if (std::adjacent_find(family.begin(), family.end()) != family.end())
        throw std::logic_error("phi_family(" + std::to_string(b) +
                               ") contains duplicate permutations");
    return family;
}

// T = {psi(b, a0, zero) : b in E} in canonical order.  Self-checks: n
// distinct elements, the identity among them, sharply transitive.
inline std::vector<Permutation> build_T(const FrobeniusContext& ctx, point_t a0) {
    if (!ctx.in_e_star(a0) || a0 == ctx.zero() || a0 == ctx.one())
        throw std::invalid_argument("build_T: a0 = " + std::to_string(a0) +
                                    " not in e_star \\ {zero, one}");
    std::vector<Permutation> t;
    t.reserve(static_cast<std::size_t>(ctx.degree()));
    for (point_t b = 0; b < ctx.degree(); ++b) t.push_back(psi(ctx, b, a0, ctx.zero()));
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end())
        throw std::logic_error("build_T: duplicate elements");
    if (!std::binary_search(t.begin(), t.end(), Permutation::identity(ctx.degree())))
        throw std::logic_error("build_T: identity missing");
    if (!is_sharply_transitive(t, ctx.degree()))
        throw std::logic_error("build_T: result is not sharply transitive");
    return t;
}

// Oracle: the fixed-point-free elements of G together with the identity,
// in canonical order.
inline std::vector<Permutation> brute_force_kernel(const PermutationGroup& g) {
    if (!is_frobenius(g))
        throw std::invalid_argument("brute_force_kernel: " + check_frobenius(g).describe());
    std::vector<Permutation> kernel;
    for (const auto& p : g.elements())
        if (p.is_identity() || is_fixed_point_free(p)) kernel.push_back(p);
    return kernel;
}

struct TransversalCheck {
    bool ok = true;
    std::string witness;  // description of the first coset not met exactly once

    std::string describe() const { return ok ? "left transversal" : witness; }
};

// T is a left transversal of H in G when every left coset gH contains
// exactly one element of T.  Cosets are keyed by their canonically least
// member, so the reported witness is deterministic.
inline TransversalCheck verify_left_transversal(const std::vector<Permutation>& t,
                                                const PermutationGroup& g,
                                                const PermutationGroup& h) {
    for (const auto& p : t)
        if (!g.contains(p))
            throw std::invalid_argument("verify_left_transversal: " + cycle_string(p) +
                                        " is not in the group");
    for (const auto& p : h.elements())
        if (!g.contains(p))
            throw std::invalid_argument("verify_left_transversal: subgroup not contained");
    if (h.order() == 0 || g.order() % h.order() != 0)
        throw std::invalid_argument("verify_left_transversal: subgroup order does not divide");

    const std::size_t index = g.order() / h.order();
    if (t.size() != index)
        return {false, "size " + std::to_string(t.size()) + " differs from coset count " +
                           std::to_string(index)};

    auto coset_key = [&](const Permutation& p) {
        Permutation least = compose(p, h.elements().front());
        for (const auto& elem : h.elements()) {
            Permutation cand = compose(p, elem);
            if (cand < least) least = cand;
        }
        return least;
    };

    std::map<Permutation, std::size_t> counts;
    for (const auto& p : t) ++counts[coset_key(p)];
    for (const auto& [key, count] : counts)
        if (count != 1)
            return {false, "coset of " + cycle_string(key) + " contains " +
                               std::to_string(count) + " elements of the set"};
    return {true, ""};
}

struct SubgroupNormalReport {
    bool closed_under_product = true;
    bool closed_under_inverse = true;
    bool normal_generators = true;  // conjugation by the group's generators
    bool normal_full_scan = true;   // conjugation by every group element (oracle)
    std::string product_witness;
    std::string inverse_witness;
    std::string normal_witness;

    bool subgroup() const { return closed_under_product && closed_under_inverse; }
    bool normal() const { return normal_generators && normal_full_scan; }
};

// Closure of T under product/inverse, then invariance under conjugation —
// via the generators (sufficient) and via a full element scan (oracle);
// both always run and the report records each outcome.
inline SubgroupNormalReport verify_subgroup_and_normal(const std::vector<Permutation>& t,
                                                       const PermutationGroup& g) {
    for (const auto& p : t)
        if (!g.contains(p))
            throw std::invalid_argument("verify_subgroup_and_normal: " + cycle_string(p) +
                                        " is not in the group");
    std::vector<Permutation> sorted = t;
    std::sort(sorted.begin(), sorted.end());
    auto in_t = [&](const Permutation& p) {
        return std::binary_search(sorted.begin(), sorted.end(), p);
    };

    SubgroupNormalReport r;
    for (const auto& p : sorted) {
        for (const auto& q : sorted) {
            Permutation prod = compose(p, q);
            if (!in_t(prod)) {
                r.closed_under_product = false;
                r.product_witness = cycle_string(p) + " * " + cycle_string(q) + " = " +
                                    cycle_string(prod) + " outside the set";
                break;
            }
        }
        if (!r.closed_under_product) break;
    }
    for (const auto& p : sorted) {
        Permutation inv = p.inverse();
        if (!in_t(inv)) {
            r.closed_under_inverse = false;
            r.inverse_witness =
                cycle_string(p) + "^-1 = " + cycle_string(inv) + " outside the set";
            break;
        }
    }

    auto scan_conjugation = [&](const std::vector<Permutation>& conjugators, bool& flag) {
        for (const auto& c : conjugators) {
            const Permutation c_inv = c.inverse();
            for (const auto& p : sorted) {
                Permutation conj = compose(compose(c, p), c_inv);
                if (!in_t(conj)) {
                    flag = false;
                    if (r.normal_witness.empty())
                        r.normal_witness = cycle_string(c) + " * " + cycle_string(p) + " * " +
                                           cycle_string(c) + "^-1 = " + cycle_string(conj) +
                                           " outside the set";
                    return;
                }
            }
        }
    };
    scan_conjugation(g.generators(), r.normal_generators);
    scan_conjugation(g.elements(), r.normal_full_scan);
    return r;
}

struct PhiPsiReport {
    bool phi_fixed_ok = true;      // fixed_points(phi(b, a)) == {b} for a != one
    bool psi_dichotomy_ok = true;  // psi(b,a,d) fixed-point-free iff b != d; id when b == d
    bool family_ok = true;         // phi_family(b) fills the stabilizer of b exactly
    std::vector<std::string> failures;

    bool ok() const { return phi_fixed_ok && psi_dichotomy_ok && family_ok; }
};

inline PhiPsiReport verify_phi_psi(const FrobeniusContext& ctx) {
    PhiPsiReport r;
    const point_t n = ctx.degree();

    for (point_t b = 0; b < n && r.phi_fixed_ok; ++b)
        for (point_t a : ctx.e_star()) {
            if (a == ctx.zero() || a == ctx.one()) continue;
            auto fixed = fixed_points(phi(ctx, b, a));
            if (fixed.size() != 1 || fixed[0] != b) {
                r.phi_fixed_ok = false;
                r.failures.push_back("phi(" + std::to_string(b) + ", " + std::to_string(a) +
                                     ") does not fix exactly {" + std::to_string(b) + "}");
                break;
            }
        }

    for (point_t a : ctx.e_star()) {
        if (a == ctx.zero() || a == ctx.one()) continue;
        for (point_t b = 0; b < n && r.psi_dichotomy_ok; ++b)
            for (point_t d = 0; d < n; ++d) {
                Permutation p = psi(ctx, b, a, d);
                bool good = (b == d) ? p.is_identity() : is_fixed_point_free(p);
                if (!good) {
                    r.psi_dichotomy_ok = false;
                    r.failures.push_back("psi(" + std::to_string(b) + ", " +
                                         std::to_string(a) + ", " + std::to_string(d) +
                                         ") = " + cycle_string(p) +
                                         (b == d ? " is not the identity"
                                                 : " has a fixed point"));
                    break;
                }
            }
        if (!r.psi_dichotomy_ok) break;
    }

    for (point_t b = 0; b < n; ++b) {
        if (phi_family(ctx, b) != ctx.group().point_stabilizer(b).elements()) {
            r.family_ok = false;
            r.failures.push_back("phi family of " + std::to_string(b) +
                                 " does not equal the stabilizer of " + std::to_string(b));
            break;
        }
    }

    return r;
}

}  // namespace frob
