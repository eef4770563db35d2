// Frobenius-group detection and the derived context: base points (zero, one),
// the stabilizer H0 of zero, coset representatives sigma[x] (zero -> x), the
// orbit set e_star = {zero} union H0-orbit of one, and the table h[a] in H0
// with h[a](one) = a.  alpha(x, a) = sigma[x] * h[a] * sigma[x]^-1 is the
// unique element of H_x conjugating back to h[a].
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "frob/perm_group.hpp"
#include "frob/permutation.hpp"

namespace frob {

struct FrobeniusReport {
    enum class Verdict { frobenius, not_transitive, regular, fixed_pair };

    Verdict verdict = Verdict::frobenius;
    point_t a = -1;  // for fixed_pair: the two points fixed by `witness`
    point_t b = -1;
    std::optional<Permutation> witness;
    point_t degree = 0;
    std::size_t group_order = 0;
    std::size_t orbit_size = 0;  // for not_transitive: size of the orbit of point `a`

    bool ok() const { return verdict == Verdict::frobenius; }

    std::string describe() const {
        switch (verdict) {
            case Verdict::frobenius:
                return "Frobenius: degree " + std::to_string(degree) + ", order " +
                       std::to_string(group_order);
            case Verdict::not_transitive:
                return "not Frobenius: not transitive (orbit of point " + std::to_string(a) +
                       " has size " + std::to_string(orbit_size) + " of " +
                       std::to_string(degree) + ")";
            case Verdict::regular:
                return "not Frobenius: regular (order " + std::to_string(group_order) +
                       " equals degree " + std::to_string(degree) + ")";
            case Verdict::fixed_pair:
                return "not Frobenius: St_{" + std::to_string(a) + "," + std::to_string(b) +
                       "} contains " + cycle_string(*witness);
        }
        return "";
    }
};

// A Frobenius group is transitive, irregular (order > degree), and no
// non-identity element fixes two points.  The fixed-pair scan walks elements
// in canonical order, so witnesses are deterministic.
inline FrobeniusReport check_frobenius(const PermutationGroup& g) {
    FrobeniusReport r;
    r.degree = g.degree();
    r.group_order = g.order();
    if (!g.is_transitive()) {
        r.verdict = FrobeniusReport::Verdict::not_transitive;
        r.a = 0;
        r.orbit_size = g.orbit(0).size();
        return r;
    }
    if (g.order() == static_cast<std::size_t>(g.degree())) {
        r.verdict = FrobeniusReport::Verdict::regular;
        return r;
    }
    for (const auto& p : g.elements()) {
        if (p.is_identity()) continue;
        auto fixed = fixed_points(p);
        if (fixed.size() >= 2) {
            r.verdict = FrobeniusReport::Verdict::fixed_pair;
            r.a = fixed[0];
            r.b = fixed[1];
            r.witness = p;
            return r;
        }
    }
    return r;
}

inline bool is_frobenius(const PermutationGroup& g) { return check_frobenius(g).ok(); }

// How the coset representative sigma[x] is chosen among elements mapping
// zero to x.  "lex" (the default) takes the canonically least; "seed:<k>"
// picks pseudo-randomly and exists to test sigma-independence.
struct SigmaPolicy {
    enum class Kind { lex, seeded };

    Kind kind = Kind::lex;
    std::uint64_t seed = 0;

    static SigmaPolicy lex() { return {Kind::lex, 0}; }
    static SigmaPolicy seeded(std::uint64_t s) { return {Kind::seeded, s}; }

    static SigmaPolicy parse(std::string_view text) {
        if (text == "lex") return lex();
        if (text.starts_with("seed:")) {
            std::string_view num = text.substr(5);
            if (num.empty()) throw std::invalid_argument("sigma policy: missing seed value");
            std::uint64_t value = 0;
            for (char c : num) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("sigma policy: bad seed '" + std::string(num) +
                                                "'");
                value = value * 10 + static_cast<std::uint64_t>(c - '0');
            }
            return seeded(value);
        }
        throw std::invalid_argument("sigma policy: expected 'lex' or 'seed:<k>', got '" +
                                    std::string(text) + "'");
    }

    std::string describe() const {
        return kind == Kind::lex ? "lex" : "seed:" + std::to_string(seed);
    }
};

class FrobeniusContext {
public:
    FrobeniusContext(PermutationGroup group, point_t zero, point_t one, PermutationGroup h0,
                     std::vector<Permutation> sigma, std::vector<point_t> e_star,
                     std::vector<std::optional<Permutation>> h)
        : group_(std::move(group)),
          zero_(zero),
          one_(one),
          h0_(std::move(h0)),
          sigma_(std::move(sigma)),
          e_star_(std::move(e_star)),
          in_e_star_(static_cast<std::size_t>(group_.degree()), false),
          h_(std::move(h)) {
        for (point_t a : e_star_) in_e_star_[static_cast<std::size_t>(a)] = true;
    }

    const PermutationGroup& group() const { return group_; }
    point_t zero() const { return zero_; }
    point_t one() const { return one_; }
    point_t degree() const { return group_.degree(); }
    const PermutationGroup& h0() const { return h0_; }
    const std::vector<point_t>& e_star() const { return e_star_; }

    bool in_e_star(point_t a) const {
        return a >= 0 && a < degree() && in_e_star_[static_cast<std::size_t>(a)];
    }

    const Permutation& sigma(point_t x) const {
        if (x < 0 || x >= degree())
            throw std::invalid_argument("sigma: point out of range");
        return sigma_[static_cast<std::size_t>(x)];
    }

    // Defined for a in e_star \ {zero}; h(one) == id since h[one](one) = one.
    const Permutation& h(point_t a) const {
        if (!in_e_star(a) || a == zero_)
            throw std::invalid_argument("h: point " + std::to_string(a) +
                                        " not in e_star \\ {zero}");
        return *h_[static_cast<std::size_t>(a)];
    }

    // The unique element of the stabilizer of x whose sigma[x]-conjugate
    // sends one to a.
    Permutation alpha(point_t x, point_t a) const {
        return compose(compose(sigma(x), h(a)), sigma(x).inverse());
    }

private:
    PermutationGroup group_;
    point_t zero_;
    point_t one_;
    PermutationGroup h0_;
    std::vector<Permutation> sigma_;
    std::vector<point_t> e_star_;
    std::vector<bool> in_e_star_;
    std::vector<std::optional<Permutation>> h_;
};

inline FrobeniusContext build_context(const PermutationGroup& g, point_t zero = 0,
                                      point_t one = 1,
                                      SigmaPolicy policy = SigmaPolicy::lex()) {
    FrobeniusReport report = check_frobenius(g);
    if (!report.ok())
        throw std::invalid_argument("build_context: " + report.describe());
    if (zero < 0 || zero >= g.degree() || one < 0 || one >= g.degree())
        throw std::invalid_argument("build_context: base point out of range");
    if (zero == one)
        throw std::invalid_argument("build_context: zero and one must differ");

    PermutationGroup h0 = g.point_stabilizer(zero);

    std::vector<Permutation> sigma;
    sigma.reserve(static_cast<std::size_t>(g.degree()));
    for (point_t x = 0; x < g.degree(); ++x) {
        if (x == zero) {
            sigma.push_back(Permutation::identity(g.degree()));
            continue;
        }
        std::vector<const Permutation*> candidates;
        for (const auto& p : g.elements())
            if (p(zero) == x) candidates.push_back(&p);
        if (candidates.empty())
            throw std::logic_error("build_context: no coset representative for point " +
                                   std::to_string(x));
        if (policy.kind == SigmaPolicy::Kind::lex) {
            sigma.push_back(*candidates.front());  // elements are sorted
        } else {
            std::mt19937_64 rng(policy.seed ^
                                (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(x + 1)));
            sigma.push_back(*candidates[rng() % candidates.size()]);
        }
    }

    std::vector<point_t> e_star{zero};
    std::vector<std::optional<Permutation>> h(static_cast<std::size_t>(g.degree()));
    for (const auto& elem : h0.elements()) {
        point_t a = elem(one);
        if (a == zero)
            throw std::logic_error("build_context: stabilizer element maps one to zero");
        auto& slot = h[static_cast<std::size_t>(a)];
        if (slot.has_value())
            throw std::logic_error("build_context: two stabilizer elements map one to " +
                                   std::to_string(a));
        slot = elem;
        e_star.push_back(a);
    }
    std::sort(e_star.begin(), e_star.end());

    return FrobeniusContext(g, zero, one, std::move(h0), std::move(sigma), std::move(e_star),
                            std::move(h));
}

// Number of elements of the stabilizer of x whose sigma[x]-conjugate sends
// one to a; the construction guarantees exactly one.
inline std::size_t count_alpha_solutions(const FrobeniusContext& ctx, point_t x, point_t a) {
    const Permutation& s = ctx.sigma(x);
    const Permutation s_inv = s.inverse();
    std::size_t count = 0;
    for (const auto& cand : ctx.group().elements()) {
        if (cand(x) != x) continue;
        if (compose(compose(s_inv, cand), s)(ctx.one()) == a) ++count;
    }
    return count;
}

struct ContextReport {
    bool sigma_zero_is_id = true;
    bool sigma_maps_zero = true;
    bool e_star_valid = true;
    bool e_star_size = true;
    bool h_bijection = true;
    bool alpha_unique = true;
    bool conjugation = true;
    bool semiregular = true;
    std::vector<std::string> failures;

    bool ok() const {
        return sigma_zero_is_id && sigma_maps_zero && e_star_valid && e_star_size &&
               h_bijection && alpha_unique && conjugation && semiregular;
    }
};

// Exhaustive audit of every context invariant; quadratic scans are fine at
// the intended scale and act as the independent check on build_context.
inline ContextReport verify_context(const FrobeniusContext& ctx) {
    ContextReport r;
    const PermutationGroup& g = ctx.group();
    const point_t n = g.degree();

    if (!ctx.sigma(ctx.zero()).is_identity()) {
        r.sigma_zero_is_id = false;
        r.failures.push_back("sigma[zero] is not the identity");
    }
    for (point_t x = 0; x < n; ++x) {
        if (ctx.sigma(x)(ctx.zero()) != x) {
            r.sigma_maps_zero = false;
            r.failures.push_back("sigma[" + std::to_string(x) + "] does not map zero to " +
                                 std::to_string(x));
            break;
        }
    }

    std::vector<point_t> expected{ctx.zero()};
    for (const auto& elem : ctx.h0().elements()) expected.push_back(elem(ctx.one()));
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    if (expected != ctx.e_star()) {
        r.e_star_valid = false;
        r.failures.push_back("e_star does not equal {zero} union orbit of one under H0");
    }
    if (ctx.e_star().size() != ctx.h0().order() + 1) {
        r.e_star_size = false;
        r.failures.push_back("|e_star| != |H0| + 1");
    }

    std::vector<Permutation> h_values;
    for (point_t a : ctx.e_star()) {
        if (a == ctx.zero()) continue;
        const Permutation& ha = ctx.h(a);
        if (!ctx.h0().contains(ha) || ha(ctx.one()) != a) {
            r.h_bijection = false;
            r.failures.push_back("h[" + std::to_string(a) + "] invalid");
        }
        h_values.push_back(ha);
    }
    std::sort(h_values.begin(), h_values.end());
    if (h_values != ctx.h0().elements()) {
        r.h_bijection = false;
        r.failures.push_back("h table is not a bijection onto H0");
    }

    for (point_t x = 0; x < n && r.alpha_unique; ++x)
        for (point_t a : ctx.e_star()) {
            if (a == ctx.zero()) continue;
            if (count_alpha_solutions(ctx, x, a) != 1) {
                r.alpha_unique = false;
                r.failures.push_back("alpha not unique at x=" + std::to_string(x) +
                                     ", a=" + std::to_string(a));
                break;
            }
        }

    for (point_t x = 0; x < n && r.conjugation; ++x) {
        const Permutation s_inv = ctx.sigma(x).inverse();
        const PermutationGroup h_x = g.point_stabilizer(x);
        std::vector<Permutation> conjugated;
        for (const auto& elem : h_x.elements())
            conjugated.push_back(compose(compose(s_inv, elem), ctx.sigma(x)));
        std::sort(conjugated.begin(), conjugated.end());
        if (conjugated != ctx.h0().elements()) {
            r.conjugation = false;
            r.failures.push_back("sigma[" + std::to_string(x) +
                                 "]-conjugate of the stabilizer of " + std::to_string(x) +
                                 " is not H0");
        }
    }

    for (const auto& elem : ctx.h0().elements()) {
        if (elem.is_identity()) continue;
        auto fixed = fixed_points(elem);
        if (fixed.size() != 1 || fixed[0] != ctx.zero()) {
            r.semiregular = false;
            r.failures.push_back("stabilizer element " + cycle_string(elem) +
                                 " fixes a point other than zero");
            break;
        }
    }

    return r;
}

}  // namespace frob
