// Finite permutation groups generated by explicit generator lists.
#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "frob/permutation.hpp"

namespace frob {

inline constexpr std::size_t kDefaultElementCap = 200000;

class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(std::size_t cap)
        : std::runtime_error("group enumeration exceeded element cap " + std::to_string(cap)) {}
};

class PermutationGroup {
public:
    // Closes the generators under composition by breadth-first search.
    // Empty generator list yields the trivial group of the given degree.
    static PermutationGroup generate(std::vector<Permutation> generators, point_t degree,
                                     std::size_t element_cap = kDefaultElementCap) {
        if (degree < 0)
            throw std::invalid_argument("negative degree");
        for (const auto& g : generators)
            if (g.degree() != degree)
                throw std::invalid_argument("generator degree mismatch");

        std::unordered_set<Permutation, PermutationHash> seen;
        std::deque<Permutation> frontier;
        const Permutation id = Permutation::identity(degree);
        seen.insert(id);
        frontier.push_back(id);
        while (!frontier.empty()) {
            Permutation cur = std::move(frontier.front());
            frontier.pop_front();
            for (const auto& g : generators) {
                Permutation next = compose(cur, g);
                if (seen.insert(next).second) {
                    if (seen.size() > element_cap) throw CapExceeded(element_cap);
                    frontier.push_back(std::move(next));
                }
            }
        }
        std::vector<Permutation> elements(seen.begin(), seen.end());
        std::sort(elements.begin(), elements.end());
        return PermutationGroup(degree, std::move(elements), std::move(generators));
    }

    // Wraps an explicit element list (assumed closed) as a group; used for
    // subgroups harvested from a parent group's elements.
    static PermutationGroup from_elements(point_t degree, std::vector<Permutation> elements) {
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        std::vector<Permutation> gens = elements;
        return PermutationGroup(degree, std::move(elements), std::move(gens));
    }

    point_t degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    bool contains(const Permutation& p) const {
        return p.degree() == degree_ &&
               std::binary_search(elements_.begin(), elements_.end(), p);
    }

    std::vector<point_t> orbit(point_t a) const {
        if (a < 0 || a >= degree_)
            throw std::invalid_argument("orbit point out of range");
        std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
        std::deque<point_t> frontier{a};
        seen[static_cast<std::size_t>(a)] = true;
        std::vector<point_t> result{a};
        while (!frontier.empty()) {
            point_t cur = frontier.front();
            frontier.pop_front();
            for (const auto& g : generators_) {
                point_t next = g(cur);
                if (!seen[static_cast<std::size_t>(next)]) {
                    seen[static_cast<std::size_t>(next)] = true;
                    frontier.push_back(next);
                    result.push_back(next);
                }
            }
        }
        std::sort(result.begin(), result.end());
        return result;
    }

    PermutationGroup point_stabilizer(point_t a) const {
        if (a < 0 || a >= degree_)
            throw std::invalid_argument("stabilizer point out of range");
        std::vector<Permutation> stab;
        for (const auto& p : elements_)
            if (p(a) == a) stab.push_back(p);
        return PermutationGroup(degree_, std::move(stab), {});
    }

    PermutationGroup two_point_stabilizer(point_t a, point_t b) const {
        if (a < 0 || a >= degree_ || b < 0 || b >= degree_)
            throw std::invalid_argument("stabilizer point out of range");
        if (a == b)
            throw std::invalid_argument("two-point stabilizer requires distinct points");
        std::vector<Permutation> stab;
        for (const auto& p : elements_)
            if (p(a) == a && p(b) == b) stab.push_back(p);
        return PermutationGroup(degree_, std::move(stab), {});
    }

    bool is_transitive() const {
        if (degree_ == 0) return true;
        return orbit(0).size() == static_cast<std::size_t>(degree_);
    }

    // Regular: transitive with order equal to degree (only the identity
    // fixes any point).
    bool is_regular() const {
        return is_transitive() && order() == static_cast<std::size_t>(degree_);
    }

    // Exhaustive closure re-check; test aid, not used on the hot path.
    bool verify_closure() const {
        for (const auto& p : elements_)
            for (const auto& q : elements_)
                if (!contains(compose(p, q))) return false;
        for (const auto& p : elements_)
            if (!contains(p.inverse())) return false;
        return contains(Permutation::identity(degree_));
    }

    friend bool operator==(const PermutationGroup& a, const PermutationGroup& b) {
        return a.degree_ == b.degree_ && a.elements_ == b.elements_;
    }

private:
    PermutationGroup(point_t degree, std::vector<Permutation> elements,
                     std::vector<Permutation> generators)
        : degree_(degree), elements_(std::move(elements)), generators_(std::move(generators)) {
        if (generators_.empty() && !elements_.empty()) generators_ = elements_;
    }

    point_t degree_;
    std::vector<Permutation> elements_;
    std::vector<Permutation> generators_;
};

struct SharpTransitivityCheck {
    bool ok = false;
    point_t from = -1;  // witness pair when !ok: mapping count (from -> to) != 1
    point_t to = -1;
    std::size_t count = 0;

    std::string describe() const {
        if (ok) return "sharply transitive";
        return "pair (" + std::to_string(from) + ", " + std::to_string(to) + ") reached by " +
               std::to_string(count) + " elements";
    }
};

// A set S of permutations is sharply transitive when for every (a, b) there
// is exactly one s in S with s(a) = b.  First failing pair in row-major
// order is reported.
inline SharpTransitivityCheck check_sharply_transitive(const std::vector<Permutation>& s,
                                                       point_t degree) {
    std::vector<std::size_t> counts(static_cast<std::size_t>(degree) *
                                    static_cast<std::size_t>(degree));
    for (const auto& p : s) {
        if (p.degree() != degree)
            throw std::invalid_argument("sharp transitivity: degree mismatch");
        for (point_t a = 0; a < degree; ++a)
            ++counts[static_cast<std::size_t>(a) * static_cast<std::size_t>(degree) +
                     static_cast<std::size_t>(p(a))];
    }
    for (point_t a = 0; a < degree; ++a)
        for (point_t b = 0; b < degree; ++b) {
            std::size_t c = counts[static_cast<std::size_t>(a) * static_cast<std::size_t>(degree) +
                                   static_cast<std::size_t>(b)];
            if (c != 1) return {false, a, b, c};
        }
    return {true, -1, -1, 1};
}

inline bool is_sharply_transitive(const std::vector<Permutation>& s, point_t degree) {
    return check_sharply_transitive(s, degree).ok;
}

}  // namespace frob
