// Permutations on {0, ..., n-1} stored as image vectors.
//
// Composition convention used throughout the project:
//   compose(p, q)(i) == p(q(i))   -- the right factor acts first.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace frob {

using point_t = int;

class Permutation {
public:
    // Validates that `images` is a bijection on {0, ..., images.size()-1}.
    explicit Permutation(std::vector<point_t> images) : images_(std::move(images)) {
        const auto n = static_cast<point_t>(images_.size());
        std::vector<bool> seen(images_.size(), false);
        for (point_t img : images_) {
            if (img < 0 || img >= n)
                throw std::invalid_argument("permutation image out of range: " + std::to_string(img));
            if (seen[static_cast<std::size_t>(img)])
                throw std::invalid_argument("permutation image repeated: " + std::to_string(img));
            seen[static_cast<std::size_t>(img)] = true;
        }
    }

    static Permutation identity(point_t degree) {
        if (degree < 0)
            throw std::invalid_argument("negative degree");
        std::vector<point_t> images(static_cast<std::size_t>(degree));
        std::iota(images.begin(), images.end(), 0);
        return Permutation(std::move(images));
    }

    point_t degree() const { return static_cast<point_t>(images_.size()); }

    point_t operator()(point_t i) const {
        if (i < 0 || i >= degree())
            throw std::invalid_argument("point out of range: " + std::to_string(i));
        return images_[static_cast<std::size_t>(i)];
    }

    const std::vector<point_t>& images() const { return images_; }

    bool is_identity() const {
        for (point_t i = 0; i < degree(); ++i)
            if (images_[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<point_t> inv(images_.size());
        for (point_t i = 0; i < degree(); ++i)
            inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
        return Permutation(std::move(inv));
    }

    // (p * q)(i) == p(q(i)): q acts first.
    friend Permutation compose(const Permutation& p, const Permutation& q) {
        if (p.degree() != q.degree())
            throw std::invalid_argument("compose: degree mismatch");
        std::vector<point_t> images(p.images_.size());
        for (point_t i = 0; i < p.degree(); ++i)
            images[static_cast<std::size_t>(i)] =
                p.images_[static_cast<std::size_t>(q.images_[static_cast<std::size_t>(i)])];
        return Permutation(std::move(images));
    }

    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        return compose(p, q);
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<point_t> images_;
};

inline std::vector<point_t> fixed_points(const Permutation& p) {
    std::vector<point_t> fixed;
    for (point_t i = 0; i < p.degree(); ++i)
        if (p(i) == i) fixed.push_back(i);
    return fixed;
}

inline bool is_fixed_point_free(const Permutation& p) {
    for (point_t i = 0; i < p.degree(); ++i)
        if (p(i) == i) return false;
    return true;
}

// Builds a permutation of the given degree from disjoint cycles.
inline Permutation from_cycles(point_t degree, const std::vector<std::vector<point_t>>& cycles) {
    if (degree < 0)
        throw std::invalid_argument("negative degree");
    std::vector<point_t> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    std::vector<bool> moved(static_cast<std::size_t>(degree), false);
    for (const auto& cycle : cycles) {
        for (point_t pt : cycle) {
            if (pt < 0 || pt >= degree)
                throw std::invalid_argument("cycle point out of range: " + std::to_string(pt));
            if (moved[static_cast<std::size_t>(pt)])
                throw std::invalid_argument("cycle point repeated: " + std::to_string(pt));
            moved[static_cast<std::size_t>(pt)] = true;
        }
        for (std::size_t k = 0; k < cycle.size(); ++k)
            images[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    }
    return Permutation(std::move(images));
}

// Canonical cycle notation: cycles ordered by smallest point, each cycle
// starting at its smallest point; fixed points omitted; identity is "id".
inline std::string cycle_string(const Permutation& p) {
    std::string out;
    std::vector<bool> done(static_cast<std::size_t>(p.degree()), false);
    for (point_t start = 0; start < p.degree(); ++start) {
        if (done[static_cast<std::size_t>(start)] || p(start) == start) continue;
        out += '(';
        point_t cur = start;
        bool first = true;
        do {
            if (!first) out += ' ';
            out += std::to_string(cur);
            done[static_cast<std::size_t>(cur)] = true;
            cur = p(cur);
            first = false;
        } while (cur != start);
        out += ')';
    }
    return out.empty() ? "id" : out;
}

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const {
        std::size_t h = 1469598103934665603ull;
        for (point_t img : p.images()) {
            h ^= static_cast<std::size_t>(img);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace frob
