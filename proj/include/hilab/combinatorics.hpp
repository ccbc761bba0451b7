#pragma once
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hilab/errors.hpp"

namespace hilab {

/// A c-coloring of the integer interval [lo, lo + size - 1].
/// Colors are 1-based, matching the usual {1,...,c} convention.
struct Coloring {
    int64_t lo = 1;
    int c = 1;
    std::vector<int> colors;  // colors[i] is the color of lo + i, each in 1..c

    Coloring() = default;
    Coloring(int64_t lo_, int c_, std::vector<int> colors_);

    int64_t hi() const { return lo + static_cast<int64_t>(colors.size()) - 1; }
    int64_t size() const { return static_cast<int64_t>(colors.size()); }
    bool contains(int64_t x) const { return x >= lo && x <= hi(); }

    int at(int64_t x) const {
        if (!contains(x)) throw domain_error("coloring access outside [lo, hi]");
        return colors[static_cast<size_t>(x - lo)];
    }

    /// Text format: first line "c=<int> lo=<int>", second line the colors.
    static Coloring parse(std::istream& in);
    static Coloring parse_string(const std::string& text);
    std::string to_text() const;
};

/// A cube with base beta and positive increments mu(1)..mu(m): the set of
/// sums beta + sum_{i in S} mu(i) over all subsets S.  Increments may
/// repeat, so the element set can have fewer than 2^m members.
struct Cube {
    int64_t base = 1;
    std::vector<int64_t> increments;

    Cube() = default;
    Cube(int64_t base_, std::vector<int64_t> increments_);

    int dim() const { return static_cast<int>(increments.size()); }
};

/// Sorted, de-duplicated element set of a cube.
std::vector<int64_t> cube_elements(const Cube& cube);

/// True when all 2^m subset sums are pairwise distinct.
bool cube_has_distinct_sums(const Cube& cube);

/// Color shared by every cube element, or nullopt.  Every element must lie
/// inside the coloring's interval.
std::optional<int> is_monochromatic(const Coloring& coloring, const Cube& cube);

}  // namespace hilab
