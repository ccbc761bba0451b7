#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hilab/errors.hpp"

namespace hilab {

/// A c-coloring of the edges of the complete graph K_n.  Vertices are
/// 1..n; every unordered pair must carry a color in 1..c.
struct EdgeColoring {
    int n = 0;
    int c = 1;
    std::vector<int> edge_colors;  // indexed by edge_index(u, v); 0 = unassigned

    EdgeColoring() = default;
    EdgeColoring(int n_, int c_);

    /// Edges ordered lexicographically by (v, u) with u < v:
    /// (1,2), (1,3), (2,3), (1,4), ...
    static int edge_index(int u, int v);
    int edge_count() const { return n * (n - 1) / 2; }

    int color(int u, int v) const;
    void set_color(int u, int v, int g);
    bool complete() const;

    /// Text format: one "u v color" line per edge.
    static EdgeColoring parse(std::istream& in, int c_hint = 0);
    std::string to_text() const;
};

}  // namespace hilab
