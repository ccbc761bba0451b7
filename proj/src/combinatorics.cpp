#include "hilab/combinatorics.hpp"

#include <algorithm>
#include <sstream>

namespace hilab {

Coloring::Coloring(int64_t lo_, int c_, std::vector<int> colors_)
    : lo(lo_), c(c_), colors(std::move(colors_)) {
    if (c < 1) throw parameter_error("coloring needs a positive color count");
    if (colors.empty()) throw parameter_error("coloring must cover a nonempty interval");
    for (int g : colors)
        if (g < 1 || g > c) throw parameter_error("color index outside 1..c");
}

Coloring Coloring::parse(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw format_error("missing coloring header line");
    int c = 0;
    long long lo = 0;
    if (std::sscanf(header.c_str(), "c=%d lo=%lld", &c, &lo) != 2)
        throw format_error("coloring header must be \"c=<int> lo=<int>\"");
    std::vector<int> colors;
    int g;
    while (in >> g) colors.push_back(g);
    return Coloring(lo, c, std::move(colors));
}

Coloring Coloring::parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

std::string Coloring::to_text() const {
    std::ostringstream out;
    out << "c=" << c << " lo=" << lo << "\n";
    for (size_t i = 0; i < colors.size(); ++i) out << (i ? " " : "") << colors[i];
    out << "\n";
    return out.str();
}

Cube::Cube(int64_t base_, std::vector<int64_t> increments_)
    : base(base_), increments(std::move(increments_)) {
    if (base < 1) throw parameter_error("cube base must be >= 1");
    if (increments.empty()) throw parameter_error("cube needs at least one increment");
    for (int64_t mu : increments)
        if (mu < 1) throw parameter_error("cube increments must be >= 1");
}

std::vector<int64_t> cube_elements(const Cube& cube) {
    std::vector<int64_t> elems{cube.base};
    for (int64_t mu : cube.increments) {
        size_t n = elems.size();
        for (size_t i = 0; i < n; ++i) elems.push_back(elems[i] + mu);
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    }
    return elems;
}

bool cube_has_distinct_sums(const Cube& cube) {
    if (cube.dim() >= 63) throw capability_error("cube dimension too large");
    return cube_elements(cube).size() == (size_t{1} << cube.dim());
}

std::optional<int> is_monochromatic(const Coloring& coloring, const Cube& cube) {
    auto elems = cube_elements(cube);
    for (int64_t x : elems)
        if (!coloring.contains(x))
            throw domain_error("cube element outside the coloring's interval");
    int g = coloring.at(elems.front());
    for (int64_t x : elems)
        if (coloring.at(x) != g) return std::nullopt;
    return g;
}

}  // namespace hilab
