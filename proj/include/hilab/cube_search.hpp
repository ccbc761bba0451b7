#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hilab/combinatorics.hpp"
#include "hilab/search.hpp"

namespace hilab {

/// All bound formulas evaluated for one (m, c) pair.
struct BoundReport {
    int m = 1;
    int c = 1;
    double epsilon = 0.0;
    mpz_class recursive_upper;  // H_1 = c+1, H_m = h(1 + c^h) with h = H_{m-1}
    mpz_class fibonacci_upper;  // (c+1)^{F_{2m}}
    mpz_class gr_upper;         // (2c)^{2^{m-1}}
    double gr_lower = 0.0;      // c^{(1-eps)(2^m-1)/m}
    std::optional<mpz_class> exact;
};

mpz_class recursive_cube_bound(int m, int c);
mpz_class fibonacci_cube_bound(int m, int c);
mpz_class gr_upper_bound(int m, int c);
double gr_lower_bound(int m, int c, double epsilon);

/// h(1 + c(m-1)^h); the counting argument behind it holds only for
/// 2 <= m <= c, so the calculator refuses anything else.
mpz_class improved_upper_bound(int m, int c);

BoundReport bounds(int m, int c, double epsilon = 0.0);

/// First monochromatic m-cube fully inside the interval, by full scan.
std::optional<std::pair<Cube, int>> find_cube_exhaustive(const Coloring& coloring, int m,
                                                         bool distinct_sums = false);

/// Records every color read a search performs, for the no-out-of-interval
/// access contract.
struct AccessLog {
    int64_t reads = 0;
    int64_t min_index = INT64_MAX;
    int64_t max_index = INT64_MIN;
    void record(int64_t i) {
        ++reads;
        if (i < min_index) min_index = i;
        if (i > max_index) max_index = i;
    }
};

/// Monochromatic m-cube by the pigeonhole recursion: the base case scans
/// c+1 points for a color repeat; the inductive step splits the interval
/// into 1 + c^h blocks of size h = H_{m-1}, finds two identically colored
/// blocks, recurses into the first and takes the block offset as the last
/// increment.  Requires interval length >= recursive_cube_bound(m, c).
std::pair<Cube, int> find_cube_constructive(const Coloring& coloring, int m, int c,
                                            AccessLog* log = nullptr);

/// Least H such that every c-coloring of [1..H] contains a monochromatic
/// m-cube, established by pruned DFS per length plus an avoiding-coloring
/// certificate for H-1.
ExactNumberResult hilbert_number_exact(int m, int c, const SearchBudget& budget = {},
                                       bool distinct_sums = false);

/// Maximum-dimension cube (distinct subset sums) whose elements all lie in A.
struct LargestCubeResult {
    int m = 0;
    std::optional<Cube> cube;  // absent only when |A| < 2
};
LargestCubeResult largest_cube_in_set(const std::vector<int64_t>& set);

}  // namespace hilab
