#pragma once
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hilab/bipoly.hpp"
#include "hilab/upoly.hpp"

namespace hilab {

/// Complete factorization over Z: p = content * product(factors), each
/// factor irreducible, primitive, with positive leading coefficient.
/// Kronecker interpolation: candidate factors of degree k are interpolated
/// through divisor tuples of p's values at k+1 small integer points, so a
/// fruitless sweep is a proof of irreducibility.
struct UnivarFactorization {
    mpz_class content;  // signed, so content * product == p exactly
    std::vector<UnivarPoly> factors;
};
UnivarFactorization factor_univariate(const UnivarPoly& p);

/// Has a factorization into two non-units over Z (ring sense: integer
/// contents count, so 2x+2 and the constant 4 are reducible).
bool is_reducible_over_z(const UnivarFactorization& f, const UnivarPoly& p);

/// Decision for f in Z[x,t] with an explicit witness pair on the reducible
/// side; witness factors re-multiply to f exactly.
struct BivariateIrreducibility {
    bool irreducible = false;
    std::optional<std::pair<BivarPoly, BivarPoly>> witness;
};
BivariateIrreducibility bivariate_irreducible(const BivarPoly& f, int max_total_degree = 6);

/// Classification of every specialization t1 in [-N, N].
struct ScanReport {
    BivarPoly family;
    int64_t N = 0;
    std::vector<int64_t> reducible_points;
    std::vector<int64_t> degenerate_points;  // leading coefficient vanished
    double density = 0.0;                    // reducible count / (2N+1)
    double envelope = 0.0;                   // sqrt(N) * log(N) comparison value
    bool everywhere_reducible = false;
    int64_t longest_reducible_suffix = 0;    // run ending at N (degenerate points do not break it)
};
ScanReport scan_specializations(const BivarPoly& f, int64_t N);

}  // namespace hilab
