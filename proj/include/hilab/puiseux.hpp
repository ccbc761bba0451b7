#pragma once
#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "hilab/bipoly.hpp"
#include "hilab/sigma_series.hpp"

namespace hilab {

using cplx = std::complex<double>;

/// Truncated Laurent series in tau with complex coefficients.
struct TauSeries {
    int trunc_min = -8;             // exponents below this are dropped
    std::map<int, cplx> terms;

    TauSeries() = default;
    explicit TauSeries(int trunc_min_) : trunc_min(trunc_min_) {}

    void add(int exp, cplx c);
    cplx at(int exp) const;
    TauSeries operator+(const TauSeries& o) const;
    TauSeries operator-(const TauSeries& o) const;
    TauSeries operator*(const TauSeries& o) const;
    cplx eval(double tau) const;
};

/// One root branch of g(y, tau^k) = 0 fitted as a series in decreasing
/// powers of tau: polynomial part A over tau^h..tau^0 and a truncated tail
/// B over tau^{-1}..tau^{-order}.
struct PuiseuxExpansion {
    int k = 1;
    int h = 0;
    std::vector<cplx> poly_part;  // A_{i,1}..A_{i,h+1}: tau^h down to tau^0
    std::vector<cplx> neg_part;   // B_{i,1}..B_{i,order}: tau^{-1} down
    int truncation_order = 2;
    double convergence_threshold = 0.0;
    double max_fit_residual = 0.0;

    // full fitted coefficient vector, exponents fit_max down to -order
    int fit_max = 0;
    std::vector<cplx> fitted;

    TauSeries to_series() const;
    cplx eval(double tau) const;
};

struct ExpandReport {
    std::vector<PuiseuxExpansion> branches;
    double max_reconstruction_residual = 0.0;  // product identity at samples
};

/// Tracks the n root branches across the samples (largest tau first,
/// nearest-neighbor continuation) and fits each branch's coefficients by
/// least squares.  Branches are ordered by ascending phase at the largest
/// sample, real branches first.
ExpandReport expand_roots(const BivarPoly& g, int k, int order,
                          const std::vector<double>& tau_samples);

/// One of the 2^n - 2 candidate factors: a nonempty proper subset of the
/// branches with the coefficient series of prod (y - y_j) over the subset.
struct FormalFactor {
    int index = 0;             // 1-based position in the canonical order
    std::vector<int> subset;   // 1-based branch indices, ascending
    int k = 1;
    std::vector<TauSeries> coeff_series;  // coefficients of y^{nu-1}..y^0
};

/// Enumerates subsets by size then lexicographically, the canonical
/// indexing for the 2^n - 2 factors.
std::vector<FormalFactor> formal_factors(const std::vector<PuiseuxExpansion>& expansions);

struct IntegralityVerdict {
    int factor_index = 0;
    bool cond_neg_powers = false;       // all negative-power coefficients vanish
    double max_neg_residual = 0.0;
    bool cond_rational_polypart = false;  // poly-part coefficients are (real) rationals
    bool cond_integral_powers = false;    // surviving tau-exponents divisible by k
    std::vector<int> surviving_exponents;
    // recovered rationals per coefficient series: (tau exponent, value)
    std::vector<std::vector<std::pair<int, mpq_class>>> recovered;
    bool overall = false;
    double tol_zero = 1e-8;
    long denominator_bound = 1'000'000;
};

IntegralityVerdict check_integrality(const FormalFactor& factor, double tol_zero = 1e-8,
                                     long denominator_bound = 1'000'000);

/// Exact polynomial reconstruction of a factor that passed all three
/// conditions; absent when the rounded coefficients are not integers.
std::optional<BivarPoly> reconstruct_integral_factor(const FormalFactor& factor,
                                                     const IntegralityVerdict& verdict);

/// Nearest rational with denominator <= bound (continued fractions).
mpq_class round_to_rational(double x, long denominator_bound);

}  // namespace hilab
