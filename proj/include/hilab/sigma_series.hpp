#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hilab/errors.hpp"

namespace hilab {

/// Truncated Laurent series in sigma with exact rational coefficients: a
/// polynomial part plus a tail of negative powers kept through
/// sigma^{-order}.
struct SigmaSeries {
    int order = 8;                    // tail truncation depth
    std::map<int, mpq_class> terms;   // exponent -> coefficient, exponent >= -order

    SigmaSeries() = default;
    explicit SigmaSeries(int order_) : order(order_) {
        if (order_ < 1) throw parameter_error("truncation order must be >= 1");
    }
    /// poly[i] is the coefficient of sigma^i; tail[v-1] of sigma^{-v}.
    static SigmaSeries from_parts(const std::vector<mpq_class>& poly,
                                  const std::vector<mpq_class>& tail);

    void set(int exp, const mpq_class& c);
    mpq_class at(int exp) const;
    bool is_zero() const { return terms.empty(); }
    int poly_degree() const;         // highest exponent >= 0 present, -1 if none
    int first_tail_index() const;    // smallest v >= 1 with sigma^{-v} nonzero, 0 if none

    SigmaSeries operator-(const SigmaSeries& o) const;

    /// Substitutes sigma -> sigma + mu exactly, truncating the binomial tails.
    SigmaSeries shifted(const mpz_class& mu) const;

    /// Exact evaluation of the truncated series at a rational point.
    mpq_class eval(const mpq_class& sigma) const;

    /// Line-based text: "order N", "poly c0 c1 ...", "tail d1 d2 ..."
    /// (rationals as p/q; either of the last two lines may be omitted).
    static SigmaSeries parse(const std::string& text);
    std::string to_text() const;
};

/// Applies the successive differences P -> P(sigma) - P(sigma + mu) for each
/// increment.  The polynomial-part degree drops by one per step; the tail
/// shifts one order deeper, so the input's truncation must reach v + m.
SigmaSeries difference_reduce(const SigmaSeries& series, const std::vector<int64_t>& increments);

/// Numeric check of the closed-form limit for sigma^{v+m} P^{(m)}(sigma):
/// measured by m-fold alternating sums of exact evaluations of the original
/// series, reported against mu(1)...mu(m) v(v+1)...(v+m-1) D_{1v}.
struct LimitCheckReport {
    int v = 0;                     // first nonzero tail index (0 when tail is empty)
    mpq_class formula;             // the closed-form limit
    std::vector<std::pair<int64_t, double>> measured;  // (sigma, sigma^{v+m} P^{(m)})
    double relative_error_at_largest = 0.0;
};
LimitCheckReport limit_check(const SigmaSeries& series, const std::vector<int64_t>& increments,
                             const std::vector<int64_t>& sigma_values);

/// Solves for the polynomial of the given degree through exact integer
/// samples; coefficients returned highest power first.  Extra points beyond
/// degree+1 are verified exactly against the solution.
std::vector<mpq_class> rational_recover(const std::vector<std::pair<mpz_class, mpz_class>>& points,
                                        int degree);

/// True iff p^r / p2^r is rational, which for distinct primes happens
/// exactly when r is an integer.
bool prime_power_ratio_rational(const mpz_class& p, const mpz_class& p2, const mpq_class& r);

}  // namespace hilab
