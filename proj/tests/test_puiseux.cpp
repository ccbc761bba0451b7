#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "hilab/puiseux.hpp"

using namespace hilab;

namespace {

std::vector<double> steps(double lo, double hi, double step) {
    std::vector<double> out;
    for (double v = lo; v <= hi + 1e-9; v += step) out.push_back(v);
    return out;
}

SigmaSeries series_from(std::vector<mpq_class> poly, std::vector<mpq_class> tail) {
    return SigmaSeries::from_parts(poly, tail);
}

}  // namespace

TEST_CASE("expand_roots on y^3 - t^3 recovers the three linear branches") {
    BivarPoly g = BivarPoly::parse("y^3 - t^3");
    auto rep = expand_roots(g, 1, 2, steps(50, 100, 10));
    REQUIRE(rep.branches.size() == 3);
    CHECK(rep.max_reconstruction_residual < 1e-8);

    const cplx omega = std::polar(1.0, 2 * 3.14159265358979323846 / 3);
    std::vector<cplx> lead{1.0, omega, omega * omega};
    for (int i = 0; i < 3; ++i) {
        const auto& b = rep.branches[static_cast<size_t>(i)];
        CHECK(b.h == 1);
        CHECK(std::abs(b.poly_part.front() - lead[static_cast<size_t>(i)]) < 1e-8);
        for (const auto& bn : b.neg_part) CHECK(std::abs(bn) < 1e-8);
        CHECK(b.max_fit_residual < 1e-7);
    }
}

TEST_CASE("expand_roots handles a single polynomial branch") {
    BivarPoly g = BivarPoly::parse("y - t^2");
    auto rep = expand_roots(g, 1, 2, steps(10, 20, 1));
    REQUIRE(rep.branches.size() == 1);
    CHECK(rep.branches[0].h == 2);
    CHECK(std::abs(rep.branches[0].poly_part.front() - cplx(1, 0)) < 1e-9);
}

TEST_CASE("expand_roots with ramification k=2 on y^2 - t") {
    BivarPoly g = BivarPoly::parse("y^2 - t");
    auto rep = expand_roots(g, 2, 2, steps(10, 20, 2));
    REQUIRE(rep.branches.size() == 2);
    // branches +-tau, ordered with the positive real branch first
    CHECK(std::abs(rep.branches[0].eval(15.0) - 15.0) < 1e-7);
    CHECK(std::abs(rep.branches[1].eval(15.0) + 15.0) < 1e-7);
}

TEST_CASE("expand_roots rejects bad sample sets") {
    BivarPoly g = BivarPoly::parse("y^3 - t^3");
    CHECK_THROWS_AS(expand_roots(g, 1, 2, {100, 50}), sample_set_error);
    CHECK_THROWS_AS(expand_roots(g, 1, 2, {1.5, 2.0, 2.5}), sample_set_error);
    CHECK_THROWS_AS(expand_roots(g, 1, 5, steps(50, 80, 10)), sample_set_error);
    CHECK_THROWS_AS(expand_roots(BivarPoly::parse("t*y^2 - 1"), 1, 2, steps(50, 100, 10)),
                    precondition_error);
}

TEST_CASE("formal factor counts and canonical order") {
    BivarPoly g = BivarPoly::parse("y^3 - t^3");
    auto rep = expand_roots(g, 1, 2, steps(50, 100, 10));
    auto factors = formal_factors(rep.branches);
    REQUIRE(factors.size() == 6);
    CHECK(factors[0].subset == std::vector<int>{1});
    CHECK(factors[1].subset == std::vector<int>{2});
    CHECK(factors[2].subset == std::vector<int>{3});
    CHECK(factors[3].subset == std::vector<int>{1, 2});
    CHECK(factors[4].subset == std::vector<int>{1, 3});
    CHECK(factors[5].subset == std::vector<int>{2, 3});
    for (size_t i = 0; i < factors.size(); ++i)
        CHECK(factors[i].index == static_cast<int>(i) + 1);
}

TEST_CASE("formal factor counts for n = 2 and n = 4") {
    auto rep2 = expand_roots(BivarPoly::parse("y^2 - t^2"), 1, 2, steps(50, 100, 10));
    CHECK(formal_factors(rep2.branches).size() == 2);

    auto rep4 = expand_roots(BivarPoly::parse("y^4 - t^4"), 1, 2,
                             steps(50, 120, 10));
    auto f4 = formal_factors(rep4.branches);
    CHECK(f4.size() == 14);
    int by_size[5] = {0, 0, 0, 0, 0};
    for (const auto& f : f4) ++by_size[f.subset.size()];
    CHECK(by_size[1] == 4);
    CHECK(by_size[2] == 6);
    CHECK(by_size[3] == 4);

    auto rep1 = expand_roots(BivarPoly::parse("y - t"), 1, 2, steps(50, 100, 10));
    CHECK_THROWS_AS(formal_factors(rep1.branches), parameter_error);
}

TEST_CASE("integrality verdicts for y^3 - t^3: exactly pi_1 and pi_6 pass") {
    BivarPoly g = BivarPoly::parse("y^3 - t^3");
    auto rep = expand_roots(g, 1, 2, steps(50, 100, 10));
    auto factors = formal_factors(rep.branches);
    std::vector<bool> overall;
    for (const auto& f : factors) overall.push_back(check_integrality(f).overall);
    CHECK(overall == std::vector<bool>{true, false, false, false, false, true});

    // pi_2 = y - omega*tau fails the rational-polypart condition
    auto v2 = check_integrality(factors[1]);
    CHECK(v2.cond_neg_powers);
    CHECK_FALSE(v2.cond_rational_polypart);

    // reconstructions of the two integral factors
    auto r1 = reconstruct_integral_factor(factors[0], check_integrality(factors[0]));
    REQUIRE(r1.has_value());
    CHECK(*r1 == BivarPoly::parse("y - t"));
    auto r6 = reconstruct_integral_factor(factors[5], check_integrality(factors[5]));
    REQUIRE(r6.has_value());
    CHECK(*r6 == BivarPoly::parse("y^2 + t*y + t^2"));
}

TEST_CASE("fractional powers are rejected by the divisibility condition") {
    // y^2 - t with k = 2: branches +-tau, factor y - tau survives exponent 1,
    // which 2 does not divide
    auto rep = expand_roots(BivarPoly::parse("y^2 - t"), 2, 2, steps(10, 22, 2));
    auto factors = formal_factors(rep.branches);
    REQUIRE(factors.size() == 2);
    for (const auto& f : factors) {
        auto v = check_integrality(f);
        CHECK(v.cond_neg_powers);
        CHECK(v.cond_rational_polypart);
        CHECK_FALSE(v.cond_integral_powers);
        CHECK_FALSE(v.overall);
    }
}

TEST_CASE("complementary factors pass or fail together") {
    BivarPoly g = BivarPoly::parse("y^3 - t^3");
    auto rep = expand_roots(g, 1, 2, steps(50, 100, 10));
    auto factors = formal_factors(rep.branches);
    auto complement_index = [&](const FormalFactor& f) {
        std::vector<int> comp;
        for (int i = 1; i <= 3; ++i)
            if (std::find(f.subset.begin(), f.subset.end(), i) == f.subset.end())
                comp.push_back(i);
        for (const auto& other : factors)
            if (other.subset == comp) return other.index;
        return 0;
    };
    for (const auto& f : factors) {
        int ci = complement_index(f);
        REQUIRE(ci >= 1);
        CHECK(check_integrality(f).overall ==
              check_integrality(factors[static_cast<size_t>(ci - 1)]).overall);
    }

    // the product of a factor and its complement reproduces g at a sample
    const auto& f1 = factors[0];
    const auto& f6 = factors[5];
    double tau = 70.0;
    // (y - y1)(y^2 + s1 y + s2) coefficients from the two series
    cplx a1 = f1.coeff_series[0].eval(tau);
    cplx b1 = f6.coeff_series[0].eval(tau);
    cplx b2 = f6.coeff_series[1].eval(tau);
    // product coefficients of y^2, y^1, y^0
    cplx c2 = a1 + b1;
    cplx c1 = b2 + a1 * b1;
    cplx c0 = a1 * b2;
    double t = tau;
    CHECK(std::abs(c2) < 1e-7);
    CHECK(std::abs(c1) < 1e-4);  // magnitudes ~ tau^2, allow roundoff
    CHECK(std::abs(c0 - cplx(-t * t * t, 0)) / (t * t * t) < 1e-8);
}

TEST_CASE("full-set symmetric functions collapse to the coefficients of g") {
    BivarPoly g = BivarPoly::parse("y^3 - 2*t*y + t^3");
    auto rep = expand_roots(g, 1, 3, steps(40, 130, 10));
    int n = 3;
    double tau = 90.0;
    double t = tau;
    // coefficients of prod(y - y_i) from the fitted series vs g's S_j(t)
    std::vector<cplx> prod{1.0};
    for (const auto& b : rep.branches) {
        cplx root = b.eval(tau);
        std::vector<cplx> next(prod.size() + 1);
        for (size_t i = 0; i < prod.size(); ++i) {
            next[i + 1] += prod[i];
            next[i] -= root * prod[i];
        }
        prod = std::move(next);
    }
    for (int i = 0; i < n; ++i) {
        double expect = 0.0, tp = 1.0;
        const UnivarPoly c = g.coeff(i);
        for (int d = 0; d <= c.degree(); ++d) {
            expect += c.at(d).get_d() * tp;
            tp *= t;
        }
        double scale = std::max(1.0, std::abs(expect));
        CHECK(std::abs(prod[static_cast<size_t>(i)] - expect) / scale < 1e-7);
    }
}

// ---------------------------------------------------------------- sigma series

TEST_CASE("difference_reduce drops polynomial degree by one per step") {
    SigmaSeries p = series_from({mpq_class(0), mpq_class(0), mpq_class(1)}, {});  // sigma^2
    SigmaSeries r = difference_reduce(p, {1});
    CHECK(r.poly_degree() == 1);
    CHECK(r.at(1) == mpq_class(-2));
    CHECK(r.at(0) == mpq_class(-1));
}

TEST_CASE("difference_reduce exposes the tail formula") {
    // P = sigma + 1/sigma, mu = [1,1]: leading tail term 2/sigma^3
    SigmaSeries p = series_from({mpq_class(0), mpq_class(1)}, {mpq_class(1)});
    SigmaSeries r = difference_reduce(p, {1, 1});
    CHECK(r.poly_degree() == -1);
    CHECK(r.first_tail_index() == 3);
    CHECK(r.at(-3) == mpq_class(2));
}

TEST_CASE("difference_reduce annihilates pure polynomials exactly") {
    for (int deg = 0; deg <= 5; ++deg) {
        std::vector<mpq_class> poly(static_cast<size_t>(deg) + 1);
        for (int i = 0; i <= deg; ++i) poly[static_cast<size_t>(i)] = mpq_class(2 * i - 3, i + 1);
        std::vector<int64_t> mus(static_cast<size_t>(deg) + 1, 2);
        SigmaSeries r = difference_reduce(series_from(poly, {}), mus);
        CHECK(r.is_zero());
    }
}

TEST_CASE("difference_reduce flags insufficient truncation") {
    SigmaSeries p(3);
    p.set(-3, mpq_class(1));
    CHECK_THROWS_AS(difference_reduce(p, {1, 1, 1}), truncation_error);
    CHECK_THROWS_AS(difference_reduce(p, {}), parameter_error);
    CHECK_THROWS_AS(difference_reduce(p, {0}), parameter_error);
}

TEST_CASE("limit_check on sigma + 1/sigma") {
    SigmaSeries p = series_from({mpq_class(0), mpq_class(1)}, {mpq_class(1)});
    auto rep = limit_check(p, {1, 1}, {10, 100, 1000});
    CHECK(rep.v == 1);
    CHECK(rep.formula == mpq_class(2));
    CHECK(rep.relative_error_at_largest < 0.01);
}

TEST_CASE("limit_check degenerate and simple cases") {
    SigmaSeries p = series_from({mpq_class(5), mpq_class(2)}, {});
    auto rep = limit_check(p, {1, 2}, {100});
    CHECK(rep.formula == 0);
    CHECK(rep.measured[0].second == doctest::Approx(0.0).epsilon(1e-12));

    // P = c + 5/sigma, one difference with mu = 3: limit 15
    SigmaSeries q = series_from({mpq_class(7)}, {mpq_class(5)});
    auto rep2 = limit_check(q, {3}, {10, 1000});
    CHECK(rep2.formula == mpq_class(15));
    CHECK(rep2.relative_error_at_largest < 0.01);
}

TEST_CASE("sigma series text round trip") {
    SigmaSeries p = series_from({mpq_class(1, 2), mpq_class(3)}, {mpq_class(0), mpq_class(-2, 7)});
    SigmaSeries back = SigmaSeries::parse(p.to_text());
    CHECK(back.at(0) == mpq_class(1, 2));
    CHECK(back.at(1) == mpq_class(3));
    CHECK(back.at(-2) == mpq_class(-2, 7));
    CHECK_THROWS_AS(SigmaSeries::parse("nonsense 1 2\n"), format_error);
}

TEST_CASE("rational_recover pinned examples") {
    using pt = std::pair<mpz_class, mpz_class>;
    auto line = rational_recover({pt{1, 2}, pt{2, 5}}, 1);
    REQUIRE(line.size() == 2);
    CHECK(line[0] == mpq_class(3));
    CHECK(line[1] == mpq_class(-1));

    auto c = rational_recover({pt{7, 4}}, 0);
    CHECK(c == std::vector<mpq_class>{mpq_class(4)});

    auto sq = rational_recover({pt{1, 1}, pt{2, 4}, pt{3, 9}}, 2);
    CHECK(sq == std::vector<mpq_class>{mpq_class(1), mpq_class(0), mpq_class(0)});

    CHECK_THROWS_AS(rational_recover({pt{1, 1}, pt{1, 2}}, 1), parameter_error);
    CHECK_THROWS_AS(rational_recover({pt{1, 1}}, 1), parameter_error);
}

TEST_CASE("rational_recover verifies extra points exactly") {
    using pt = std::pair<mpz_class, mpz_class>;
    // sigma^2 sampled at four points: consistent
    auto ok = rational_recover({pt{1, 1}, pt{2, 4}, pt{3, 9}, pt{5, 25}}, 2);
    CHECK(ok[0] == 1);
    // inconsistent fourth point
    CHECK_THROWS_AS(rational_recover({pt{1, 1}, pt{2, 4}, pt{3, 9}, pt{5, 26}}, 2),
                    parameter_error);
}

TEST_CASE("prime_power_ratio_rational") {
    CHECK_FALSE(prime_power_ratio_rational(2, 3, mpq_class(1, 2)));
    CHECK(prime_power_ratio_rational(2, 3, mpq_class(2)));
    CHECK_FALSE(prime_power_ratio_rational(5, 7, mpq_class(3, 4)));
    CHECK(prime_power_ratio_rational(5, 7, mpq_class(0)));
    CHECK(prime_power_ratio_rational(2, 3, mpq_class(-3)));
    CHECK_THROWS_AS(prime_power_ratio_rational(4, 3, mpq_class(1, 2)), parameter_error);
    CHECK_THROWS_AS(prime_power_ratio_rational(3, 3, mpq_class(1, 2)), parameter_error);
}

TEST_CASE("round_to_rational recovers simple fractions") {
    CHECK(round_to_rational(0.5, 100) == mpq_class(1, 2));
    CHECK(round_to_rational(-2.0, 100) == mpq_class(-2));
    CHECK(round_to_rational(1.0 / 3.0 + 1e-12, 100) == mpq_class(1, 3));
    CHECK(round_to_rational(0.0, 100) == 0);
}
