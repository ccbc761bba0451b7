#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

#include "hilab/errors.hpp"

namespace hilab {

/// Dense integer polynomial, constant term first, canonical form (no
/// trailing zeros; the zero polynomial is the empty sequence).
struct UnivarPoly {
    std::vector<mpz_class> coeffs;

    UnivarPoly() = default;
    explicit UnivarPoly(std::vector<mpz_class> c) : coeffs(std::move(c)) { normalize(); }
    static UnivarPoly constant(const mpz_class& c);
    static UnivarPoly monomial(const mpz_class& c, int deg);

    void normalize();
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
    const mpz_class& lc() const;
    mpz_class at(int i) const;

    bool operator==(const UnivarPoly& o) const { return coeffs == o.coeffs; }

    UnivarPoly operator-() const;
    UnivarPoly operator+(const UnivarPoly& o) const;
    UnivarPoly operator-(const UnivarPoly& o) const;
    UnivarPoly operator*(const UnivarPoly& o) const;
    UnivarPoly operator*(const mpz_class& s) const;

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;
    UnivarPoly derivative() const;

    /// gcd of coefficients, nonnegative; 0 only for the zero polynomial.
    mpz_class content() const;
    /// p / (signed content); has content 1 and positive leading coefficient.
    UnivarPoly primitive_part() const;

    /// Exact division over Z; returns false when b does not divide a.
    static bool div_exact(const UnivarPoly& a, const UnivarPoly& b, UnivarPoly* quotient);
    /// Remainder of lc(b)^j * a under division by b for some j >= 0;
    /// well-defined up to the scalar, which is all the primitive PRS needs.
    static UnivarPoly pseudo_rem(const UnivarPoly& a, const UnivarPoly& b);
    /// Primitive gcd with positive leading coefficient.
    static UnivarPoly gcd(const UnivarPoly& a, const UnivarPoly& b);

    std::string to_text(const std::string& var = "x") const;
};

/// Dense rational polynomial used for field arithmetic (interpolation,
/// extended gcd, Hensel steps).
struct RatPoly {
    std::vector<mpq_class> coeffs;

    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> c) : coeffs(std::move(c)) { normalize(); }
    explicit RatPoly(const UnivarPoly& p);
    static RatPoly constant(const mpq_class& c);

    void normalize();
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const mpq_class& lc() const;
    mpq_class at(int i) const;

    bool operator==(const RatPoly& o) const { return coeffs == o.coeffs; }

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const mpq_class& s) const;

    mpq_class eval(const mpq_class& x) const;

    /// Field division: a = q*b + r with deg r < deg b.
    static void divmod(const RatPoly& a, const RatPoly& b, RatPoly* q, RatPoly* r);
    /// Monic gcd plus Bezout cofactors: s*a + t*b = g.
    static RatPoly extgcd(const RatPoly& a, const RatPoly& b, RatPoly* s, RatPoly* t);
};

/// Splits a rational polynomial as scalar * primitive integer polynomial,
/// the executable form of Gauss's content lemma.  The primitive part has
/// content 1 and positive leading coefficient.
std::pair<mpq_class, UnivarPoly> gauss_split(const RatPoly& p);

}  // namespace hilab
