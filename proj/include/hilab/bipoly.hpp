#pragma once
#include <string>
#include <vector>

#include "hilab/upoly.hpp"

namespace hilab {

/// Integer polynomial in (x, t): f = T x^n + T_1 x^{n-1} + ... + T_n with
/// each coefficient an integer polynomial in t.  Stored by ascending
/// x-degree; canonical form drops zero leading coefficients.
struct BivarPoly {
    std::vector<UnivarPoly> tcoeffs;  // tcoeffs[i] is the coefficient of x^i

    BivarPoly() = default;
    explicit BivarPoly(std::vector<UnivarPoly> c) : tcoeffs(std::move(c)) { normalize(); }
    static BivarPoly from_univar_x(const UnivarPoly& p);  // polynomial in x alone
    static BivarPoly from_univar_t(const UnivarPoly& p);  // polynomial in t alone

    void normalize();
    bool is_zero() const { return tcoeffs.empty(); }
    int xdeg() const { return static_cast<int>(tcoeffs.size()) - 1; }
    int tdeg() const;
    int total_degree() const;
    bool depends_on_x() const { return xdeg() >= 1; }
    const UnivarPoly& lead() const;  // T, the leading coefficient in x
    UnivarPoly coeff(int i) const;   // coefficient of x^i (zero poly beyond degree)

    bool operator==(const BivarPoly& o) const { return tcoeffs == o.tcoeffs; }

    BivarPoly operator-() const;
    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator-(const BivarPoly& o) const;
    BivarPoly operator*(const BivarPoly& o) const;
    BivarPoly operator*(const UnivarPoly& s) const;  // scale by a t-polynomial
    BivarPoly operator*(const mpz_class& s) const;

    mpz_class eval(const mpz_class& x, const mpz_class& t) const;
    BivarPoly derivative_x() const;

    mpz_class int_content() const;
    /// gcd in Z[t] of all coefficient polynomials (primitive, positive lc).
    UnivarPoly t_content() const;
    /// f with integer content and t-content divided out; leading x-coeff
    /// gets a positive leading coefficient.
    BivarPoly primitive_part() const;

    /// Exact division in Z[t][x]; false when b does not divide a exactly.
    static bool div_exact(const BivarPoly& a, const BivarPoly& b, BivarPoly* quotient);
    /// Pseudo-remainder in x (up to a Z[t] scalar), for the primitive PRS.
    static BivarPoly pseudo_rem_x(const BivarPoly& a, const BivarPoly& b);
    /// Primitive gcd with respect to x via the primitive PRS.
    static BivarPoly gcd_x(const BivarPoly& a, const BivarPoly& b);

    /// Sum-of-terms format, e.g. "2*x^2*t - x + t^3 + 4".  The main
    /// variable may be spelled x or y; t is the parameter.
    static BivarPoly parse(const std::string& text);
    std::string to_text(const std::string& xvar = "x", const std::string& tvar = "t") const;
};

/// Exact coefficient evaluation at t = t1; degree can drop when T(t1) = 0.
UnivarPoly specialize(const BivarPoly& f, const mpz_class& t1);

/// g(y,t) = T^{n-1} f(y/T, t), monic in y with integer coefficients;
/// the defining identity is re-checked by resubstitution at sample points.
BivarPoly monic_transform(const BivarPoly& f);

}  // namespace hilab
