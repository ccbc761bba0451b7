#include "hilab/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace hilab {

// ---------------------------------------------------------------- UnivarPoly

UnivarPoly UnivarPoly::constant(const mpz_class& c) {
    UnivarPoly p;
    if (c != 0) p.coeffs = {c};
    return p;
}

UnivarPoly UnivarPoly::monomial(const mpz_class& c, int deg) {
    UnivarPoly p;
    if (c != 0) {
        p.coeffs.assign(static_cast<size_t>(deg) + 1, mpz_class(0));
        p.coeffs.back() = c;
    }
    return p;
}

void UnivarPoly::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

const mpz_class& UnivarPoly::lc() const {
    if (is_zero()) throw parameter_error("zero polynomial has no leading coefficient");
    return coeffs.back();
}

mpz_class UnivarPoly::at(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs.size())) return 0;
    return coeffs[static_cast<size_t>(i)];
}

UnivarPoly UnivarPoly::operator-() const {
    UnivarPoly r = *this;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

UnivarPoly UnivarPoly::operator+(const UnivarPoly& o) const {
    std::vector<mpz_class> c(std::max(coeffs.size(), o.coeffs.size()), mpz_class(0));
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
    for (size_t i = 0; i < o.coeffs.size(); ++i) c[i] += o.coeffs[i];
    return UnivarPoly(std::move(c));
}

UnivarPoly UnivarPoly::operator-(const UnivarPoly& o) const { return *this + (-o); }

UnivarPoly UnivarPoly::operator*(const UnivarPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpz_class> c(coeffs.size() + o.coeffs.size() - 1, mpz_class(0));
    for (size_t i = 0; i < coeffs.size(); ++i)
        for (size_t j = 0; j < o.coeffs.size(); ++j) c[i + j] += coeffs[i] * o.coeffs[j];
    return UnivarPoly(std::move(c));
}

UnivarPoly UnivarPoly::operator*(const mpz_class& s) const {
    UnivarPoly r = *this;
    for (auto& c : r.coeffs) c *= s;
    r.normalize();
    return r;
}

mpz_class UnivarPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpq_class UnivarPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
}

UnivarPoly UnivarPoly::derivative() const {
    if (coeffs.size() <= 1) return {};
    std::vector<mpz_class> c(coeffs.size() - 1);
    for (size_t i = 1; i < coeffs.size(); ++i) c[i - 1] = coeffs[i] * static_cast<long>(i);
    return UnivarPoly(std::move(c));
}

mpz_class UnivarPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

UnivarPoly UnivarPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class cont = content();
    if (lc() < 0) cont = -cont;
    std::vector<mpz_class> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i] / cont;
    return UnivarPoly(std::move(c));
}

bool UnivarPoly::div_exact(const UnivarPoly& a, const UnivarPoly& b, UnivarPoly* quotient) {
    if (b.is_zero()) throw parameter_error("division by the zero polynomial");
    if (a.is_zero()) {
        if (quotient) *quotient = {};
        return true;
    }
    if (a.degree() < b.degree()) return false;
    std::vector<mpz_class> rem = a.coeffs;
    std::vector<mpz_class> q(static_cast<size_t>(a.degree() - b.degree()) + 1, mpz_class(0));
    for (int d = a.degree(); d >= b.degree(); --d) {
        mpz_class& top = rem[static_cast<size_t>(d)];
        if (top == 0) continue;
        mpz_class step;
        mpz_class r;
        mpz_tdiv_qr(step.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
        if (r != 0) return false;
        q[static_cast<size_t>(d - b.degree())] = step;
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<size_t>(d - b.degree() + i)] -= step * b.coeffs[static_cast<size_t>(i)];
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    if (quotient) *quotient = UnivarPoly(std::move(q));
    return true;
}

UnivarPoly UnivarPoly::pseudo_rem(const UnivarPoly& a, const UnivarPoly& b) {
    if (b.is_zero()) throw parameter_error("pseudo-remainder by zero polynomial");
    UnivarPoly r = a;
    int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        int shift = r.degree() - db;
        mpz_class top = r.lc();
        r = r * b.lc() - (b * top) * UnivarPoly::monomial(1, shift);
    }
    return r;
}

UnivarPoly UnivarPoly::gcd(const UnivarPoly& a, const UnivarPoly& b) {
    UnivarPoly x = a.primitive_part();
    UnivarPoly y = b.primitive_part();
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        UnivarPoly r = pseudo_rem(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

std::string UnivarPoly::to_text(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs[static_cast<size_t>(i)];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) out << mag.get_str();
        if (i > 0) {
            if (mag != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(const UnivarPoly& p) {
    coeffs.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) coeffs.emplace_back(c);
}

RatPoly RatPoly::constant(const mpq_class& c) {
    RatPoly p;
    if (c != 0) p.coeffs = {c};
    return p;
}

void RatPoly::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

const mpq_class& RatPoly::lc() const {
    if (is_zero()) throw parameter_error("zero polynomial has no leading coefficient");
    return coeffs.back();
}

mpq_class RatPoly::at(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs.size())) return 0;
    return coeffs[static_cast<size_t>(i)];
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<mpq_class> c(std::max(coeffs.size(), o.coeffs.size()), mpq_class(0));
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
    for (size_t i = 0; i < o.coeffs.size(); ++i) c[i] += o.coeffs[i];
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpq_class> c(coeffs.size() + o.coeffs.size() - 1, mpq_class(0));
    for (size_t i = 0; i < coeffs.size(); ++i)
        for (size_t j = 0; j < o.coeffs.size(); ++j) c[i + j] += coeffs[i] * o.coeffs[j];
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const mpq_class& s) const {
    if (s == 0) return {};
    RatPoly r = *this;
    for (auto& c : r.coeffs) c *= s;
    return r;
}

mpq_class RatPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void RatPoly::divmod(const RatPoly& a, const RatPoly& b, RatPoly* q, RatPoly* r) {
    if (b.is_zero()) throw parameter_error("division by the zero polynomial");
    RatPoly rem = a;
    std::vector<mpq_class> quot;
    if (a.degree() >= b.degree())
        quot.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, mpq_class(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        mpq_class step = rem.lc() / b.lc();
        quot[static_cast<size_t>(shift)] = step;
        // rem -= step * x^shift * b
        for (int i = 0; i <= b.degree(); ++i)
            rem.coeffs[static_cast<size_t>(shift + i)] -= step * b.coeffs[static_cast<size_t>(i)];
        rem.normalize();
    }
    if (q) *q = RatPoly(std::move(quot));
    if (r) *r = std::move(rem);
}

RatPoly RatPoly::extgcd(const RatPoly& a, const RatPoly& b, RatPoly* s_out, RatPoly* t_out) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(1), s1;
    RatPoly t0, t1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        RatPoly q, r;
        divmod(r0, r1, &q, &r);
        RatPoly s2 = s0 - q * s1;
        RatPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) throw parameter_error("extgcd of two zero polynomials");
    mpq_class inv_lc = 1 / r0.lc();
    if (s_out) *s_out = s0 * inv_lc;
    if (t_out) *t_out = t0 * inv_lc;
    return r0 * inv_lc;
}

std::pair<mpq_class, UnivarPoly> gauss_split(const RatPoly& p) {
    if (p.is_zero()) throw parameter_error("gauss_split of the zero polynomial");
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> ints(p.coeffs.size());
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        mpq_class scaled = p.coeffs[i] * mpq_class(den_lcm);
        ints[i] = scaled.get_num();  // denominator is 1 after scaling
    }
    UnivarPoly zp(std::move(ints));
    mpz_class cont = zp.content();
    if (zp.lc() < 0) cont = -cont;
    UnivarPoly prim = zp.primitive_part();
    mpq_class scalar(cont, den_lcm);
    scalar.canonicalize();
    return {scalar, prim};
}

}  // namespace hilab
