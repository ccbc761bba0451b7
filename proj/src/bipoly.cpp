#include "hilab/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hilab {

BivarPoly BivarPoly::from_univar_x(const UnivarPoly& p) {
    std::vector<UnivarPoly> c;
    c.reserve(p.coeffs.size());
    for (const auto& a : p.coeffs) c.push_back(UnivarPoly::constant(a));
    return BivarPoly(std::move(c));
}

BivarPoly BivarPoly::from_univar_t(const UnivarPoly& p) {
    if (p.is_zero()) return {};
    return BivarPoly({p});
}

void BivarPoly::normalize() {
    while (!tcoeffs.empty() && tcoeffs.back().is_zero()) tcoeffs.pop_back();
}

int BivarPoly::tdeg() const {
    int d = -1;
    for (const auto& c : tcoeffs) d = std::max(d, c.degree());
    return d;
}

int BivarPoly::total_degree() const {
    int d = -1;
    for (size_t i = 0; i < tcoeffs.size(); ++i)
        if (!tcoeffs[i].is_zero()) d = std::max(d, static_cast<int>(i) + tcoeffs[i].degree());
    return d;
}

const UnivarPoly& BivarPoly::lead() const {
    if (is_zero()) throw parameter_error("zero polynomial has no leading coefficient");
    return tcoeffs.back();
}

UnivarPoly BivarPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(tcoeffs.size())) return {};
    return tcoeffs[static_cast<size_t>(i)];
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r = *this;
    for (auto& c : r.tcoeffs) c = -c;
    return r;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
    std::vector<UnivarPoly> c(std::max(tcoeffs.size(), o.tcoeffs.size()));
    for (size_t i = 0; i < tcoeffs.size(); ++i) c[i] = c[i] + tcoeffs[i];
    for (size_t i = 0; i < o.tcoeffs.size(); ++i) c[i] = c[i] + o.tcoeffs[i];
    return BivarPoly(std::move(c));
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const { return *this + (-o); }

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<UnivarPoly> c(tcoeffs.size() + o.tcoeffs.size() - 1);
    for (size_t i = 0; i < tcoeffs.size(); ++i)
        for (size_t j = 0; j < o.tcoeffs.size(); ++j)
            c[i + j] = c[i + j] + tcoeffs[i] * o.tcoeffs[j];
    return BivarPoly(std::move(c));
}

BivarPoly BivarPoly::operator*(const UnivarPoly& s) const {
    BivarPoly r = *this;
    for (auto& c : r.tcoeffs) c = c * s;
    r.normalize();
    return r;
}

BivarPoly BivarPoly::operator*(const mpz_class& s) const {
    BivarPoly r = *this;
    for (auto& c : r.tcoeffs) c = c * s;
    r.normalize();
    return r;
}

mpz_class BivarPoly::eval(const mpz_class& x, const mpz_class& t) const {
    mpz_class acc = 0;
    for (auto it = tcoeffs.rbegin(); it != tcoeffs.rend(); ++it) acc = acc * x + it->eval(t);
    return acc;
}

BivarPoly BivarPoly::derivative_x() const {
    if (tcoeffs.size() <= 1) return {};
    std::vector<UnivarPoly> c(tcoeffs.size() - 1);
    for (size_t i = 1; i < tcoeffs.size(); ++i) c[i - 1] = tcoeffs[i] * mpz_class(static_cast<long>(i));
    return BivarPoly(std::move(c));
}

mpz_class BivarPoly::int_content() const {
    mpz_class g = 0;
    for (const auto& c : tcoeffs) {
        mpz_class cc = c.content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cc.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

UnivarPoly BivarPoly::t_content() const {
    UnivarPoly g;
    for (const auto& c : tcoeffs) {
        g = UnivarPoly::gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

BivarPoly BivarPoly::primitive_part() const {
    if (is_zero()) return {};
    UnivarPoly tc = t_content();  // primitive, positive lc; covers int content too
    mpz_class ic = int_content();
    UnivarPoly div = tc * ic;
    if (lead().lc() < 0) div = -div;
    BivarPoly out;
    out.tcoeffs.reserve(tcoeffs.size());
    for (const auto& c : tcoeffs) {
        UnivarPoly q;
        if (!UnivarPoly::div_exact(c, div, &q))
            throw std::logic_error("content division failed");
        out.tcoeffs.push_back(std::move(q));
    }
    out.normalize();
    return out;
}

bool BivarPoly::div_exact(const BivarPoly& a, const BivarPoly& b, BivarPoly* quotient) {
    if (b.is_zero()) throw parameter_error("division by the zero polynomial");
    if (a.is_zero()) {
        if (quotient) *quotient = {};
        return true;
    }
    if (a.xdeg() < b.xdeg()) return false;
    std::vector<UnivarPoly> rem = a.tcoeffs;
    std::vector<UnivarPoly> q(static_cast<size_t>(a.xdeg() - b.xdeg()) + 1);
    for (int d = a.xdeg(); d >= b.xdeg(); --d) {
        UnivarPoly& top = rem[static_cast<size_t>(d)];
        if (top.is_zero()) continue;
        UnivarPoly step;
        if (!UnivarPoly::div_exact(top, b.lead(), &step)) return false;
        q[static_cast<size_t>(d - b.xdeg())] = step;
        for (int i = 0; i <= b.xdeg(); ++i)
            rem[static_cast<size_t>(d - b.xdeg() + i)] =
                rem[static_cast<size_t>(d - b.xdeg() + i)] - step * b.tcoeffs[static_cast<size_t>(i)];
    }
    for (const auto& c : rem)
        if (!c.is_zero()) return false;
    if (quotient) *quotient = BivarPoly(std::move(q));
    return true;
}

BivarPoly BivarPoly::pseudo_rem_x(const BivarPoly& a, const BivarPoly& b) {
    if (b.is_zero()) throw parameter_error("pseudo-remainder by zero polynomial");
    BivarPoly r = a;
    int db = b.xdeg();
    while (!r.is_zero() && r.xdeg() >= db) {
        int shift = r.xdeg() - db;
        UnivarPoly top = r.lead();
        BivarPoly shifted;
        shifted.tcoeffs.assign(static_cast<size_t>(shift), UnivarPoly{});
        for (const auto& c : b.tcoeffs) shifted.tcoeffs.push_back(c * top);
        shifted.normalize();
        r = r * b.lead() - shifted;
    }
    return r;
}

BivarPoly BivarPoly::gcd_x(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly x = a.is_zero() ? a : a.primitive_part();
    BivarPoly y = b.is_zero() ? b : b.primitive_part();
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.xdeg() < y.xdeg()) std::swap(x, y);
    while (!y.is_zero()) {
        BivarPoly r = pseudo_rem_x(x, y);
        if (!r.is_zero()) r = r.primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

// ---------------------------------------------------------------- text format

namespace {

struct TermAccum {
    mpz_class coeff = 1;
    int xexp = 0;
    int texp = 0;
};

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

int parse_exponent(const std::string& s, size_t& i) {
    skip_ws(s, i);
    if (i < s.size() && s[i] == '^') {
        ++i;
        skip_ws(s, i);
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw format_error("expected exponent after '^'");
        return std::stoi(s.substr(start, i - start));
    }
    return 1;
}

}  // namespace

BivarPoly BivarPoly::parse(const std::string& text) {
    // max degrees are discovered on the fly; accumulate term triples first
    std::vector<TermAccum> terms;
    size_t i = 0;
    skip_ws(text, i);
    if (i >= text.size()) throw format_error("empty polynomial text");
    int sign = 1;
    TermAccum cur;
    bool in_term = false;

    auto flush = [&]() {
        if (in_term) {
            cur.coeff *= sign;
            terms.push_back(cur);
            cur = TermAccum{};
            sign = 1;
            in_term = false;
        }
    };

    while (i < text.size()) {
        skip_ws(text, i);
        if (i >= text.size()) break;
        char ch = text[i];
        if (ch == '+' || ch == '-') {
            if (in_term) flush();
            if (ch == '-') sign = -sign;
            ++i;
            continue;
        }
        if (ch == '*') {
            if (!in_term) throw format_error("'*' with no preceding factor");
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            cur.coeff *= mpz_class(text.substr(start, i - start));
            in_term = true;
            continue;
        }
        if (ch == 'x' || ch == 'y') {
            ++i;
            cur.xexp += parse_exponent(text, i);
            in_term = true;
            continue;
        }
        if (ch == 't') {
            ++i;
            cur.texp += parse_exponent(text, i);
            in_term = true;
            continue;
        }
        throw format_error(std::string("unexpected character '") + ch + "' in polynomial");
    }
    flush();
    if (terms.empty()) throw format_error("no terms in polynomial text");

    int max_x = 0;
    for (const auto& t : terms) max_x = std::max(max_x, t.xexp);
    std::vector<UnivarPoly> coeffs(static_cast<size_t>(max_x) + 1);
    for (const auto& t : terms)
        coeffs[static_cast<size_t>(t.xexp)] =
            coeffs[static_cast<size_t>(t.xexp)] + UnivarPoly::monomial(t.coeff, t.texp);
    return BivarPoly(std::move(coeffs));
}

std::string BivarPoly::to_text(const std::string& xvar, const std::string& tvar) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = xdeg(); i >= 0; --i) {
        const UnivarPoly& c = tcoeffs[static_cast<size_t>(i)];
        for (int j = c.degree(); j >= 0; --j) {
            mpz_class a = c.at(j);
            if (a == 0) continue;
            mpz_class mag = abs(a);
            if (first) {
                if (a < 0) out << "-";
                first = false;
            } else {
                out << (a < 0 ? " - " : " + ");
            }
            bool printed = false;
            if (mag != 1 || (i == 0 && j == 0)) {
                out << mag.get_str();
                printed = true;
            }
            if (i > 0) {
                if (printed) out << "*";
                out << xvar;
                if (i > 1) out << "^" << i;
                printed = true;
            }
            if (j > 0) {
                if (printed) out << "*";
                out << tvar;
                if (j > 1) out << "^" << j;
            }
        }
    }
    return out.str();
}

// ---------------------------------------------------------------- operations

UnivarPoly specialize(const BivarPoly& f, const mpz_class& t1) {
    std::vector<mpz_class> c;
    c.reserve(f.tcoeffs.size());
    for (const auto& tc : f.tcoeffs) c.push_back(tc.eval(t1));
    return UnivarPoly(std::move(c));
}

BivarPoly monic_transform(const BivarPoly& f) {
    if (!f.depends_on_x())
        throw precondition_error("monic transform needs a polynomial that depends on x");
    int n = f.xdeg();
    const UnivarPoly& T = f.lead();

    // g coefficient of y^{n-j} is T_j * T^{j-1}; expanding T^{n-1} f(y/T, t)
    // term by term gives exactly this.
    std::vector<UnivarPoly> g(static_cast<size_t>(n) + 1);
    g[static_cast<size_t>(n)] = UnivarPoly::constant(1);
    UnivarPoly tpow = UnivarPoly::constant(1);  // T^{j-1}
    for (int j = 1; j <= n; ++j) {
        g[static_cast<size_t>(n - j)] = f.coeff(n - j) * tpow;
        tpow = tpow * T;
    }
    BivarPoly out(std::move(g));

    // Resubstitution check at fixed sample points: g(T(t)*x, t) must equal
    // T(t)^{n-1} * f(x, t).
    int checked = 0;
    for (long t1 = 1; checked < 3 && t1 <= 50; ++t1) {
        mpz_class tv = T.eval(mpz_class(t1));
        if (tv == 0) continue;
        for (long x1 = 2; checked < 3 && x1 <= 4; ++x1) {
            mpz_class lhs = out.eval(tv * x1, t1);
            mpz_class rhs;
            mpz_pow_ui(rhs.get_mpz_t(), tv.get_mpz_t(), static_cast<unsigned long>(n - 1));
            rhs *= f.eval(x1, t1);
            if (lhs != rhs) throw std::logic_error("monic transform identity check failed");
            ++checked;
        }
    }
    return out;
}

}  // namespace hilab
