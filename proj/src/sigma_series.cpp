#include "hilab/sigma_series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hilab {

SigmaSeries SigmaSeries::from_parts(const std::vector<mpq_class>& poly,
                                    const std::vector<mpq_class>& tail) {
    SigmaSeries s(std::max<int>(8, static_cast<int>(tail.size())));
    for (size_t i = 0; i < poly.size(); ++i) s.set(static_cast<int>(i), poly[i]);
    for (size_t v = 1; v <= tail.size(); ++v) s.set(-static_cast<int>(v), tail[v - 1]);
    return s;
}

void SigmaSeries::set(int exp, const mpq_class& c) {
    if (exp < -order) throw parameter_error("exponent below the truncation order");
    if (c == 0)
        terms.erase(exp);
    else
        terms[exp] = c;
}

mpq_class SigmaSeries::at(int exp) const {
    auto it = terms.find(exp);
    return it == terms.end() ? mpq_class(0) : it->second;
}

int SigmaSeries::poly_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms)
        if (e >= 0) d = std::max(d, e);
    return d;
}

int SigmaSeries::first_tail_index() const {
    int v = 0;
    for (const auto& [e, c] : terms)
        if (e < 0 && (v == 0 || -e < v)) v = -e;
    return v;
}

SigmaSeries SigmaSeries::operator-(const SigmaSeries& o) const {
    SigmaSeries out(std::max(order, o.order));
    out.terms = terms;
    for (const auto& [e, c] : o.terms) {
        auto it = out.terms.find(e);
        if (it == out.terms.end())
            out.terms[e] = -c;
        else {
            it->second -= c;
            if (it->second == 0) out.terms.erase(it);
        }
    }
    return out;
}

SigmaSeries SigmaSeries::shifted(const mpz_class& mu) const {
    SigmaSeries out(order);
    for (const auto& [e, c] : terms) {
        if (e >= 0) {
            // (sigma + mu)^e, exact binomial expansion
            mpz_class mu_pow = 1;
            for (int i = e; i >= 0; --i) {
                mpz_class bin;
                mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(e),
                             static_cast<unsigned long>(i));
                mpq_class add = c * mpq_class(bin * mu_pow);
                if (add != 0) {
                    auto it = out.terms.find(i);
                    if (it == out.terms.end())
                        out.terms[i] = add;
                    else {
                        it->second += add;
                        if (it->second == 0) out.terms.erase(it);
                    }
                }
                mu_pow *= mu;
            }
        } else {
            // (sigma + mu)^{-v} = sum_i binom(-v, i) mu^i sigma^{-v-i}
            int v = -e;
            mpz_class mu_pow = 1;
            for (int i = 0; v + i <= order; ++i) {
                mpz_class bin;
                mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(v + i - 1),
                             static_cast<unsigned long>(i));
                if (i % 2 == 1) bin = -bin;
                mpq_class add = c * mpq_class(bin * mu_pow);
                if (add != 0) {
                    int exp = -(v + i);
                    auto it = out.terms.find(exp);
                    if (it == out.terms.end())
                        out.terms[exp] = add;
                    else {
                        it->second += add;
                        if (it->second == 0) out.terms.erase(it);
                    }
                }
                mu_pow *= mu;
            }
        }
    }
    return out;
}

mpq_class SigmaSeries::eval(const mpq_class& sigma) const {
    if (sigma == 0) throw parameter_error("cannot evaluate at sigma = 0");
    mpq_class acc = 0;
    for (const auto& [e, c] : terms) {
        mpq_class p = 1;
        mpq_class base = e >= 0 ? sigma : 1 / sigma;
        for (int i = 0; i < std::abs(e); ++i) p *= base;
        acc += c * p;
    }
    return acc;
}

SigmaSeries SigmaSeries::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int order = 8;
    std::vector<mpq_class> poly, tail;
    auto read_rats = [](std::istringstream& ls) {
        std::vector<mpq_class> out;
        std::string tok;
        while (ls >> tok) {
            mpq_class q;
            if (q.set_str(tok, 10) != 0) throw format_error("bad rational: " + tok);
            q.canonicalize();
            out.push_back(q);
        }
        return out;
    };
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "order")
            ls >> order;
        else if (key == "poly")
            poly = read_rats(ls);
        else if (key == "tail")
            tail = read_rats(ls);
        else
            throw format_error("unknown series line: " + key);
    }
    SigmaSeries s(std::max(order, static_cast<int>(tail.size())));
    for (size_t i = 0; i < poly.size(); ++i) s.set(static_cast<int>(i), poly[i]);
    for (size_t v = 1; v <= tail.size(); ++v) s.set(-static_cast<int>(v), tail[v - 1]);
    return s;
}

std::string SigmaSeries::to_text() const {
    std::ostringstream out;
    out << "order " << order << "\n";
    out << "poly";
    for (int i = 0; i <= std::max(0, poly_degree()); ++i) out << " " << at(i).get_str();
    out << "\ntail";
    for (int v = 1; v <= order; ++v) out << " " << at(-v).get_str();
    out << "\n";
    return out.str();
}

SigmaSeries difference_reduce(const SigmaSeries& series, const std::vector<int64_t>& increments) {
    if (increments.empty()) throw parameter_error("need at least one increment");
    for (int64_t mu : increments)
        if (mu < 1) throw parameter_error("increments must be positive");
    int v = series.first_tail_index();
    if (v > 0 && v + static_cast<int>(increments.size()) > series.order)
        throw truncation_error("truncation too short to expose the leading tail term");
    SigmaSeries cur = series;
    for (int64_t mu : increments) cur = cur - cur.shifted(mpz_class(mu));
    return cur;
}

LimitCheckReport limit_check(const SigmaSeries& series, const std::vector<int64_t>& increments,
                             const std::vector<int64_t>& sigma_values) {
    if (increments.empty()) throw parameter_error("need at least one increment");
    if (sigma_values.empty()) throw parameter_error("need at least one sigma sample");
    int m = static_cast<int>(increments.size());
    LimitCheckReport rep;
    rep.v = series.first_tail_index();

    // closed form: mu(1)...mu(m) * v(v+1)...(v+m-1) * D_{1v}
    if (rep.v == 0) {
        rep.formula = 0;
    } else {
        mpq_class f = series.at(-rep.v);
        for (int64_t mu : increments) f *= mu;
        for (int i = 0; i < m; ++i) f *= (rep.v + i);
        rep.formula = f;
    }

    // measured: sigma^{v+m} * sum over subsets of increments with signs
    for (int64_t sv : sigma_values) {
        if (sv < 1) throw parameter_error("sigma samples must be positive");
        mpq_class acc = 0;
        for (uint32_t mask = 0; mask < (1u << m); ++mask) {
            int64_t shift = 0;
            int bits = 0;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) {
                    shift += increments[static_cast<size_t>(i)];
                    ++bits;
                }
            mpq_class val = series.eval(mpq_class(sv + shift));
            acc += (bits % 2 == 0) ? val : -val;
        }
        mpq_class scale = 1;
        for (int i = 0; i < rep.v + m; ++i) scale *= sv;
        rep.measured.emplace_back(sv, mpq_class(acc * scale).get_d());
    }

    auto largest = *std::max_element(sigma_values.begin(), sigma_values.end());
    double meas = 0;
    for (const auto& [s, d] : rep.measured)
        if (s == largest) meas = d;
    double form = rep.formula.get_d();
    rep.relative_error_at_largest =
        form == 0.0 ? std::abs(meas) : std::abs(meas - form) / std::abs(form);
    return rep;
}

std::vector<mpq_class> rational_recover(const std::vector<std::pair<mpz_class, mpz_class>>& points,
                                        int degree) {
    if (degree < 0) throw parameter_error("degree must be >= 0");
    size_t m = static_cast<size_t>(degree) + 1;
    if (points.size() < m) throw parameter_error("need at least degree+1 sample points");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw parameter_error("repeated sigma point makes the system singular");

    // Gaussian elimination on the Vandermonde system, exact rationals.
    std::vector<std::vector<mpq_class>> aug(m, std::vector<mpq_class>(m + 1));
    for (size_t i = 0; i < m; ++i) {
        mpq_class pw = 1;
        for (size_t j = 0; j < m; ++j) {  // column j: sigma^{degree-j}
            aug[i][m - 1 - j] = pw;
            pw *= points[i].first;
        }
        aug[i][m] = points[i].second;
    }
    for (size_t col = 0; col < m; ++col) {
        size_t piv = col;
        while (piv < m && aug[piv][col] == 0) ++piv;
        if (piv == m) throw parameter_error("singular sample system");
        std::swap(aug[col], aug[piv]);
        for (size_t r = 0; r < m; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            mpq_class factor = aug[r][col] / aug[col][col];
            for (size_t cc = col; cc <= m; ++cc) aug[r][cc] -= factor * aug[col][cc];
        }
    }
    std::vector<mpq_class> coeffs(m);
    for (size_t i = 0; i < m; ++i) coeffs[i] = aug[i][m] / aug[i][i];

    // exact residual check at every supplied point
    for (const auto& [sigma, value] : points) {
        mpq_class acc = 0;
        for (size_t j = 0; j < m; ++j) acc = acc * sigma + coeffs[j];
        if (acc != value)
            throw parameter_error("sample points are inconsistent with the stated degree");
    }
    return coeffs;
}

bool prime_power_ratio_rational(const mpz_class& p, const mpz_class& p2, const mpq_class& r) {
    if (p == p2) throw parameter_error("need two distinct primes");
    if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0 || mpz_probab_prime_p(p2.get_mpz_t(), 40) == 0)
        throw parameter_error("both moduli must be prime");
    mpq_class canon = r;
    canon.canonicalize();
    return canon.get_den() == 1;
}

}  // namespace hilab
