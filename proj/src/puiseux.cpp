#include "hilab/puiseux.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace hilab {

// ---------------------------------------------------------------- TauSeries

void TauSeries::add(int exp, cplx c) {
    if (exp < trunc_min || c == cplx{}) return;
    auto it = terms.find(exp);
    if (it == terms.end())
        terms[exp] = c;
    else {
        it->second += c;
        if (it->second == cplx{}) terms.erase(it);
    }
}

cplx TauSeries::at(int exp) const {
    auto it = terms.find(exp);
    return it == terms.end() ? cplx{} : it->second;
}

TauSeries TauSeries::operator+(const TauSeries& o) const {
    TauSeries out(std::max(trunc_min, o.trunc_min));
    for (const auto& [e, c] : terms) out.add(e, c);
    for (const auto& [e, c] : o.terms) out.add(e, c);
    return out;
}

TauSeries TauSeries::operator-(const TauSeries& o) const {
    TauSeries out(std::max(trunc_min, o.trunc_min));
    for (const auto& [e, c] : terms) out.add(e, c);
    for (const auto& [e, c] : o.terms) out.add(e, -c);
    return out;
}

TauSeries TauSeries::operator*(const TauSeries& o) const {
    TauSeries out(std::max(trunc_min, o.trunc_min));
    for (const auto& [e1, c1] : terms)
        for (const auto& [e2, c2] : o.terms) out.add(e1 + e2, c1 * c2);
    return out;
}

cplx TauSeries::eval(double tau) const {
    cplx acc = 0;
    for (const auto& [e, c] : terms) acc += c * std::pow(cplx(tau, 0), e);
    return acc;
}

// ---------------------------------------------------------------- expansions

TauSeries PuiseuxExpansion::to_series() const {
    TauSeries s(-truncation_order);
    for (size_t i = 0; i < fitted.size(); ++i) s.add(fit_max - static_cast<int>(i), fitted[i]);
    return s;
}

cplx PuiseuxExpansion::eval(double tau) const {
    cplx acc = 0;
    for (size_t i = 0; i < fitted.size(); ++i)
        acc += fitted[i] * std::pow(tau, fit_max - static_cast<int>(i));
    return acc;
}

namespace {

// Roots of the monic degree-n polynomial y^n + c[n-1] y^{n-1} + ... + c[0]
// via the companion matrix, polished by two Newton steps.
std::vector<cplx> complex_roots(const std::vector<cplx>& coeffs_ascending) {
    int n = static_cast<int>(coeffs_ascending.size());
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -coeffs_ascending[static_cast<size_t>(i)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    std::vector<cplx> roots(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) roots[static_cast<size_t>(i)] = solver.eigenvalues()(i);

    auto eval_and_deriv = [&](cplx z, cplx* d) {
        cplx p = 1.0, dp = 0.0;  // monic
        for (int i = n - 1; i >= 0; --i) {
            dp = dp * z + p;
            p = p * z + coeffs_ascending[static_cast<size_t>(i)];
        }
        *d = dp;
        return p;
    };
    for (auto& z : roots)
        for (int it = 0; it < 2; ++it) {
            cplx d;
            cplx p = eval_and_deriv(z, &d);
            if (std::abs(d) > 1e-300) z -= p / d;
        }
    return roots;
}

double phase_of(cplx z) {
    double a = std::arg(z);
    if (std::abs(z.imag()) <= 1e-9 * (1.0 + std::abs(z)))
        a = z.real() >= 0 ? 0.0 : std::numbers::pi;
    else if (a < 0)
        a += 2 * std::numbers::pi;
    return a;
}

}  // namespace

ExpandReport expand_roots(const BivarPoly& g, int k, int order,
                          const std::vector<double>& tau_samples) {
    if (k < 1) throw parameter_error("ramification index k must be >= 1");
    if (order < 1) throw parameter_error("truncation order must be >= 1");
    int n = g.xdeg();
    if (n < 1) throw precondition_error("expansion needs a polynomial of y-degree >= 1");
    if (!(g.lead().degree() == 0 && g.lead().at(0) == 1))
        throw precondition_error("expansion needs a polynomial monic in y");
    if (tau_samples.size() < 2) throw sample_set_error("need at least two tau samples");
    for (size_t i = 1; i < tau_samples.size(); ++i)
        if (tau_samples[i] <= tau_samples[i - 1])
            throw sample_set_error("tau samples must be strictly increasing");

    // crude convergence floor from the coefficient sizes
    double thr = 0.0;
    for (int j = 1; j <= n; ++j) {
        const UnivarPoly c = g.coeff(n - j);
        double s = 0.0;
        for (const auto& a : c.coeffs) s += std::abs(a.get_d());
        if (s > 0) thr = std::max(thr, std::pow(s, 1.0 / j));
    }
    thr += 2.0;
    if (tau_samples.front() <= thr)
        throw sample_set_error("tau samples must all exceed the convergence threshold " +
                               std::to_string(thr));

    // growth bound on the polynomial part: h <= ceil(k * max_j deg(S_j)/j)
    int h_max = 0;
    for (int j = 1; j <= n; ++j) {
        int d = g.coeff(n - j).degree();
        if (d > 0) h_max = std::max(h_max, (k * d + j - 1) / j);
    }
    size_t n_basis = static_cast<size_t>(h_max) + 1 + static_cast<size_t>(order);
    if (tau_samples.size() < n_basis)
        throw sample_set_error("need at least " + std::to_string(n_basis) +
                               " samples for the requested truncation order");

    // track branches from the largest sample downward
    std::vector<double> taus(tau_samples.rbegin(), tau_samples.rend());
    size_t n_samples = taus.size();
    std::vector<std::vector<cplx>> branch_vals(static_cast<size_t>(n),
                                               std::vector<cplx>(n_samples));

    auto roots_at = [&](double tau) {
        std::vector<cplx> coeffs(static_cast<size_t>(n));
        double t = std::pow(tau, k);
        for (int i = 0; i < n; ++i) {
            double acc = 0.0, tp = 1.0;
            const UnivarPoly c = g.coeff(i);
            for (int d = 0; d <= c.degree(); ++d) {
                acc += c.at(d).get_d() * tp;
                tp *= t;
            }
            coeffs[static_cast<size_t>(i)] = acc;
        }
        return complex_roots(coeffs);
    };

    {
        auto first = roots_at(taus[0]);
        // canonical order: ascending phase, real branches at phase 0/pi
        std::vector<size_t> idx(first.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            double pa = phase_of(first[a]), pb = phase_of(first[b]);
            if (std::abs(pa - pb) > 1e-12) return pa < pb;
            return std::abs(first[a]) < std::abs(first[b]);
        });
        for (int i = 0; i < n; ++i) branch_vals[static_cast<size_t>(i)][0] = first[idx[static_cast<size_t>(i)]];
    }

    for (size_t s = 1; s < n_samples; ++s) {
        auto roots = roots_at(taus[s]);
        double scale = 1.0;
        for (const auto& r : roots) scale = std::max(scale, std::abs(r));
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = i + 1; j < roots.size(); ++j)
                if (std::abs(roots[i] - roots[j]) < 1e-7 * scale)
                    throw sample_set_error(
                        "branch collision while tracking; use larger tau samples");
        std::vector<bool> taken(roots.size(), false);
        for (int b = 0; b < n; ++b) {
            cplx prev = branch_vals[static_cast<size_t>(b)][s - 1];
            size_t best = roots.size();
            double best_d = 0;
            for (size_t r = 0; r < roots.size(); ++r) {
                if (taken[r]) continue;
                double d = std::abs(roots[r] - prev);
                if (best == roots.size() || d < best_d) {
                    best = r;
                    best_d = d;
                }
            }
            taken[best] = true;
            branch_vals[static_cast<size_t>(b)][s] = roots[best];
        }
    }

    // least-squares fit per branch over exponents h_max .. -order
    ExpandReport rep;
    Eigen::MatrixXcd A(static_cast<Eigen::Index>(n_samples), static_cast<Eigen::Index>(n_basis));
    for (size_t s = 0; s < n_samples; ++s)
        for (size_t bfn = 0; bfn < n_basis; ++bfn) {
            int e = h_max - static_cast<int>(bfn);
            A(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(bfn)) =
                std::pow(taus[s], e);
        }
    auto qr = A.colPivHouseholderQr();

    for (int b = 0; b < n; ++b) {
        Eigen::VectorXcd rhs(static_cast<Eigen::Index>(n_samples));
        for (size_t s = 0; s < n_samples; ++s)
            rhs(static_cast<Eigen::Index>(s)) = branch_vals[static_cast<size_t>(b)][s];
        Eigen::VectorXcd sol = qr.solve(rhs);

        PuiseuxExpansion ex;
        ex.k = k;
        ex.truncation_order = order;
        ex.convergence_threshold = thr;
        ex.fit_max = h_max;
        ex.fitted.resize(n_basis);
        for (size_t i = 0; i < n_basis; ++i) ex.fitted[i] = sol(static_cast<Eigen::Index>(i));

        double res = 0.0;
        for (size_t s = 0; s < n_samples; ++s)
            res = std::max(res, std::abs(ex.eval(taus[s]) - branch_vals[static_cast<size_t>(b)][s]));
        ex.max_fit_residual = res;

        // recorded h: highest exponent whose coefficient survives
        int h = 0;
        for (size_t i = 0; i < n_basis; ++i) {
            int e = h_max - static_cast<int>(i);
            if (e <= 0) break;
            if (std::abs(ex.fitted[i]) > 1e-6) {
                h = e;
                break;
            }
        }
        ex.h = h;
        ex.poly_part.assign(ex.fitted.begin() + (h_max - h), ex.fitted.begin() + h_max + 1);
        ex.neg_part.assign(ex.fitted.begin() + h_max + 1, ex.fitted.end());
        rep.branches.push_back(std::move(ex));
    }

    // product identity: prod (y - y_i(tau)) must re-expand to g at each sample
    for (size_t s = 0; s < n_samples; ++s) {
        double t = std::pow(taus[s], k);
        std::vector<cplx> prod{1.0};
        for (int b = 0; b < n; ++b) {
            cplx root = branch_vals[static_cast<size_t>(b)][s];
            std::vector<cplx> next(prod.size() + 1);
            for (size_t i = 0; i < prod.size(); ++i) {
                next[i + 1] += prod[i];
                next[i] -= root * prod[i];
            }
            prod = std::move(next);
        }
        for (int i = 0; i < n; ++i) {
            double acc = 0.0, tp = 1.0;
            const UnivarPoly c = g.coeff(i);
            for (int d = 0; d <= c.degree(); ++d) {
                acc += c.at(d).get_d() * tp;
                tp *= t;
            }
            double scale = std::max(1.0, std::abs(acc));
            rep.max_reconstruction_residual = std::max(
                rep.max_reconstruction_residual, std::abs(prod[static_cast<size_t>(i)] - acc) / scale);
        }
    }
    return rep;
}

// ---------------------------------------------------------------- formal factors

std::vector<FormalFactor> formal_factors(const std::vector<PuiseuxExpansion>& expansions) {
    int n = static_cast<int>(expansions.size());
    if (n < 2) throw parameter_error("formal factors need at least two root branches");
    if (n > 16) throw capability_error("2^n - 2 factors is beyond desk scale for n > 16");
    int k = expansions[0].k;
    int order = expansions[0].truncation_order;
    for (const auto& e : expansions)
        if (e.k != k || e.truncation_order != order)
            throw parameter_error("expansions must share k and truncation order");

    std::vector<TauSeries> root_series;
    root_series.reserve(static_cast<size_t>(n));
    for (const auto& e : expansions) root_series.push_back(e.to_series());

    std::vector<FormalFactor> out;
    int index = 0;
    for (int size = 1; size <= n - 1; ++size) {
        // subsets of {1..n} of this size in lexicographic order
        std::vector<int> subset(static_cast<size_t>(size));
        std::function<void(int, int)> rec = [&](int depth, int from) {
            if (depth == size) {
                FormalFactor ff;
                ff.index = ++index;
                ff.subset = subset;
                ff.k = k;
                // coefficients of prod (y - y_j): start with [1], multiply up
                std::vector<TauSeries> coeffs{TauSeries(-order)};
                coeffs[0].add(0, 1.0);
                for (int j : subset) {
                    const TauSeries& y = root_series[static_cast<size_t>(j - 1)];
                    std::vector<TauSeries> next(coeffs.size() + 1, TauSeries(-order));
                    for (size_t i = 0; i < coeffs.size(); ++i) {
                        next[i + 1] = next[i + 1] + coeffs[i];
                        next[i] = next[i] - y * coeffs[i];
                    }
                    coeffs = std::move(next);
                }
                // drop the leading 1: keep y^{nu-1} .. y^0 coefficients
                ff.coeff_series.assign(coeffs.rbegin() + 1, coeffs.rend());
                out.push_back(std::move(ff));
                return;
            }
            for (int v = from; v <= n; ++v) {
                subset[static_cast<size_t>(depth)] = v;
                rec(depth + 1, v + 1);
            }
        };
        rec(0, 1);
    }
    return out;
}

// ---------------------------------------------------------------- integrality

mpq_class round_to_rational(double x, long denominator_bound) {
    if (denominator_bound < 1) throw parameter_error("denominator bound must be >= 1");
    // continued-fraction convergents
    double v = x;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        if (fl > 9e17 || fl < -9e17) break;
        long long a = static_cast<long long>(fl);
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > denominator_bound) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    if (q1 == 0) return mpq_class(static_cast<long>(std::llround(x)));
    mpq_class r(static_cast<long>(p1), static_cast<long>(q1));
    r.canonicalize();
    return r;
}

IntegralityVerdict check_integrality(const FormalFactor& factor, double tol_zero,
                                     long denominator_bound) {
    IntegralityVerdict v;
    v.factor_index = factor.index;
    v.tol_zero = tol_zero;
    v.denominator_bound = denominator_bound;
    v.cond_neg_powers = true;
    v.cond_rational_polypart = true;
    v.cond_integral_powers = true;

    for (const auto& series : factor.coeff_series) {
        std::vector<std::pair<int, mpq_class>> recovered_here;
        for (const auto& [e, c] : series.terms) {
            double mag = std::abs(c);
            if (e < 0) {
                v.max_neg_residual = std::max(v.max_neg_residual, mag);
                if (mag >= tol_zero) v.cond_neg_powers = false;
                continue;
            }
            // polynomial part: must be a real rational within tolerance
            mpq_class r = round_to_rational(c.real(), denominator_bound);
            double err = std::hypot(c.real() - r.get_d(), c.imag());
            if (mag > tol_zero) {
                recovered_here.emplace_back(e, r);
                if (err >= tol_zero) v.cond_rational_polypart = false;
                if (e > 0 && e % factor.k != 0) v.cond_integral_powers = false;
                if (e > 0) v.surviving_exponents.push_back(e);
            }
        }
        v.recovered.push_back(std::move(recovered_here));
    }
    std::sort(v.surviving_exponents.begin(), v.surviving_exponents.end());
    v.surviving_exponents.erase(
        std::unique(v.surviving_exponents.begin(), v.surviving_exponents.end()),
        v.surviving_exponents.end());
    v.overall = v.cond_neg_powers && v.cond_rational_polypart && v.cond_integral_powers;
    return v;
}

std::optional<BivarPoly> reconstruct_integral_factor(const FormalFactor& factor,
                                                     const IntegralityVerdict& verdict) {
    if (!verdict.overall) return std::nullopt;
    size_t nu = factor.coeff_series.size();
    std::vector<UnivarPoly> ycoeffs(nu + 1);
    ycoeffs[nu] = UnivarPoly::constant(1);
    for (size_t j = 0; j < nu; ++j) {
        // coeff_series[j] multiplies y^{nu-1-j}
        std::vector<mpz_class> tpoly;
        for (const auto& [e, r] : verdict.recovered[j]) {
            if (r == 0) continue;
            if (r.get_den() != 1) return std::nullopt;
            int tdeg = e / factor.k;
            if (static_cast<size_t>(tdeg) >= tpoly.size())
                tpoly.resize(static_cast<size_t>(tdeg) + 1, mpz_class(0));
            tpoly[static_cast<size_t>(tdeg)] = r.get_num();
        }
        ycoeffs[nu - 1 - j] = UnivarPoly(std::move(tpoly));
    }
    return BivarPoly(std::move(ycoeffs));
}

}  // namespace hilab
