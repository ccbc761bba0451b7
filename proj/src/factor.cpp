#include "hilab/factor.hpp"

#include <algorithm>
#include <cmath>

namespace hilab {

namespace {

// ---------------------------------------------------------------- helpers

std::vector<mpz_class> divisors_of(const mpz_class& n) {
    mpz_class m = abs(n);
    if (m == 0) throw parameter_error("divisors of zero requested");
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d * d != m) large.push_back(m / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// All rational roots extracted as primitive linear factors s*x - r.
void extract_linear_factors(UnivarPoly& prim, std::vector<UnivarPoly>& factors) {
    for (;;) {
        if (prim.degree() < 1) return;
        bool found = false;
        auto lcs = divisors_of(prim.lc());
        auto trails = divisors_of(prim.coeffs.front());
        for (const auto& s : lcs) {
            for (const auto& r_mag : trails) {
                for (int sign = 0; sign < 2; ++sign) {
                    mpz_class r = sign ? -r_mag : r_mag;
                    mpz_class g;
                    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
                    if (g != 1) continue;
                    mpq_class root(r, s);
                    root.canonicalize();
                    if (prim.eval(root) != 0) continue;
                    UnivarPoly lin(std::vector<mpz_class>{-r, s});
                    UnivarPoly q;
                    while (UnivarPoly::div_exact(prim, lin, &q)) {
                        factors.push_back(lin);
                        prim = q;
                        if (prim.degree() < 1) return;
                    }
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) return;
    }
}

constexpr long kInt64Guard = 1L << 40;

bool fits_fast(const mpz_class& v) { return abs(v) < kInt64Guard; }

std::vector<long> signed_divisors_ll(const mpz_class& n) {
    std::vector<long> out;
    for (const auto& d : divisors_of(n)) {
        long v = d.get_si();
        out.push_back(v);
        out.push_back(-v);
    }
    return out;
}

// Trial division by an int64-coefficient candidate; candidate is normalized
// to a positive leading coefficient first.
bool try_candidate(const UnivarPoly& prim, std::vector<long> cand, UnivarPoly* out) {
    if (cand.back() < 0)
        for (auto& c : cand) c = -c;
    std::vector<mpz_class> coeffs(cand.size());
    for (size_t i = 0; i < cand.size(); ++i) coeffs[i] = cand[i];
    UnivarPoly g(std::move(coeffs));
    if (g.content() != 1) return false;  // prim is primitive, so factors are too
    UnivarPoly q;
    if (!UnivarPoly::div_exact(prim, g, &q)) return false;
    *out = g;
    return true;
}

// Degree-2 Kronecker sweep over value tuples at points {0, 1, -1} with
// divisibility checks at +-2 before any trial division.  Caller guarantees
// the values fit comfortably in int64.
bool kronecker_deg2(const UnivarPoly& prim, UnivarPoly* out) {
    mpz_class p0 = prim.eval(mpz_class(0)), p1 = prim.eval(mpz_class(1)),
              pm1 = prim.eval(mpz_class(-1)), p2 = prim.eval(mpz_class(2)),
              pm2 = prim.eval(mpz_class(-2));
    long lc = prim.lc().fits_slong_p() ? prim.lc().get_si() : 0;
    long P2 = fits_fast(p2) ? p2.get_si() : 0;
    long Pm2 = fits_fast(pm2) ? pm2.get_si() : 0;

    auto d0 = divisors_of(p0);
    auto d1 = signed_divisors_ll(p1);
    auto dm1 = signed_divisors_ll(pm1);
    for (const auto& a_mpz : d0) {
        long a = a_mpz.get_si();
        for (long b : d1) {
            for (long c : dm1) {
                if ((b + c) % 2 != 0) continue;
                long c2 = (b + c) / 2 - a;
                if (c2 == 0) continue;
                if (lc != 0 && lc % c2 != 0) continue;
                long c1 = (b - c) / 2;
                long g2 = 4 * c2 + 2 * c1 + a;  // candidate value at 2
                if (g2 == 0 || (P2 != 0 && P2 % g2 != 0)) continue;
                long gm2 = 4 * c2 - 2 * c1 + a;
                if (gm2 == 0 || (Pm2 != 0 && Pm2 % gm2 != 0)) continue;
                if (try_candidate(prim, {a, c1, c2}, out)) return true;
            }
        }
    }
    return false;
}

// Degree-3 sweep over points {0, 1, -1, 2}, checks at -2 and 3.
bool kronecker_deg3(const UnivarPoly& prim, UnivarPoly* out) {
    mpz_class p0 = prim.eval(mpz_class(0)), p1 = prim.eval(mpz_class(1)),
              pm1 = prim.eval(mpz_class(-1)), p2 = prim.eval(mpz_class(2)),
              pm2 = prim.eval(mpz_class(-2)), p3 = prim.eval(mpz_class(3));
    long lc = prim.lc().fits_slong_p() ? prim.lc().get_si() : 0;
    long Pm2 = fits_fast(pm2) ? pm2.get_si() : 0;
    long P3 = fits_fast(p3) ? p3.get_si() : 0;

    auto d0 = divisors_of(p0);
    auto d1 = signed_divisors_ll(p1);
    auto dm1 = signed_divisors_ll(pm1);
    auto d2 = signed_divisors_ll(p2);
    for (const auto& a_mpz : d0) {
        long a = a_mpz.get_si();
        for (long b : d1) {
            for (long c : dm1) {
                if ((b + c) % 2 != 0) continue;
                long c2 = (b + c) / 2 - a;
                long bc_half = (b - c) / 2;
                for (long d : d2) {
                    long num = d + 3 * a - 3 * b - c;
                    if (num % 6 != 0) continue;
                    long c3 = num / 6;
                    if (c3 == 0) continue;
                    if (lc != 0 && lc % c3 != 0) continue;
                    long c1 = bc_half - c3;
                    long gm2 = -8 * c3 + 4 * c2 - 2 * c1 + a;
                    if (gm2 == 0 || (Pm2 != 0 && Pm2 % gm2 != 0)) continue;
                    long g3 = 27 * c3 + 9 * c2 + 3 * c1 + a;
                    if (g3 == 0 || (P3 != 0 && P3 % g3 != 0)) continue;
                    if (try_candidate(prim, {a, c1, c2, c3}, out)) return true;
                }
            }
        }
    }
    return false;
}

// Generic degree-k sweep: Lagrange interpolation over the first k+1 sample
// points, exact rational arithmetic throughout.  Slow but complete; only
// reached beyond the fast degree-2/3 paths.
bool kronecker_generic(const UnivarPoly& prim, int k, UnivarPoly* out) {
    std::vector<mpz_class> pts;
    for (int i = 0; static_cast<int>(pts.size()) < k + 1; ++i) {
        if (i == 0)
            pts.emplace_back(0);
        else {
            pts.emplace_back(i);
            if (static_cast<int>(pts.size()) < k + 1) pts.emplace_back(-i);
        }
    }
    std::vector<mpz_class> vals;
    vals.reserve(pts.size());
    for (const auto& x : pts) vals.push_back(prim.eval(x));

    // Lagrange basis polynomials over Q
    std::vector<RatPoly> basis;
    for (size_t i = 0; i < pts.size(); ++i) {
        RatPoly li = RatPoly::constant(1);
        for (size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            RatPoly lin(std::vector<mpq_class>{mpq_class(-pts[j]), mpq_class(1)});
            li = li * lin * mpq_class(mpz_class(1), pts[i] - pts[j]);
        }
        basis.push_back(li);
    }

    std::vector<std::vector<mpz_class>> divs(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        for (const auto& d : divisors_of(vals[i])) {
            divs[i].push_back(d);
            if (i > 0) divs[i].push_back(-d);  // sign fixed at the first point
        }
    }

    std::vector<size_t> idx(pts.size(), 0);
    std::vector<mpz_class> tuple(pts.size());
    for (;;) {
        for (size_t i = 0; i < pts.size(); ++i) tuple[i] = divs[i][idx[i]];
        RatPoly cand;
        for (size_t i = 0; i < pts.size(); ++i) cand = cand + basis[i] * mpq_class(tuple[i]);
        bool integral = true;
        for (const auto& c : cand.coeffs)
            if (c.get_den() != 1) {
                integral = false;
                break;
            }
        if (integral && cand.degree() == k) {
            std::vector<mpz_class> ic(cand.coeffs.size());
            for (size_t i = 0; i < cand.coeffs.size(); ++i) ic[i] = cand.coeffs[i].get_num();
            UnivarPoly g(std::move(ic));
            if (g.lc() < 0) g = -g;
            mpz_class rem = prim.lc() % g.lc();
            if (rem == 0 && g.content() == 1) {
                UnivarPoly q;
                if (UnivarPoly::div_exact(prim, g, &q)) {
                    *out = g;
                    return true;
                }
            }
        }
        size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == divs[pos].size()) idx[pos++] = 0;
        if (pos == idx.size()) return false;
    }
}

bool kronecker_find_factor(const UnivarPoly& prim, int k, UnivarPoly* out) {
    if (k == 2 || k == 3) {
        bool small = fits_fast(prim.eval(mpz_class(0))) && fits_fast(prim.eval(mpz_class(1))) &&
                     fits_fast(prim.eval(mpz_class(-1))) &&
                     (k == 2 || fits_fast(prim.eval(mpz_class(2))));
        if (small) return k == 2 ? kronecker_deg2(prim, out) : kronecker_deg3(prim, out);
    }
    return kronecker_generic(prim, k, out);
}

}  // namespace

// ---------------------------------------------------------------- factor_univariate

UnivarFactorization factor_univariate(const UnivarPoly& p) {
    if (p.is_zero()) throw parameter_error("cannot factor the zero polynomial");
    UnivarFactorization out;
    out.content = p.content();
    if (p.lc() < 0) out.content = -out.content;
    UnivarPoly prim = p.primitive_part();
    if (prim.degree() < 1) return out;

    // powers of x
    size_t v = 0;
    while (prim.coeffs[v] == 0) ++v;
    if (v > 0) {
        for (size_t i = 0; i < v; ++i) out.factors.push_back(UnivarPoly::monomial(1, 1));
        prim.coeffs.erase(prim.coeffs.begin(), prim.coeffs.begin() + static_cast<long>(v));
    }

    extract_linear_factors(prim, out.factors);

    // After root extraction prim has no rational roots, so its values at
    // integer points are nonzero and Kronecker stages apply directly.
    for (int k = 2; 2 * k <= prim.degree();) {
        UnivarPoly g;
        if (kronecker_find_factor(prim, k, &g)) {
            out.factors.push_back(g);
            UnivarPoly q;
            if (!UnivarPoly::div_exact(prim, g, &q))
                throw std::logic_error("found factor does not divide");
            prim = q;
        } else {
            ++k;
        }
    }
    if (prim.degree() >= 1) out.factors.push_back(prim);

    std::sort(out.factors.begin(), out.factors.end(),
              [](const UnivarPoly& a, const UnivarPoly& b) {
                  if (a.degree() != b.degree()) return a.degree() < b.degree();
                  for (int i = a.degree(); i >= 0; --i)
                      if (a.at(i) != b.at(i)) return a.at(i) < b.at(i);
                  return false;
              });
    return out;
}

bool is_reducible_over_z(const UnivarFactorization& f, const UnivarPoly& p) {
    if (p.is_zero()) throw parameter_error("reducibility of the zero polynomial is undefined");
    mpz_class c = abs(f.content);
    if (p.degree() < 1) {
        // constants: composite (or zero) means reducible in the ring sense
        if (c <= 1) return false;
        return mpz_probab_prime_p(c.get_mpz_t(), 40) == 0;
    }
    return f.factors.size() >= 2 || c != 1;
}

// ---------------------------------------------------------------- bivariate

namespace {

// Q[t][y]: ycoeffs[i] is the rational t-polynomial coefficient of y^i.
struct QB {
    std::vector<RatPoly> ycoeffs;

    void normalize() {
        while (!ycoeffs.empty() && ycoeffs.back().is_zero()) ycoeffs.pop_back();
    }
    bool is_zero() const { return ycoeffs.empty(); }
    int ydeg() const { return static_cast<int>(ycoeffs.size()) - 1; }

    static QB from_bivar(const BivarPoly& f) {
        QB q;
        q.ycoeffs.reserve(f.tcoeffs.size());
        for (const auto& c : f.tcoeffs) q.ycoeffs.emplace_back(c);
        return q;
    }
};

// Long division in y by a monic divisor; true iff the remainder vanishes.
bool qb_divide_monic(const QB& a, const QB& b, QB* quotient) {
    std::vector<RatPoly> rem = a.ycoeffs;
    int db = b.ydeg();
    auto deg = [&]() {
        int d = static_cast<int>(rem.size()) - 1;
        while (d >= 0 && rem[static_cast<size_t>(d)].is_zero()) --d;
        return d;
    };
    std::vector<RatPoly> q;
    int da = deg();
    if (da >= db) q.assign(static_cast<size_t>(da - db) + 1, RatPoly{});
    while (deg() >= db) {
        int d = deg();
        RatPoly step = rem[static_cast<size_t>(d)];
        q[static_cast<size_t>(d - db)] = step;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(d - db + i)] =
                rem[static_cast<size_t>(d - db + i)] - step * b.ycoeffs[static_cast<size_t>(i)];
    }
    for (const auto& c : rem)
        if (!c.is_zero()) return false;
    if (quotient) {
        quotient->ycoeffs = std::move(q);
        quotient->normalize();
    }
    return true;
}

// Clear denominators and take the integer primitive part.
BivarPoly qb_to_primitive_bivar(const QB& q) {
    mpz_class den_lcm = 1;
    for (const auto& yc : q.ycoeffs)
        for (const auto& c : yc.coeffs)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<UnivarPoly> tc;
    tc.reserve(q.ycoeffs.size());
    for (const auto& yc : q.ycoeffs) {
        std::vector<mpz_class> ic(yc.coeffs.size());
        for (size_t i = 0; i < yc.coeffs.size(); ++i) {
            mpq_class scaled = yc.coeffs[i] * mpq_class(den_lcm);
            ic[i] = scaled.get_num();
        }
        tc.emplace_back(std::move(ic));
    }
    BivarPoly z(std::move(tc));
    return z.is_zero() ? z : z.primitive_part();
}

// Taylor expansion of g(y, T + tau0) in T: result[j] is the Q[y] coefficient
// of T^j (a RatPoly whose variable is y).
std::vector<RatPoly> taylor_in_t(const BivarPoly& g, const mpz_class& tau0, int order) {
    std::vector<RatPoly> out(static_cast<size_t>(order));
    for (size_t j = 0; j < out.size(); ++j)
        out[j].coeffs.assign(g.tcoeffs.size(), mpq_class(0));
    for (size_t i = 0; i < g.tcoeffs.size(); ++i) {
        const UnivarPoly& c = g.tcoeffs[i];
        for (int d = 0; d <= c.degree(); ++d) {
            mpz_class cd = c.at(d);
            if (cd == 0) continue;
            // c_d * (T + tau0)^d contributes c_d * C(d,j) * tau0^(d-j) to T^j
            for (int j = 0; j <= d && j < order; ++j) {
                mpz_class bin;
                mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(d),
                             static_cast<unsigned long>(j));
                mpz_class pw;
                mpz_pow_ui(pw.get_mpz_t(), tau0.get_mpz_t(), static_cast<unsigned long>(d - j));
                out[static_cast<size_t>(j)].coeffs[i] += mpq_class(cd * bin * pw);
            }
        }
    }
    for (auto& r : out) r.normalize();
    return out;
}

// Monic linear Hensel lift of gt = G0 * H0 from t = tau0 to order L in
// powers of (t - tau0); returns the lifted candidate as a Q[t][y] poly.
QB hensel_candidate(const BivarPoly& gt, const mpz_class& tau0, const UnivarPoly& g0,
                    const UnivarPoly& h0, int L) {
    RatPoly G0(g0), H0(h0);
    RatPoly s, r;
    RatPoly g = RatPoly::extgcd(G0, H0, &s, &r);  // s*G0 + r*H0 = 1
    if (g.degree() != 0) throw std::logic_error("anchor factors are not coprime");

    auto fT = taylor_in_t(gt, tau0, L);
    std::vector<RatPoly> gv(static_cast<size_t>(L)), hv(static_cast<size_t>(L));
    gv[0] = G0;
    hv[0] = H0;
    for (int K = 1; K < L; ++K) {
        RatPoly e = (static_cast<size_t>(K) < fT.size()) ? fT[static_cast<size_t>(K)] : RatPoly{};
        for (int j = 0; j <= K; ++j)
            e = e - gv[static_cast<size_t>(j)] * hv[static_cast<size_t>(K - j)];
        if (e.is_zero()) continue;
        RatPoly a, q, rem;
        RatPoly::divmod(r * e, G0, &q, &a);
        RatPoly b;
        RatPoly::divmod(e - a * H0, G0, &b, &rem);
        if (!rem.is_zero()) throw std::logic_error("hensel correction not divisible");
        gv[static_cast<size_t>(K)] = a;
        hv[static_cast<size_t>(K)] = b;
    }

    // re-expand in t: candidate y-coeff i = sum_j gv[j][i] * (t - tau0)^j
    QB cand;
    cand.ycoeffs.assign(static_cast<size_t>(g0.degree()) + 1, RatPoly{});
    RatPoly powT = RatPoly::constant(1);
    RatPoly lin(std::vector<mpq_class>{mpq_class(-tau0), mpq_class(1)});
    for (int j = 0; j < L; ++j) {
        for (int i = 0; i <= g0.degree(); ++i)
            cand.ycoeffs[static_cast<size_t>(i)] =
                cand.ycoeffs[static_cast<size_t>(i)] + powT * gv[static_cast<size_t>(j)].at(i);
        powT = powT * lin;
    }
    cand.normalize();
    return cand;
}

BivariateIrreducibility reducible_with(const BivarPoly& g, const BivarPoly& h,
                                       const BivarPoly& f) {
    if (!(g * h == f)) throw std::logic_error("witness pair does not multiply back to f");
    BivariateIrreducibility out;
    out.irreducible = false;
    out.witness = {g, h};
    return out;
}

}  // namespace

BivariateIrreducibility bivariate_irreducible(const BivarPoly& f, int max_total_degree) {
    if (f.is_zero()) throw parameter_error("irreducibility of the zero polynomial is undefined");
    if (f.total_degree() > max_total_degree)
        throw capability_error("total degree beyond the supported bound");

    BivariateIrreducibility irr;
    irr.irreducible = true;

    // integer content
    mpz_class ic = f.int_content();
    if (f.lead().lc() < 0) ic = -ic;
    if (abs(ic) != 1) {
        BivarPoly rest;
        BivarPoly::div_exact(f, BivarPoly::from_univar_t(UnivarPoly::constant(ic)), &rest);
        return reducible_with(BivarPoly::from_univar_t(UnivarPoly::constant(ic)), rest, f);
    }

    // constant +-1
    if (f.xdeg() == 0 && f.tcoeffs[0].degree() < 1) return irr;  // a unit

    // t-only content
    UnivarPoly tc = f.t_content();
    if (tc.degree() >= 1) {
        BivarPoly tcb = BivarPoly::from_univar_t(tc);
        BivarPoly rest;
        BivarPoly::div_exact(f, tcb, &rest);
        return reducible_with(tcb, rest, f);
    }

    // pure t polynomial (primitive): univariate factorization in t
    if (f.xdeg() == 0) {
        auto fac = factor_univariate(f.tcoeffs[0]);
        if (fac.factors.size() >= 2) {
            BivarPoly g = BivarPoly::from_univar_t(fac.factors[0]) * fac.content;
            BivarPoly rest;
            BivarPoly::div_exact(f, g, &rest);
            return reducible_with(g, rest, f);
        }
        return irr;
    }

    // pure x polynomial (primitive)
    if (f.tdeg() == 0) {
        std::vector<mpz_class> xc;
        for (const auto& c : f.tcoeffs) xc.push_back(c.at(0));
        auto fac = factor_univariate(UnivarPoly(std::move(xc)));
        if (fac.factors.size() >= 2) {
            BivarPoly g = BivarPoly::from_univar_x(fac.factors[0]) * fac.content;
            BivarPoly rest;
            BivarPoly::div_exact(f, g, &rest);
            return reducible_with(g, rest, f);
        }
        return irr;
    }

    // repeated factors: gcd with the x-derivative
    BivarPoly d = BivarPoly::gcd_x(f, f.derivative_x());
    if (d.xdeg() >= 1) {
        BivarPoly rest;
        if (!BivarPoly::div_exact(f, d, &rest))
            throw std::logic_error("squarefree gcd does not divide");
        return reducible_with(d, rest, f);
    }

    // monic model: factor shapes are then subsets of the anchor's factors
    int n = f.xdeg();
    bool already_monic = (f.lead().degree() == 0 && f.lead().at(0) == 1);
    BivarPoly gt = already_monic ? f : monic_transform(f);

    // anchor with squarefree specialization
    std::optional<mpz_class> anchor;
    for (long i = 0; i <= 250 && !anchor; ++i) {
        for (long s : {i, -i}) {
            mpz_class tau0(s);
            UnivarPoly u = specialize(gt, tau0);
            if (UnivarPoly::gcd(u, u.derivative()).degree() == 0) {
                anchor = tau0;
                break;
            }
        }
    }
    if (!anchor) throw std::logic_error("no squarefree specialization found");
    UnivarPoly u = specialize(gt, *anchor);
    auto ufac = factor_univariate(u);
    if (ufac.factors.size() <= 1) return irr;  // specialization already irreducible

    int L = n * gt.tdeg() + 1;
    size_t nf = ufac.factors.size();
    for (uint32_t mask = 0; mask < (1u << (nf - 1)); ++mask) {
        // subsets always containing factor 0; one side of any true split does
        UnivarPoly g0 = ufac.factors[0];
        for (size_t i = 1; i < nf; ++i)
            if (mask & (1u << (i - 1))) g0 = g0 * ufac.factors[i];
        if (g0.degree() < 1 || g0.degree() >= n) continue;
        UnivarPoly h0;
        if (!UnivarPoly::div_exact(u, g0, &h0)) throw std::logic_error("anchor split failed");

        QB cand = hensel_candidate(gt, *anchor, g0, h0, L);
        QB quotient;
        if (!qb_divide_monic(QB::from_bivar(gt), cand, &quotient)) continue;

        // map back through y = T(t) x when we factored the monic model
        BivarPoly gi, hi;
        if (already_monic) {
            gi = qb_to_primitive_bivar(cand);
            hi = qb_to_primitive_bivar(quotient);
        } else {
            const UnivarPoly& T = f.lead();
            auto substitute = [&](const QB& q) {
                QB s;
                s.ycoeffs.assign(q.ycoeffs.size(), RatPoly{});
                UnivarPoly tp = UnivarPoly::constant(1);
                for (size_t i = 0; i < q.ycoeffs.size(); ++i) {
                    s.ycoeffs[i] = q.ycoeffs[i] * RatPoly(tp);
                    tp = tp * T;
                }
                return qb_to_primitive_bivar(s);
            };
            gi = substitute(cand);
            hi = substitute(quotient);
        }
        BivarPoly prod = gi * hi;
        if (prod == -f) gi = -gi, prod = -prod;
        if (!(prod == f)) throw std::logic_error("mapped factors do not multiply back to f");
        return reducible_with(gi, hi, f);
    }
    return irr;
}

// ---------------------------------------------------------------- scans

ScanReport scan_specializations(const BivarPoly& f, int64_t N) {
    if (!f.depends_on_x())
        throw precondition_error("specialization scan needs a polynomial that depends on x");
    if (N < 1) throw parameter_error("need N >= 1");

    ScanReport rep;
    rep.family = f;
    rep.N = N;
    int64_t nondegenerate = 0;
    std::vector<char> is_irre(static_cast<size_t>(2 * N + 1), 0);  // index t1 + N

    for (int64_t t1 = -N; t1 <= N; ++t1) {
        UnivarPoly spec = specialize(f, mpz_class(t1));
        if (spec.degree() < f.xdeg()) {
            rep.degenerate_points.push_back(t1);
            continue;
        }
        ++nondegenerate;
        auto fac = factor_univariate(spec);
        if (is_reducible_over_z(fac, spec))
            rep.reducible_points.push_back(t1);
        else
            is_irre[static_cast<size_t>(t1 + N)] = 1;
    }
    rep.density = static_cast<double>(rep.reducible_points.size()) /
                  static_cast<double>(2 * N + 1);
    rep.envelope = std::sqrt(static_cast<double>(N)) * std::log(static_cast<double>(N));
    rep.everywhere_reducible =
        nondegenerate > 0 &&
        static_cast<int64_t>(rep.reducible_points.size()) == nondegenerate;
    int64_t run = 0;
    for (int64_t t1 = N; t1 >= -N; --t1) {
        if (is_irre[static_cast<size_t>(t1 + N)]) break;
        ++run;
    }
    rep.longest_reducible_suffix = run;
    return rep;
}

}  // namespace hilab
