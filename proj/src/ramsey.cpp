#include "hilab/ramsey.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

namespace hilab {

namespace {

struct DfsClock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    int64_t limit_ms;
    bool expired() const {
        auto dt = std::chrono::steady_clock::now() - start;
        return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count() > limit_ms;
    }
};

enum class DfsOutcome { found, none, budget };

// Generic avoider search over interval colorings: `closes(col, i)` reports
// whether the structure closes at position i given colors col[1..i].
// Color symmetry is broken by requiring colors to first appear in
// increasing order along the interval.
template <typename ClosesFn>
DfsOutcome search_avoiding_coloring(int64_t L, int c, ClosesFn&& closes, int64_t* nodes,
                                    const SearchBudget& budget, const DfsClock& clock,
                                    std::vector<int>& col) {
    col.assign(static_cast<size_t>(L) + 1, 0);
    std::function<DfsOutcome(int64_t, int)> dfs = [&](int64_t i, int used) -> DfsOutcome {
        if (i > L) return DfsOutcome::found;
        int max_color = std::min(c, used + 1);
        for (int g = 1; g <= max_color; ++g) {
            if (++*nodes > budget.max_nodes) return DfsOutcome::budget;
            if ((*nodes & 0x3fff) == 0 && clock.expired()) return DfsOutcome::budget;
            col[static_cast<size_t>(i)] = g;
            if (!closes(col, i)) {
                DfsOutcome sub = dfs(i + 1, std::max(used, g));
                if (sub != DfsOutcome::none) return sub;
            }
        }
        col[static_cast<size_t>(i)] = 0;
        return DfsOutcome::none;
    };
    return dfs(1, 0);
}

template <typename ClosesFn, typename MakeCert>
ExactNumberResult exact_number_over_colorings(int c, ClosesFn&& closes, MakeCert&& make_cert,
                                              const SearchBudget& budget) {
    DfsClock clock{.limit_ms = budget.max_millis};
    ExactNumberResult res;
    std::optional<Coloring> best_avoider;
    std::vector<int> col;
    for (int64_t L = 1;; ++L) {
        DfsOutcome out = search_avoiding_coloring(L, c, closes, &res.nodes, budget, clock, col);
        if (out == DfsOutcome::found) {
            std::vector<int> colors(col.begin() + 1, col.end());
            best_avoider = Coloring(1, c, std::move(colors));
            res.value = L + 1;
        } else if (out == DfsOutcome::none) {
            res.value = L;
            res.exact = true;
            break;
        } else {
            res.budget_exhausted = true;
            break;
        }
    }
    if (best_avoider) res.avoiding = make_cert(*best_avoider);
    return res;
}

}  // namespace

// ---------------------------------------------------------------- Schur

std::optional<std::pair<TripleWitness, int>> schur_triple(const Coloring& coloring,
                                                          bool strict_distinct) {
    if (coloring.lo != 1) throw precondition_error("Schur scan expects an interval starting at 1");
    return scan_for_mono_schur(coloring, strict_distinct);
}

ExactNumberResult schur_number_exact(int c, const SearchBudget& budget, bool strict_distinct) {
    if (c < 1) throw parameter_error("need c >= 1");
    auto closes = [&](const std::vector<int>& col, int64_t i) {
        // triples x + y = i; any triple with z < i was rejected earlier
        int g = col[static_cast<size_t>(i)];
        for (int64_t x = 1; 2 * x <= i; ++x) {
            int64_t y = i - x;
            if (strict_distinct && x == y) continue;
            if (col[static_cast<size_t>(x)] == g && col[static_cast<size_t>(y)] == g) return true;
        }
        return false;
    };
    auto cert = [&](const Coloring& col) {
        AvoidingPayload av;
        av.target.kind = AvoidTarget::Kind::schur_triple;
        av.target.strict_distinct = strict_distinct;
        av.coloring = col;
        Certificate c2;
        c2.kind = CertKind::avoiding_coloring;
        c2.payload = av;
        return c2;
    };
    return exact_number_over_colorings(c, closes, cert, budget);
}

// ---------------------------------------------------------------- mod-p powers

namespace {

int64_t pow_mod(int64_t base, int64_t exp, int64_t mod) {
    int64_t acc = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) acc = static_cast<int64_t>((__int128)acc * base % mod);
        base = static_cast<int64_t>((__int128)base * base % mod);
        exp >>= 1;
    }
    return acc;
}

bool is_prime_i64(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

SchurModPResult schur_mod_p(int64_t n, int64_t p) {
    if (n < 1) throw parameter_error("need n >= 1");
    if (!is_prime_i64(p)) throw parameter_error("p must be prime");
    if (p < 3) throw parameter_error("need p >= 3");

    // H = { x^n mod p }, and a map from each n-th power residue back to a root.
    std::map<int64_t, int64_t> root_of;  // residue -> smallest x with x^n = residue
    for (int64_t x = 1; x < p; ++x) root_of.try_emplace(pow_mod(x, n, p), x);

    SchurModPResult res;
    // Color 1..p-1 by coset: scan for uncovered elements, each spawning a
    // coset d*H with representative d.
    std::vector<int> color_of(static_cast<size_t>(p), 0);
    for (int64_t d = 1; d < p; ++d) {
        if (color_of[static_cast<size_t>(d)] != 0) continue;
        res.coset_reps.push_back(d);
        int idx = static_cast<int>(res.coset_reps.size());
        for (const auto& [h, _] : root_of)
            color_of[static_cast<size_t>((__int128)d * h % p)] = idx;
    }
    res.cosets = static_cast<int>(res.coset_reps.size());

    std::vector<int> colors(color_of.begin() + 1, color_of.end());
    res.coset_coloring = Coloring(1, res.cosets, std::move(colors));

    auto triple = scan_for_mono_schur(res.coset_coloring, false);
    if (!triple) return res;  // below the Schur threshold for this coset count

    auto [t, color_idx] = *triple;
    res.coset_triple = t;
    int64_t d = res.coset_reps[static_cast<size_t>(color_idx - 1)];
    int64_t dinv = pow_mod(d, p - 2, p);
    auto unroot = [&](int64_t v) {
        auto it = root_of.find((__int128)v * dinv % p);
        if (it == root_of.end()) throw std::logic_error("coset member is not d times a power");
        return it->second;
    };
    res.x = unroot(t.x);
    res.y = unroot(t.y);
    res.z = unroot(t.z);
    res.found = true;
    if ((pow_mod(res.x, n, p) + pow_mod(res.y, n, p)) % p != pow_mod(res.z, n, p))
        throw std::logic_error("mod-p witness failed re-verification");
    return res;
}

// ---------------------------------------------------------------- van der Waerden

std::optional<std::pair<ApWitness, int>> vdw_ap(const Coloring& coloring, int k) {
    return scan_for_mono_ap(coloring, k);
}

ExactNumberResult vdw_number_exact(int k, int c, const SearchBudget& budget) {
    if (k < 2) throw parameter_error("need k >= 2");
    if (c < 1) throw parameter_error("need c >= 1");
    auto closes = [&](const std::vector<int>& col, int64_t i) {
        int g = col[static_cast<size_t>(i)];
        for (int64_t step = 1; i - static_cast<int64_t>(k - 1) * step >= 1; ++step) {
            bool mono = true;
            for (int j = 1; j < k; ++j)
                if (col[static_cast<size_t>(i - j * step)] != g) {
                    mono = false;
                    break;
                }
            if (mono) return true;
        }
        return false;
    };
    auto cert = [&](const Coloring& col) {
        AvoidingPayload av;
        av.target.kind = AvoidTarget::Kind::ap;
        av.target.m = k;
        av.coloring = col;
        Certificate c2;
        c2.kind = CertKind::avoiding_coloring;
        c2.payload = av;
        return c2;
    };
    return exact_number_over_colorings(c, closes, cert, budget);
}

// ---------------------------------------------------------------- Ramsey cliques

std::optional<std::pair<CliqueWitness, int>> ramsey_clique(const EdgeColoring& ec, int m) {
    if (m < 2) throw parameter_error("need m >= 2");
    return scan_for_mono_clique(ec, m);
}

namespace {

// Does edge (u,v) (just colored g) complete a monochromatic K_m using only
// edges that precede it in the (v,u) lexicographic order?
bool closes_mono_clique(const EdgeColoring& ec, int u, int v, int g, int m) {
    if (m == 2) return true;  // any edge is a monochromatic K_2
    std::vector<int> pool;
    for (int w = 1; w < u; ++w)
        if (ec.color(w, u) == g && ec.color(w, v) == g) pool.push_back(w);
    if (static_cast<int>(pool.size()) < m - 2) return false;
    std::vector<int> pick;
    std::function<bool(size_t)> choose = [&](size_t from) -> bool {
        if (static_cast<int>(pick.size()) == m - 2) return true;
        for (size_t i = from; i < pool.size(); ++i) {
            bool ok = true;
            for (int w : pick)
                if (ec.color(w, pool[i]) != g) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick.push_back(pool[i]);
            if (choose(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return choose(0);
}

DfsOutcome search_avoiding_edges(int r, int m, int c, int64_t* nodes, const SearchBudget& budget,
                                 const DfsClock& clock, EdgeColoring& ec) {
    ec = EdgeColoring(r, c);
    if (r < 2) return DfsOutcome::found;
    int total = ec.edge_count();
    // edge order: (1,2), (1,3), (2,3), (1,4), ...
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(total));
    for (int v = 2; v <= r; ++v)
        for (int u = 1; u < v; ++u) edges.emplace_back(u, v);

    // colors must first appear in increasing order along the edge sequence
    std::function<DfsOutcome(int, int)> dfs = [&](int e, int used) -> DfsOutcome {
        if (e == total) return DfsOutcome::found;
        auto [u, v] = edges[static_cast<size_t>(e)];
        int max_color = std::min(c, used + 1);
        for (int g = 1; g <= max_color; ++g) {
            if (++*nodes > budget.max_nodes) return DfsOutcome::budget;
            if ((*nodes & 0x3fff) == 0 && clock.expired()) return DfsOutcome::budget;
            ec.set_color(u, v, g);
            if (!closes_mono_clique(ec, u, v, g, m)) {
                DfsOutcome sub = dfs(e + 1, std::max(used, g));
                if (sub != DfsOutcome::none) return sub;
            }
        }
        ec.set_color(u, v, 0);
        return DfsOutcome::none;
    };
    return dfs(0, 0);
}

}  // namespace

RamseyNumberResult ramsey_number_exact(int m, int c, const SearchBudget& budget) {
    if (m < 2) throw parameter_error("need m >= 2");
    if (c < 1) throw parameter_error("need c >= 1");
    DfsClock clock{.limit_ms = budget.max_millis};
    RamseyNumberResult res;
    std::optional<EdgeColoring> best_avoider;

    for (int r = 1;; ++r) {
        EdgeColoring ec;
        DfsOutcome out = search_avoiding_edges(r, m, c, &res.nodes, budget, clock, ec);
        if (out == DfsOutcome::found) {
            best_avoider = ec;
            res.value = r + 1;
        } else if (out == DfsOutcome::none) {
            res.value = r;
            res.exact = true;
            break;
        } else {
            res.budget_exhausted = true;
            break;
        }
    }
    if (best_avoider) {
        AvoidingPayload av;
        av.target.kind = AvoidTarget::Kind::clique;
        av.target.m = m;
        av.edges = *best_avoider;
        Certificate cert;
        cert.kind = CertKind::avoiding_coloring;
        cert.payload = av;
        res.avoiding = cert;
    }
    if (c == 2) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(2 * m - 2),
                     static_cast<unsigned long>(m - 1));
        res.binomial_upper = b;
    }
    return res;
}

}  // namespace hilab
