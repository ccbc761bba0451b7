#include "hilab/cube_search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <unordered_set>

namespace hilab {

namespace {

// Exponent cap for the exact bound formulas.  Beyond this the numbers stop
// being desk-scale objects (hundreds of megabytes of digits).
constexpr unsigned long kMaxExponent = 1'000'000;

mpz_class pow_checked(const mpz_class& base, const mpz_class& exp) {
    if (exp < 0) throw parameter_error("negative exponent in bound formula");
    if (!exp.fits_ulong_p() || exp.get_ui() > kMaxExponent)
        throw capability_error("bound value too large to evaluate exactly");
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
    return out;
}

}  // namespace

mpz_class recursive_cube_bound(int m, int c) {
    if (m < 1 || c < 1) throw parameter_error("need m >= 1 and c >= 1");
    mpz_class h = c + 1;
    for (int i = 2; i <= m; ++i) h = h * (1 + pow_checked(c, h));
    return h;
}

mpz_class fibonacci_cube_bound(int m, int c) {
    if (m < 1 || c < 1) throw parameter_error("need m >= 1 and c >= 1");
    mpz_class fib;
    mpz_fib_ui(fib.get_mpz_t(), static_cast<unsigned long>(2 * m));
    return pow_checked(c + 1, fib);
}

mpz_class gr_upper_bound(int m, int c) {
    if (m < 1 || c < 1) throw parameter_error("need m >= 1 and c >= 1");
    return pow_checked(2 * c, pow_checked(2, m - 1));
}

double gr_lower_bound(int m, int c, double epsilon) {
    if (m < 1 || c < 1) throw parameter_error("need m >= 1 and c >= 1");
    if (epsilon < 0.0 || epsilon >= 1.0) throw parameter_error("epsilon must be in [0, 1)");
    double exponent = (1.0 - epsilon) * (std::pow(2.0, m) - 1.0) / m;
    return std::pow(static_cast<double>(c), exponent);
}

mpz_class improved_upper_bound(int m, int c) {
    if (!(2 <= m && m <= c))
        throw precondition_error("improved bound h(1 + c(m-1)^h) only applies for 2 <= m <= c");
    mpz_class h = recursive_cube_bound(m - 1, c);
    return h * (1 + c * pow_checked(m - 1, h));
}

BoundReport bounds(int m, int c, double epsilon) {
    BoundReport r;
    r.m = m;
    r.c = c;
    r.epsilon = epsilon;
    r.recursive_upper = recursive_cube_bound(m, c);
    r.fibonacci_upper = fibonacci_cube_bound(m, c);
    r.gr_upper = gr_upper_bound(m, c);
    r.gr_lower = gr_lower_bound(m, c, epsilon);
    return r;
}

std::optional<std::pair<Cube, int>> find_cube_exhaustive(const Coloring& coloring, int m,
                                                         bool distinct_sums) {
    if (m < 1) throw parameter_error("cube dimension must be >= 1");
    return scan_for_mono_cube(coloring, m, distinct_sums);
}

// ---------------------------------------------------------------- constructive

namespace {

struct ConstructiveCtx {
    const Coloring& col;
    int c;
    AccessLog* log;

    int read(int64_t i) {
        if (log) log->record(i);
        return col.at(i);
    }

    // Finds a monochromatic m-cube inside [lo, lo + bound(m) - 1].
    std::pair<Cube, int> run(int64_t lo, int m) {
        if (m == 1) {
            // c+1 points force a color repeat.
            std::map<int, int64_t> first_seen;
            for (int64_t i = lo; i <= lo + c; ++i) {
                int g = read(i);
                auto [it, fresh] = first_seen.emplace(g, i);
                if (!fresh) return {Cube(it->second, {i - it->second}), g};
            }
            throw std::logic_error("pigeonhole failed in constructive base case");
        }
        mpz_class h_mpz = recursive_cube_bound(m - 1, c);
        if (!h_mpz.fits_slong_p())
            throw capability_error("constructive recursion block size exceeds 64 bits");
        int64_t h = h_mpz.get_si();
        mpz_class nblocks_mpz = 1 + pow_checked(c, h_mpz);
        if (!nblocks_mpz.fits_slong_p())
            throw capability_error("constructive recursion block count exceeds 64 bits");
        int64_t nblocks = nblocks_mpz.get_si();

        // Two of the 1 + c^h blocks repeat a color sequence.
        std::map<std::vector<int>, int64_t> seen;
        for (int64_t j = 0; j < nblocks; ++j) {
            std::vector<int> tuple(static_cast<size_t>(h));
            for (int64_t i = 0; i < h; ++i)
                tuple[static_cast<size_t>(i)] = read(lo + j * h + i);
            auto [it, fresh] = seen.emplace(std::move(tuple), j);
            if (!fresh) {
                int64_t j1 = it->second;
                auto [cube, color] = run(lo + j1 * h, m - 1);
                auto mus = cube.increments;
                mus.push_back((j - j1) * h);
                return {Cube(cube.base, std::move(mus)), color};
            }
        }
        throw std::logic_error("pigeonhole failed in constructive block step");
    }
};

}  // namespace

std::pair<Cube, int> find_cube_constructive(const Coloring& coloring, int m, int c,
                                            AccessLog* log) {
    if (m < 1) throw parameter_error("cube dimension must be >= 1");
    if (c < 1) throw parameter_error("color count must be >= 1");
    if (coloring.c > c) throw precondition_error("coloring declares more than c colors");
    mpz_class need = recursive_cube_bound(m, c);
    if (mpz_class(coloring.size()) < need)
        throw precondition_error("interval shorter than the recursive bound for (m, c)");
    ConstructiveCtx ctx{coloring, c, log};
    return ctx.run(coloring.lo, m);
}

// ---------------------------------------------------------------- exact numbers

namespace {

enum class DfsOutcome { found, none, budget };

struct DfsClock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    int64_t limit_ms;
    bool expired() const {
        auto dt = std::chrono::steady_clock::now() - start;
        return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count() > limit_ms;
    }
};

// Does coloring position `i` (1-based values col[1..i]) close a
// monochromatic m-cube whose maximum element is i?
bool closes_mono_cube(const std::vector<int>& col, int64_t i, int m, bool distinct_sums) {
    int target = col[static_cast<size_t>(i)];
    std::vector<int64_t> mus(static_cast<size_t>(m));
    // nondecreasing increments, total sum s, base = i - s >= 1
    std::function<bool(int, int64_t, int64_t)> gen = [&](int depth, int64_t min_mu,
                                                         int64_t sum) -> bool {
        if (depth == m) {
            int64_t beta = i - sum;
            // all 2^m subset sums must carry the target color
            int64_t n_subsets = int64_t{1} << m;
            std::vector<int64_t> elems;
            if (distinct_sums) elems.reserve(static_cast<size_t>(n_subsets));
            for (int64_t mask = 0; mask < n_subsets; ++mask) {
                int64_t x = beta;
                for (int b = 0; b < m; ++b)
                    if (mask & (int64_t{1} << b)) x += mus[static_cast<size_t>(b)];
                if (col[static_cast<size_t>(x)] != target) return false;
                if (distinct_sums) elems.push_back(x);
            }
            if (distinct_sums) {
                std::sort(elems.begin(), elems.end());
                if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) return false;
            }
            return true;
        }
        for (int64_t mu = min_mu; sum + mu <= i - 1; ++mu) {
            mus[static_cast<size_t>(depth)] = mu;
            if (gen(depth + 1, mu, sum + mu)) return true;
        }
        return false;
    };
    return gen(0, 1, 0);
}

struct AvoiderSearch {
    int m, c;
    bool distinct_sums;
    int64_t* nodes;
    const SearchBudget& budget;
    const DfsClock& clock;
    std::vector<int> col;  // 1-based

    // colors must first appear in increasing order (color symmetry)
    DfsOutcome dfs(int64_t i, int64_t L, int used) {
        if (i > L) return DfsOutcome::found;
        int max_color = std::min(c, used + 1);
        for (int g = 1; g <= max_color; ++g) {
            if (++*nodes > budget.max_nodes) return DfsOutcome::budget;
            if ((*nodes & 0x3fff) == 0 && clock.expired()) return DfsOutcome::budget;
            col[static_cast<size_t>(i)] = g;
            if (!closes_mono_cube(col, i, m, distinct_sums)) {
                DfsOutcome sub = dfs(i + 1, L, std::max(used, g));
                if (sub != DfsOutcome::none) return sub;
            }
        }
        col[static_cast<size_t>(i)] = 0;
        return DfsOutcome::none;
    }
};

Certificate make_avoiding_cube_cert(const Coloring& col, int m, bool distinct_sums) {
    AvoidingPayload av;
    av.target.kind = AvoidTarget::Kind::cube;
    av.target.m = m;
    av.target.distinct_sums = distinct_sums;
    av.coloring = col;
    Certificate cert;
    cert.kind = CertKind::avoiding_coloring;
    cert.payload = av;
    return cert;
}

}  // namespace

ExactNumberResult hilbert_number_exact(int m, int c, const SearchBudget& budget,
                                       bool distinct_sums) {
    if (m < 1 || c < 1) throw parameter_error("need m >= 1 and c >= 1");
    DfsClock clock{.limit_ms = budget.max_millis};
    ExactNumberResult res;
    std::optional<Coloring> best_avoider;

    for (int64_t L = 1;; ++L) {
        AvoiderSearch search{m, c, distinct_sums, &res.nodes, budget, clock, {}};
        search.col.assign(static_cast<size_t>(L) + 1, 0);
        DfsOutcome out = search.dfs(1, L, 0);
        if (out == DfsOutcome::found) {
            std::vector<int> colors(search.col.begin() + 1, search.col.end());
            best_avoider = Coloring(1, c, std::move(colors));
            res.value = L + 1;  // H >= L+1: length L still admits an avoider
        } else if (out == DfsOutcome::none) {
            res.value = L;
            res.exact = true;
            break;
        } else {
            res.budget_exhausted = true;
            break;
        }
    }
    if (best_avoider) res.avoiding = make_avoiding_cube_cert(*best_avoider, m, distinct_sums);
    return res;
}

// ---------------------------------------------------------------- cubes in sets

LargestCubeResult largest_cube_in_set(const std::vector<int64_t>& set) {
    if (set.empty()) throw parameter_error("largest_cube_in_set needs a nonempty set");
    std::vector<int64_t> a = set;
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::unordered_set<int64_t> members(a.begin(), a.end());

    LargestCubeResult best;

    // Grow cubes one increment at a time; a new increment must shift the
    // whole current element set into A, disjointly (distinct subset sums).
    std::function<void(const std::vector<int64_t>&, std::vector<int64_t>&, int64_t)> grow =
        [&](const std::vector<int64_t>& elems, std::vector<int64_t>& mus, int64_t min_mu) {
            if (!mus.empty() && static_cast<int>(mus.size()) > best.m) {
                best.m = static_cast<int>(mus.size());
                best.cube = Cube(elems.front(), mus);
            }
            // each further dimension doubles the element count
            int head = 0;
            while (elems.size() << (head + 1) <= members.size()) ++head;
            if (static_cast<int>(mus.size()) + head <= best.m) return;

            int64_t max_mu = a.back() - elems.back();
            for (int64_t mu = min_mu; mu <= max_mu; ++mu) {
                bool ok = true;
                for (int64_t e : elems) {
                    if (!members.count(e + mu) ||
                        std::binary_search(elems.begin(), elems.end(), e + mu)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                std::vector<int64_t> next = elems;
                for (int64_t e : elems) next.push_back(e + mu);
                std::sort(next.begin(), next.end());
                mus.push_back(mu);
                grow(next, mus, mu);
                mus.pop_back();
            }
        };

    std::vector<int64_t> mus;
    for (int64_t beta : a) {
        std::vector<int64_t> seed{beta};
        grow(seed, mus, 1);
    }
    return best;
}

}  // namespace hilab
