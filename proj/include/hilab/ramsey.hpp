#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hilab/combinatorics.hpp"
#include "hilab/edge_coloring.hpp"
#include "hilab/search.hpp"

namespace hilab {

/// First monochromatic Schur triple x + y = z (x <= y) in the coloring,
/// which must start at 1.
std::optional<std::pair<TripleWitness, int>> schur_triple(const Coloring& coloring,
                                                          bool strict_distinct = false);

/// Least S such that every c-coloring of [1..S] has a monochromatic Schur
/// triple.
ExactNumberResult schur_number_exact(int c, const SearchBudget& budget = {},
                                     bool strict_distinct = false);

/// Outcome of the power-residue coset construction for x^n + y^n = z^n mod p.
struct SchurModPResult {
    bool found = false;
    int64_t x = 0, y = 0, z = 0;  // witness with x^n + y^n ≡ z^n (mod p)
    int cosets = 0;               // gcd(n, p-1) colors used
    std::vector<int64_t> coset_reps;
    Coloring coset_coloring;         // the coloring of [1..p-1] by coset index
    std::optional<TripleWitness> coset_triple;  // monochromatic triple found in it
};

/// Colors 1..p-1 by cosets of the n-th power subgroup, looks for a
/// monochromatic Schur triple, and divides out the coset representative.
/// `found == false` means the coloring avoided all triples (p below the
/// Schur threshold), not a failure of the method.
SchurModPResult schur_mod_p(int64_t n, int64_t p);

/// First monochromatic k-term arithmetic progression in the coloring.
std::optional<std::pair<ApWitness, int>> vdw_ap(const Coloring& coloring, int k);

/// Least W such that every c-coloring of [1..W] has a monochromatic k-AP.
ExactNumberResult vdw_number_exact(int k, int c, const SearchBudget& budget = {});

/// First monochromatic K_m in the edge coloring.
std::optional<std::pair<CliqueWitness, int>> ramsey_clique(const EdgeColoring& ec, int m);

struct RamseyNumberResult : ExactNumberResult {
    std::optional<mpz_class> binomial_upper;  // binom(2m-2, m-1), the c = 2 bound
};

/// Least R such that every c-coloring of the edges of K_R has a
/// monochromatic K_m.
RamseyNumberResult ramsey_number_exact(int m, int c, const SearchBudget& budget = {});

}  // namespace hilab
