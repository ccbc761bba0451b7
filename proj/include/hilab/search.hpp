#pragma once
#include <cstdint>
#include <optional>

#include "hilab/certificate.hpp"

namespace hilab {

/// Explicit limits for exact-number searches, so results are reproducible.
struct SearchBudget {
    int64_t max_nodes = 10'000'000;
    int64_t max_millis = 60'000;
};

/// Outcome of an exact Ramsey-type number search.  When `exact` is false the
/// budget ran out and `value` is the best proven lower bound (an avoiding
/// coloring of length value-1 is attached as the certificate).
struct ExactNumberResult {
    int64_t value = 0;
    bool exact = false;
    int64_t nodes = 0;
    bool budget_exhausted = false;
    std::optional<Certificate> avoiding;
};

}  // namespace hilab
