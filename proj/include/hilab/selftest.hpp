#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hilab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the full acceptance suite.  Each criterion is independent; a failed
/// one records its reason in `detail` and does not stop the rest.
std::vector<CriterionResult> run_acceptance_suite(uint64_t seed, std::ostream* progress = nullptr);

}  // namespace hilab
