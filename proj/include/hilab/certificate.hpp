#pragma once
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hilab/combinatorics.hpp"
#include "hilab/edge_coloring.hpp"

namespace hilab {

enum class CertKind { mono_cube, mono_triple, mono_ap, mono_clique, avoiding_coloring };

std::string cert_kind_name(CertKind k);
CertKind cert_kind_from_name(const std::string& name);

/// Schur triple witness: x + y = z with x <= y (x = y permitted unless the
/// strict-distinct convention is in force).
struct TripleWitness {
    int64_t x = 0, y = 0, z = 0;
};

/// Arithmetic progression start, start+step, ..., start+(length-1)*step.
struct ApWitness {
    int64_t start = 0, step = 0;
    int length = 0;
};

struct CliqueWitness {
    std::vector<int> vertices;
};

/// Which structure an avoiding coloring claims to be free of.
struct AvoidTarget {
    enum class Kind { cube, schur_triple, ap, clique };
    Kind kind = Kind::cube;
    int m = 1;                     // cube dimension / AP length / clique size
    bool distinct_sums = false;    // cube convention
    bool strict_distinct = false;  // Schur convention (forbid x = y)
};

struct AvoidingPayload {
    AvoidTarget target;
    std::optional<Coloring> coloring;   // interval structures
    std::optional<EdgeColoring> edges;  // clique structures
};

/// A machine-checkable witness: either a monochromatic structure (verified
/// against a coloring supplied in the context) or a structure-free coloring
/// carried in the payload itself.
struct Certificate {
    CertKind kind = CertKind::mono_cube;
    std::optional<int> color;
    std::variant<Cube, TripleWitness, ApWitness, CliqueWitness, AvoidingPayload> payload;

    std::string to_json() const;
    static Certificate from_json(const std::string& text);
};

/// Context a monochromatic-structure certificate is verified against.
struct VerifyContext {
    const Coloring* coloring = nullptr;
    const EdgeColoring* edges = nullptr;
};

/// True iff the witness literally exhibits the claimed structure; for
/// avoiding colorings, a full scan of the payload coloring finds nothing.
bool verify_certificate(const Certificate& cert, const VerifyContext& ctx);

// Full-scan structure finders.  These enumerate every candidate and are the
// verification route for avoiding colorings; searches elsewhere use their
// own incremental logic, so scan and search are independent paths.
std::optional<std::pair<Cube, int>> scan_for_mono_cube(const Coloring& col, int m,
                                                       bool distinct_sums = false);
std::optional<std::pair<TripleWitness, int>> scan_for_mono_schur(const Coloring& col,
                                                                 bool strict_distinct = false);
std::optional<std::pair<ApWitness, int>> scan_for_mono_ap(const Coloring& col, int k);
std::optional<std::pair<CliqueWitness, int>> scan_for_mono_clique(const EdgeColoring& ec, int m);

}  // namespace hilab
