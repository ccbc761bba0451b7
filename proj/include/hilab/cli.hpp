#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace hilab {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr uint64_t kDefaultSeed = 12345;

/// Everything needed to reproduce a run byte for byte: the argument list,
/// the seed actually used, and a digest of the structured output.
struct RunManifest {
    std::vector<std::string> argv;
    std::string version;
    uint64_t seed = kDefaultSeed;
    int64_t wall_ms = 0;
    std::string digest;

    std::string to_json() const;
    static RunManifest from_json_text(const std::string& text);
};

/// FNV-1a over the output bytes, the digest recorded in manifests.
std::string output_digest(const std::string& output);

struct DispatchResult {
    int exit_code = 0;     // 0 ok, 2 parameter/usage error, 3 budget exhausted
    std::string output;    // what goes to stdout
};

/// Runs one subcommand; argv excludes the program name.
DispatchResult dispatch(const std::vector<std::string>& argv);

}  // namespace hilab
