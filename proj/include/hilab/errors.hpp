#pragma once
#include <stdexcept>
#include <string>

namespace hilab {

// Error taxonomy shared by all modules.  Callers that want to distinguish
// classes catch the subtype; the CLI maps any of these to exit code 2.
struct parameter_error : std::runtime_error {
    explicit parameter_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed serialized data (certificate payloads, file formats).
struct format_error : std::runtime_error {
    explicit format_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input is valid but beyond the supported desk-scale bounds.
struct capability_error : std::runtime_error {
    explicit capability_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Series truncation too short to expose the quantity asked for.
struct truncation_error : std::runtime_error {
    explicit truncation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Sample set unusable for branch tracking / fitting (e.g. branch collision).
struct sample_set_error : std::runtime_error {
    explicit sample_set_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Out-of-domain access, e.g. cube element outside a coloring's interval.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hilab
