#pragma once

#include <string>
#include <vector>

namespace macref {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // witness description on failure, empty otherwise
    double seconds = 0.0;
};

struct VerifyOptions {
    int max_size = 3;
    int trunc = 3;
    bool parallel = true;
};

const std::vector<std::string>& verify_suite_names();  // excludes "all"

// Runs a named suite ("plethysm", "macdonald", "specialization", "snorm",
// "hilbert" or "all"). Checks are independent and run concurrently; results
// are assembled in a fixed order.
std::vector<CheckResult> run_verify_suite(const std::string& suite, const VerifyOptions& opt);

} // namespace macref
