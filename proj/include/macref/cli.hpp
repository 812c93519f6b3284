#pragma once

#include <optional>
#include <string>
#include <vector>

#include "macref/partition.hpp"

namespace macref {

struct Config {
    std::optional<std::string> cache_dir;
    int max_degree = 6;
    int u_truncation = 4;
    std::optional<int> rank_n;
    std::optional<int> level_k;
    std::string output_format = "json";
};

// Runs one CLI invocation. argv excludes the program name. Returns the exit
// code: 0 success, 1 verification failure, 2 usage error.
int cli_run(const std::vector<std::string>& argv, std::string& out, std::string& err);

// "2,1" ↦ (2,1); "" ↦ ∅; throws macref::error on malformed input
Partition parse_partition(const std::string& s);

} // namespace macref
