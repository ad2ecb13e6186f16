// caps.hpp -- search budgets shared by every exhaustive computation
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lbt {

// Thrown when a configured cap would be exceeded. A capped computation never
// returns a partial answer; callers either propagate or report "capped".
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

struct SearchCaps {
    uint64_t max_nodes = 1'000'000;       // backtracking nodes per search
    uint32_t max_degree = 10;             // labels per coordinate in isotopy searches
    uint64_t max_group_elements = 20160;  // enumerated elements per permutation group
};

} // namespace lbt
