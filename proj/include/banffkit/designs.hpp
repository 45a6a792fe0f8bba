#ifndef BANFFKIT_DESIGNS_HPP
#define BANFFKIT_DESIGNS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "banffkit/diffam.hpp"

namespace banffkit {

struct Design {
    GroupPtr group;               // null for explicit point sets
    std::uint64_t points = 0;     // points are 0..points-1
    std::vector<Block> blocks;    // multiset
    std::vector<Block> base_blocks;  // non-empty when developed from bases
};

struct DesignReport {
    bool ok = false;
    std::uint64_t v = 0, k = 0, lambda = 0, b = 0, r = 0;
    std::vector<std::string> violations;
};

DesignReport verify_2design(const Design& d);

// Develops base blocks over Z_v.
Design cyclic_design(std::uint64_t v, std::vector<Block> base_blocks);

// Singer (q^2+q+1, q+1, 1) difference set in Z_{q^2+q+1}.
Block singer_difference_set(std::uint64_t q);

}  // namespace banffkit

#endif
