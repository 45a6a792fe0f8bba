#ifndef BANFFKIT_BOUNDS_HPP
#define BANFFKIT_BOUNDS_HPP

#include <cstdint>

#include "banffkit/designs.hpp"

namespace banffkit {

// Least h with h(h-1) >= 2m, i.e. ceil(sqrt(2m + 1/4) + 1/2), in exact
// integer arithmetic. Returns at least 1.
std::uint64_t edge_bound(std::uint64_t m);

// ceil(r + (v+1)/2) with r = lambda(v-1)/(k-1); throws on non-integral r.
std::uint64_t replication_bound(std::uint64_t v, std::uint64_t k,
                                std::uint64_t lambda);

// lambda <= (k-1)/2 in exact halving.
bool banff_df_lambda_feasible(std::uint64_t k, std::uint64_t lambda);

struct WeilThreshold {
    std::uint64_t value = 0;
    bool exact = false;  // true only for the two published constants
};

WeilThreshold weil_threshold(std::uint64_t e, std::uint64_t k);

bool banff_sts_exists(std::uint64_t v);

struct BoundReport {
    std::uint64_t v = 0, k = 0, lambda = 0, b = 0, r = 0, m = 0;
    std::uint64_t point_bound = 0;
    std::uint64_t edge_bound = 0;
    std::uint64_t replication_bound = 0;
    std::uint64_t max_bound = 0;
    bool banff_df_feasible = false;
    WeilThreshold weil;
};

BoundReport bound_report(std::uint64_t v, std::uint64_t k, std::uint64_t lambda);
BoundReport bound_report(const Design& d);

}  // namespace banffkit

#endif
