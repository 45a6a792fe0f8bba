#ifndef BANFFKIT_LEVI_HPP
#define BANFFKIT_LEVI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "banffkit/designs.hpp"

namespace banffkit {

// Bipartite point-block incidence graph. Point vertices are the design
// points; block vertices are indexed by block position.
struct LeviGraph {
    std::uint64_t points = 0;
    std::vector<Block> blocks;

    std::uint64_t edges() const {
        std::uint64_t m = 0;
        for (const auto& b : blocks) m += b.size();
        return m;
    }
};

struct Coloring {
    std::vector<std::uint32_t> point_colors;
    std::vector<std::uint32_t> block_colors;
    std::uint32_t palette = 0;
};

struct HarmoniousReport {
    bool ok = false;
    std::vector<std::string> proper_violations;
    std::vector<std::string> pair_violations;
    std::uint32_t colors_used = 0;
};

LeviGraph build_levi(const Design& d);

HarmoniousReport verify_harmonious(const LeviGraph& g, const Coloring& c);

// True iff the (already harmonious) coloring uses every pair of its colors
// on exactly one edge.
bool is_exact(const LeviGraph& g, const Coloring& c);

// Point g colored g, block B_i + t colored t; requires a Banff family.
Coloring canonical_banff_coloring(const DifferenceFamily& f);

struct SearchBudget {
    std::uint64_t max_nodes = 1ull << 62;
    double max_seconds = 0;  // 0 = no wall-clock limit
};

struct ChromaticResult {
    bool exact = false;            // search completed with a certified value
    std::uint32_t h = 0;           // certified value when exact
    std::uint32_t lower = 0;       // best lower bound (always valid)
    std::uint32_t upper = 0;       // best found upper bound; 0 = none
    std::optional<Coloring> witness;
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;
};

// Exact harmonious chromatic number by branch and bound with point colors
// fixed to the points, palette sizes tried in increasing order, pair-usage
// pruning and canonical introduction of extra colors.
ChromaticResult harmonious_number_search(const LeviGraph& g, std::uint32_t h_max,
                                         const SearchBudget& budget = {});

}  // namespace banffkit

#endif
