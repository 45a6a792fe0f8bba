#ifndef BANFFKIT_DIFFAM_HPP
#define BANFFKIT_DIFFAM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "banffkit/algebra.hpp"

namespace banffkit {

// A block is a sorted duplicate-free list of element indices.
using Block = std::vector<Elem>;

Block normalize_block(Block b);

struct DifferenceFamily {
    GroupPtr group;
    std::vector<Block> blocks;
    std::uint32_t lambda = 1;
};

// Multiset of ordered differences x-y over distinct pairs within blocks,
// stored as per-element multiplicities.
struct DifferenceList {
    std::vector<std::uint64_t> multiplicity;  // indexed by element
    std::uint64_t total = 0;
};

struct DfReport {
    bool ok = false;
    std::uint32_t k = 0;
    std::uint32_t lambda = 0;
    std::vector<std::string> violations;
};

struct BanffReport {
    bool ok = false;
    std::vector<std::string> violations;
};

struct Design;  // designs.hpp

DifferenceList difference_list(const DifferenceFamily& f);
DfReport verify_df(const DifferenceFamily& f);
bool is_disjoint(const DifferenceFamily& f);
BanffReport is_banff_df(const DifferenceFamily& f);
DifferenceFamily translate(const DifferenceFamily& f, const std::vector<Elem>& ts);

// All translates of the base blocks, as a design on the group's elements.
// Throws on an invalid family unless force is set.
Design develop(const DifferenceFamily& f, bool force = false);

}  // namespace banffkit

#endif
