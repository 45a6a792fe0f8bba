#ifndef BANFFKIT_CONSTRUCTIONS_HPP
#define BANFFKIT_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "banffkit/designs.hpp"
#include "banffkit/levi.hpp"

namespace banffkit {

// Thrown when a search runs out of its node/time budget (CLI exit code 3).
struct budget_exhausted_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BanffSetReport {
    std::uint64_t q = 0;
    std::uint32_t k = 0;
    Block set;
    std::uint64_t e = 0;
    bool cond1_ok = false;  // pair differences represent every coset once
    bool cond2_ok = false;  // elements lie in pairwise distinct cosets
    bool ok = false;
    std::vector<std::uint64_t> half_difference_classes;  // in pair order
};

BanffSetReport banff_set_check(const GroupPtr& field, std::uint32_t k,
                               const Block& set);

// F = { sB : s in half_representatives(C^{k(k-1)/2}) }.
DifferenceFamily wilson_expand(const GroupPtr& field, std::uint32_t k,
                               const Block& set);

enum class BanffSetMode { Power, Iterative, Exhaustive };

std::optional<Block> search_banff_set(const GroupPtr& field, std::uint32_t k,
                                      BanffSetMode mode, unsigned jobs = 1);

std::optional<std::vector<Elem>> search_translates(
    const DifferenceFamily& f, const SearchBudget& budget = {});

// Singer set minus a midpoint-avoiding translate.
Block plane_banff_difference_set(std::uint64_t q);

// Radical (q,k,1) difference family, k odd; blocks are cosets of the k-th
// roots of unity.
std::optional<DifferenceFamily> radical_df(const GroupPtr& field,
                                           std::uint32_t k);

struct RadicalK5Report {
    std::uint64_t q = 0;
    unsigned two_adic_e = 0;       // 2-adic valuation of (q-1)/20
    Elem root_first = 0;           // canonical-first square root of 5
    Elem root_second = 0;
    bool first_admissible = false;   // (1+root)/2 not a 2^(e+1)-th power
    bool second_admissible = false;  // always agrees with first (see docs)
    bool admissible = false;
};

RadicalK5Report radical_k5_admissible(std::uint64_t q);

// Banff (v,k,(k-1)/2) family from a fixed-point-free order-k multiplier
// action on a product of fields, k odd, every maximal prime power factor
// of v congruent to 1 mod 2k.
DifferenceFamily fpf_banff_df(std::uint64_t v, std::uint32_t k);

struct Nesting {
    Design sts;
    std::vector<Elem> map;  // point added to each block, by block index
};

struct NestingReport {
    bool ok = false;
    std::vector<std::string> violations;
};

NestingReport verify_nesting(const Nesting& n);
Nesting coloring_to_nesting(const Design& d, const Coloring& c);
Coloring nesting_to_coloring(const Nesting& n);

// Complete backtracking search for a nesting; tries a translation-equivariant
// assignment first when the design carries cyclic base-block structure.
std::optional<Nesting> search_nesting(const Design& d,
                                      const SearchBudget& budget = {});

}  // namespace banffkit

#endif
