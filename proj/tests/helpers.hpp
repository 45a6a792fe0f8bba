#ifndef BANFFKIT_TEST_HELPERS_HPP
#define BANFFKIT_TEST_HELPERS_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "banffkit/designs.hpp"
#include "banffkit/levi.hpp"

namespace testutil {

using namespace banffkit;

// The affine plane AG(2,3): the unique Steiner triple system on 9 points.
inline Design sts9() {
    Design d;
    d.points = 9;
    d.blocks = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6},
                {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {1, 5, 6},
                {2, 3, 7}, {0, 5, 7}, {1, 3, 8}, {2, 4, 6}};
    return d;
}

// Base blocks {0,a,b} over Z_v whose half-differences tile 1..(v-1)/2,
// found by backtracking; exists for every v ≡ 1 or 3 (mod 6).
inline std::optional<std::vector<Block>> cyclic_sts_bases(std::uint64_t v) {
    if (v % 6 != 1 && v % 6 != 3) return std::nullopt;
    const std::uint64_t half = (v - 1) / 2;
    auto norm = [&](std::uint64_t d) { return std::min(d % v, v - d % v); };
    std::vector<char> used(half + 1, 0);
    std::vector<Block> bases;
    std::function<bool()> dfs = [&]() -> bool {
        std::uint64_t a = 1;
        while (a <= half && used[a]) ++a;
        if (a > half) return true;
        for (std::uint64_t b = a + 1; b < v; ++b) {
            std::uint64_t d1 = norm(b - a), d2 = norm(b);
            if (d1 == a || d2 == a || d1 == d2) continue;
            if (used[d1] || used[d2]) continue;
            used[a] = used[d1] = used[d2] = 1;
            bases.push_back({0, static_cast<Elem>(a), static_cast<Elem>(b)});
            if (dfs()) return true;
            bases.pop_back();
            used[a] = used[d1] = used[d2] = 0;
        }
        return false;
    };
    if (!dfs()) return std::nullopt;
    return bases;
}

// Independent harmonious check used to cross-validate the solver on tiny
// instances: point colors fixed to the identity (valid for 2-designs with
// lambda >= 1), all h^b block assignments tried.
inline bool brute_force_harmonious(const LeviGraph& g, std::uint32_t h) {
    const std::uint32_t v = static_cast<std::uint32_t>(g.points);
    const std::size_t b = g.blocks.size();
    if (h < v) return false;
    std::vector<std::uint32_t> bc(b, 0);
    for (;;) {
        Coloring c;
        c.palette = h;
        c.point_colors.resize(v);
        for (std::uint32_t p = 0; p < v; ++p) c.point_colors[p] = p;
        c.block_colors = bc;
        if (verify_harmonious(g, c).ok) return true;
        std::size_t i = 0;
        while (i < b && ++bc[i] == h) bc[i++] = 0;
        if (i == b) return false;
    }
}

inline std::set<Block> block_set(const std::vector<Block>& blocks) {
    return {blocks.begin(), blocks.end()};
}

}  // namespace testutil

#endif
