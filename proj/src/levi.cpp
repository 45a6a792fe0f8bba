#include "banffkit/levi.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "banffkit/bounds.hpp"

namespace banffkit {

LeviGraph build_levi(const Design& d) {
    auto rep = verify_2design(d);
    if (!rep.ok)
        throw std::invalid_argument("build_levi: design fails verification");
    return LeviGraph{d.points, d.blocks};
}

HarmoniousReport verify_harmonious(const LeviGraph& g, const Coloring& c) {
    HarmoniousReport rep;
    if (c.point_colors.size() != g.points ||
        c.block_colors.size() != g.blocks.size())
        throw std::invalid_argument("coloring is not total on the vertex set");
    std::set<std::uint32_t> used(c.point_colors.begin(), c.point_colors.end());
    used.insert(c.block_colors.begin(), c.block_colors.end());
    rep.colors_used = static_cast<std::uint32_t>(used.size());
    if (c.palette && rep.colors_used > c.palette)
        rep.proper_violations.push_back("more colors used than declared palette");

    std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<std::size_t, Elem>>
        seen;
    for (std::size_t i = 0; i < g.blocks.size(); ++i) {
        std::uint32_t bc = c.block_colors[i];
        for (Elem p : g.blocks[i]) {
            std::uint32_t pc = c.point_colors[p];
            if (pc == bc) {
                std::ostringstream os;
                os << "point " << p << " and block " << i << " share color " << bc;
                rep.proper_violations.push_back(os.str());
                continue;
            }
            auto key = std::minmax(pc, bc);
            auto [it, fresh] = seen.emplace(key, std::make_pair(i, p));
            if (!fresh) {
                std::ostringstream os;
                os << "color pair {" << key.first << "," << key.second
                   << "} on edges (" << it->second.second << ",B"
                   << it->second.first << ") and (" << p << ",B" << i << ")";
                rep.pair_violations.push_back(os.str());
            }
        }
    }
    rep.ok = rep.proper_violations.empty() && rep.pair_violations.empty();
    return rep;
}

bool is_exact(const LeviGraph& g, const Coloring& c) {
    auto rep = verify_harmonious(g, c);
    if (!rep.ok) throw std::invalid_argument("is_exact: coloring not harmonious");
    // Harmonious => edge color pairs are pairwise distinct, so every pair of
    // used colors occurs exactly once iff m equals (h' choose 2).
    std::uint64_t h = rep.colors_used;
    return g.edges() == h * (h - 1) / 2;
}

Coloring canonical_banff_coloring(const DifferenceFamily& f) {
    auto rep = is_banff_df(f);
    if (!rep.ok)
        throw std::invalid_argument(
            "canonical_banff_coloring: family is not a Banff difference family");
    const std::uint64_t v = f.group->order();
    Coloring c;
    c.palette = static_cast<std::uint32_t>(v);
    c.point_colors.resize(v);
    for (Elem g = 0; g < v; ++g) c.point_colors[g] = g;
    // develop() emits blocks[i*v + t] = B_i + t.
    c.block_colors.resize(f.blocks.size() * v);
    for (std::size_t i = 0; i < f.blocks.size(); ++i)
        for (Elem t = 0; t < v; ++t) c.block_colors[i * v + t] = t;
    return c;
}

namespace {

struct ChromaticSearcher {
    const LeviGraph& g;
    std::uint32_t v;
    std::uint32_t h = 0;
    std::vector<char> pairused;    // h*h symmetric
    std::vector<std::int32_t> bcol;
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes;
    std::chrono::steady_clock::time_point deadline;
    bool use_deadline;
    bool aborted = false;

    ChromaticSearcher(const LeviGraph& graph, const SearchBudget& budget)
        : g(graph), v(static_cast<std::uint32_t>(graph.points)),
          max_nodes(budget.max_nodes) {
        use_deadline = budget.max_seconds > 0;
        if (use_deadline)
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(budget.max_seconds));
    }

    bool out_of_budget() {
        if (nodes > max_nodes) return true;
        if (use_deadline && (nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() > deadline)
            return true;
        return false;
    }

    bool legal(std::size_t i, std::uint32_t c) const {
        for (Elem p : g.blocks[i]) {
            if (p == c) return false;  // point p carries color p
            if (pairused[std::size_t(p) * h + c]) return false;
        }
        return true;
    }

    // Returns true if a full coloring was found; aborted flag distinguishes
    // refutation from budget exhaustion.
    bool dfs(std::size_t remaining, std::uint32_t next_new) {
        ++nodes;
        if (out_of_budget()) {
            aborted = true;
            return false;
        }
        if (remaining == 0) return true;
        std::size_t best_i = 0;
        std::vector<std::uint32_t> best;
        bool have = false;
        for (std::size_t i = 0; i < g.blocks.size(); ++i) {
            if (bcol[i] >= 0) continue;
            std::vector<std::uint32_t> cand;
            std::uint32_t lim = std::min(h, next_new + 1);
            for (std::uint32_t c = 0; c < lim; ++c)
                if (legal(i, c)) cand.push_back(c);
            if (cand.empty()) return false;
            if (!have || cand.size() < best.size()) {
                best = std::move(cand);
                best_i = i;
                have = true;
                if (best.size() == 1) break;
            }
        }
        for (std::uint32_t c : best) {
            bcol[best_i] = static_cast<std::int32_t>(c);
            for (Elem p : g.blocks[best_i])
                pairused[std::size_t(p) * h + c] = pairused[std::size_t(c) * h + p] = 1;
            if (dfs(remaining - 1, std::max(next_new, c + 1))) return true;
            for (Elem p : g.blocks[best_i])
                pairused[std::size_t(p) * h + c] = pairused[std::size_t(c) * h + p] = 0;
            bcol[best_i] = -1;
            if (aborted) return false;
        }
        return false;
    }

    // Attempt palette size h_try; outcome: 1 found, 0 refuted, -1 aborted.
    int solve(std::uint32_t h_try) {
        h = h_try;
        pairused.assign(std::size_t(h) * h, 0);
        bcol.assign(g.blocks.size(), -1);
        aborted = false;
        bool found = dfs(g.blocks.size(), v);
        if (found) return 1;
        return aborted ? -1 : 0;
    }
};

}  // namespace

ChromaticResult harmonious_number_search(const LeviGraph& g, std::uint32_t h_max,
                                         const SearchBudget& budget) {
    if (budget.max_nodes == 0 || budget.max_seconds < 0)
        throw std::invalid_argument("budget must be positive");
    // Point colors are fixed WLOG, which needs every point pair to share a
    // block (distance two in the Levi graph).
    const std::uint32_t v = static_cast<std::uint32_t>(g.points);
    {
        std::vector<char> cov(std::size_t(v) * v, 0);
        for (const auto& b : g.blocks)
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = i + 1; j < b.size(); ++j)
                    cov[std::size_t(b[i]) * v + b[j]] = 1;
        for (std::uint32_t x = 0; x < v; ++x)
            for (std::uint32_t y = x + 1; y < v; ++y)
                if (!cov[std::size_t(x) * v + y])
                    throw std::invalid_argument(
                        "harmonious_number_search: points " + std::to_string(x) +
                        " and " + std::to_string(y) + " share no block");
    }

    std::uint64_t lower = std::max<std::uint64_t>(v, edge_bound(g.edges()));
    if (!g.blocks.empty()) {
        std::uint64_t k = g.blocks[0].size();
        bool uniform = true;
        for (const auto& b : g.blocks) uniform &= (b.size() == k);
        if (uniform && k >= 2 && v >= 2) {
            std::uint64_t m = g.edges();
            if (m % v == 0) {
                std::uint64_t r = m / v;
                if (r * (k - 1) % (v - 1) == 0)
                    lower = std::max(lower, replication_bound(
                                                 v, k, r * (k - 1) / (v - 1)));
            }
        }
    }

    ChromaticResult res;
    res.lower = static_cast<std::uint32_t>(lower);
    ChromaticSearcher searcher(g, budget);
    for (std::uint32_t h = res.lower; h <= h_max; ++h) {
        int outcome = searcher.solve(h);
        res.nodes = searcher.nodes;
        if (outcome == 1) {
            res.exact = true;
            res.h = h;
            res.lower = h;
            res.upper = h;
            Coloring c;
            c.palette = h;
            c.point_colors.resize(v);
            for (std::uint32_t p = 0; p < v; ++p) c.point_colors[p] = p;
            c.block_colors.assign(searcher.bcol.begin(), searcher.bcol.end());
            res.witness = std::move(c);
            return res;
        }
        if (outcome == -1) {
            res.budget_exhausted = true;
            res.lower = h;  // everything below h is refuted
            return res;
        }
        res.lower = h + 1;
    }
    // All palettes up to h_max refuted.
    res.lower = std::max(res.lower, h_max + 1);
    return res;
}

}  // namespace banffkit
