#include "banffkit/diffam.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "banffkit/designs.hpp"

namespace banffkit {

Block normalize_block(Block b) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
}

namespace {

void check_elements(const DifferenceFamily& f) {
    for (const auto& b : f.blocks)
        for (Elem x : b)
            if (x >= f.group->order())
                throw std::invalid_argument("block element out of range");
}

}  // namespace

DifferenceList difference_list(const DifferenceFamily& f) {
    check_elements(f);
    DifferenceList dl;
    dl.multiplicity.assign(f.group->order(), 0);
    for (const auto& b : f.blocks) {
        for (Elem x : b)
            for (Elem y : b) {
                if (x == y) continue;
                ++dl.multiplicity[f.group->sub(x, y)];
                ++dl.total;
            }
    }
    return dl;
}

DfReport verify_df(const DifferenceFamily& f) {
    DfReport rep;
    rep.lambda = f.lambda;
    if (f.blocks.empty()) {
        rep.violations.push_back("empty family");
        return rep;
    }
    rep.k = static_cast<std::uint32_t>(f.blocks[0].size());
    for (std::size_t i = 0; i < f.blocks.size(); ++i) {
        if (f.blocks[i].size() != rep.k) {
            std::ostringstream os;
            os << "block " << i << " has size " << f.blocks[i].size()
               << ", expected " << rep.k;
            rep.violations.push_back(os.str());
        }
        if (normalize_block(f.blocks[i]) != f.blocks[i])
            rep.violations.push_back("block " + std::to_string(i) +
                                     " is not sorted/duplicate-free");
    }
    if (!rep.violations.empty()) return rep;

    auto dl = difference_list(f);
    const std::uint64_t v = f.group->order();
    // lambda(v-1) = k(k-1)n
    if (std::uint64_t(f.lambda) * (v - 1) !=
        std::uint64_t(rep.k) * (rep.k - 1) * f.blocks.size())
        rep.violations.push_back("parameter identity lambda(v-1) = k(k-1)n fails");
    for (Elem x = 1; x < v; ++x) {
        if (dl.multiplicity[x] != f.lambda) {
            std::ostringstream os;
            os << "element " << x << " covered " << dl.multiplicity[x]
               << " times, expected " << f.lambda;
            rep.violations.push_back(os.str());
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

bool is_disjoint(const DifferenceFamily& f) {
    std::set<Elem> seen;
    for (const auto& b : f.blocks)
        for (Elem x : b)
            if (!seen.insert(x).second) return false;
    return true;
}

BanffReport is_banff_df(const DifferenceFamily& f) {
    BanffReport rep;
    auto df = verify_df(f);
    if (!df.ok) {
        for (auto& v : df.violations) rep.violations.push_back("df: " + v);
        return rep;
    }
    if (!is_disjoint(f)) rep.violations.push_back("base blocks are not disjoint");
    for (std::size_t i = 0; i < f.blocks.size(); ++i)
        for (Elem x : f.blocks[i])
            if (x == f.group->zero()) {
                rep.violations.push_back("block " + std::to_string(i) +
                                         " contains 0");
                break;
            }
    for (std::size_t i = 0; i < f.blocks.size(); ++i) {
        for (std::size_t j = 0; j < f.blocks.size(); ++j) {
            for (Elem x : f.blocks[i]) {
                Elem nx = f.group->neg(x);
                if (std::binary_search(f.blocks[j].begin(), f.blocks[j].end(), nx)) {
                    std::ostringstream os;
                    os << "B_" << i << " meets -B_" << j << " at element " << x;
                    rep.violations.push_back(os.str());
                }
            }
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

DifferenceFamily translate(const DifferenceFamily& f, const std::vector<Elem>& ts) {
    if (ts.size() != f.blocks.size())
        throw std::invalid_argument("translate: tuple length != family size");
    DifferenceFamily out = f;
    for (std::size_t i = 0; i < f.blocks.size(); ++i) {
        Block b;
        for (Elem x : f.blocks[i]) b.push_back(f.group->add(x, ts[i]));
        out.blocks[i] = normalize_block(std::move(b));
    }
    return out;
}

Design develop(const DifferenceFamily& f, bool force) {
    if (!force) {
        auto rep = verify_df(f);
        if (!rep.ok)
            throw std::invalid_argument(
                "develop: family fails verification (" +
                (rep.violations.empty() ? std::string("?") : rep.violations[0]) + ")");
    }
    Design d;
    d.group = f.group;
    d.points = f.group->order();
    d.base_blocks = f.blocks;
    // Block order is (base index, translate): blocks[i*v + g] = B_i + g.
    for (const auto& b : f.blocks) {
        for (Elem g = 0; g < d.points; ++g) {
            Block t;
            for (Elem x : b) t.push_back(f.group->add(x, g));
            std::sort(t.begin(), t.end());
            d.blocks.push_back(std::move(t));
        }
    }
    return d;
}

}  // namespace banffkit
