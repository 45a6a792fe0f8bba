#include "banffkit/designs.hpp"

#include <algorithm>
#include <sstream>

namespace banffkit {

DesignReport verify_2design(const Design& d) {
    DesignReport rep;
    rep.v = d.points;
    rep.b = d.blocks.size();
    if (d.blocks.empty()) {
        rep.violations.push_back("no blocks");
        return rep;
    }
    rep.k = d.blocks[0].size();
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        if (d.blocks[i].size() != rep.k)
            rep.violations.push_back("block " + std::to_string(i) +
                                     " has wrong size");
        for (Elem x : d.blocks[i])
            if (x >= d.points)
                rep.violations.push_back("block " + std::to_string(i) +
                                         " has out-of-range point");
    }
    if (!rep.violations.empty()) return rep;

    // Pair counts, with multiplicity over the block multiset.
    std::vector<std::uint32_t> pair_count(d.points * d.points, 0);
    for (const auto& b : d.blocks)
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                ++pair_count[std::uint64_t(b[i]) * d.points + b[j]];
    rep.lambda = pair_count[0 * d.points + 1];
    bool uniform = true;
    for (Elem x = 0; x < d.points; ++x)
        for (Elem y = x + 1; y < d.points; ++y) {
            auto c = pair_count[std::uint64_t(x) * d.points + y];
            if (c != rep.lambda) {
                uniform = false;
                std::ostringstream os;
                os << "pair {" << x << "," << y << "} covered " << c
                   << " times, expected " << rep.lambda;
                if (rep.violations.size() < 32) rep.violations.push_back(os.str());
            }
        }
    if (!uniform || rep.lambda == 0) {
        if (rep.lambda == 0) rep.violations.push_back("lambda = 0");
        return rep;
    }
    // Replication count and the two identities vr = bk, r(k-1) = lambda(v-1).
    std::vector<std::uint64_t> deg(d.points, 0);
    for (const auto& b : d.blocks)
        for (Elem x : b) ++deg[x];
    rep.r = deg[0];
    for (Elem x = 0; x < d.points; ++x)
        if (deg[x] != rep.r)
            rep.violations.push_back("point " + std::to_string(x) +
                                     " has replication " + std::to_string(deg[x]));
    if (rep.v * rep.r != rep.b * rep.k)
        rep.violations.push_back("identity vr = bk fails");
    if (rep.r * (rep.k - 1) != rep.lambda * (rep.v - 1))
        rep.violations.push_back("identity r(k-1) = lambda(v-1) fails");
    rep.ok = rep.violations.empty();
    return rep;
}

Design cyclic_design(std::uint64_t v, std::vector<Block> base_blocks) {
    DifferenceFamily f;
    f.group = make_group(GroupSpec::cyclic(v));
    for (auto& b : base_blocks) {
        for (Elem x : b)
            if (x >= v)
                throw std::invalid_argument("base block element " +
                                            std::to_string(x) +
                                            " out of range for Z_" +
                                            std::to_string(v));
        f.blocks.push_back(normalize_block(std::move(b)));
    }
    // Delegate to develop without enforcing the difference property; the
    // caller may be developing arbitrary base blocks.
    return develop(f, /*force=*/true);
}

Block singer_difference_set(std::uint64_t q) {
    std::uint64_t p;
    unsigned deg;
    if (!prime_power(q, p, deg))
        throw std::invalid_argument("q must be a prime power");
    // GF(q^3) as a degree 3*deg extension of GF(p); the GF(q) subfield is the
    // fixed field of x -> x^q.
    auto big = make_group(GroupSpec::make_field(static_cast<std::uint32_t>(p),
                                                3 * deg));
    const std::uint64_t v = q * q + q + 1;
    Elem omega = big->primitive();
    std::vector<Elem> subfield;
    for (Elem x = 0; x < big->order(); ++x)
        if (x == 0 || big->pow(x, q) == x) subfield.push_back(x);
    if (subfield.size() != q) throw std::logic_error("subfield has wrong size");
    // 2-dimensional GF(q)-subspace spanned by {1, omega}.
    std::vector<char> in_span(big->order(), 0);
    for (Elem a : subfield)
        for (Elem b : subfield)
            in_span[big->add(a, big->mul(b, omega))] = 1;
    Block d;
    Elem x = big->one();
    for (std::uint64_t i = 0; i < v; ++i) {
        if (in_span[x]) d.push_back(static_cast<Elem>(i));
        x = big->mul(x, omega);
    }
    if (d.size() != q + 1)
        throw std::logic_error("Singer set has wrong size");
    return d;
}

}  // namespace banffkit
