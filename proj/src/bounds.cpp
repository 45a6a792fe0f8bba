#include "banffkit/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace banffkit {

std::uint64_t edge_bound(std::uint64_t m) {
    std::uint64_t h = 1;
    while (h * (h - 1) < 2 * m) ++h;
    return h;
}

std::uint64_t replication_bound(std::uint64_t v, std::uint64_t k,
                                std::uint64_t lambda) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (lambda * (v - 1) % (k - 1) != 0)
        throw std::invalid_argument("replication number is not integral");
    std::uint64_t r = lambda * (v - 1) / (k - 1);
    return (2 * r + v + 2) / 2;  // ceil(r + (v+1)/2)
}

bool banff_df_lambda_feasible(std::uint64_t k, std::uint64_t lambda) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    return 2 * lambda <= k - 1;
}

WeilThreshold weil_threshold(std::uint64_t e, std::uint64_t k) {
    if (e == 6 && k == 4) return {9'152'353ull, true};
    if (e == 10 && k == 5) return {122'500'800'001ull, true};
    // k^2 * e^(2k), saturating.
    unsigned __int128 v = std::uint64_t(k) * k;
    for (std::uint64_t i = 0; i < 2 * k; ++i) {
        v *= e;
        if (v > (unsigned __int128)UINT64_MAX)
            return {UINT64_MAX, false};
    }
    return {static_cast<std::uint64_t>(v), false};
}

bool banff_sts_exists(std::uint64_t v) {
    if (v < 7) throw std::invalid_argument("v must be >= 7");
    return v % 6 == 1;
}

BoundReport bound_report(std::uint64_t v, std::uint64_t k, std::uint64_t lambda) {
    BoundReport rep;
    if (v < k || k < 2 || lambda < 1)
        throw std::invalid_argument("inadmissible parameters");
    if (lambda * (v - 1) % (k - 1) != 0 ||
        lambda * v * (v - 1) % (k * (k - 1)) != 0)
        throw std::invalid_argument("inadmissible parameters (divisibility)");
    rep.v = v;
    rep.k = k;
    rep.lambda = lambda;
    rep.r = lambda * (v - 1) / (k - 1);
    rep.b = v * rep.r / k;
    rep.m = v * rep.r;
    rep.point_bound = v;
    rep.edge_bound = banffkit::edge_bound(rep.m);
    rep.replication_bound = banffkit::replication_bound(v, k, lambda);
    rep.max_bound = std::max({rep.point_bound, rep.edge_bound,
                              rep.replication_bound});
    rep.banff_df_feasible = banff_df_lambda_feasible(k, lambda);
    rep.weil = weil_threshold(k * (k - 1) / 2, k);
    return rep;
}

BoundReport bound_report(const Design& d) {
    auto ver = verify_2design(d);
    if (!ver.ok) throw std::invalid_argument("bound_report: design not verified");
    return bound_report(ver.v, ver.k, ver.lambda);
}

}  // namespace banffkit
