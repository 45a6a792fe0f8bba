#include "banffkit/constructions.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <thread>

namespace banffkit {

namespace {

void require_banff_set_congruence(const GroupPtr& field, std::uint32_t k) {
    if (!field->is_field()) throw std::invalid_argument("not a field");
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    const std::uint64_t q = field->order();
    if ((q - 1) % (std::uint64_t(k) * (k - 1)) != 0)
        throw std::invalid_argument("q = " + std::to_string(q) +
                                    " is not congruent to 1 mod k(k-1)");
}

struct DeadlineGuard {
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes;
    std::chrono::steady_clock::time_point deadline;
    bool use_deadline;

    explicit DeadlineGuard(const SearchBudget& b) : max_nodes(b.max_nodes) {
        use_deadline = b.max_seconds > 0;
        if (use_deadline)
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(b.max_seconds));
    }
    void tick() {
        if (++nodes > max_nodes)
            throw budget_exhausted_error("node budget exhausted");
        if (use_deadline && (nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() > deadline)
            throw budget_exhausted_error("time budget exhausted");
    }
};

}  // namespace

BanffSetReport banff_set_check(const GroupPtr& field, std::uint32_t k,
                               const Block& set) {
    require_banff_set_congruence(field, k);
    BanffSetReport rep;
    rep.q = field->order();
    rep.k = k;
    rep.set = set;
    rep.e = std::uint64_t(k) * (k - 1) / 2;
    if (set.size() != k) throw std::invalid_argument("set size != k");
    for (Elem x : set)
        if (x == 0) throw std::invalid_argument("Banff set must avoid 0");
    // -1 lies in C^e_0, so up-to-sign classification is well defined.
    Elem minus_one = field->neg(field->one());
    if (field->log(minus_one) % rep.e != 0)
        throw std::logic_error("-1 not in C^e_0 despite congruence");

    auto cls = [&](Elem x) { return field->log(x) % rep.e; };
    std::vector<char> seen(rep.e, 0);
    rep.cond1_ok = true;
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            Elem d = field->sub(set[i], set[j]);
            std::uint64_t c = cls(d);
            rep.half_difference_classes.push_back(c);
            if (seen[c]) rep.cond1_ok = false;
            seen[c] = 1;
        }
    std::set<std::uint64_t> element_classes;
    for (Elem x : set) element_classes.insert(cls(x));
    rep.cond2_ok = element_classes.size() == k;
    rep.ok = rep.cond1_ok && rep.cond2_ok;
    return rep;
}

DifferenceFamily wilson_expand(const GroupPtr& field, std::uint32_t k,
                               const Block& set) {
    auto rep = banff_set_check(field, k, set);
    if (!rep.ok)
        throw std::invalid_argument("wilson_expand: not a Banff set (cond1=" +
                                    std::to_string(rep.cond1_ok) + ", cond2=" +
                                    std::to_string(rep.cond2_ok) + ")");
    auto table = cyclotomic_classes(field, rep.e);
    DifferenceFamily f;
    f.group = field;
    f.lambda = 1;
    for (Elem s : half_representatives(table)) {
        Block b;
        for (Elem x : set) b.push_back(field->mul(s, x));
        f.blocks.push_back(normalize_block(std::move(b)));
    }
    return f;
}

namespace {

// Shared scan body for the power-form search over a half-open x range.
std::optional<Elem> power_scan(const GroupPtr& field, std::uint32_t k,
                               std::uint64_t e, Elem lo, Elem hi) {
    for (Elem x = lo; x < hi; ++x) {
        Block b = {field->one()};
        Elem t = field->one();
        bool dup = false;
        for (std::uint32_t i = 1; i < k; ++i) {
            t = field->mul(t, x);
            if (std::find(b.begin(), b.end(), t) != b.end()) { dup = true; break; }
            b.push_back(t);
        }
        if (dup) continue;
        auto cls = [&](Elem y) { return field->log(y) % e; };
        std::vector<char> seen(e, 0);
        bool ok = true;
        for (std::size_t i = 0; i < b.size() && ok; ++i)
            for (std::size_t j = i + 1; j < b.size() && ok; ++j) {
                std::uint64_t c = cls(field->sub(b[i], b[j]));
                if (seen[c]) ok = false;
                seen[c] = 1;
            }
        if (!ok) continue;
        std::set<std::uint64_t> ec;
        for (Elem y : b) ec.insert(cls(y));
        if (ec.size() != k) continue;
        return x;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Block> search_banff_set(const GroupPtr& field, std::uint32_t k,
                                      BanffSetMode mode, unsigned jobs) {
    require_banff_set_congruence(field, k);
    const std::uint64_t q = field->order();
    const std::uint64_t e = std::uint64_t(k) * (k - 1) / 2;

    auto block_of_power = [&](Elem x) {
        Block b = {field->one()};
        Elem t = field->one();
        for (std::uint32_t i = 1; i < k; ++i) {
            t = field->mul(t, x);
            b.push_back(t);
        }
        return b;  // unsorted power order; caller normalizes
    };

    if (mode == BanffSetMode::Power) {
        if (jobs <= 1) {
            auto x = power_scan(field, k, e, 2, static_cast<Elem>(q));
            if (!x) return std::nullopt;
            return block_of_power(*x);
        }
        // Chunked parallel scan; least witness wins, identical to sequential.
        const Elem chunk = 4096;
        for (Elem base = 2; base < q; base += chunk * jobs) {
            std::vector<std::optional<Elem>> hits(jobs);
            std::vector<std::thread> pool;
            for (unsigned j = 0; j < jobs; ++j) {
                Elem lo = base + j * chunk;
                Elem hi = static_cast<Elem>(
                    std::min<std::uint64_t>(q, std::uint64_t(lo) + chunk));
                if (lo >= q) break;
                pool.emplace_back([&, j, lo, hi] {
                    hits[j] = power_scan(field, k, e, lo, hi);
                });
            }
            for (auto& t : pool) t.join();
            for (auto& h : hits)
                if (h) return block_of_power(*h);
        }
        return std::nullopt;
    }

    auto cls = [&](Elem y) { return field->log(y) % e; };

    if (mode == BanffSetMode::Iterative) {
        // The staged construction: element j drawn from C^e_j, subject to its
        // differences against earlier elements landing in so-far-unused
        // cosets (the realizing pair bijection emerges from the search);
        // backtracks when a stage has no candidates.
        Block b;
        std::vector<char> used(e, 0);
        std::function<bool()> dfs = [&]() -> bool {
            std::uint32_t j = static_cast<std::uint32_t>(b.size());
            if (j == k) return true;
            for (Elem x = 1; x < q; ++x) {
                if (cls(x) != j) continue;
                std::vector<std::uint64_t> added;
                bool ok = true;
                for (std::uint32_t i = 0; i < j; ++i) {
                    Elem d = field->sub(x, b[i]);
                    std::uint64_t c = d ? cls(d) : e;
                    if (d == 0 || used[c] ||
                        std::find(added.begin(), added.end(), c) != added.end()) {
                        ok = false;
                        break;
                    }
                    added.push_back(c);
                }
                if (!ok) continue;
                for (auto c : added) used[c] = 1;
                b.push_back(x);
                if (dfs()) return true;
                b.pop_back();
                for (auto c : added) used[c] = 0;
            }
            return false;
        };
        if (!dfs()) return std::nullopt;
        return b;
    }

    // Exhaustive lexicographic scan with incremental class pruning.
    Block b;
    std::vector<char> diff_seen(e, 0);
    std::vector<char> elem_seen(e, 0);
    std::function<bool(Elem)> dfs = [&](Elem lo) -> bool {
        if (b.size() == k) return true;
        for (Elem x = lo; x < q; ++x) {
            std::uint64_t cx = cls(x);
            if (elem_seen[cx]) continue;
            std::vector<std::uint64_t> added;
            bool ok = true;
            for (Elem y : b) {
                std::uint64_t c = cls(field->sub(x, y));
                if (diff_seen[c] ||
                    std::find(added.begin(), added.end(), c) != added.end()) {
                    ok = false;
                    break;
                }
                added.push_back(c);
            }
            if (!ok) continue;
            elem_seen[cx] = 1;
            for (auto c : added) diff_seen[c] = 1;
            b.push_back(x);
            if (dfs(x + 1)) return true;
            b.pop_back();
            elem_seen[cx] = 0;
            for (auto c : added) diff_seen[c] = 0;
        }
        return false;
    };
    if (!dfs(1)) return std::nullopt;
    return b;
}

std::optional<std::vector<Elem>> search_translates(const DifferenceFamily& f,
                                                   const SearchBudget& budget) {
    auto rep = verify_df(f);
    if (!rep.ok)
        throw std::invalid_argument("search_translates: family fails verification");
    const auto& g = *f.group;
    const std::uint64_t v = g.order();
    std::vector<char> used(v, 0);
    std::vector<Elem> ts(f.blocks.size(), 0);
    DeadlineGuard guard(budget);

    std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
        guard.tick();
        if (i == f.blocks.size()) return true;
        for (Elem t = 0; t < v; ++t) {
            std::vector<Elem> marks;
            bool ok = true;
            for (Elem x : f.blocks[i]) {
                Elem y = g.add(x, t);
                Elem ny = g.neg(y);
                if (y == 0 || used[y] || used[ny]) { ok = false; break; }
                // within-block clash between the translate and its negative
                if (std::find(marks.begin(), marks.end(), y) != marks.end() ||
                    std::find(marks.begin(), marks.end(), ny) != marks.end()) {
                    ok = false;
                    break;
                }
                marks.push_back(y);
                marks.push_back(ny);
            }
            if (!ok) continue;
            for (Elem m : marks) used[m] = 1;
            ts[i] = t;
            if (dfs(i + 1)) return true;
            for (Elem m : marks) used[m] = 0;
        }
        return false;
    };
    if (!dfs(0)) return std::nullopt;
    return ts;
}

Block plane_banff_difference_set(std::uint64_t q) {
    Block singer = singer_difference_set(q);
    const std::uint64_t v = q * q + q + 1;  // odd, so 2 is invertible
    const std::uint64_t inv2 = (v + 1) / 2;
    std::vector<char> midpoint(v, 0);
    for (std::size_t i = 0; i < singer.size(); ++i)
        for (std::size_t j = i; j < singer.size(); ++j)
            midpoint[(std::uint64_t(singer[i]) + singer[j]) % v * inv2 % v] = 1;
    Elem t = 0;
    while (t < v && midpoint[t]) ++t;
    if (t == v) throw std::logic_error("no midpoint-free translate exists");
    Block out;
    for (Elem b : singer)
        out.push_back(static_cast<Elem>((std::uint64_t(b) + v - t) % v));
    return normalize_block(std::move(out));
}

std::optional<DifferenceFamily> radical_df(const GroupPtr& field,
                                           std::uint32_t k) {
    if (!field->is_field()) throw std::invalid_argument("not a field");
    if (k % 2 == 0)
        throw std::invalid_argument("radical_df: k must be odd");
    const std::uint64_t q = field->order();
    if ((q - 1) % (std::uint64_t(k) * (k - 1)) != 0)
        throw std::invalid_argument("k(k-1) does not divide q-1");
    const std::uint64_t m = (q - 1) / k;      // number of cosets of the roots
    const std::uint64_t n = (q - 1) / (std::uint64_t(k) * (k - 1));

    // Coset index of the difference pattern of the k-th roots of unity; the
    // pattern is invariant under the roots themselves, so coverage can be
    // tracked per coset.
    auto roots = roots_of_unity(field, k);
    std::vector<std::uint64_t> pattern;
    for (Elem u : roots) {
        if (u == field->one()) continue;
        pattern.push_back(field->log(field->sub(u, field->one())) % m);
    }
    std::sort(pattern.begin(), pattern.end());
    if (std::adjacent_find(pattern.begin(), pattern.end()) != pattern.end())
        return std::nullopt;  // some coset would be covered twice by one block

    // Exact cover of Z_m by n shifts of the pattern, MRV cell first.
    std::vector<char> cover(m, 0);
    std::vector<std::uint64_t> shifts;
    std::function<bool()> dfs = [&]() -> bool {
        if (shifts.size() == n) return true;
        std::uint64_t best_cell = m;
        std::vector<std::uint64_t> best;
        for (std::uint64_t cell = 0; cell < m; ++cell) {
            if (cover[cell]) continue;
            std::vector<std::uint64_t> cand;
            for (std::uint64_t d : pattern) {
                std::uint64_t s = (cell + m - d % m) % m;
                bool ok = true;
                for (std::uint64_t dd : pattern)
                    if (cover[(s + dd) % m]) { ok = false; break; }
                if (ok) cand.push_back(s);
            }
            if (cand.empty()) return false;
            if (best_cell == m || cand.size() < best.size()) {
                best = std::move(cand);
                best_cell = cell;
                if (best.size() == 1) break;
            }
        }
        for (std::uint64_t s : best) {
            for (std::uint64_t dd : pattern) cover[(s + dd) % m] = 1;
            shifts.push_back(s);
            if (dfs()) return true;
            shifts.pop_back();
            for (std::uint64_t dd : pattern) cover[(s + dd) % m] = 0;
        }
        return false;
    };
    if (!dfs()) return std::nullopt;

    std::sort(shifts.begin(), shifts.end());
    DifferenceFamily f;
    f.group = field;
    f.lambda = 1;
    for (std::uint64_t s : shifts) {
        Block b;
        Elem rep = field->exp(s);
        for (Elem u : roots) b.push_back(field->mul(rep, u));
        f.blocks.push_back(normalize_block(std::move(b)));
    }
    return f;
}

RadicalK5Report radical_k5_admissible(std::uint64_t q) {
    if (q < 21 || (q - 1) % 20 != 0)
        throw std::invalid_argument("q must be a prime power congruent to 1 mod 20");
    auto field = make_group(GroupSpec::field_of_order(q));
    RadicalK5Report rep;
    rep.q = q;
    std::uint64_t n = (q - 1) / 20;
    while (n % 2 == 0) { n /= 2; ++rep.two_adic_e; }

    const std::uint32_t p = field->characteristic();
    Elem five = field->from_coeffs({static_cast<std::uint32_t>(5 % p)});
    auto root = square_root(field, five);
    if (!root || *root == 0)
        throw std::logic_error("5 is not a nonzero square in GF(q), q = 20n+1");
    rep.root_first = *root;
    rep.root_second = field->neg(*root);
    Elem half = field->inv(field->add(field->one(), field->one()));
    const std::uint64_t power = 1ull << (rep.two_adic_e + 1);
    auto admissible_for = [&](Elem r) {
        Elem a = field->mul(field->add(field->one(), r), half);
        return !is_nth_power(field, power, a);
    };
    rep.first_admissible = admissible_for(rep.root_first);
    rep.second_admissible = admissible_for(rep.root_second);
    // The two candidates multiply to -1, which is always a 2^(e+1)-th power
    // here, so they agree.
    if (rep.first_admissible != rep.second_admissible)
        throw std::logic_error("square-root choice changed admissibility");
    rep.admissible = rep.first_admissible;
    return rep;
}

DifferenceFamily fpf_banff_df(std::uint64_t v, std::uint32_t k) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("k must be odd and >= 3");
    auto factors = factorize(v);
    std::vector<FieldSpec> specs;
    for (auto [p, e] : factors) {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < e; ++i) q *= p;
        if ((q - 1) % (2 * std::uint64_t(k)) != 0)
            throw std::invalid_argument(
                "maximal prime power factor " + std::to_string(q) +
                " is not congruent to 1 mod 2k");
        FieldSpec fs;
        fs.p = static_cast<std::uint32_t>(p);
        fs.n = e;
        specs.push_back(fs);
    }

    GroupPtr group;
    std::vector<GroupPtr> comps;
    if (specs.size() == 1) {
        group = make_group(GroupSpec::make_field(specs[0].p, specs[0].n));
        comps = {group};
    } else {
        group = make_group(GroupSpec::product(specs));
        for (std::size_t i = 0; i < group->component_count(); ++i)
            comps.push_back(group->component(i));
    }
    // Multiplier of multiplicative order k per component.
    std::vector<Elem> mult;
    for (auto& c : comps)
        mult.push_back(c->exp((c->order() - 1) / k));
    auto act = [&](Elem x) {
        if (comps.size() == 1) return comps[0]->mul(mult[0], x);
        std::vector<Elem> parts(comps.size());
        for (std::size_t i = 0; i < comps.size(); ++i)
            parts[i] = comps[i]->mul(mult[i], group->component_of(x, i));
        return group->compose(parts);
    };

    // Orbits of the multiplier action on G \ {0}; all have size k, and the
    // negative of an orbit is a different orbit (k odd).
    const std::uint64_t order = group->order();
    std::vector<char> visited(order, 0);
    std::vector<Block> orbits;  // ordered by least element
    for (Elem x = 1; x < order; ++x) {
        if (visited[x]) continue;
        Block orbit;
        Elem y = x;
        do {
            visited[y] = 1;
            orbit.push_back(y);
            y = act(y);
        } while (y != x);
        if (orbit.size() != k)
            throw std::logic_error("multiplier orbit has wrong size");
        orbits.push_back(normalize_block(std::move(orbit)));
    }

    // Pick one orbit per {O, -O} pair: the one with the smaller least element.
    std::set<Block> taken, excluded;
    DifferenceFamily f;
    f.group = group;
    f.lambda = (k - 1) / 2;
    for (const auto& orbit : orbits) {
        if (excluded.count(orbit) || taken.count(orbit)) continue;
        Block neg;
        for (Elem x : orbit) neg.push_back(group->neg(x));
        neg = normalize_block(std::move(neg));
        const Block& chosen = orbit < neg ? orbit : neg;
        taken.insert(chosen);
        excluded.insert(chosen == orbit ? neg : orbit);
        f.blocks.push_back(chosen);
    }
    if (f.blocks.size() != (v - 1) / (2 * std::uint64_t(k)))
        throw std::logic_error("orbit representative count mismatch");
    return f;
}

NestingReport verify_nesting(const Nesting& n) {
    NestingReport rep;
    auto sts = verify_2design(n.sts);
    if (!sts.ok || sts.k != 3 || sts.lambda != 1) {
        rep.violations.push_back("underlying design is not a (v,3,1) design");
        return rep;
    }
    if (n.map.size() != n.sts.blocks.size()) {
        rep.violations.push_back("map does not assign a point to every block");
        return rep;
    }
    Design aug;
    aug.points = n.sts.points;
    for (std::size_t i = 0; i < n.sts.blocks.size(); ++i) {
        Block b = n.sts.blocks[i];
        b.push_back(n.map[i]);
        b = normalize_block(std::move(b));
        if (b.size() != 4) {
            rep.violations.push_back("block " + std::to_string(i) +
                                     " gains no new point");
            return rep;
        }
        aug.blocks.push_back(std::move(b));
    }
    auto res = verify_2design(aug);
    if (!res.ok || res.k != 4 || res.lambda != 2) {
        rep.violations.push_back("augmented design is not a (v,4,2) design");
        for (auto& s : res.violations) rep.violations.push_back("  " + s);
        return rep;
    }
    rep.ok = true;
    return rep;
}

Nesting coloring_to_nesting(const Design& d, const Coloring& c) {
    auto rep = verify_harmonious(LeviGraph{d.points, d.blocks}, c);
    if (!rep.ok || rep.colors_used != d.points)
        throw std::invalid_argument(
            "coloring is not harmonious with exactly v colors");
    std::vector<Elem> color_point(d.points, static_cast<Elem>(d.points));
    std::vector<char> seen(d.points, 0);
    for (Elem p = 0; p < d.points; ++p) {
        std::uint32_t col = c.point_colors[p];
        if (col >= d.points || seen[col])
            throw std::invalid_argument("points are not colored bijectively");
        seen[col] = 1;
        color_point[col] = p;
    }
    Nesting n;
    n.sts = d;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        std::uint32_t col = c.block_colors[i];
        if (col >= d.points)
            throw std::invalid_argument("block " + std::to_string(i) +
                                        " colored with a non-point color");
        n.map.push_back(color_point[col]);
    }
    auto ver = verify_nesting(n);
    if (!ver.ok) throw std::logic_error("induced nesting failed verification");
    return n;
}

Coloring nesting_to_coloring(const Nesting& n) {
    auto rep = verify_nesting(n);
    if (!rep.ok) throw std::invalid_argument("invalid nesting");
    Coloring c;
    c.palette = static_cast<std::uint32_t>(n.sts.points);
    c.point_colors.resize(n.sts.points);
    for (Elem p = 0; p < n.sts.points; ++p) c.point_colors[p] = p;
    for (Elem p : n.map) c.block_colors.push_back(p);
    return c;
}

namespace {

// Translation-equivariant nesting of a cyclic development: one offset per
// base block whose half-differences tile {1..(v-1)/2}.
std::optional<std::vector<Elem>> equivariant_offsets(
    std::uint64_t v, const std::vector<Block>& bases) {
    const std::uint64_t half = (v - 1) / 2;
    auto norm = [&](std::uint64_t d) {
        d %= v;
        return std::min(d, v - d);
    };
    std::vector<char> used(half + 1, 0);
    std::vector<Elem> offsets;
    std::function<bool()> dfs = [&]() -> bool {
        std::size_t i = offsets.size();
        if (i == bases.size()) return true;
        for (Elem t = 0; t < v; ++t) {
            std::uint64_t d0 = norm(t + v - bases[i][0]);
            std::uint64_t d1 = norm(t + v - bases[i][1]);
            std::uint64_t d2 = norm(t + v - bases[i][2]);
            if (!d0 || !d1 || !d2) continue;
            if (d0 == d1 || d0 == d2 || d1 == d2) continue;
            if (used[d0] || used[d1] || used[d2]) continue;
            used[d0] = used[d1] = used[d2] = 1;
            offsets.push_back(t);
            if (dfs()) return true;
            offsets.pop_back();
            used[d0] = used[d1] = used[d2] = 0;
        }
        return false;
    };
    if (!dfs()) return std::nullopt;
    return offsets;
}

}  // namespace

std::optional<Nesting> search_nesting(const Design& d,
                                      const SearchBudget& budget) {
    auto sts = verify_2design(d);
    if (!sts.ok || sts.k != 3 || sts.lambda != 1)
        throw std::invalid_argument("search_nesting: not a verified (v,3,1) design");
    const std::uint64_t v = d.points;

    // Fast path: a cyclic development admits an equivariant candidate.
    if (d.group && d.group->is_cyclic() && !d.base_blocks.empty() &&
        d.blocks.size() == d.base_blocks.size() * v && v % 2 == 1) {
        if (auto offsets = equivariant_offsets(v, d.base_blocks)) {
            Nesting n;
            n.sts = d;
            n.map.resize(d.blocks.size());
            for (std::size_t i = 0; i < d.base_blocks.size(); ++i)
                for (Elem g = 0; g < v; ++g)
                    n.map[i * v + g] =
                        static_cast<Elem>((std::uint64_t((*offsets)[i]) + g) % v);
            if (verify_nesting(n).ok) return n;
        }
    }

    // General complete search: exact cover of all point pairs by the added
    // flags, MRV over block cells and pair cells.
    const std::size_t nb = d.blocks.size();
    std::vector<char> paircov(v * v, 0);
    std::vector<char> done(nb, 0);
    std::vector<Elem> assign(nb, 0);
    DeadlineGuard guard(budget);
    auto pid = [&](Elem x, Elem y) {
        return std::size_t(std::min(x, y)) * v + std::max(x, y);
    };
    auto legal = [&](std::size_t i, Elem p) {
        const Block& b = d.blocks[i];
        if (std::binary_search(b.begin(), b.end(), p)) return false;
        for (Elem x : b)
            if (paircov[pid(p, x)]) return false;
        return true;
    };

    std::function<bool(std::size_t)> dfs = [&](std::size_t remaining) -> bool {
        guard.tick();
        if (remaining == 0) return true;
        // MRV over unassigned blocks.
        std::size_t best_i = nb;
        std::vector<Elem> best;
        for (std::size_t i = 0; i < nb; ++i) {
            if (done[i]) continue;
            std::vector<Elem> cand;
            for (Elem p = 0; p < v; ++p)
                if (legal(i, p)) cand.push_back(p);
            if (cand.empty()) return false;
            if (best_i == nb || cand.size() < best.size()) {
                best = std::move(cand);
                best_i = i;
                if (best.size() == 1) break;
            }
        }
        // MRV over uncovered pairs (rows are (block, point) choices).
        std::vector<std::pair<std::size_t, Elem>> pair_rows;
        bool use_pair = false;
        if (best.size() > 1) {
            for (Elem x = 0; x < v && best.size() > 1; ++x)
                for (Elem y = x + 1; y < v; ++y) {
                    if (paircov[pid(x, y)]) continue;
                    std::vector<std::pair<std::size_t, Elem>> rows;
                    for (std::size_t i = 0; i < nb; ++i) {
                        if (done[i]) continue;
                        const Block& b = d.blocks[i];
                        bool hx = std::binary_search(b.begin(), b.end(), x);
                        bool hy = std::binary_search(b.begin(), b.end(), y);
                        if (hx && !hy && legal(i, y)) rows.emplace_back(i, y);
                        if (hy && !hx && legal(i, x)) rows.emplace_back(i, x);
                    }
                    if (rows.empty()) return false;
                    if (rows.size() < best.size()) {
                        pair_rows = std::move(rows);
                        use_pair = true;
                        if (pair_rows.size() == 1) { x = v; break; }
                    }
                }
        }
        auto try_row = [&](std::size_t i, Elem p) -> bool {
            done[i] = 1;
            assign[i] = p;
            for (Elem x : d.blocks[i]) paircov[pid(p, x)] = 1;
            if (dfs(remaining - 1)) return true;
            for (Elem x : d.blocks[i]) paircov[pid(p, x)] = 0;
            done[i] = 0;
            return false;
        };
        if (use_pair) {
            for (auto [i, p] : pair_rows)
                if (try_row(i, p)) return true;
        } else {
            for (Elem p : best)
                if (try_row(best_i, p)) return true;
        }
        return false;
    };
    if (!dfs(nb)) return std::nullopt;
    Nesting n;
    n.sts = d;
    n.map.assign(assign.begin(), assign.end());
    return n;
}

}  // namespace banffkit
