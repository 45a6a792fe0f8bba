#include "banffkit/algebra.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <numeric>
#include <sstream>

namespace banffkit {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        unsigned e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool prime_power(std::uint64_t q, std::uint64_t& p, unsigned& n) {
    if (q < 2) return false;
    auto f = factorize(q);
    if (f.size() != 1) return false;
    p = f[0].first;
    n = f[0].second;
    return true;
}

GroupSpec GroupSpec::cyclic(std::uint64_t v) {
    GroupSpec s;
    s.kind = Kind::Cyclic;
    s.cyclic_order = v;
    return s;
}

GroupSpec GroupSpec::make_field(std::uint32_t p, unsigned n,
                                std::vector<std::uint32_t> modulus) {
    GroupSpec s;
    s.kind = Kind::Field;
    s.field.p = p;
    s.field.n = n;
    s.field.modulus = std::move(modulus);
    return s;
}

GroupSpec GroupSpec::field_of_order(std::uint64_t q) {
    std::uint64_t p;
    unsigned n;
    if (!prime_power(q, p, n))
        throw std::invalid_argument("field order " + std::to_string(q) +
                                    " is not a prime power");
    return make_field(static_cast<std::uint32_t>(p), n);
}

GroupSpec GroupSpec::product(std::vector<FieldSpec> factors) {
    GroupSpec s;
    s.kind = Kind::Product;
    s.factors = std::move(factors);
    return s;
}

namespace poly {

std::vector<std::uint32_t> trim(std::vector<std::uint32_t> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<std::uint32_t> mulmod(const std::vector<std::uint32_t>& a,
                                  const std::vector<std::uint32_t>& b,
                                  const std::vector<std::uint32_t>& mod,
                                  std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    }
    const std::size_t n = mod.size() - 1;  // mod is monic of degree n
    for (std::size_t d = c.size(); d-- > n;) {
        std::uint64_t lead = c[d];
        if (!lead) continue;
        c[d] = 0;
        for (std::size_t i = 0; i < n; ++i)
            c[d - n + i] = (c[d - n + i] + std::uint64_t(p - mod[i] % p) * lead) % p;
    }
    std::vector<std::uint32_t> out(std::min<std::size_t>(c.size(), n));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint32_t>(c[i]);
    return trim(std::move(out));
}

namespace {

std::vector<std::uint32_t> powmod(std::vector<std::uint32_t> base, std::uint64_t e,
                                  const std::vector<std::uint32_t>& mod,
                                  std::uint32_t p) {
    std::vector<std::uint32_t> r = {1};
    while (e) {
        if (e & 1) r = mulmod(r, base, mod, p);
        base = mulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint32_t> submod(std::vector<std::uint32_t> a,
                                  const std::vector<std::uint32_t>& b,
                                  std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    return trim(std::move(a));
}

std::vector<std::uint32_t> gcd(std::vector<std::uint32_t> a,
                               std::vector<std::uint32_t> b, std::uint32_t p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        // a mod b
        std::uint32_t lead_inv = 1;
        {
            std::uint32_t lead = b.back();
            // Fermat inverse mod p
            std::uint64_t r = 1, base = lead, e = p - 2;
            while (e) {
                if (e & 1) r = r * base % p;
                base = base * base % p;
                e >>= 1;
            }
            lead_inv = static_cast<std::uint32_t>(r);
        }
        while (a.size() >= b.size()) {
            std::uint64_t f = std::uint64_t(a.back()) * lead_inv % p;
            if (f) {
                std::size_t off = a.size() - b.size();
                for (std::size_t i = 0; i < b.size(); ++i)
                    a[off + i] = static_cast<std::uint32_t>(
                        (a[off + i] + std::uint64_t(p) * p - f * b[i] % p) % p);
            }
            a = trim(std::move(a));
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const unsigned n = static_cast<unsigned>(f.size()) - 1;
    if (n == 0) return false;
    if (f.back() != 1) return false;
    if (n == 1) return true;
    // Rabin: x^(p^n) == x mod f, and gcd(x^(p^(n/r)) - x, f) = 1 for primes r|n.
    const std::vector<std::uint32_t> x = {0, 1};
    auto frob = [&](unsigned k) {  // x^(p^k) mod f
        std::vector<std::uint32_t> r = x;
        for (unsigned i = 0; i < k; ++i) r = powmod(r, p, f, p);
        return r;
    };
    if (trim(submod(frob(n), x, p)) != std::vector<std::uint32_t>{}) return false;
    for (auto [r, e] : factorize(n)) {
        (void)e;
        auto g = gcd(submod(frob(n / static_cast<unsigned>(r)), x, p), f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, unsigned n) {
    if (n == 1) return {0, 1};
    std::uint64_t count = 1;
    for (unsigned i = 0; i < n; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<std::uint32_t> f(n + 1, 0);
        std::uint64_t t = idx;
        for (unsigned i = 0; i < n; ++i) { f[i] = t % p; t /= p; }
        f[n] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace poly

GroupPtr Group::make(const GroupSpec& spec) {
    return GroupPtr(new Group(spec));
}

Group::Group(const GroupSpec& spec) : spec_(spec) {
    switch (spec_.kind) {
        case GroupSpec::Kind::Cyclic:
            if (spec_.cyclic_order < 1)
                throw std::invalid_argument("cyclic group order must be >= 1");
            order_ = spec_.cyclic_order;
            break;
        case GroupSpec::Kind::Field:
            build_field();
            break;
        case GroupSpec::Kind::Product: {
            if (spec_.factors.empty())
                throw std::invalid_argument("empty product group");
            order_ = 1;
            for (auto& fs : spec_.factors) {
                GroupSpec sub = GroupSpec::make_field(fs.p, fs.n, fs.modulus);
                components_.push_back(Group::make(sub));
                radix_.push_back(order_);
                order_ *= components_.back()->order();
            }
            // Keep the resolved moduli visible in the spec.
            for (std::size_t i = 0; i < components_.size(); ++i)
                spec_.factors[i] = components_[i]->spec().field;
            break;
        }
    }
}

void Group::build_field() {
    FieldSpec& fs = spec_.field;
    if (!is_prime(fs.p))
        throw std::invalid_argument(std::to_string(fs.p) + " is not prime");
    if (fs.n < 1) throw std::invalid_argument("field degree must be >= 1");
    if (fs.modulus.empty()) fs.modulus = poly::find_irreducible(fs.p, fs.n);
    if (fs.modulus.size() != fs.n + 1)
        throw std::invalid_argument("modulus degree does not match field degree");
    if (fs.modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic");
    for (auto c : fs.modulus)
        if (c >= fs.p) throw std::invalid_argument("modulus coefficient out of range");
    if (fs.n > 1 && !poly::is_irreducible(fs.modulus, fs.p))
        throw std::invalid_argument("modulus is reducible over Z_" +
                                    std::to_string(fs.p));
    order_ = 1;
    for (unsigned i = 0; i < fs.n; ++i) {
        if (order_ > (1ull << 40) / fs.p)
            throw std::invalid_argument("field order too large");
        order_ *= fs.p;
    }
    if (order_ > (1ull << 20))
        throw std::invalid_argument("field order above 2^20 is unsupported");

    // Find the least primitive element by raw polynomial arithmetic, then
    // memoize exp/log tables (optionally through BANFFKIT_CACHE_DIR).
    const std::uint64_t q1 = order_ - 1;
    auto raw_mul = [&](Elem a, Elem b) {
        auto ca = coeffs(a), cb = coeffs(b);
        auto cc = poly::mulmod(poly::trim(ca), poly::trim(cb), fs.modulus, fs.p);
        cc.resize(fs.n, 0);
        return from_coeffs(cc);
    };
    auto raw_pow = [&](Elem a, std::uint64_t e) {
        Elem r = 1, base = a;
        while (e) {
            if (e & 1) r = raw_mul(r, base);
            base = raw_mul(base, base);
            e >>= 1;
        }
        return r;
    };
    std::string cache_path;
    if (const char* dir = std::getenv("BANFFKIT_CACHE_DIR")) {
        std::ostringstream name;
        name << dir << "/gf_" << fs.p << "_" << fs.n;
        for (auto c : fs.modulus) name << "_" << c;
        name << ".logtab";
        cache_path = name.str();
        if (std::FILE* f = std::fopen(cache_path.c_str(), "rb")) {
            exp_.resize(q1);
            std::uint32_t prim = 0;
            bool ok = std::fread(&prim, sizeof prim, 1, f) == 1 &&
                      std::fread(exp_.data(), sizeof(Elem), q1, f) == q1;
            std::fclose(f);
            if (ok && prim < order_) {
                primitive_ = prim;
                log_.assign(order_, 0);
                for (std::uint64_t i = 0; i < q1; ++i)
                    log_[exp_[i]] = static_cast<std::uint32_t>(i);
                if (exp_[0] == 1 && (q1 == 1 || exp_[1] == primitive_)) return;
            }
            exp_.clear();
        }
    }

    auto fac = factorize(q1);
    primitive_ = 1;
    for (Elem x = 2; x < order_; ++x) {
        bool prim = true;
        for (auto [pr, e] : fac) {
            (void)e;
            if (raw_pow(x, q1 / pr) == 1) { prim = false; break; }
        }
        if (prim || q1 == 1) { primitive_ = (q1 == 1) ? 1 : x; break; }
    }
    exp_.resize(q1);
    log_.assign(order_, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < q1; ++i) {
        exp_[i] = x;
        log_[x] = static_cast<std::uint32_t>(i);
        x = raw_mul(x, primitive_);
    }
    if (x != 1) throw std::logic_error("primitive element bookkeeping failed");

    if (!cache_path.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(
            std::filesystem::path(cache_path).parent_path(), ec);
        if (std::FILE* f = std::fopen(cache_path.c_str(), "wb")) {
            std::uint32_t prim = primitive_;
            std::fwrite(&prim, sizeof prim, 1, f);
            std::fwrite(exp_.data(), sizeof(Elem), q1, f);
            std::fclose(f);
        }
    }
}

Elem Group::add(Elem a, Elem b) const {
    switch (spec_.kind) {
        case GroupSpec::Kind::Cyclic:
            return static_cast<Elem>((std::uint64_t(a) + b) % order_);
        case GroupSpec::Kind::Field: {
            const std::uint32_t p = spec_.field.p;
            Elem out = 0;
            std::uint64_t mul = 1;
            for (unsigned i = 0; i < spec_.field.n; ++i) {
                std::uint32_t da = a % p, db = b % p;
                a /= p;
                b /= p;
                out += static_cast<Elem>((da + db) % p * mul);
                mul *= p;
            }
            return out;
        }
        case GroupSpec::Kind::Product: {
            Elem out = 0;
            for (std::size_t i = 0; i < components_.size(); ++i) {
                Elem s = components_[i]->add(component_of(a, i), component_of(b, i));
                out += static_cast<Elem>(s * radix_[i]);
            }
            return out;
        }
    }
    return 0;
}

Elem Group::neg(Elem a) const {
    switch (spec_.kind) {
        case GroupSpec::Kind::Cyclic:
            return a ? static_cast<Elem>(order_ - a) : 0;
        case GroupSpec::Kind::Field: {
            const std::uint32_t p = spec_.field.p;
            Elem out = 0;
            std::uint64_t mul = 1;
            for (unsigned i = 0; i < spec_.field.n; ++i) {
                std::uint32_t d = a % p;
                a /= p;
                out += static_cast<Elem>((d ? p - d : 0) * mul);
                mul *= p;
            }
            return out;
        }
        case GroupSpec::Kind::Product: {
            Elem out = 0;
            for (std::size_t i = 0; i < components_.size(); ++i)
                out += static_cast<Elem>(components_[i]->neg(component_of(a, i)) *
                                         radix_[i]);
            return out;
        }
    }
    return 0;
}

std::uint32_t Group::characteristic() const {
    if (!is_field()) throw std::logic_error("characteristic: not a field");
    return spec_.field.p;
}

unsigned Group::degree() const {
    if (!is_field()) throw std::logic_error("degree: not a field");
    return spec_.field.n;
}

Elem Group::one() const {
    if (!is_field()) throw std::logic_error("one: not a field");
    return 1;
}

Elem Group::mul(Elem a, Elem b) const {
    if (!is_field()) throw std::logic_error("mul: not a field");
    if (a == 0 || b == 0) return 0;
    std::uint64_t q1 = order_ - 1;
    return exp_[(std::uint64_t(log_[a]) + log_[b]) % q1];
}

Elem Group::inv(Elem a) const {
    if (!is_field()) throw std::logic_error("inv: not a field");
    if (a == 0) throw std::invalid_argument("inverse of zero");
    std::uint64_t q1 = order_ - 1;
    return exp_[(q1 - log_[a]) % q1];
}

Elem Group::pow(Elem a, std::uint64_t e) const {
    if (!is_field()) throw std::logic_error("pow: not a field");
    if (a == 0) return e == 0 ? one() : 0;
    std::uint64_t q1 = order_ - 1;
    return exp_[std::uint64_t(log_[a]) % q1 * (e % q1) % q1];
}

std::uint64_t Group::mult_order(Elem a) const {
    if (!is_field()) throw std::logic_error("mult_order: not a field");
    if (a == 0) throw std::invalid_argument("order of zero");
    std::uint64_t q1 = order_ - 1;
    std::uint64_t o = q1 / std::gcd<std::uint64_t>(q1, log_[a]);
    return o;
}

Elem Group::primitive() const {
    if (!is_field()) throw std::logic_error("primitive: not a field");
    return primitive_;
}

std::uint64_t Group::log(Elem a) const {
    if (!is_field()) throw std::logic_error("log: not a field");
    if (a == 0) throw std::invalid_argument("log of zero");
    return log_[a];
}

Elem Group::exp(std::uint64_t i) const {
    if (!is_field()) throw std::logic_error("exp: not a field");
    return exp_[i % (order_ - 1)];
}

std::vector<std::uint32_t> Group::coeffs(Elem a) const {
    if (!is_field()) throw std::logic_error("coeffs: not a field");
    std::vector<std::uint32_t> c(spec_.field.n);
    for (unsigned i = 0; i < spec_.field.n; ++i) {
        c[i] = a % spec_.field.p;
        a /= spec_.field.p;
    }
    return c;
}

Elem Group::from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (!is_field()) throw std::logic_error("from_coeffs: not a field");
    if (c.size() > spec_.field.n)
        throw std::invalid_argument("coefficient vector too long");
    Elem a = 0;
    std::uint64_t mul = 1;
    for (unsigned i = 0; i < spec_.field.n; ++i) {
        std::uint32_t d = i < c.size() ? c[i] : 0;
        if (d >= spec_.field.p) throw std::invalid_argument("coefficient out of range");
        a += static_cast<Elem>(d * mul);
        mul *= spec_.field.p;
    }
    return a;
}

Elem Group::component_of(Elem a, std::size_t i) const {
    if (!is_product()) throw std::logic_error("component_of: not a product");
    return static_cast<Elem>(a / radix_[i] % components_[i]->order());
}

Elem Group::compose(const std::vector<Elem>& parts) const {
    if (!is_product()) throw std::logic_error("compose: not a product");
    if (parts.size() != components_.size())
        throw std::invalid_argument("component count mismatch");
    Elem a = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] >= components_[i]->order())
            throw std::invalid_argument("component out of range");
        a += static_cast<Elem>(parts[i] * radix_[i]);
    }
    return a;
}

std::string Group::describe() const {
    std::ostringstream os;
    switch (spec_.kind) {
        case GroupSpec::Kind::Cyclic:
            os << "Z_" << order_;
            break;
        case GroupSpec::Kind::Field:
            os << "GF(" << order_ << ")";
            if (spec_.field.n > 1) {
                os << " = Z_" << spec_.field.p << "[z]/(";
                bool first = true;
                for (unsigned i = spec_.field.n + 1; i-- > 0;) {
                    std::uint32_t c = spec_.field.modulus[i];
                    if (!c) continue;
                    if (!first) os << "+";
                    first = false;
                    if (i == 0 || c != 1) os << c;
                    if (i >= 1) os << "z";
                    if (i >= 2) os << "^" << i;
                }
                os << ")";
            }
            break;
        case GroupSpec::Kind::Product: {
            for (std::size_t i = 0; i < components_.size(); ++i) {
                if (i) os << " x ";
                os << "GF(" << components_[i]->order() << ")";
            }
            break;
        }
    }
    return os.str();
}

std::uint64_t CyclotomicTable::class_of(Elem x) const {
    if (x == 0) throw std::invalid_argument("class_of: zero element");
    return field->log(x) % e;
}

Elem find_primitive_element(const GroupPtr& field) {
    if (!field->is_field()) throw std::invalid_argument("not a field");
    return field->primitive();
}

CyclotomicTable cyclotomic_classes(const GroupPtr& field, std::uint64_t e) {
    if (!field->is_field()) throw std::invalid_argument("not a field");
    const std::uint64_t q1 = field->order() - 1;
    if (e == 0 || q1 % e != 0)
        throw std::invalid_argument("e = " + std::to_string(e) +
                                    " does not divide q-1 = " + std::to_string(q1));
    CyclotomicTable t;
    t.field = field;
    t.e = e;
    t.primitive = field->primitive();
    t.classes.assign(e, {});
    for (Elem x = 1; x < field->order(); ++x)
        t.classes[field->log(x) % e].push_back(x);
    return t;
}

std::vector<Elem> half_representatives(const CyclotomicTable& table) {
    const auto& c0 = table.classes[0];
    const auto& g = *table.field;
    Elem minus_one = g.neg(g.one());
    if (table.class_of(minus_one) != 0)
        throw std::invalid_argument("-1 is not in C^e_0");
    std::vector<Elem> s;
    for (Elem x : c0)
        if (x < g.neg(x)) s.push_back(x);
    if (2 * s.size() != c0.size())
        throw std::invalid_argument("{1,-1} does not split C^e_0 into pairs");
    return s;
}

std::optional<Elem> square_root(const GroupPtr& field, Elem a) {
    if (!field->is_field()) throw std::invalid_argument("not a field");
    if (a == 0) return 0;  // documented convention
    for (Elem x = 1; x < field->order(); ++x)
        if (field->mul(x, x) == a) return x;
    return std::nullopt;
}

std::vector<Elem> roots_of_unity(const GroupPtr& field, std::uint64_t k) {
    if (!field->is_field()) throw std::invalid_argument("not a field");
    const std::uint64_t q1 = field->order() - 1;
    if (k == 0 || q1 % k != 0)
        throw std::invalid_argument("k does not divide q-1");
    std::vector<Elem> out;
    for (std::uint64_t i = 0; i < k; ++i)
        out.push_back(field->exp(i * (q1 / k)));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_nth_power(const CyclotomicTable& table, Elem x) {
    return table.class_of(x) == 0;
}

bool is_nth_power(const GroupPtr& field, std::uint64_t m, Elem x) {
    if (x == 0) throw std::invalid_argument("is_nth_power: zero element");
    const std::uint64_t q1 = field->order() - 1;
    return field->log(x) % std::gcd(m, q1) == 0;
}

}  // namespace banffkit
