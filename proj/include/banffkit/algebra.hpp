#ifndef BANFFKIT_ALGEBRA_HPP
#define BANFFKIT_ALGEBRA_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace banffkit {

// Canonical element handle: an index in [0, order).
// Cyclic groups use the residue itself; fields use the base-p value of the
// coefficient vector (constant term least significant); products use a
// mixed-radix composition of the component indices.
using Elem = std::uint32_t;

bool is_prime(std::uint64_t n);
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// If q = p^n for a prime p, fills p and n and returns true.
bool prime_power(std::uint64_t q, std::uint64_t& p, unsigned& n);

struct FieldSpec {
    std::uint32_t p = 0;
    unsigned n = 1;
    // Modulus polynomial, coefficients low-to-high, size n+1, monic.
    // Empty means "choose deterministically" (least in canonical order).
    std::vector<std::uint32_t> modulus;
};

struct GroupSpec {
    enum class Kind { Cyclic, Field, Product };
    Kind kind = Kind::Cyclic;
    std::uint64_t cyclic_order = 0;
    FieldSpec field;
    std::vector<FieldSpec> factors;

    static GroupSpec cyclic(std::uint64_t v);
    static GroupSpec make_field(std::uint32_t p, unsigned n,
                                std::vector<std::uint32_t> modulus = {});
    // Field of order q = p^n with a deterministically chosen modulus.
    static GroupSpec field_of_order(std::uint64_t q);
    static GroupSpec product(std::vector<FieldSpec> factors);
};

// Polynomial utilities over Z_p (coefficients low-to-high).
namespace poly {
std::vector<std::uint32_t> trim(std::vector<std::uint32_t> a);
std::vector<std::uint32_t> mulmod(const std::vector<std::uint32_t>& a,
                                  const std::vector<std::uint32_t>& b,
                                  const std::vector<std::uint32_t>& mod,
                                  std::uint32_t p);
bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p);
// Least monic irreducible of degree n over Z_p, constants enumerated first.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, unsigned n);
}  // namespace poly

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// Immutable finite abelian group, optionally with field structure.
class Group {
  public:
    static GroupPtr make(const GroupSpec& spec);

    const GroupSpec& spec() const { return spec_; }
    std::uint64_t order() const { return order_; }
    bool is_cyclic() const { return spec_.kind == GroupSpec::Kind::Cyclic; }
    bool is_field() const { return spec_.kind == GroupSpec::Kind::Field; }
    bool is_product() const { return spec_.kind == GroupSpec::Kind::Product; }

    Elem zero() const { return 0; }
    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    // Field-only operations; throw std::logic_error on non-fields.
    std::uint32_t characteristic() const;
    unsigned degree() const;
    Elem one() const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;
    std::uint64_t mult_order(Elem a) const;
    Elem primitive() const;                 // least index of full order
    std::uint64_t log(Elem a) const;        // discrete log base primitive()
    Elem exp(std::uint64_t i) const;        // primitive()^i

    // Field element <-> coefficient vector (length = degree).
    std::vector<std::uint32_t> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<std::uint32_t>& c) const;

    // Product access.
    std::size_t component_count() const { return components_.size(); }
    const GroupPtr& component(std::size_t i) const { return components_[i]; }
    Elem component_of(Elem a, std::size_t i) const;
    Elem compose(const std::vector<Elem>& parts) const;

    std::string describe() const;

  private:
    explicit Group(const GroupSpec& spec);
    void build_field();

    GroupSpec spec_;
    std::uint64_t order_ = 0;
    // Field internals.
    Elem primitive_ = 0;
    std::vector<Elem> exp_;            // exp_[i] = g^i, size q-1
    std::vector<std::uint32_t> log_;   // log_[x], x != 0
    // Product internals.
    std::vector<GroupPtr> components_;
    std::vector<std::uint64_t> radix_;  // cumulative products for mixed radix
};

// make_group per the library surface; validates the spec.
inline GroupPtr make_group(const GroupSpec& spec) { return Group::make(spec); }

struct CyclotomicTable {
    GroupPtr field;
    std::uint64_t e = 1;
    Elem primitive = 0;
    std::vector<std::vector<Elem>> classes;  // classes[i] sorted by index

    std::uint64_t class_of(Elem x) const;    // x nonzero
};

Elem find_primitive_element(const GroupPtr& field);
CyclotomicTable cyclotomic_classes(const GroupPtr& field, std::uint64_t e);

// S with S ∪ -S = C^e_0, S ∩ -S = ∅; requires -1 ∈ C^e_0.
std::vector<Elem> half_representatives(const CyclotomicTable& table);

// Canonical-first square root; 0 maps to 0, non-residues to nullopt.
std::optional<Elem> square_root(const GroupPtr& field, Elem a);

std::vector<Elem> roots_of_unity(const GroupPtr& field, std::uint64_t k);

bool is_nth_power(const CyclotomicTable& table, Elem x);
bool is_nth_power(const GroupPtr& field, std::uint64_t m, Elem x);

}  // namespace banffkit

#endif
