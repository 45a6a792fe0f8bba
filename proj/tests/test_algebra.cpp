#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "banffkit/algebra.hpp"

using namespace banffkit;

TEST_CASE("primality and factorization") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK(is_prime(409));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(85));
    CHECK_FALSE(is_prime(529));

    auto f = factorize(84);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<std::uint64_t, unsigned>{2, 2});
    CHECK(f[1] == std::pair<std::uint64_t, unsigned>{3, 1});
    CHECK(f[2] == std::pair<std::uint64_t, unsigned>{7, 1});

    std::uint64_t p;
    unsigned n;
    CHECK(prime_power(529, p, n));
    CHECK(p == 23);
    CHECK(n == 2);
    CHECK(prime_power(7, p, n));
    CHECK(n == 1);
    CHECK_FALSE(prime_power(12, p, n));
    CHECK_FALSE(prime_power(1, p, n));
}

TEST_CASE("cyclic group arithmetic") {
    auto g = make_group(GroupSpec::cyclic(13));
    CHECK(g->order() == 13);
    CHECK(g->add(7, 8) == 2);
    CHECK(g->neg(4) == 9);
    CHECK(g->sub(3, 5) == 11);
    CHECK(g->zero() == 0);
    CHECK_THROWS(make_group(GroupSpec::cyclic(0)));
}

TEST_CASE("field construction and validation") {
    auto f25 = make_group(GroupSpec::make_field(5, 2, {2, 1, 1}));  // z^2+z+2
    CHECK(f25->order() == 25);
    CHECK(f25->characteristic() == 5);
    CHECK(f25->degree() == 2);

    // z^2+1 = (z+2)(z+3) over Z_5
    CHECK_THROWS(make_group(GroupSpec::make_field(5, 2, {1, 0, 1})));
    CHECK_THROWS(make_group(GroupSpec::make_field(6, 1)));   // composite p
    CHECK_THROWS(make_group(GroupSpec::make_field(5, 2, {2, 1, 2})));  // not monic
}

TEST_CASE("primitive elements") {
    CHECK(find_primitive_element(make_group(GroupSpec::make_field(13, 1))) == 2);
    CHECK(find_primitive_element(make_group(GroupSpec::make_field(7, 1))) == 3);
    auto f25 = make_group(GroupSpec::make_field(5, 2, {2, 1, 1}));
    Elem z = f25->from_coeffs({0, 1});
    CHECK(f25->mult_order(z) == 24);  // z itself generates

    // powers of the primitive enumerate all nonzero elements
    auto f49 = make_group(GroupSpec::make_field(7, 2, {3, 1, 1}));
    std::set<Elem> seen;
    for (std::uint64_t i = 0; i < 48; ++i) seen.insert(f49->exp(i));
    CHECK(seen.size() == 48);
    for (Elem x = 1; x < 49; ++x) CHECK(f49->exp(f49->log(x)) == x);
}

TEST_CASE("field arithmetic identities") {
    auto f = make_group(GroupSpec::make_field(37, 1));
    for (Elem x = 1; x < 37; ++x) {
        CHECK(f->mul(x, f->inv(x)) == f->one());
        CHECK(f->pow(x, 36) == f->one());
    }
    CHECK(f->mul(13, 13) == (13 * 13) % 37);
}

TEST_CASE("cyclotomic classes over GF(37) match the known e=6 partition") {
    auto f = make_group(GroupSpec::make_field(37, 1));
    auto table = cyclotomic_classes(f, 6);
    REQUIRE(table.classes.size() == 6);
    std::set<std::set<Elem>> got;
    for (const auto& c : table.classes) got.insert({c.begin(), c.end()});
    std::set<std::set<Elem>> want = {
        {1, 10, 11, 26, 27, 36}, {2, 20, 22, 15, 17, 35},
        {4, 3, 7, 30, 34, 33},   {8, 6, 14, 23, 31, 29},
        {16, 12, 28, 9, 25, 21}, {32, 24, 19, 18, 13, 5}};
    CHECK(got == want);
    // class 0 is the subgroup containing 1
    CHECK(table.class_of(1) == 0);
}

TEST_CASE("cyclotomic class structure") {
    auto f = make_group(GroupSpec::make_field(13, 1));
    auto t1 = cyclotomic_classes(f, 1);
    REQUIRE(t1.classes.size() == 1);
    CHECK(t1.classes[0].size() == 12);

    auto t6 = cyclotomic_classes(f, 6);
    REQUIRE(t6.classes.size() == 6);
    for (const auto& c : t6.classes) {
        REQUIRE(c.size() == 2);
        CHECK(c[1] == f->neg(c[0]));  // each class is {x, -x}
    }
    CHECK_THROWS(cyclotomic_classes(f, 5));  // 5 does not divide 12

    // multiplication by c in C^e_j maps C^e_i onto C^e_{i+j}
    auto f61 = make_group(GroupSpec::make_field(61, 1));
    auto t = cyclotomic_classes(f61, 6);
    for (std::uint64_t j = 0; j < 6; ++j) {
        Elem c = t.classes[j][1];
        for (std::uint64_t i = 0; i < 6; ++i)
            for (Elem x : t.classes[i])
                CHECK(t.class_of(f61->mul(c, x)) == (i + j) % 6);
    }
}

TEST_CASE("half representatives") {
    auto f37 = make_group(GroupSpec::make_field(37, 1));
    auto t = cyclotomic_classes(f37, 6);
    auto s = half_representatives(t);
    CHECK(s == std::vector<Elem>{1, 10, 11});

    auto f13 = make_group(GroupSpec::make_field(13, 1));
    auto t13 = cyclotomic_classes(f13, 6);
    CHECK(half_representatives(t13) == std::vector<Elem>{1});

    // union with negatives reproduces C^e_0 exactly
    for (std::uint64_t q : {13, 37, 61, 73}) {
        auto f = make_group(GroupSpec::field_of_order(q));
        auto tab = cyclotomic_classes(f, 6);
        auto half = half_representatives(tab);
        std::set<Elem> u;
        for (Elem x : half) {
            u.insert(x);
            u.insert(f->neg(x));
        }
        std::set<Elem> c0(tab.classes[0].begin(), tab.classes[0].end());
        CHECK(u == c0);
        CHECK(half.size() * 2 == c0.size());
    }
}

TEST_CASE("square roots") {
    auto f41 = make_group(GroupSpec::make_field(41, 1));
    CHECK(square_root(f41, 5) == 13);
    auto f13 = make_group(GroupSpec::make_field(13, 1));
    CHECK_FALSE(square_root(f13, 2).has_value());
    CHECK(square_root(f13, 1) == 1);
    CHECK(square_root(f13, 0) == 0);

    for (std::uint64_t q : {13ull, 41ull, 25ull, 49ull}) {
        auto f = make_group(GroupSpec::field_of_order(q));
        std::size_t with_root = 0;
        for (Elem a = 0; a < q; ++a) {
            auto r = square_root(f, a);
            if (r) {
                ++with_root;
                CHECK(f->mul(*r, *r) == a);
            }
        }
        CHECK(with_root == (q + 1) / 2 + (q % 2 == 0 ? 0 : 0));
        CHECK(with_root == (q + 1) / 2);
    }
}

TEST_CASE("roots of unity") {
    auto f41 = make_group(GroupSpec::make_field(41, 1));
    auto r5 = roots_of_unity(f41, 5);
    CHECK(std::set<Elem>(r5.begin(), r5.end()) ==
          std::set<Elem>{1, 10, 18, 16, 37});
    auto f13 = make_group(GroupSpec::make_field(13, 1));
    CHECK(roots_of_unity(f13, 1) == std::vector<Elem>{1});
    auto r3 = roots_of_unity(f13, 3);
    CHECK(std::set<Elem>(r3.begin(), r3.end()) == std::set<Elem>{1, 3, 9});
    CHECK_THROWS(roots_of_unity(f13, 5));
}

TEST_CASE("n-th power membership") {
    auto f13 = make_group(GroupSpec::make_field(13, 1));
    CHECK_FALSE(is_nth_power(f13, 2, 2));
    CHECK(is_nth_power(f13, 2, 3));
    std::set<Elem> residues;
    for (Elem x = 1; x < 13; ++x)
        if (is_nth_power(f13, 2, x)) residues.insert(x);
    CHECK(residues == std::set<Elem>{1, 3, 4, 9, 10, 12});
    CHECK(is_nth_power(f13, 7, 1));

    auto f41 = make_group(GroupSpec::make_field(41, 1));
    std::set<Elem> fourth;
    for (Elem x = 1; x < 41; ++x) fourth.insert(f41->pow(x, 4));
    for (Elem x = 1; x < 41; ++x)
        CHECK(is_nth_power(f41, 4, x) == (fourth.count(x) > 0));
}

TEST_CASE("product groups") {
    auto g = make_group(GroupSpec::product(
        {FieldSpec{7, 1, {}}, FieldSpec{13, 1, {}}}));
    CHECK(g->order() == 91);
    CHECK(g->component_count() == 2);
    Elem a = g->compose({3, 5});
    Elem b = g->compose({6, 10});
    Elem s = g->add(a, b);
    CHECK(g->component_of(s, 0) == 2);   // 3+6 mod 7
    CHECK(g->component_of(s, 1) == 2);   // 5+10 mod 13
    CHECK(g->add(a, g->neg(a)) == 0);
    CHECK_THROWS(g->mul(a, b));  // products are not fields
}
