#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arcforge/field.hpp"
#include "oracles.hpp"

using namespace arcforge;

namespace {

std::vector<GFPtr> axiom_fields() {
    return {GF::make(2, 1), GF::make(2, 4), GF::make(2, 6), GF::make(3, 4),
            GF::make(5, 2), GF::make(7, 2)};
}

}  // namespace

TEST_CASE("modulus selection is the smallest irreducible by candidate code") {
    CHECK(GF::make(2, 1)->modulus() == std::vector<u64>{0, 1});
    CHECK(GF::make(2, 4)->modulus() == std::vector<u64>{1, 1, 0, 0, 1});  // X^4+X+1
    CHECK(GF::make(3, 2)->modulus() == std::vector<u64>{1, 0, 1});        // X^2+1
    // cross-check against the brute-force scan
    const std::pair<u64, unsigned> cases[] = {{2, 2}, {2, 5}, {2, 8}, {3, 3}, {5, 3}, {7, 2}};
    for (auto [p, m] : cases) {
        CHECK(GF::make(p, m)->modulus() == oracle::smallest_irreducible(p, m));
    }
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(GF::make(4, 2), std::invalid_argument);   // non-prime p
    CHECK_THROWS_AS(GF::make(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(GF::make(2, 0), std::invalid_argument);
    // X^2 + 1 = (X+1)^2 over GF(2)
    CHECK_THROWS_AS(GF::make(2, 2, {1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(GF::make(2, 2, {1, 1}), std::invalid_argument);  // wrong degree
    CHECK_NOTHROW(GF::make(2, 2, {1, 1, 1}));
}

TEST_CASE("field axioms on randomized triples") {
    for (const auto& F : axiom_fields()) {
        std::mt19937_64 rng(7);
        const u64 Q = F->order();
        for (int i = 0; i < 10000; ++i) {
            const u64 x = rng() % Q, y = rng() % Q, z = rng() % Q;
            CHECK(F->add(x, y) == F->add(y, x));
            CHECK(F->mul(x, y) == F->mul(y, x));
            CHECK(F->add(F->add(x, y), z) == F->add(x, F->add(y, z)));
            CHECK(F->mul(F->mul(x, y), z) == F->mul(x, F->mul(y, z)));
            CHECK(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
            CHECK(F->add(x, F->neg(x)) == 0);
            CHECK(F->sub(x, y) == F->add(x, F->neg(y)));
            if (x != 0) {
                CHECK(F->mul(x, F->inv(x)) == 1);
            }
        }
    }
}

TEST_CASE("digit path beyond the table limit agrees with table-backed subfield arithmetic") {
    // GF(2^25) and GF(3^14) exceed the table limit; exercise raw digit ops
    const auto big2 = GF::make(2, 25);
    const auto big3 = GF::make(3, 14);
    std::mt19937_64 rng(11);
    for (const auto& F : {big2, big3}) {
        const u64 Q = F->order();
        for (int i = 0; i < 2000; ++i) {
            const u64 x = rng() % Q, y = rng() % Q;
            CHECK(F->mul(x, y) == F->mul(y, x));
            CHECK(F->mul(x, F->add(y, 1)) == F->add(F->mul(x, y), x));
            if (x != 0) CHECK(F->mul(x, F->inv(x)) == 1);
            CHECK(F->pow(x, F->order() - 1) == (x == 0 ? 0 : 1));
        }
    }
}

TEST_CASE("multiplication examples") {
    const auto F4 = GF::make(2, 2);
    CHECK(F4->modulus() == std::vector<u64>{1, 1, 1});
    CHECK(F4->mul(2, 2) == 3);  // a*a = a+1
    CHECK(F4->inv(1) == 1);
    for (u64 x = 1; x < 4; ++x) CHECK(F4->pow(x, 3) == 1);
}

TEST_CASE("pow agrees with repeated multiplication and takes big exponents") {
    const auto F = GF::make(3, 4);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const u64 x = rng() % F->order();
        u64 acc = 1;
        for (u64 k = 0; k <= 64; ++k) {
            CHECK(F->pow(x, k) == acc);
            acc = F->mul(acc, x);
        }
    }
    const u64 x = 5;
    const bigint e = bigint(F->order() - 1) * 123456789 + 1;
    CHECK(F->pow(x, e) == x);
    CHECK(F->pow(0, bigint(0)) == 1);
    CHECK(F->pow(0, bigint(17)) == 0);
}

TEST_CASE("frobenius is a homomorphism fixing exactly the subfield") {
    const auto F = GF::make(3, 2);  // GF(9), modulus X^2+1
    CHECK(F->frobenius(0, 3) == 0);
    CHECK(F->frobenius(3, 3) == F->neg(3));  // a^3 = -a
    const auto F64 = GF::make(2, 6);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        const u64 x = rng() % 64, y = rng() % 64;
        CHECK(F64->frobenius(F64->add(x, y), 4) ==
              F64->add(F64->frobenius(x, 4), F64->frobenius(y, 4)));
        CHECK(F64->frobenius(F64->mul(x, y), 4) ==
              F64->mul(F64->frobenius(x, 4), F64->frobenius(y, 4)));
        CHECK(F64->frobenius(F64->frobenius(x, 4), 4) == F64->frobenius(x, 16));
    }
    u64 fixed = 0;
    for (u64 x = 0; x < 64; ++x)
        if (F64->frobenius(x, 4) == x) ++fixed;
    CHECK(fixed == 4);
    CHECK_THROWS_AS(F64->frobenius(1, 6), std::invalid_argument);
}

TEST_CASE("subfield membership") {
    const auto F = GF::make(3, 4);  // GF(81)
    CHECK(F->in_subfield(1, 3));
    u64 in9 = 0;
    for (u64 x = 0; x < 81; ++x)
        if (F->in_subfield(x, 9)) ++in9;
    CHECK(in9 == 9);
    CHECK(F->subfield_elements(9).size() == 9);
    CHECK(F->subfield_elements(3).size() == 3);
    // a multiplicative generator has order 80, not dividing 8
    bool found_generator_outside = false;
    for (u64 g = 2; g < 81; ++g) {
        bool primitive = true;
        for (u64 d : {40, 16, 8, 10, 5, 2, 1}) {
            if (d < 80 && F->pow(g, d) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            CHECK_FALSE(F->in_subfield(g, 9));
            found_generator_outside = true;
            break;
        }
    }
    CHECK(found_generator_outside);
    CHECK_THROWS_AS(F->in_subfield(1, 27), std::invalid_argument);  // 3 does not divide 4
    CHECK_THROWS_AS(F->in_subfield(1, 5), std::invalid_argument);
}

TEST_CASE("relative trace and norm") {
    const auto F4 = GF::make(2, 2);
    CHECK(F4->rel_trace(0, 2) == 0);
    CHECK(F4->rel_trace(2, 2) == 1);  // a + a^2 = 1
    const auto F = GF::make(2, 6);
    std::mt19937_64 rng(13);
    // trace lands in the subfield, is linear and has fibers of size Q/s
    std::map<u64, u64> fiber;
    for (u64 x = 0; x < 64; ++x) {
        const u64 t = F->rel_trace(x, 4);
        CHECK(F->in_subfield(t, 4));
        ++fiber[t];
        CHECK(F->in_subfield(F->rel_norm(x, 4), 4));
    }
    CHECK(fiber.size() == 4);  // surjective
    for (const auto& [v, c] : fiber) CHECK(c == 16);
    for (int i = 0; i < 100; ++i) {
        const u64 x = rng() % 64, y = rng() % 64;
        CHECK(F->rel_trace(F->add(x, y), 4) == F->add(F->rel_trace(x, 4), F->rel_trace(y, 4)));
        if (x != 0) CHECK(F->rel_norm(x, 4) == F->pow(x, 63 / 3));
    }
}

TEST_CASE("enumeration order and element codec") {
    const auto F2 = GF::make(2, 1);
    CHECK(F2->order() == 2);  // stream [0, 1]
    const auto F4 = GF::make(2, 2);
    CHECK(F4->order() == 4);
    CHECK(F4->coeffs(0) == std::vector<u64>{0, 0});
    const auto F = GF::make(3, 4);
    CHECK(F->order() == 81);
    for (u64 x = 0; x < 81; ++x) CHECK(F->from_coeffs(F->coeffs(x)) == x);
    CHECK_THROWS_AS(F->from_coeffs({3}), std::invalid_argument);
}

TEST_CASE("serialization formats") {
    const auto F = GF::make(2, 4);
    CHECK(F->descriptor() == "GF(2^4; modulus=1,1,0,0,1)");
    CHECK(F->elem_str(0) == "0");
    CHECK(F->elem_str(1) == "1");
    CHECK(F->elem_str(2) == "g");
    CHECK(F->elem_str(3) == "g+1");
    CHECK(F->elem_str(10) == "g^3+g");
    const auto F9 = GF::make(3, 2);
    CHECK(F9->elem_str(7) == "2g+1");
    CHECK(GF::make(5, 1)->elem_str(3) == "3");
}

TEST_CASE("inversion of zero and enumeration bound") {
    const auto F = GF::make(2, 4);
    CHECK_THROWS_AS(F->inv(0), std::domain_error);
    set_max_enumeration(10);
    CHECK_THROWS_AS(F->require_enumerable(), std::runtime_error);
    set_max_enumeration(0);  // restore default
    CHECK_NOTHROW(F->require_enumerable());
}
