#include "doctest.h"

#include <numeric>
#include <set>

#include "biproj/gf2l.hpp"

using namespace biproj;

namespace {
uint64_t rng_state = 0x243f6a8885a308d3ull;
uint64_t rnd() {
    rng_state ^= rng_state << 13;
    rng_state ^= rng_state >> 7;
    rng_state ^= rng_state << 17;
    return rng_state;
}
}  // namespace

TEST_CASE("GF(8) frozen arithmetic values") {
    Field F(3);
    CHECK(F.modulus() == 0b1011);  // x^3 + x + 1, lexicographically smallest
    uint32_t w = F.generator();
    CHECK(w == 0b010);
    CHECK((w ^ F.mul(w, w)) == 0b110);      // w + w^2
    CHECK(F.mul(w, F.mul(w, w)) == 0b011);  // w * w^2 = w^3 = w + 1
    CHECK(F.trace(w) == 0);
    CHECK(F.frob(w, 1) == F.mul(w, w));  // Frobenius is squaring
    // Powers of the generator.
    CHECK(F.pow(w, 3) == 3);
    CHECK(F.pow(w, 4) == 6);
    CHECK(F.pow(w, 5) == 7);
    CHECK(F.pow(w, 6) == 5);
    CHECK(F.pow(w, 7) == 1);
}

TEST_CASE("field axioms exhaustively for l <= 4") {
    for (int l = 1; l <= 4; ++l) {
        Field F(l);
        uint32_t n = static_cast<uint32_t>(F.order());
        for (uint32_t a = 0; a < n; ++a) {
            CHECK(Field::add(a, a) == 0);
            CHECK(Field::add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            if (a != 0) {
                CHECK(F.mul(a, F.inv(a)) == 1);
                CHECK(F.pow(a, F.order() - 1) == 1);
            }
            for (uint32_t b = 0; b < n; ++b) {
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (uint32_t c = 0; c < n; ++c) {
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    CHECK(F.mul(a, b ^ c) == (F.mul(a, b) ^ F.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("field axioms on random samples for l <= 8") {
    for (int l = 5; l <= 8; ++l) {
        Field F(l);
        uint32_t n = static_cast<uint32_t>(F.order());
        for (int it = 0; it < 2000; ++it) {
            uint32_t a = rnd() % n, b = rnd() % n, c = rnd() % n;
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.mul(a, b ^ c) == (F.mul(a, b) ^ F.mul(a, c)));
            if (a) CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.sqr(a) == F.mul(a, a));
        }
    }
}

TEST_CASE("inversion of zero throws") {
    Field F(3);
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
    CHECK_THROWS_AS(F.div(1, 0), std::domain_error);
}

TEST_CASE("trace and relative trace") {
    for (int l = 1; l <= 8; ++l) {
        Field F(l);
        CHECK(F.trace(0) == 0);
        CHECK(F.trace(1) == static_cast<uint32_t>(l % 2));
        for (uint32_t a = 0; a < F.order(); ++a) {
            CHECK(F.trace(F.sqr(a)) == F.trace(a));  // Frobenius invariance
            for (uint32_t b = 0; b < F.order(); b += 7)
                CHECK(F.trace(a ^ b) == (F.trace(a) ^ F.trace(b)));
        }
    }
    // Relative trace lands in the subfield and is transitive with the absolute trace.
    Field F(6);
    for (uint32_t a = 0; a < F.order(); ++a) {
        uint32_t t = F.relative_trace(a, 2);
        CHECK(F.frob(t, 2) == t);  // fixed by x -> x^4, so in GF(4)
    }
    CHECK_THROWS_AS(F.relative_trace(1, 4), std::invalid_argument);
}

TEST_CASE("frobenius powers") {
    Field F(5);
    for (uint32_t a = 0; a < F.order(); ++a) {
        CHECK(F.frob(a, 5) == a);
        CHECK(F.frob(a, 1) == F.sqr(a));
        for (uint32_t b = 0; b < F.order(); b += 3)
            CHECK(F.frob(a ^ b, 3) == (F.frob(a, 3) ^ F.frob(b, 3)));
    }
}

TEST_CASE("gcd_exponent_facts closed forms") {
    // Frozen small cases.
    CHECK(gcd_exponent_facts(2, 4).gcd_plus == 5);
    CHECK(gcd_exponent_facts(1, 3).gcd_plus == 1);
    CHECK(gcd_exponent_facts(2, 4).gcd_minus == 3);
    // Against direct integer gcd for all 1 <= k < l <= 20.
    for (int l = 2; l <= 20; ++l)
        for (int k = 1; k < l; ++k) {
            auto g = gcd_exponent_facts(k, l);
            CHECK(g.gcd_minus == std::gcd((uint64_t(1) << k) - 1, (uint64_t(1) << l) - 1));
            CHECK(g.gcd_plus == std::gcd((uint64_t(1) << k) + 1, (uint64_t(1) << l) - 1));
        }
}

TEST_CASE("hilbert90: GF(4) frozen example") {
    Field F(2);
    CHECK(F.modulus() == 0b111);
    // a = 1 has absolute trace 0 in GF(4); x^2 + x = 1 has solutions {w, w+1} = {2, 3}.
    auto x = hilbert90_solve(F, 1, 1);
    REQUIRE(x.has_value());
    CHECK((F.sqr(*x) ^ *x) == 1);
    CHECK((*x == 2 || *x == 3));
}

TEST_CASE("hilbert90 solution-set structure, exhaustive l <= 5") {
    for (int l = 2; l <= 5; ++l) {
        Field F(l);
        for (int k = 1; k < l; ++k) {
            int delta = std::gcd(k, l);
            auto sub = F.subfield_elements(delta);
            for (uint32_t a = 0; a < F.order(); ++a) {
                auto x = hilbert90_solve(F, a, k);
                bool solvable = F.relative_trace(a, delta) == 0;
                CHECK(x.has_value() == solvable);
                if (x) {
                    CHECK((F.frob(*x, k) ^ *x) == a);
                    // Full solution set is {x + eps : eps in GF(2^delta)}.
                    std::set<uint32_t> sols;
                    for (uint32_t y = 0; y < F.order(); ++y)
                        if ((F.frob(y, k) ^ y) == a) sols.insert(y);
                    std::set<uint32_t> expect;
                    for (uint32_t e : sub) expect.insert(*x ^ e);
                    CHECK(sols == expect);
                }
            }
        }
    }
}

TEST_CASE("linearized_kernel") {
    Field F(3);
    Subfield s(F, 1);
    // a = b = 1: kernel = GF(2).
    CHECK(linearized_kernel(F, 1, 1, 1) == std::vector<uint32_t>{0, 1});
    // a = 1, b = 0: kernel = {0}.
    CHECK(linearized_kernel(F, 1, 0, 1) == std::vector<uint32_t>{0});
    // b/a = w: x^2 = w x has the root x = w (and 0).
    uint32_t w = F.generator();
    auto ker = linearized_kernel(F, 1, w, 1);
    CHECK(ker == std::vector<uint32_t>{0, w});
    CHECK_THROWS_AS(linearized_kernel(F, 0, 0, 1), std::invalid_argument);
    // Kernel size is 1 or 2^delta for all (a,b) over a delta > 1 subfield.
    Field F6(6);
    for (int it = 0; it < 200; ++it) {
        uint32_t a = rnd() % 64, b = rnd() % 64;
        if (a == 0 && b == 0) continue;
        auto kk = linearized_kernel(F6, a, b, 2);
        CHECK((kk.size() == 1 || kk.size() == 4));
    }
}

TEST_CASE("field config parsing and modulus override") {
    Field F = Field::from_config("l=3\nmodulus=b\n");
    CHECK(F.degree() == 3);
    CHECK(F.modulus() == 0xb);
    Field G = Field::from_config("l=4");
    CHECK(G.degree() == 4);
    CHECK(G.modulus() == Field(4).modulus());
    CHECK_THROWS_AS(Field(3, 0b1010), std::invalid_argument);  // reducible
    CHECK_THROWS_AS(Field::from_config("modulus=b"), std::invalid_argument);
}

TEST_CASE("subfield parameters") {
    Field F(6);
    Subfield s(F, 4);
    CHECK(s.q == 16);
    CHECK(s.delta == 2);
    CHECK(s.subfield_order == 4);
    CHECK_FALSE(s.coprime());
    Subfield t(F, 1);
    CHECK(t.coprime());
    CHECK_THROWS_AS(Subfield(F, 0), std::invalid_argument);
    CHECK_THROWS_AS(Subfield(F, 6), std::invalid_argument);
    for (uint32_t a = 0; a < F.order(); ++a) CHECK(s.powq[a] == F.frob(a, 4));
}

TEST_CASE("FieldElement wrapper obeys field ops and rejects field mismatches") {
    Field F(3), G(4);
    FieldElement a{3, F}, b{5, F};
    CHECK((a + b).bits == 6);
    CHECK((a * b).bits == F.mul(3, 5));
    CHECK((a / b).bits == F.div(3, 5));
    CHECK(a.inv().bits == F.inv(3));
    FieldElement c{1, G};
    CHECK_THROWS_AS(a + c, std::invalid_argument);
    CHECK_THROWS_AS(a * c, std::invalid_argument);
}
