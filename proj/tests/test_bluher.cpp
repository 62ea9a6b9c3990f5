#include "doctest.h"

#include <set>

#include "biproj/bluher.hpp"

using namespace biproj;

TEST_CASE("frozen Bluher partition over GF(8)") {
    Field F(3);
    Subfield ctx(F, 1);
    auto p = bluher_partition(ctx);
    CHECK(p.I0 == std::vector<uint32_t>{2, 4, 6});
    CHECK(p.I1 == std::vector<uint32_t>{3, 5, 7});
    CHECK(p.I2 == std::vector<uint32_t>{0});
    CHECK(p.I3 == std::vector<uint32_t>{1});
    CHECK(p.I(0) == p.I0);
    CHECK_THROWS_AS(p.I(4), std::invalid_argument);
}

TEST_CASE("partition invariants for all coprime (k, l), l <= 8") {
    for (int l = 3; l <= 8; ++l) {
        Field F(l);
        for (int k = 1; k < l; ++k) {
            Subfield ctx(F, k);
            if (!ctx.coprime()) {
                CHECK_THROWS_AS(bluher_partition(ctx), std::invalid_argument);
                continue;
            }
            auto p = bluher_partition(ctx);
            uint64_t n = F.order();
            CHECK(p.I0.size() + p.I1.size() + p.I2.size() + p.I3.size() == n);
            // Each x contributes its value b = x^{q+1} + x exactly once.
            CHECK(p.I1.size() + 2 * p.I2.size() + 3 * p.I3.size() == n);
            // b = 0 always has the two roots x = 0 and x = 1.
            CHECK(p.I2 == std::vector<uint32_t>{0});
            // Root-count classes of x^{q+1} + x + b seen as the image multiset:
            // I_1 once, I_2 twice, I_3 three times.
            Multiset expect(F);
            for (uint32_t b : p.I1) expect.add(b);
            for (uint32_t b : p.I2) expect.add(b, 2);
            for (uint32_t b : p.I3) expect.add(b, 3);
            CHECK(image_multiset_qplus1(ctx) == expect);
        }
    }
}

TEST_CASE("frozen image multiset of x^(q+1) + x over GF(8)") {
    Field F(3);
    Subfield ctx(F, 1);
    Multiset m = image_multiset_qplus1(ctx);
    CHECK(m.total() == 8);
    CHECK(m.mult_of(0) == 2);
    CHECK(m.mult_of(1) == 3);
    CHECK(m.mult_of(3) == 1);
    CHECK(m.mult_of(5) == 1);
    CHECK(m.mult_of(7) == 1);
    CHECK(m.mult_of(2) == 0);
    CHECK(m.support() == std::vector<uint32_t>{0, 1, 3, 5, 7});
}

TEST_CASE("rho: frozen value, domain guard, and image multiset I_1 u I_3^[3]") {
    Field F3(3);
    Subfield c3(F3, 1);
    CHECK(rho(c3, F3.generator()) == 1);
    CHECK_THROWS_AS(rho(c3, 0), std::invalid_argument);
    CHECK_THROWS_AS(rho(c3, 1), std::invalid_argument);
    for (int l = 3; l <= 8; ++l) {
        Field F(l);
        for (int k = 1; k < l; ++k) {
            Subfield ctx(F, k);
            if (!ctx.coprime()) continue;
            auto p = bluher_partition(ctx);
            Multiset img(F);
            for (uint32_t x = 2; x < F.order(); ++x) img.add(rho(ctx, x));
            Multiset expect(F);
            for (uint32_t b : p.I1) expect.add(b);
            for (uint32_t b : p.I3) expect.add(b, 3);
            CHECK(img == expect);
        }
    }
}

TEST_CASE("direct_division: totals, zero guard") {
    Field F(3);
    Multiset S(F), T(F);
    S.add(1);
    S.add(2, 3);
    T.add(5, 2);
    T.add(7);
    Multiset R = direct_division(S, T);
    CHECK(R.total() == S.total() * T.total());
    CHECK(R.mult_of(F.div(2, 5)) >= 3 * 2);
    Multiset Z(F);
    Z.add(0);
    CHECK_THROWS_AS(direct_division(S, Z), std::invalid_argument);
}

TEST_CASE("difference sets from trace hyperplanes") {
    // Nonzero trace-0 elements form a Singer (2^l-1, 2^(l-1)-1, 2^(l-2)-1)
    // difference set; the trace-1 set is its (2^l-1, 2^(l-1), 2^(l-2)) complement.
    Field F3(3);
    std::vector<uint32_t> t0, t1;
    for (uint32_t x = 1; x < 8; ++x) (F3.trace(x) ? t1 : t0).push_back(x);
    CHECK(is_difference_set(t0, F3) == DifferenceSetParams{7, 3, 1});
    CHECK(is_difference_set(t1, F3) == DifferenceSetParams{7, 4, 2});
    Field F4(4);
    std::vector<uint32_t> s0, s1;
    for (uint32_t x = 1; x < 16; ++x) (F4.trace(x) ? s1 : s0).push_back(x);
    CHECK(is_difference_set(s0, F4) == DifferenceSetParams{15, 7, 3});
    CHECK(is_difference_set(s1, F4) == DifferenceSetParams{15, 8, 4});
    // The Bluher class I_1 over GF(8) is itself a (7,3,1) difference set.
    Subfield c3(F3, 1);
    CHECK(is_difference_set(bluher_partition(c3).I1, F3) == DifferenceSetParams{7, 3, 1});
    // Negative case and guards.
    CHECK(is_difference_set({1, 2}, F3) == std::nullopt);
    CHECK_THROWS_AS(is_difference_set({0, 1}, F3), std::invalid_argument);
    CHECK(is_difference_set({}, F3) == std::nullopt);
}

TEST_CASE("is_qplus1_power") {
    Field F(4);
    Subfield ctx(F, 1);  // q+1 = 3, gcd(3, 15) = 3: cubes form the index-3 subgroup
    int powers = 0;
    for (uint32_t x = 1; x < 16; ++x) powers += is_qplus1_power(ctx, x);
    CHECK(powers == 5);
    CHECK(is_qplus1_power(ctx, 1));
    CHECK_THROWS_AS(is_qplus1_power(ctx, 0), std::invalid_argument);
    // For odd l every element is a (q+1)-power.
    Field F5(5);
    Subfield c5(F5, 1);
    for (uint32_t x = 1; x < 32; ++x) CHECK(is_qplus1_power(c5, x));
}

TEST_CASE("multiset intersection lemma: holds for l = 4..8, fails only at l = 3") {
    for (int l = 4; l <= 8; ++l) {
        Field F(l);
        for (int k = 1; k < l; ++k) {
            Subfield ctx(F, k);
            if (!ctx.coprime()) continue;
            auto rep = multiset_intersection_lemma_check(ctx);
            CHECK(rep.holds);
            CHECK(rep.counterexamples.empty());
            CHECK(rep.mult_forms_ok);
            size_t expect_range = F.order() - 1;
            if (l % 2 == 0) {
                size_t powers = 0;
                for (uint32_t x = 1; x < F.order(); ++x) powers += is_qplus1_power(ctx, x);
                expect_range -= powers;
            }
            CHECK(rep.checked_range.size() == expect_range);
        }
    }
    // l = 3 is the genuine boundary case: exactly the non-cubes w, w^2, w^4 fail.
    Field F3(3);
    auto rep3 = multiset_intersection_lemma_check(Subfield(F3, 1));
    CHECK_FALSE(rep3.holds);
    CHECK(rep3.counterexamples == std::vector<uint32_t>{2, 4, 6});
    CHECK(rep3.mult_forms_ok);  // the mult_J closed forms still hold at l = 3
}
