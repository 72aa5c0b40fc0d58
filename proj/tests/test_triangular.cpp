#include "doctest.h"

#include "pfrob/apery.hpp"
#include "pfrob/denumerant.hpp"
#include "pfrob/error.hpp"
#include "pfrob/oracle.hpp"
#include "pfrob/triangular.hpp"

using namespace pfrob;

TEST_CASE("p = 0 closed form") {
    CHECK(g_p0(2) == 17);
    CHECK(g_p0(5) == 125);
    CHECK(g_p0(6) == 251);
    for (std::int64_t n = 2; n <= 10000; ++n) CHECK(g_p0_floor_form(n) == g_p0_parity_form(n));
    for (std::int64_t n = 2; n <= 30; ++n) CHECK(g_p0(n) == p_frobenius(triangular_triple(n), 0));
}

TEST_CASE("general-p level and value") {
    auto a = theorem1_point(2, 1);
    CHECK(a.p_index == 5);
    CHECK(a.g_value == 47);
    CHECK(p_frobenius(GeneratorSet::normalize({3, 6, 10}), 5) == 47);

    CHECK(theorem1_point(3, 0).p_index == 0);
    CHECK(theorem1_point(3, 0).g_value == 29);
    CHECK(theorem1_point(4, 0).g_value == 89);
    CHECK_THROWS_AS(theorem1_point(1, 0), Error);

    for (std::int64_t n = 2; n <= 40; ++n) {
        CHECK(theorem1_point(n, 0).g_value == g_p0(n));
        std::int64_t prev = -1;
        for (std::int64_t p = 0; p <= 6; ++p) {
            auto pt = theorem1_point(n, p);
            CHECK(pt.p_index >= prev);
            prev = pt.p_index;
        }
    }
}

TEST_CASE("general-p points are exact and agree with the engine") {
    for (std::int64_t n = 2; n <= 11; ++n)
        for (std::int64_t p = 0; p <= 4; ++p) {
            CAPTURE(n);
            CAPTURE(p);
            auto pt = theorem1_point(n, p);
            auto T = triangular_triple(n);
            CHECK(p_frobenius(T, pt.p_index) == pt.g_value);
            CHECK(static_cast<std::int64_t>(denumerant(T, pt.g_value)) == pt.p_index);
        }
}

TEST_CASE("the p = 1 value brackets between general-p levels") {
    for (std::int64_t n = 2; n <= 12; ++n) {
        auto T = triangular_triple(n);
        std::int64_t below = -1, above = -1;
        for (std::int64_t p = 0; p <= 10 && above < 0; ++p) {
            auto pt = theorem1_point(n, p);
            if (pt.p_index <= 1) below = pt.g_value;
            if (pt.p_index >= 1) above = pt.g_value;
        }
        REQUIRE(below >= 0);
        REQUIRE(above >= 0);
        CHECK(below <= g_p1(n));
        CHECK(g_p1(n) <= above);
        CHECK(g_p1(n) == p_frobenius(T, 1));
    }
}

TEST_CASE("p = 1 and p = 2") {
    CHECK(g_p1(2) == 23);
    CHECK(g_p1(4) == 119);
    CHECK(g_p1(7) == 503);
    CHECK_THROWS_AS(g_p1(1), Error);
    CHECK(g_p2(5) == 230);
    CHECK(g_p2(8) == 899);
    CHECK(g_p2(3) == 59);
    CHECK(g_p2(3) == g_p1(3));
    CHECK_THROWS_AS(g_p2(1), Error);
    for (std::int64_t n = 2; n <= 20; ++n) CHECK(g_p1(n) == p_frobenius(triangular_triple(n), 1));
    for (std::int64_t n = 2; n <= 16; ++n) CHECK(g_p2(n) == p_frobenius(triangular_triple(n), 2));
}

TEST_CASE("p = 3..10") {
    CHECK(g_p3_to_10(5, 4) == 314);
    CHECK_FALSE(g_p3_to_10(6, 4).has_value());
    CHECK(g_p3_to_10(8, 6) == 1259);
    CHECK(p_frobenius(GeneratorSet::normalize({15, 21, 28}), 4) == 314);
    CHECK_THROWS_AS(g_p3_to_10(5, 2), Error);
    CHECK_THROWS_AS(g_p3_to_10(5, 11), Error);
    for (std::int64_t p = 3; p <= 10; ++p)
        for (std::int64_t n = 2; n <= 14; ++n) {
            CAPTURE(n);
            CAPTURE(p);
            auto v = g_p3_to_10(n, p);
            CHECK(v.has_value() == theorem4_valid(n, p));
            if (v) CHECK(*v == p_frobenius(triangular_triple(n), p));
        }
}

namespace {

void check_tuple(const GeneratorSet& A, const PropTuple& t) {
    auto ap = p_apery_set(A, t.p_index);
    CHECK(p_frobenius(ap) == t.g);
    CHECK(p_sylvester_number(ap, CountDomain::positive) == t.n_count);
    CHECK(p_sylvester_sum(ap) == t.s_sum);
    CHECK(ap.m == t.m_values);
}

} // namespace

TEST_CASE("(6, 10, 15) family") {
    auto t1 = prop1_t345(1);
    CHECK(t1.p_index == 0);
    CHECK(t1.g == 29);
    CHECK(t1.n_count == 15);
    CHECK(t1.s_sum == 165);
    auto t2 = prop1_t345(2);
    CHECK(t2.p_index == 1);
    CHECK(t2.g == 59);
    CHECK(t2.n_count == 44);
    CHECK(t2.s_sum == 1050);
    auto t3 = prop1_t345(3);
    CHECK(t3.p_index == 3);
    CHECK(t3.g == 89);
    CHECK(t3.n_count == 74);
    CHECK(t3.s_sum == 2835);
    CHECK_THROWS_AS(prop1_t345(0), Error);
    for (std::int64_t p = 1; p <= 8; ++p) check_tuple(GeneratorSet::normalize({6, 10, 15}), prop1_t345(p));
}

TEST_CASE("(3, 6, 10) family") {
    CHECK(prop2_t234(0, 1).p_index == 1);
    CHECK(prop2_t234(0, 1).g == 23);
    CHECK(prop2_t234(0, 2).p_index == 2);
    CHECK(prop2_t234(0, 2).g == 29);
    CHECK(prop2_t234(1, 1).p_index == 7);
    CHECK(prop2_t234(1, 1).g == 53);
    CHECK(prop2_t234(0, 1).m_values == std::vector<std::int64_t>{6, 16, 26});
    CHECK_THROWS_AS(prop2_t234(0, 0), Error);
    CHECK_THROWS_AS(prop2_t234(0, 6), Error);
    for (std::int64_t n = 0; n <= 6; ++n)
        for (std::int64_t j = 1; j <= 5; ++j) check_tuple(GeneratorSet::normalize({3, 6, 10}), prop2_t234(n, j));
}

TEST_CASE("(10, 15, 21) family") {
    auto e = prop3_t456(0, 0, Prop3Case::even);
    CHECK(e.p_index == 0);
    CHECK(e.g == 89);
    CHECK(e.n_count == 45);
    CHECK(e.s_sum == 1455);
    auto oo = prop3_t456(1, 0, Prop3Case::odd_low);
    CHECK(oo.p_index == 2);
    CHECK(oo.g == 149);
    CHECK(oo.n_count == 104);
    CHECK(oo.s_sum == 5925);
    auto o = prop3_t456(1, 0, Prop3Case::odd);
    CHECK(o.p_index == 4);
    CHECK(o.g == 194);
    CHECK(o.n_count == 149);
    CHECK(o.s_sum == 11640);

    CHECK_FALSE(prop3_valid(2, 7, Prop3Case::even));
    CHECK_FALSE(prop3_valid(1, 1, Prop3Case::odd));
    CHECK_THROWS_AS(prop3_t456(2, 7, Prop3Case::even), Error);

    auto A = GeneratorSet::normalize({10, 15, 21});
    for (auto c : {Prop3Case::even, Prop3Case::odd, Prop3Case::odd_low})
        for (std::int64_t n = 0; n <= 7; ++n)
            for (std::int64_t j = 0; j <= 8; ++j) {
                if (!prop3_valid(n, j, c)) continue;
                CAPTURE(to_string(c));
                CAPTURE(n);
                CAPTURE(j);
                check_tuple(A, prop3_t456(n, j, c));
            }
}
