#include "doctest.h"

#include <numeric>

#include "pfrob/error.hpp"
#include "pfrob/generators.hpp"

using namespace pfrob;

TEST_CASE("normalize sorts, dedups and records the gcd") {
    auto a = GeneratorSet::normalize({15, 10, 6});
    CHECK(std::vector<std::int64_t>(a.gens().begin(), a.gens().end()) == std::vector<std::int64_t>{6, 10, 15});
    CHECK(a.gcd() == 1);

    auto b = GeneratorSet::normalize({6, 10});
    CHECK(b.gcd() == 2);

    auto c = GeneratorSet::normalize({5});
    CHECK(c.size() == 1);
    CHECK(c.gcd() == 5);

    auto d = GeneratorSet::normalize({10, 6, 10, 15, 6});
    CHECK(d == a);
    CHECK(d.to_string() == "6,10,15");
}

TEST_CASE("normalize rejects bad input") {
    std::vector<std::int64_t> empty;
    CHECK_THROWS_AS(GeneratorSet::normalize(empty), Error);
    try {
        GeneratorSet::normalize({3, 0, 5});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::non_positive_element);
    }
    try {
        GeneratorSet::normalize(empty);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::empty_input);
    }
}

TEST_CASE("scaling multiplies every generator") {
    auto a = GeneratorSet::normalize({2, 3}).scaled(5);
    CHECK(a == GeneratorSet::normalize({10, 15}));
    CHECK(a.gcd() == 5);
}

TEST_CASE("triangular numbers") {
    CHECK(triangular(3) == 6);
    CHECK(triangular(4) == 10);
    CHECK(triangular(5) == 15);
    CHECK(triangular(6) == 21);
    CHECK(triangular_triple(4) == GeneratorSet::normalize({10, 15, 21}));
    CHECK_THROWS_AS(triangular_triple(0), Error);
}

TEST_CASE("gcd of consecutive triangular numbers") {
    CHECK(gcd_consecutive_triangular(2) == 2);
    CHECK(gcd_consecutive_triangular(3) == 5);
    CHECK(gcd_consecutive_triangular(4) == 3);
    for (std::int64_t n = 1; n <= 1000; ++n) {
        CHECK(gcd_consecutive_triangular(n) == std::gcd(triangular(n + 1), triangular(n + 2)));
        CHECK(triangular_triple(n).gcd() == 1);
    }
}
