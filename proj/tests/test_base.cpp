#include <random>

#include "doctest.h"
#include "gsp4/base.hpp"
#include "oracles.hpp"

using namespace gsp4;

TEST_CASE("pairing") {
    auto n = oracle::cocharacter_diag(1, 1, 0);
    CHECK(pairing({2, 1, 0}, {1, 1, 0}) == oracle::character_exponent(2, 1, 0, n));
    CHECK(pairing({2, 1, 0}, {1, 1, 0}) == 3);
    CHECK(pairing({0, 0, 5}, {1, -1, 0}) == 0);
    CHECK(pairing({2, 1, 0}, {0, 1, 0}) == 1);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-20, 20);
    for (int i = 0; i < 200; ++i) {
        Weight l{d(rng), d(rng), d(rng)};
        Coweight m{d(rng), d(rng), d(rng)};
        CHECK(pairing(l, m) == oracle::character_exponent(l.a, l.b, l.c, oracle::cocharacter_diag(m.a, m.b, m.c)));
    }
}

TEST_CASE("generator actions agree with matrix conjugation") {
    auto r1 = oracle::conjugate_character(oracle::kS1, 2, 1, 0);
    CHECK(FiniteWeyl::s1().act(Weight{2, 1, 0}) == Weight{r1[0], r1[1], r1[2]});
    CHECK(FiniteWeyl::s1().act(Weight{2, 1, 0}) == Weight{1, 2, 0});
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int i = 0; i < 100; ++i) {
        Weight l{d(rng), d(rng), d(rng)};
        auto a = oracle::conjugate_character(oracle::kS1, l.a, l.b, l.c);
        auto b = oracle::conjugate_character(oracle::kS2, l.a, l.b, l.c);
        CHECK(FiniteWeyl::s1().act(l) == Weight{a[0], a[1], a[2]});
        CHECK(FiniteWeyl::s2().act(l) == Weight{b[0], b[1], b[2]});
    }
    CHECK(FiniteWeyl::w0().act(kEta) == Weight{-2, -1, 3});
    CHECK(FiniteWeyl::identity().act(Weight{4, 5, 6}) == Weight{4, 5, 6});
}

TEST_CASE("finite Weyl group structure") {
    const auto& all = FiniteWeyl::all();
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(all[i] != all[j]);
    CHECK(FiniteWeyl::w0().word() == "s1s2s1s2");
    CHECK(FiniteWeyl::from_word("s2s1s2s1") == FiniteWeyl::w0());
    for (auto x : all) {
        CHECK(FiniteWeyl::from_word(x.word()) == x);
        CHECK(x * x.inverse() == FiniteWeyl::identity());
        for (auto y : all) {
            Weight l{3, -2, 5};
            CHECK((x * y).act(l) == x.act(y.act(l)));
            for (auto z : all) CHECK((x * y) * z == x * (y * z));
        }
    }
    CHECK_THROWS_AS(FiniteWeyl::from_word("s3"), ValidationError);
}

TEST_CASE("std maps") {
    CHECK(std_character({2, 1, 0}) == std::array<Int, 4>{3, 2, 1, 0});
    CHECK(std_cocharacter({0, 0, 0}) == std::array<Int, 4>{0, 0, 0, 0});
    auto n = oracle::cocharacter_diag(1, 1, 2);
    CHECK(std_cocharacter({1, 1, 2}) == std::array<Int, 4>{n[0], n[1], n[2], n[3]});
}

TEST_CASE("root datum") {
    CHECK_NOTHROW(check_root_datum());
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-30, 30);
    for (int i = 0; i < 100; ++i) {
        Weight l{d(rng), d(rng), d(rng)};
        CHECK(FiniteWeyl::w0().act(l) == Weight{-l.a, -l.b, l.a + l.b + l.c});
        for (int r = 0; r < 4; ++r)
            CHECK(FiniteWeyl::reflection(r).act(l) == l - pairing(l, kPositiveCoroots[r]) * kPositiveRoots[r]);
    }
}

TEST_CASE("depth and genericity") {
    CHECK(is_m_deep({0, 0, 0}, 0, 37));
    // <lambda + eta, alpha_1^vee> = 37
    CHECK_FALSE(is_m_deep({36, 0, 0}, 0, 37));
    CHECK_THROWS_AS(is_m_deep({0, 0, 0}, -1, 37), ValidationError);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-200, 200);
    for (int i = 0; i < 1000; ++i) {
        Weight l{d(rng), d(rng), d(rng)};
        for (int m = 0; m <= 9; ++m) CHECK(is_m_generic(l, m, 37) == is_m_deep(l - kEta, m, 37));
    }
    CHECK(depth_in_lowest_alcove({8, 4, 0}, 37) == 4);
}
