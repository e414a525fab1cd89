#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "gsp4/affine_weyl.hpp"

using namespace gsp4;

namespace {

ExtAffine random_element(std::mt19937_64& rng, int spread = 6) {
    std::uniform_int_distribution<int> d(-spread, spread), w(0, 7);
    return {Weight{d(rng), d(rng), d(rng)}, FiniteWeyl::all()[w(rng)]};
}

// Hyperplane count by explicit scan over k, on sixths.
int length_by_scan(const ExtAffine& x) {
    Alcove A = alcove_of(x);
    const Int base[4] = {2, 1, 4, 3};
    auto here = functionals6(A);
    int n = 0;
    for (int r = 0; r < 4; ++r)
        for (Int k = -200; k <= 200; ++k) {
            bool lo = base[r] < 6 * k, hi = here[r] < 6 * k;
            if (lo != hi) ++n;
        }
    return n;
}

// All elements of length <= n whose length-zero part is delta.
std::vector<ExtAffine> ball(int n, const ExtAffine& delta) {
    std::set<ExtAffine> seen{delta};
    std::vector<ExtAffine> layer{delta};
    for (int k = 0; k < n; ++k) {
        std::vector<ExtAffine> next;
        for (const auto& x : layer)
            for (int i = 0; i < 3; ++i) {
                ExtAffine y = affine_simple(i) * x;
                if (length(y) == k + 1 && seen.insert(y).second) next.push_back(y);
            }
        layer = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

const ExtAffine kDelta1{Weight{1, 0, 0}, FiniteWeyl::from_word("s1s2s1")};

}  // namespace

TEST_CASE("group law") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 10000; ++i) {
        auto x = random_element(rng), y = random_element(rng), z = random_element(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * x.inverse() == ExtAffine{});
        Weight l{static_cast<Int>(i % 7) - 3, 2, -1};
        CHECK((x * y).act(l) == x.act(y.act(l)));
    }
}

TEST_CASE("star") {
    CHECK(star(ExtAffine::translation(kEta)) == DualElement{FiniteWeyl::identity(), kEta});
    DualElement h = star(w_h());
    CHECK(h == DualElement{FiniteWeyl::w0(), Weight{2, 1, -3}});
    CHECK(ExtAffine::finite(h.w) * ExtAffine::translation(h.t) == ExtAffine{Weight{-2, -1, 0}, FiniteWeyl::w0()});
    std::mt19937_64 rng(2);
    for (int i = 0; i < 1000; ++i) {
        auto x = random_element(rng);
        CHECK(star(star(x)) == x);
        CHECK(dual_length(star(x)) == length(x));
    }
}

TEST_CASE("alcoves") {
    CHECK(alcove_of(ExtAffine{}) == Alcove{3, 1});
    CHECK(functionals6(Alcove{}) == std::array<Int, 4>{2, 1, 4, 3});
    CHECK(alcove_of(ExtAffine::translation(kEta)) == Alcove{15, 7});
    CHECK(restricted_index(alcove_of(w_h())) == 3);
    for (int i = 0; i < 4; ++i) CHECK(restricted_index(restricted_alcove(i)) == i);
    for (const auto& A : alcoves_in_box(6))
        for (Int v : functionals6(A)) CHECK(v % 6 != 0);
    // Equal alcoves exactly when the elements differ by a length-zero element on the right.
    std::mt19937_64 rng(4);
    for (int i = 0; i < 300; ++i) {
        auto x = random_element(rng, 3), y = random_element(rng, 3);
        CHECK((alcove_of(x) == alcove_of(y)) == (length(x.inverse() * y) == 0));
    }
}

TEST_CASE("length") {
    CHECK(length(ExtAffine{}) == 0);
    CHECK(length(affine_simple(1)) == 1);
    CHECK(length(ExtAffine::translation(kEta)) == 7);
    Int sum = 0;
    for (const auto& co : kPositiveCoroots) sum += pairing(kEta, co);
    CHECK(sum == 7);
    std::mt19937_64 rng(6);
    for (int i = 0; i < 2000; ++i) {
        auto x = random_element(rng);
        CHECK(length(x) == length_by_scan(x));
        CHECK(length(x * kDelta1) == length(x));
        auto y = random_element(rng);
        CHECK(length(x * y) <= length(x) + length(y));
    }
    for (const auto& x : ball(8, ExtAffine{}))
        for (int i = 0; i < 3; ++i) {
            int d = length(x * affine_simple(i)) - length(x);
            CHECK((d == 1 || d == -1));
        }
}

TEST_CASE("omega split") {
    auto e = AffineSystem::full().reduced(ExtAffine{});
    CHECK(e.word.empty());
    CHECK(length(kDelta1) == 0);
    CHECK(alcove_of(kDelta1) == Alcove{});
    CHECK(omega_part(kDelta1) == kDelta1);
    auto r = AffineSystem::full().reduced(ExtAffine::translation(kEta));
    CHECK(r.word.size() == 7);
    CHECK(length(r.delta) == 0);
    CHECK(cl(r.delta) == 3);
    ExtAffine prod = r.delta;
    for (std::size_t i = r.word.size(); i-- > 0;) prod = affine_simple(r.word[i]) * prod;
    CHECK(prod == ExtAffine::translation(kEta));
    for (int i = 0; i < 3; ++i) CHECK(cl(affine_simple(i)) == 0);
}

TEST_CASE("bruhat order: recursive criterion against subwords") {
    for (const auto& delta : {ExtAffine{}, kDelta1}) {
        auto elems = ball(7, delta);
        std::map<ExtAffine, std::set<ExtAffine>> below;
        for (const auto& y : elems) {
            auto v = AffineSystem::full().lower_interval(y);
            below[y] = {v.begin(), v.end()};
        }
        for (const auto& x : elems)
            for (const auto& y : elems) {
                bool rec = bruhat_leq(x, y);
                REQUIRE(rec == (below[y].count(x) == 1));
                if (rec) {
                    CHECK(length(x) <= length(y));
                    CHECK(dual_bruhat_leq(star(x), star(y)));
                } else {
                    CHECK_FALSE(dual_bruhat_leq(star(x), star(y)));
                }
            }
    }
    ExtAffine s1 = affine_simple(1);
    CHECK(bruhat_leq(s1, s1));
    CHECK(bruhat_leq(s1, s1 * affine_simple(0)));
    CHECK_FALSE(bruhat_leq(s1, ExtAffine::translation({0, 0, 1}) * s1));
}

TEST_CASE("upper arrow") {
    for (int i = 0; i + 1 < 4; ++i) CHECK(uparrow_leq(restricted_alcove(i), restricted_alcove(i + 1)));
    CHECK(uparrow_leq(restricted_alcove(0), restricted_alcove(3)));
    CHECK_FALSE(uparrow_leq(restricted_alcove(3), restricted_alcove(0)));
    CHECK(uparrow_leq(Alcove{}, Alcove{}));
    CHECK_THROWS_AS(uparrow_leq(Alcove{}, Alcove{6 * 40 + 3, 1}, 12), ValidationError);
    auto box = alcoves_in_box(4);
    for (const auto& A : box)
        for (const auto& B : box) {
            if (A == B || !uparrow_leq(A, B, 4)) continue;
            CHECK_FALSE(uparrow_leq(B, A, 4));
            auto fa = functionals6(A), fb = functionals6(B);
            CHECK(fa[0] + fa[1] + fa[2] + fa[3] < fb[0] + fb[1] + fb[2] + fb[3]);
        }
}

TEST_CASE("diamond") {
    std::set<ExtAffine> seen;
    for (auto w : FiniteWeyl::all()) {
        auto d = diamond(w);
        CHECK(d.w == w);
        CHECK(restricted_index(alcove_of(d)) >= 0);
        seen.insert(d);
    }
    CHECK(seen.size() == 8);
    CHECK(diamond(FiniteWeyl::identity()) == ExtAffine{});
    CHECK(diamond(FiniteWeyl::w0()) == normalize_x0(w_h()));
}

TEST_CASE("dot action") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int i = 0; i < 1000; ++i) {
        auto x = random_element(rng), y = random_element(rng);
        Weight l{d(rng), d(rng), d(rng)};
        CHECK(p_dot(x * y, l, 37) == p_dot(x, p_dot(y, l, 37), 37));
        CHECK(p_dot(ExtAffine::translation(x.t), l, 37) == l + 37 * x.t);
        int before = restricted_p_alcove(l, 37);
        if (before >= 0 && x.w == FiniteWeyl::identity() && x.t.a == 0 && x.t.b == 0)
            CHECK(restricted_p_alcove(p_dot(x, l, 37), 37) == before);
    }
    CHECK(p_dot(ExtAffine{}, Weight{3, 4, 5}, 37) == Weight{3, 4, 5});
}
