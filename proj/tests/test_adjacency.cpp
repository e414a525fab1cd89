#include <random>

#include "doctest.h"
#include "gsp4/adjacency.hpp"
#include "samplers.hpp"

using namespace gsp4;

namespace {

Thresholds at(Int p) {
    Thresholds th;
    if (p == 37) th.rhobar = 8;
    return th;
}

int deepest(Int p) { return p == 37 ? 8 : 9; }

}  // namespace

TEST_CASE("instances on obvious pairs join obvious weights") {
    std::mt19937_64 rng(31);
    const Int p = 41;
    TamePresentation rho = sample::presentation(rng, 1, 9, p);
    for (auto w : FiniteWeyl::all())
        for (int i = 1; i <= 2; ++i) {
            APPair q = obvious_pair({w});
            auto inst = build_instance(rho, q, {i, 0});
            CHECK(inst.warnings.empty());
            CHECK(inst.sigma1 == obvious_weight(rho, {w}));
            CHECK(inst.sigma2 == obvious_weight(rho, {FiniteWeyl::generator(i) * w}));
            // The same type comes from the obvious pair of s w.
            auto mirror = build_instance(rho, obvious_pair({FiniteWeyl::generator(i) * w}), {i, 0});
            CHECK(normalize_x0(mirror.tau.element()) == normalize_x0(inst.tau.element()));
            CHECK(mirror.sigma1 == inst.sigma2);
            CHECK(mirror.sigma2 == inst.sigma1);
        }
}

TEST_CASE("every instance is well formed") {
    std::mt19937_64 rng(32);
    for (Int p : {Int{37}, Int{41}})
        for (int i = 0; i < 3; ++i) {
            TamePresentation rho = sample::presentation(rng, 1, deepest(p), p);
            auto wq = w_question(rho);
            int rejected = 0;
            for (const auto& [q, sigma] : wq)
                for (int k = 1; k <= 2; ++k) {
                    SimpleLabel s{k, 0};
                    if (!setup_violation(q, s).empty()) {
                        ++rejected;
                        CHECK_THROWS_AS(build_instance(rho, q, s, at(p)), ValidationError);
                        continue;
                    }
                    auto inst = build_instance(rho, q, s, at(p));
                    CHECK(inst.sigma1 != inst.sigma2);
                    CHECK(inst.sigma1 == sigma);
                    CHECK(wq.size() == 20);
                    CHECK(image(wq).count(inst.sigma2) == 1);
                    auto both = intersect_W_JH(inst.rhobar0, inst.tau);
                    CHECK(both.size() == 2);
                    // Intersection for rhobar0 sits inside the one for rhobar.
                    auto big = intersect_W_JH(rho, inst.tau);
                    for (const auto& x : both) CHECK(big.count(x) == 1);
                    CHECK(inst.tau.depth() >= 5);
                    if (p == 41) {
                        CHECK(inst.tau.depth() >= 6);
                        CHECK(inst.rhobar0.depth() >= 6);
                        CHECK(inst.warnings.empty());
                    }
                }
            CHECK(rejected > 0);
        }
}

TEST_CASE("forbidden reflection is rejected") {
    std::mt19937_64 rng(33);
    TamePresentation rho = sample::presentation(rng, 1, 9, 41);
    for (const auto& q : enumerate_APprime(1)) {
        bool forbidden = in_omega(q.w1[0]) && normalize_x0(q.w1[0]) != normalize_x0(q.w2[0]);
        CHECK(setup_violation(q, {2, 0}).empty() == !forbidden);
        CHECK(setup_violation(q, {1, 0}).empty());
        if (forbidden) CHECK_THROWS_WITH_AS(build_instance(rho, q, {2, 0}), doctest::Contains("excluded"), ValidationError);
    }
    TamePresentation shallow = sample::presentation(rng, 1, 3, 41);
    while (shallow.depth() >= 9) shallow = sample::presentation(rng, 1, 3, 41);
    CHECK_THROWS_AS(build_instance(shallow, enumerate_APprime(1)[0], {1, 0}), ValidationError);
}

TEST_CASE("weight graphs are connected") {
    std::mt19937_64 rng(34);
    for (Int p : {Int{37}, Int{41}})
        for (int f = 1; f <= 2; ++f) {
            TamePresentation rho = sample::presentation(rng, f, deepest(p), p);
            auto g = build_graph(rho, at(p));
            CHECK(g.vertices.size() == enumerate_APprime(f).size());
            CHECK(g.connected());
            for (const auto& [e, inst] : g.edges) {
                CHECK(e.first < e.second);
                for (const auto& x : inst) {
                    // Both ends are outer weights of the type.
                    std::set<SerreWeight> outer;
                    for (const auto& w : weyl_tuples(f)) outer.insert(outer_weight(x.tau, w));
                    CHECK(outer.count(x.sigma1) == 1);
                    CHECK(outer.count(x.sigma2) == 1);
                }
            }
            auto obv = build_graph(rho, at(p), true);
            WeightGraph sub;
            for (const auto& w : weyl_tuples(f)) sub.vertices.push_back(obvious_weight(rho, w));
            std::sort(sub.vertices.begin(), sub.vertices.end());
            for (const auto& [e, inst] : obv.edges) {
                int a = sub.index_of(obv.vertices[e.first]), b = sub.index_of(obv.vertices[e.second]);
                REQUIRE(a >= 0);
                REQUIRE(b >= 0);
                sub.edges[{std::min(a, b), std::max(a, b)}] = inst;
            }
            CHECK(sub.connected());
        }
}

TEST_CASE("chains reach obvious weights") {
    std::mt19937_64 rng(35);
    for (int f = 1; f <= 2; ++f) {
        TamePresentation rho = sample::presentation(rng, f, 9, 41);
        auto g = build_graph(rho);
        std::set<SerreWeight> obv;
        for (const auto& w : weyl_tuples(f)) obv.insert(obvious_weight(rho, w));
        std::size_t longest = 0;
        for (const auto& sigma : g.vertices) {
            auto c = find_chain(rho, g, sigma);
            if (obv.count(sigma)) {
                CHECK(c.bfs.empty());
                CHECK(c.steered.empty());
                continue;
            }
            REQUIRE_FALSE(c.steered.empty());
            CHECK(c.steered.front().sigma1 == sigma);
            CHECK(obv.count(c.steered.back().sigma2) == 1);
            for (std::size_t k = 1; k < c.steered.size(); ++k) CHECK(c.steered[k].sigma1 == c.steered[k - 1].sigma2);
            CHECK(c.bfs.size() <= c.steered.size());
            longest = std::max(longest, c.steered.size());
        }
        CHECK(longest <= 3 * static_cast<std::size_t>(f));
        if (f == 1) CHECK(longest == 3);
    }
    std::mt19937_64 rng2(36);
    TamePresentation rho = sample::presentation(rng2, 1, 9, 41);
    CHECK_THROWS_AS(find_chain(rho, make_serre_weight({{0, 0, 0}}, 41)), ValidationError);
}

TEST_CASE("steering from the alcove A2 reaches length zero in one step") {
    std::mt19937_64 rng(37);
    TamePresentation rho = sample::presentation(rng, 1, 9, 41);
    int seen = 0;
    for (const auto& q : enumerate_APprime(1)) {
        if (restricted_index(alcove_of(q.w2[0])) != 2 || normalize_x0(q.w1[0]) == normalize_x0(q.w2[0])) continue;
        ++seen;
        auto c = find_chain(rho, F_rhobar(rho, q));
        REQUIRE(c.steered.size() == 1);
        CHECK(c.steered[0].s == SimpleLabel{1, 0});
    }
    CHECK(seen > 0);
}

TEST_CASE("dot output is deterministic") {
    std::mt19937_64 rng(38);
    TamePresentation rho = sample::presentation(rng, 1, 9, 41);
    auto a = build_graph(rho).to_dot();
    CHECK(a == build_graph(rho).to_dot());
    CHECK(a.find("graph weights {") == 0);
}
