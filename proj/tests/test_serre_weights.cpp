#include <random>
#include <set>

#include "doctest.h"
#include "gsp4/admissible.hpp"
#include "gsp4/serre_weights.hpp"
#include "samplers.hpp"

using namespace gsp4;

namespace {

// Finite Weyl action from the generator formulas, applied right to left along the word.
Weight act_by_word(const std::string& word, Weight x) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it == '1') x = {x.b, x.a, x.c};
        else if (*it == '2') x = {x.a, -x.b, x.b + x.c};
    }
    return x;
}

Weight dot_oracle(const ExtAffine& x, const Weight& l, Int p) {
    Weight r = act_by_word(x.w.word(), {l.a + 2, l.b + 1, l.c});
    return {r.a + p * x.t.a - 2, r.b + p * x.t.b - 1, r.c + p * x.t.c};
}

std::vector<FiniteWeyl> one(FiniteWeyl w) { return {w}; }

const ExtAffine kW0 = ExtAffine::finite(FiniteWeyl::w0());

}  // namespace

TEST_CASE("Serre weight normal form") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Int> d(0, 36), c(-100, 100);
    for (int f = 1; f <= 3; ++f)
        for (int i = 0; i < 200; ++i) {
            std::vector<Weight> l;
            for (int j = 0; j < f; ++j) {
                Int b = d(rng);
                l.push_back({b + d(rng), b, c(rng)});
            }
            SerreWeight s = make_serre_weight(l, 37);
            CHECK(normalize_serre(s.lambda, 37) == s.lambda);
            // Adding (p - pi)nu for a random central nu leaves the class fixed.
            std::vector<Weight> m = l;
            for (int j = 0; j < f; ++j) {
                Int k = c(rng);
                m[j].c += 37 * k;
                m[(j + 1) % f].c -= k;
            }
            CHECK(make_serre_weight(m, 37) == s);
            auto rep = align_to(s, l);
            REQUIRE(rep.has_value());
            CHECK(*rep == l);
        }
    CHECK_THROWS_AS(make_serre_weight({{37, 0, 0}}, 37), ValidationError);
    CHECK_THROWS_AS(make_serre_weight({{-1, 0, 0}}, 37), ValidationError);
    CHECK(make_serre_weight({{35, 0, 0}}, 37).regular());
    CHECK_FALSE(make_serre_weight({{36, 0, 0}}, 37).regular());
    CHECK_FALSE(make_serre_weight({{36, 36, 0}}, 37).regular());
    // f = 1: classes mod p - 1 in the c coordinate.
    CHECK(make_serre_weight({{3, 1, 40}}, 37) == make_serre_weight({{3, 1, 4}}, 37));
    CHECK_FALSE(make_serre_weight({{3, 1, 5}}, 37) == make_serre_weight({{3, 1, 4}}, 37));
}

TEST_CASE("presentations give Serre weights through the dot action") {
    std::mt19937_64 rng(12);
    const Int p = 37;
    // Identity.
    for (int i = 0; i < 50; ++i) {
        Weight mu = sample::deep_mu(rng, 0, p);
        SerreWeight s = serre_weight_of_presentation({ExtAffine{}}, {mu + kEta}, p);
        CHECK(s == make_serre_weight({mu}, p));
    }
    // Against the oracle, and invariance under (w, omega) ~ (t_nu w, omega - nu).
    std::uniform_int_distribution<Int> c(-50, 50);
    for (int i = 0; i < 1000; ++i) {
        FiniteWeyl w = FiniteWeyl::all()[i % 8];
        ExtAffine w1 = diamond(w);
        Weight omega = sample::deep_mu(rng, 0, p) + kEta;
        SerreWeight s = serre_weight_of_presentation({w1}, {omega}, p);
        CHECK(s == make_serre_weight({dot_oracle(w1, omega - kEta, p)}, p));
        Weight nu{0, 0, c(rng)};
        CHECK(serre_weight_of_presentation({ExtAffine::translation(nu) * w1}, {omega - nu}, p) == s);
    }
    CHECK_THROWS_AS(serre_weight_of_presentation({ExtAffine{}}, {Weight{0, 0, 0}}, p), ValidationError);
    CHECK_THROWS_WITH_AS(serre_weight_of_presentation({ExtAffine::translation({1, 0, 0})}, {Weight{4, 2, 0}}, p),
                         "presentation out of range", ValidationError);
}

TEST_CASE("rotation of embeddings") {
    std::mt19937_64 rng(13);
    const Int p = 37;
    for (int i = 0; i < 100; ++i) {
        Tuple w1{diamond(FiniteWeyl::all()[i % 8]), diamond(FiniteWeyl::all()[(i / 8) % 8])};
        CHECK(pi(pi(w1)) == w1);
        CHECK(pi_inverse(pi(w1)) == w1);
        std::vector<Weight> omega{sample::deep_mu(rng, 0, p) + kEta, sample::deep_mu(rng, 0, p) + kEta};
        SerreWeight s = serre_weight_of_presentation(w1, omega, p);
        // Embedding j uses the lift at embedding j+1.
        for (int j = 0; j < 2; ++j) {
            Weight l = dot_oracle(w1[(j + 1) % 2], omega[j] - kEta, p);
            CHECK(s.lambda[j].a - s.lambda[j].b == l.a - l.b);
            CHECK(s.lambda[j].b == l.b);
        }
    }
}

TEST_CASE("AP and AP' have the expected shape") {
    const auto& ap = enumerate_AP(1);
    const auto& app = enumerate_APprime(1);
    const auto reg = adm_regular(kEta);
    CHECK(ap.size() == reg.size());
    CHECK(ap.size() == 20);
    CHECK(app.size() == 20);

    std::set<ExtAffine> targets, regular;
    for (const auto& x : reg) regular.insert(normalize_x0(x));
    for (const auto& q : ap) {
        CHECK(ap_admissible(q));
        CHECK(restricted_index(alcove_of(q.w1[0])) >= 0);
        CHECK(is_dominant(alcove_of(q.w2[0])));
        CHECK(uparrow_leq(q.w1[0], w_h().inverse() * q.w2[0]));
        targets.insert(normalize_x0(q.w2[0].inverse() * kW0 * q.w1[0]));
    }
    CHECK(targets == regular);
    for (const auto& q : app) {
        CHECK(is_dominant(alcove_of(q.w1[0])));
        CHECK(restricted_index(alcove_of(q.w2[0])) >= 0);
        CHECK(uparrow_leq(q.w1[0], q.w2[0]));
    }
    for (auto w : FiniteWeyl::all()) {
        CHECK(std::binary_search(ap.begin(), ap.end(), outer_pair(one(w))));
        CHECK(std::binary_search(app.begin(), app.end(), obvious_pair(one(w))));
    }
    CHECK(enumerate_AP(2).size() == 400);
    CHECK(enumerate_APprime(2).size() == 400);
    CHECK_THROWS_AS(enumerate_AP(0), ValidationError);
}

TEST_CASE("JH factors of deep types") {
    std::mt19937_64 rng(14);
    const Int p = 37;
    for (int i = 0; i < 10; ++i) {
        TamePresentation tau = sample::presentation(rng, 1, 6, p);
        auto jh = jh_factors(tau);
        CHECK(jh.size() == 20);
        CHECK(image(jh).size() == 20);
        std::set<SerreWeight> outer;
        for (auto w : FiniteWeyl::all()) outer.insert(outer_weight(tau, one(w)));
        CHECK(outer.size() == 8);
        for (const auto& s : outer) CHECK(image(jh).count(s) == 1);
    }
    TamePresentation shallow = make_presentation({FiniteWeyl::identity()}, {Weight{0, 0, 0}}, p);
    CHECK(shallow.depth() == 0);
    CHECK_THROWS_AS(jh_factors(shallow), ValidationError);
}

TEST_CASE("JH factors split over embeddings") {
    std::mt19937_64 rng(15);
    const Int p = 37;
    for (int i = 0; i < 5; ++i) {
        TamePresentation tau = sample::presentation(rng, 2, 6, p);
        auto jh = jh_factors(tau);
        CHECK(jh.size() == 400);
        CHECK(image(jh).size() == 400);
        for (const auto& [q, s] : jh)
            for (int j = 0; j < 2; ++j) {
                TamePresentation tj = make_presentation({tau.s[j]}, {tau.mu[j]}, p);
                APPair qj{{q.w1[(j + 1) % 2]}, {q.w2[j]}};
                SerreWeight sj = F_tau(tj, qj);
                CHECK(sj.lambda[0].a - sj.lambda[0].b == s.lambda[j].a - s.lambda[j].b);
                CHECK(sj.lambda[0].b == s.lambda[j].b);
            }
    }
}

TEST_CASE("predicted weights of deep representations") {
    std::mt19937_64 rng(16);
    for (Int p : {Int{37}, Int{41}}) {
        int m = p == 37 ? 8 : 9;
        for (int i = 0; i < 5; ++i) {
            TamePresentation rho = sample::presentation(rng, 1, m, p);
            auto wq = w_question(rho);
            CHECK(image(wq).size() == enumerate_APprime(1).size());
            std::set<SerreWeight> obv;
            for (auto w : FiniteWeyl::all()) obv.insert(obvious_weight(rho, one(w)));
            CHECK(obv.size() == 8);
            for (const auto& [q, s] : wq) CHECK(s.depth() >= 3);
        }
    }
    std::mt19937_64 rng2(17);
    TamePresentation rho2 = sample::presentation(rng2, 2, 8, 37);
    std::set<SerreWeight> obv;
    for (const auto& w : weyl_tuples(2)) obv.insert(obvious_weight(rho2, w));
    CHECK(obv.size() == 64);
    CHECK(image(w_question(rho2)).size() == 400);
}

TEST_CASE("predicted weights are the shifted JH factors of the type with the same presentation") {
    std::mt19937_64 rng(18);
    for (int i = 0; i < 10; ++i) {
        TamePresentation rho = sample::presentation(rng, 1 + i % 2, 8, 37);
        std::set<SerreWeight> shifted;
        for (const auto& s : image(jh_factors(rho))) {
            REQUIRE(s.regular());
            shifted.insert(R_map(s));
        }
        CHECK(shifted.size() == image(jh_factors(rho)).size());
        CHECK(shifted == image(w_question(rho)));
    }
    CHECK_THROWS_AS(R_map(make_serre_weight({{36, 0, 0}}, 37)), ValidationError);
}

TEST_CASE("types from targets") {
    std::mt19937_64 rng(19);
    const Int p = 37;
    TamePresentation rho = sample::presentation(rng, 1, 8, p);
    TamePresentation same = type_from_target(rho, {ExtAffine{}});
    CHECK(same.element() == rho.element());

    const auto& adm = adm_set(kEta);
    std::uniform_int_distribution<std::size_t> pick(0, adm.size() - 1);
    for (int i = 0; i < 1000; ++i) {
        TamePresentation r = sample::presentation(rng, 1, 4 + i % 5, p);
        ExtAffine g = adm[pick(rng)];
        TamePresentation tau = type_from_target(r, {g});
        CHECK(tau.depth() >= r.depth() - 3);
        CHECK(relative(r, tau) == Tuple{g});
    }
    CHECK_THROWS_AS(type_from_target(rho, {ExtAffine::translation({40, 0, 0})}), ValidationError);
}

TEST_CASE("intersections of predicted weights and JH factors") {
    std::mt19937_64 rng(20);
    const Int p = 37;
    const ExtAffine wh_inv = w_h().inverse();
    for (int i = 0; i < 8; ++i) {
        TamePresentation rho = sample::presentation(rng, 1, 8, p);
        FiniteWeyl w = FiniteWeyl::all()[i];
        ExtAffine d = diamond(w);
        TamePresentation tau = type_from_target(rho, {d.inverse() * wh_inv * kW0 * d});
        auto both = intersect_W_JH(rho, tau);
        REQUIRE(both.size() == 1);
        CHECK(*both.begin() == obvious_weight(rho, one(w)));
        CHECK(*both.begin() == outer_weight(tau, one(w)));
    }
    TamePresentation rho = sample::presentation(rng, 1, 8, p);
    TamePresentation far = type_from_target(rho, {ExtAffine::translation(2 * kEta)});
    CHECK_FALSE(in_adm(ExtAffine::translation(2 * kEta), kEta));
    CHECK(intersect_W_JH(rho, far).empty());
}

TEST_CASE("weights below a JH factor are JH factors of every type containing it") {
    std::mt19937_64 rng(21);
    const Int p = 37;
    int types_checked = 0;
    for (int i = 0; i < 4; ++i) {
        TamePresentation tau = sample::presentation(rng, 1, 6, p);
        auto jh = image(jh_factors(tau));
        for (const auto& s0 : jh) {
            if (s0.depth() < 6) continue;
            std::vector<SerreWeight> below;
            for (const auto& s : jh)
                if (s != s0 && uparrow_leq(s, s0)) below.push_back(s);
            if (below.empty()) continue;
            // Types tau' with s0 in JH: solve F_{tau'}(w1, w2) = s0 for each AP pair.
            for (const auto& q : enumerate_AP(1)) {
                Weight omega = p_dot(q.w1[0].inverse(), s0.lambda[0], p) + kEta;
                if (depth_in_lowest_alcove(omega - kEta, p) < 0) continue;
                for (auto u : FiniteWeyl::all()) {
                    ExtAffine x = ExtAffine{omega, u} * q.w2[0];
                    Weight mu = x.t - kEta;
                    if (depth_in_lowest_alcove(mu, p) < 3) continue;
                    TamePresentation t2 = make_presentation({x.w}, {mu}, p);
                    auto jh2 = image(jh_factors(t2));
                    REQUIRE(jh2.count(s0) == 1);
                    ++types_checked;
                    for (const auto& s : below) CHECK(jh2.count(s) == 1);
                }
            }
        }
    }
    CHECK(types_checked >= 50);
}
