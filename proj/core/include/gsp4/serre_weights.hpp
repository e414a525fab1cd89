#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gsp4/affine_weyl.hpp"

namespace gsp4 {

// Depth requirements at theorem level; callers may override.
struct Thresholds {
    int rhobar = 9;
    int tau = 6;
    int weight = 3;
};

bool is_restricted(const Weight& l, Int p);

// Representative modulo (p - pi) X^0 with c-coordinates concentrated in embedding 0.
std::vector<Weight> normalize_serre(std::vector<Weight> l, Int p);

// (pi^-1 x)_j = x_{j+1}.
template <class T>
std::vector<T> pi_inverse(const std::vector<T>& x) {
    std::vector<T> r(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) r[j] = x[(j + 1) % x.size()];
    return r;
}
template <class T>
std::vector<T> pi(const std::vector<T>& x) {
    std::vector<T> r(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) r[(j + 1) % x.size()] = x[j];
    return r;
}

struct SerreWeight {
    Int p = 0;
    std::vector<Weight> lambda;  // normalized

    int f() const { return static_cast<int>(lambda.size()); }
    bool regular() const;
    int depth() const;  // min over embeddings, -1 if some embedding is on a wall
    friend auto operator<=>(const SerreWeight&, const SerreWeight&) = default;
};

SerreWeight make_serre_weight(std::vector<Weight> l, Int p);
std::string to_string(const SerreWeight& s);

// Representative of s whose class map agrees with target in every embedding, if any.
std::optional<std::vector<Weight>> align_to(const SerreWeight& s, const std::vector<Weight>& target);
bool uparrow_leq(const SerreWeight& s, const SerreWeight& s0);

// F(pi^-1(w1) . (omega - eta)).
SerreWeight serre_weight_of_presentation(const Tuple& w1, const std::vector<Weight>& omega, Int p);

// The map F(lambda) -> F(w_h . lambda) on regular weights.
SerreWeight R_map(const SerreWeight& s);

struct TamePresentation {
    std::vector<FiniteWeyl> s;
    std::vector<Weight> mu;
    Int p = 0;

    int f() const { return static_cast<int>(mu.size()); }
    Tuple element() const;  // t_{mu + eta} s
    int depth() const;      // min over embeddings of the depth of mu in C_0, -1 if outside
};

TamePresentation make_presentation(std::vector<FiniteWeyl> s, std::vector<Weight> mu, Int p);
// w(tau)^-1 w(rhobar).
Tuple relative(const TamePresentation& rhobar, const TamePresentation& tau);
// The type with w(tau) = w(rhobar) g^-1.
TamePresentation type_from_target(const TamePresentation& rhobar, const Tuple& g);

struct APPair {
    Tuple w1, w2;
    friend auto operator<=>(const APPair&, const APPair&) = default;
};

// Representative modulo X^0 in each embedding.
APPair normalize(const APPair& q);
const std::vector<APPair>& enumerate_AP(int f);
const std::vector<APPair>& enumerate_APprime(int f);

using WeightTable = std::map<APPair, SerreWeight>;

SerreWeight F_tau(const TamePresentation& tau, const APPair& pair);
SerreWeight F_rhobar(const TamePresentation& rhobar, const APPair& pair);
// F_tau(w^diamond, w_h w^diamond).
SerreWeight outer_weight(const TamePresentation& tau, const std::vector<FiniteWeyl>& w);
// F_rhobar(w^diamond, w^diamond).
SerreWeight obvious_weight(const TamePresentation& rhobar, const std::vector<FiniteWeyl>& w);
APPair outer_pair(const std::vector<FiniteWeyl>& w);
APPair obvious_pair(const std::vector<FiniteWeyl>& w);
// w2^-1 w0 w1 lies in Adm(eta) modulo X^0 in every embedding.
bool ap_admissible(const APPair& q);

WeightTable jh_factors(const TamePresentation& tau, int min_depth = 3);
WeightTable w_question(const TamePresentation& rhobar, int min_depth = 3);
std::set<SerreWeight> image(const WeightTable& t);
std::set<SerreWeight> intersect_W_JH(const TamePresentation& rhobar, const TamePresentation& tau, int min_depth = 3);

// All tuples of finite Weyl elements of length f, lexicographic.
std::vector<std::vector<FiniteWeyl>> weyl_tuples(int f);
Tuple diamond(const std::vector<FiniteWeyl>& w);

}  // namespace gsp4
