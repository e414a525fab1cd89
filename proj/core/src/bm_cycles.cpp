#include "gsp4/bm_cycles.hpp"

#include <vector>

#include "gsp4/admissible.hpp"

namespace gsp4 {

namespace {

ExtAffine lift_of_alcove(int i) { return element_with_alcove(restricted_alcove(i), 0); }

std::vector<std::vector<Weight>> product(const std::vector<std::vector<Weight>>& choices) {
    std::vector<std::vector<Weight>> cur{{}};
    for (const auto& c : choices) {
        std::vector<std::vector<Weight>> next;
        for (const auto& t : cur)
            for (const auto& w : c) {
                auto u = t;
                u.push_back(w);
                next.push_back(u);
            }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

Weight linked_in_alcove(const Weight& l, int i, Int p) {
    int k = restricted_p_alcove(l, p);
    if (k < 0) throw ValidationError(to_string(l) + " is not in a restricted alcove");
    if (i < 0 || i > 3) throw ValidationError("alcove index must be 0..3");
    return p_dot(lift_of_alcove(i) * lift_of_alcove(k).inverse(), l, p);
}

Cycle bm_cycle(const SerreWeight& sigma, int min_depth) {
    if (sigma.depth() < min_depth)
        throw ValidationError(to_string(sigma) + " is " + std::to_string(sigma.depth()) + "-deep, need " +
                              std::to_string(min_depth));
    std::vector<std::vector<Weight>> choices;
    for (const auto& l : sigma.lambda) {
        std::vector<Weight> c{l};
        if (restricted_p_alcove(l, sigma.p) == 2) {
            Weight m = linked_in_alcove(l, 0, sigma.p);
            if (!uparrow_leq(m, l, sigma.p)) throw InvariantError("companion is not below");
            c.push_back(m);
        }
        choices.push_back(c);
    }
    Cycle z;
    for (const auto& t : product(choices)) z.add(make_serre_weight(t, sigma.p), 1);
    return z;
}

GrothendieckClass weyl_class(const Weight& l, Int p) {
    if (!is_restricted(l, p)) throw ValidationError(to_string(l) + " is not p-restricted");
    int i = restricted_p_alcove(l, p);
    if (i < 0) throw ValidationError(to_string(l) + " lies on a wall");
    GrothendieckClass g;
    g.add(make_serre_weight({l}, p), 1);
    if (i > 0) {
        Weight m = linked_in_alcove(l, i - 1, p);
        if (!uparrow_leq(m, l, p)) throw InvariantError("linked predecessor is not below");
        g.add(make_serre_weight({m}, p), 1);
    }
    return g;
}

std::set<SerreWeight> support_upper_bound(const SerreWeight& sigma) {
    std::vector<std::vector<Weight>> choices;
    for (const auto& l : sigma.lambda) {
        std::vector<Weight> c;
        int k = restricted_p_alcove(l, sigma.p);
        if (k < 0) {
            c.push_back(l);
        } else {
            for (int i = 0; i <= k; ++i) {
                Weight m = linked_in_alcove(l, i, sigma.p);
                if (uparrow_leq(m, l, sigma.p)) c.push_back(m);
            }
        }
        choices.push_back(c);
    }
    std::set<SerreWeight> r;
    for (const auto& t : product(choices)) r.insert(make_serre_weight(t, sigma.p));
    return r;
}

ColengthOneReport colength_one_components(const TamePresentation& rhobar, const TamePresentation& tau, int min_depth) {
    ColengthOneReport r;
    for (const auto& g : relative(rhobar, tau)) {
        switch (classify_local(g)) {
            case LocalCase::Extremal:
                break;
            case LocalCase::IrregularColengthOne:
            case LocalCase::RegularColengthOne:
                ++r.embeddings_in_two;
                break;
            case LocalCase::Other:
                throw ValidationError("not a colength-one/extremal configuration");
        }
    }
    r.weights = intersect_W_JH(rhobar, tau, min_depth);
    if (r.weights.size() != std::size_t{1} << r.embeddings_in_two)
        throw InvariantError("component count " + std::to_string(r.weights.size()) + " differs from 2^" +
                             std::to_string(r.embeddings_in_two));
    return r;
}

Cycle bm_sum(const Weight& lambda, const TamePresentation& tau, const std::optional<std::map<SerreWeight, Int>>& n_table,
             int min_depth) {
    std::map<SerreWeight, Int> n;
    if (n_table) {
        n = *n_table;
    } else {
        if (lambda != Weight{}) throw ValidationError("multiplicities must be supplied for nonzero lambda");
        for (const auto& s : image(jh_factors(tau, min_depth))) n[s] = 1;
    }
    if (lambda == Weight{} && n_table) {
        auto jh = image(jh_factors(tau, min_depth));
        for (const auto& [s, k] : n)
            if (!jh.count(s)) throw ValidationError(to_string(s) + " is not a JH factor of the type");
    }
    Cycle z;
    for (const auto& [s, k] : n) {
        if (k < 0) throw ValidationError("negative multiplicity for " + to_string(s));
        z += k * bm_cycle(s, min_depth);
    }
    return z;
}

}  // namespace gsp4
