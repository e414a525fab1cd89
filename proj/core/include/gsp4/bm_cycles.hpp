#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "gsp4/serre_weights.hpp"

namespace gsp4 {

// Finitely supported integer combinations of Serre weights; zero coefficients are never stored.
template <class Tag>
struct Combination {
    std::map<SerreWeight, Int> coeff;

    void add(const SerreWeight& s, Int k) {
        if (k == 0) return;
        if ((coeff[s] += k) == 0) coeff.erase(s);
    }
    Combination& operator+=(const Combination& o) {
        for (const auto& [s, k] : o.coeff) add(s, k);
        return *this;
    }
    friend Combination operator+(Combination a, const Combination& b) { return a += b; }
    friend Combination operator-(Combination a, const Combination& b) { return a += Int{-1} * b; }
    friend Combination operator*(Int k, const Combination& a) {
        Combination r;
        for (const auto& [s, c] : a.coeff) r.add(s, k * c);
        return r;
    }
    bool effective() const {
        for (const auto& [s, k] : coeff)
            if (k < 0) return false;
        return true;
    }
    std::set<SerreWeight> support() const {
        std::set<SerreWeight> r;
        for (const auto& [s, k] : coeff) r.insert(s);
        return r;
    }
    Combination restricted_to(const std::set<SerreWeight>& keep) const {
        Combination r;
        for (const auto& [s, k] : coeff)
            if (keep.count(s)) r.coeff.emplace(s, k);
        return r;
    }
    friend bool operator==(const Combination&, const Combination&) = default;
};

struct CycleTag {};
struct ClassTag {};
using Cycle = Combination<CycleTag>;
using GrothendieckClass = Combination<ClassTag>;

template <class Tag>
std::string to_string(const Combination<Tag>& c) {
    if (c.coeff.empty()) return "0";
    std::string r;
    for (const auto& [s, k] : c.coeff) {
        if (!r.empty()) r += " + ";
        if (k != 1) r += std::to_string(k) + "*";
        r += to_string(s);
    }
    return r;
}

// The member of the linkage orbit of l lying in the restricted alcove C_i.
Weight linked_in_alcove(const Weight& l, int i, Int p);

Cycle bm_cycle(const SerreWeight& sigma, int min_depth = 3);
GrothendieckClass weyl_class(const Weight& l, Int p);
std::set<SerreWeight> support_upper_bound(const SerreWeight& sigma);

struct ColengthOneReport {
    std::set<SerreWeight> weights;
    int embeddings_in_two = 0;  // embeddings in the irregular or regular colength-one case
};

ColengthOneReport colength_one_components(const TamePresentation& rhobar, const TamePresentation& tau,
                                          int min_depth = 3);

// Without a table, lambda must be zero and every JH factor gets multiplicity one.
Cycle bm_sum(const Weight& lambda, const TamePresentation& tau, const std::optional<std::map<SerreWeight, Int>>& n_table,
             int min_depth = 3);

}  // namespace gsp4
