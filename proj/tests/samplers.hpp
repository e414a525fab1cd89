#pragma once

#include <random>
#include <stdexcept>

#include "gsp4/serre_weights.hpp"

namespace sample {

// A weight mu in C_0 with depth exactly at least m, c-coordinate free.
inline gsp4::Weight deep_mu(std::mt19937_64& rng, int m, gsp4::Int p) {
    std::uniform_int_distribution<gsp4::Int> d(0, p), c(-5, 5);
    for (int tries = 0; tries < 100000; ++tries) {
        gsp4::Int A = d(rng), B = d(rng);
        gsp4::Weight mu{A - 2, B - 1, c(rng)};
        if (gsp4::depth_in_lowest_alcove(mu, p) >= m) return mu;
    }
    throw std::runtime_error("no deep weight found");
}

inline gsp4::TamePresentation presentation(std::mt19937_64& rng, int f, int m, gsp4::Int p) {
    std::uniform_int_distribution<int> w(0, 7);
    std::vector<gsp4::FiniteWeyl> s;
    std::vector<gsp4::Weight> mu;
    for (int j = 0; j < f; ++j) {
        s.push_back(gsp4::FiniteWeyl::all()[w(rng)]);
        mu.push_back(deep_mu(rng, m, p));
    }
    return gsp4::make_presentation(s, mu, p);
}

}  // namespace sample
