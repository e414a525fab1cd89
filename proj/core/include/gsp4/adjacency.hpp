#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gsp4/serre_weights.hpp"

namespace gsp4 {

// The simple reflection s_{i,j}: s_i at embedding j, identity elsewhere.
struct SimpleLabel {
    int i = 1;
    int j = 0;
    friend auto operator<=>(const SimpleLabel&, const SimpleLabel&) = default;
};

Tuple simple_tuple(SimpleLabel s, int f);
std::string to_string(SimpleLabel s);

// Empty when allowed, otherwise the reason.
std::string setup_violation(const APPair& pair, SimpleLabel s);

struct AdjacencyInstance {
    APPair pair;  // (w1, w) in AP'
    SimpleLabel s;
    TamePresentation tau;
    TamePresentation rhobar0;
    SerreWeight sigma1, sigma2;
    std::vector<std::string> warnings;
};

AdjacencyInstance build_instance(const TamePresentation& rhobar, const APPair& pair, SimpleLabel s,
                                 const Thresholds& th = {});

struct WeightGraph {
    std::vector<SerreWeight> vertices;
    // Edges by sorted vertex indices, with every witnessing instance.
    std::map<std::pair<int, int>, std::vector<AdjacencyInstance>> edges;

    int index_of(const SerreWeight& s) const;  // -1 when absent
    bool connected() const;
    // Vertices in `highlight` are drawn boxed and filled.
    std::string to_dot(const std::set<SerreWeight>& highlight = {}) const;
};

// With obvious_only, only the pairs (w^diamond, w^diamond) contribute edges.
WeightGraph build_graph(const TamePresentation& rhobar, const Thresholds& th = {}, bool obvious_only = false);

struct Chain {
    std::vector<AdjacencyInstance> bfs;
    std::vector<AdjacencyInstance> steered;
};

// Chains of adjacent weights from sigma to an obvious weight.
Chain find_chain(const TamePresentation& rhobar, const SerreWeight& sigma, const Thresholds& th = {});
Chain find_chain(const TamePresentation& rhobar, const WeightGraph& g, const SerreWeight& sigma,
                 const Thresholds& th = {});

}  // namespace gsp4
