#include "gsp4/adjacency.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace gsp4 {

namespace {

const ExtAffine kW0 = ExtAffine::finite(FiniteWeyl::w0());

bool obvious_at(const APPair& q, int j) { return normalize_x0(q.w1[j]) == normalize_x0(q.w2[j]); }

bool obvious(const APPair& q) {
    for (int j = 0; j < static_cast<int>(q.w1.size()); ++j)
        if (!obvious_at(q, j)) return false;
    return true;
}

std::vector<SimpleLabel> labels(int f) {
    std::vector<SimpleLabel> r;
    for (int j = 0; j < f; ++j)
        for (int i = 1; i <= 2; ++i) r.push_back({i, j});
    return r;
}

// s at embedding j picked by the alcove of w_j.
SimpleLabel steer(const APPair& q, int j) {
    switch (restricted_index(alcove_of(q.w2[j]))) {
        case 1:
        case 2:
            return {1, j};
        case 3:
            return {in_omega(q.w1[j]) ? 1 : 2, j};
        default:
            throw InvariantError("non-obvious pair with w in the base alcove");
    }
}

}  // namespace

Tuple simple_tuple(SimpleLabel s, int f) {
    if (s.i < 1 || s.i > 2 || s.j < 0 || s.j >= f) throw ValidationError("bad simple reflection " + to_string(s));
    Tuple r(f);
    r[s.j] = ExtAffine::finite(FiniteWeyl::generator(s.i));
    return r;
}

std::string to_string(SimpleLabel s) { return "s" + std::to_string(s.i) + "," + std::to_string(s.j); }

std::string setup_violation(const APPair& pair, SimpleLabel s) {
    if (s.i == 2 && in_omega(pair.w1[s.j]) && !obvious_at(pair, s.j))
        return "s = s_{2," + std::to_string(s.j) + "} is excluded when w1 has length zero and differs from w at embedding " +
               std::to_string(s.j);
    return {};
}

AdjacencyInstance build_instance(const TamePresentation& rhobar, const APPair& pair, SimpleLabel s, const Thresholds& th) {
    const int f = rhobar.f();
    if (static_cast<int>(pair.w1.size()) != f) throw ValidationError("embedding count mismatch");
    if (rhobar.depth() < th.rhobar)
        throw ValidationError("representation is " + std::to_string(rhobar.depth()) + "-deep, need " +
                              std::to_string(th.rhobar));
    if (auto why = setup_violation(pair, s); !why.empty()) throw ValidationError(why);

    const Tuple s_t = simple_tuple(s, f);
    const Tuple front = inverse(pair.w2) * constant_tuple(w_h().inverse() * kW0, f) * s_t;
    AdjacencyInstance r{pair, s, type_from_target(rhobar, front * pair.w1), {}, {}, {}, {}};
    r.rhobar0 = type_from_target(r.tau, inverse(front * pair.w2));

    std::vector<FiniteWeyl> w, sw;
    for (int j = 0; j < f; ++j) {
        w.push_back(pair.w2[j].w);
        sw.push_back(s_t[j].w * pair.w2[j].w);
    }
    r.sigma1 = outer_weight(r.tau, w);
    r.sigma2 = outer_weight(r.tau, sw);
    if (r.tau.depth() < th.tau)
        r.warnings.push_back("type is only " + std::to_string(r.tau.depth()) + "-deep");
    if (r.rhobar0.depth() < th.tau)
        r.warnings.push_back("rhobar0 is only " + std::to_string(r.rhobar0.depth()) + "-deep");

    auto both = intersect_W_JH(r.rhobar0, r.tau, th.weight);
    if (r.sigma1 == r.sigma2 || both != std::set<SerreWeight>{r.sigma1, r.sigma2})
        throw InvariantError("intersection is not {sigma1, sigma2} for " + to_string(s));
    return r;
}

int WeightGraph::index_of(const SerreWeight& s) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), s);
    return it != vertices.end() && *it == s ? static_cast<int>(it - vertices.begin()) : -1;
}

bool WeightGraph::connected() const {
    if (vertices.empty()) return true;
    std::vector<std::vector<int>> adj(vertices.size());
    for (const auto& [e, _] : edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    std::vector<bool> seen(vertices.size());
    std::vector<int> todo{0};
    seen[0] = true;
    std::size_t n = 1;
    while (!todo.empty()) {
        int v = todo.back();
        todo.pop_back();
        for (int u : adj[v])
            if (!seen[u]) seen[u] = true, ++n, todo.push_back(u);
    }
    return n == vertices.size();
}

std::string WeightGraph::to_dot(const std::set<SerreWeight>& highlight) const {
    std::ostringstream o;
    o << "graph weights {\n";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        o << "  v" << i << " [label=\"" << to_string(vertices[i]) << "\"";
        if (highlight.count(vertices[i])) o << ", shape=box, style=filled, fillcolor=lightgrey";
        o << "];\n";
    }
    for (const auto& [e, inst] : edges) {
        o << "  v" << e.first << " -- v" << e.second << " [label=\"";
        for (std::size_t k = 0; k < inst.size(); ++k) o << (k ? " " : "") << to_string(inst[k].s);
        o << "\"];\n";
    }
    o << "}\n";
    return o.str();
}

WeightGraph build_graph(const TamePresentation& rhobar, const Thresholds& th, bool obvious_only) {
    WeightGraph g;
    auto table = w_question(rhobar, th.weight);
    for (const auto& s : image(table)) g.vertices.push_back(s);
    for (const auto& [q, sigma] : table) {
        if (obvious_only && !obvious(q)) continue;
        for (auto s : labels(rhobar.f())) {
            if (!setup_violation(q, s).empty()) continue;
            AdjacencyInstance inst = build_instance(rhobar, q, s, th);
            int a = g.index_of(inst.sigma1), b = g.index_of(inst.sigma2);
            if (a < 0 || b < 0) throw InvariantError("edge leaves the predicted weights");
            g.edges[{std::min(a, b), std::max(a, b)}].push_back(std::move(inst));
        }
    }
    return g;
}

Chain find_chain(const TamePresentation& rhobar, const SerreWeight& sigma, const Thresholds& th) {
    return find_chain(rhobar, build_graph(rhobar, th), sigma, th);
}

Chain find_chain(const TamePresentation& rhobar, const WeightGraph& g, const SerreWeight& sigma, const Thresholds& th) {
    const int start = g.index_of(sigma);
    if (start < 0) throw ValidationError(to_string(sigma) + " is not a predicted weight");
    const int f = rhobar.f();

    std::map<SerreWeight, APPair> pair_of;
    for (const auto& [q, s] : w_question(rhobar, th.weight)) pair_of.emplace(s, q);
    std::set<int> obv;
    for (const auto& w : weyl_tuples(f)) obv.insert(g.index_of(obvious_weight(rhobar, w)));

    Chain c;
    // Breadth-first search to the nearest obvious weight.
    std::vector<std::vector<std::pair<int, const AdjacencyInstance*>>> adj(g.vertices.size());
    for (const auto& [e, inst] : g.edges) {
        adj[e.first].push_back({e.second, &inst.front()});
        adj[e.second].push_back({e.first, &inst.front()});
    }
    std::vector<int> prev(g.vertices.size(), -2);
    std::vector<const AdjacencyInstance*> via(g.vertices.size());
    std::queue<int> todo;
    todo.push(start);
    prev[start] = -1;
    int hit = -1;
    while (!todo.empty() && hit < 0) {
        int v = todo.front();
        todo.pop();
        if (obv.count(v)) {
            hit = v;
            break;
        }
        for (auto [u, inst] : adj[v])
            if (prev[u] == -2) prev[u] = v, via[u] = inst, todo.push(u);
    }
    if (hit < 0) throw InvariantError("no path to an obvious weight");
    for (int v = hit; prev[v] >= 0; v = prev[v]) c.bfs.push_back(*via[v]);
    std::reverse(c.bfs.begin(), c.bfs.end());

    APPair q = pair_of.at(sigma);
    const int cap = 4 * f;
    while (!obvious(q)) {
        if (static_cast<int>(c.steered.size()) >= cap) throw InvariantError("steered chain did not terminate");
        int j = 0;
        while (obvious_at(q, j)) ++j;
        AdjacencyInstance inst = build_instance(rhobar, q, steer(q, j), th);
        if (inst.sigma1 != F_rhobar(rhobar, q)) throw InvariantError("sigma1 differs from the starting weight");
        q = pair_of.at(inst.sigma2);
        c.steered.push_back(std::move(inst));
    }
    return c;
}

}  // namespace gsp4
