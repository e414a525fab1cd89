#include "gsp4/admissible.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gsp4 {

namespace {

const AffineSystem* system_for(Levi M) {
    switch (M) {
        case Levi::M1: return &AffineSystem::levi(1);
        case Levi::M2: return &AffineSystem::levi(2);
        case Levi::T: return nullptr;
    }
    return nullptr;
}

std::vector<ExtAffine> sorted_unique(std::set<ExtAffine> s) { return {s.begin(), s.end()}; }

const std::vector<ExtAffine>& adm_cached(const Weight& lambda) {
    thread_local std::map<Weight, std::vector<ExtAffine>> cache;
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
    if (!is_dominant(lambda)) throw ValidationError("Adm(lambda) needs a dominant lambda, got " + to_string(lambda));
    std::set<ExtAffine> out;
    for (auto w : FiniteWeyl::all())
        for (const auto& x : AffineSystem::full().lower_interval(ExtAffine::translation(w.act(lambda))))
            out.insert(x);
    return cache.emplace(lambda, sorted_unique(std::move(out))).first->second;
}

bool same_mod_x0(const ExtAffine& x, const ExtAffine& y) { return normalize_x0(x) == normalize_x0(y); }

}  // namespace

std::vector<FiniteWeyl> levi_weyl(Levi M) {
    switch (M) {
        case Levi::T: return {FiniteWeyl::identity()};
        case Levi::M1: return {FiniteWeyl::identity(), FiniteWeyl::s1()};
        case Levi::M2: return {FiniteWeyl::identity(), FiniteWeyl::s2()};
    }
    return {};
}

bool is_min_coset_rep(FiniteWeyl w, Levi M) {
    for (auto s : levi_weyl(M))
        if (s != FiniteWeyl::identity() && (s * w).length() < w.length()) return false;
    return true;
}

std::pair<FiniteWeyl, FiniteWeyl> levi_decompose(FiniteWeyl w, Levi M) {
    std::vector<std::pair<FiniteWeyl, FiniteWeyl>> found;
    for (auto wM : levi_weyl(M)) {
        FiniteWeyl rest = wM.inverse() * w;
        if (is_min_coset_rep(rest, M)) found.emplace_back(wM, rest);
    }
    if (found.size() != 1) throw InvariantError("Levi decomposition is not unique");
    return found.front();
}

std::vector<ExtAffine> adm_set(const Weight& lambda) { return adm_cached(lambda); }

std::vector<DualElement> adm_dual(const Weight& lambda) {
    std::vector<DualElement> out;
    for (const auto& x : adm_cached(lambda)) out.push_back(star(x));
    std::sort(out.begin(), out.end());
    return out;
}

bool in_adm(const ExtAffine& x, const Weight& lambda) {
    const auto& a = adm_cached(lambda);
    return std::binary_search(a.begin(), a.end(), x);
}

int colength(const ExtAffine& x, const Weight& lambda) {
    if (!in_adm(x, lambda)) throw ValidationError(to_string(x) + " is not in Adm" + to_string(lambda));
    return length(ExtAffine::translation(lambda)) - length(x);
}

bool is_regular(const ExtAffine& x) {
    for (Int v : functionals6(alcove_of(x)))
        if (v > 0 && v < 6) return false;
    return true;
}

std::vector<ExtAffine> adm_regular(const Weight& lambda) {
    std::vector<ExtAffine> out;
    for (const auto& x : adm_cached(lambda))
        if (is_regular(x)) out.push_back(x);
    return out;
}

std::vector<ExtAffine> adm_levi(Levi M, const Weight& lambda) {
    if (!is_dominant(lambda)) throw ValidationError("Adm_M(lambda) needs a dominant lambda");
    std::set<ExtAffine> out;
    const AffineSystem* sys = system_for(M);
    for (auto w : levi_weyl(M)) {
        ExtAffine t = ExtAffine::translation(w.act(lambda));
        if (!sys) {
            out.insert(t);
            continue;
        }
        for (const auto& x : sys->lower_interval(t)) out.insert(x);
    }
    return sorted_unique(std::move(out));
}

std::vector<ExtAffine> adm_levi_conjugate(Levi M, FiniteWeyl wM, const Weight& lambda) {
    if (!is_min_coset_rep(wM, M)) throw ValidationError(wM.word() + " is not a minimal coset representative");
    ExtAffine c = ExtAffine::finite(wM);
    std::set<ExtAffine> out;
    for (const auto& x : adm_levi(M, lambda)) out.insert(c.inverse() * x * c);
    return sorted_unique(std::move(out));
}

ColengthOne classify_colength_one() {
    ColengthOne out;
    const ExtAffine hw0 = w_h().inverse() * ExtAffine::finite(FiniteWeyl::w0());
    for (auto w : FiniteWeyl::all())
        for (int s = 1; s <= 2; ++s) {
            ExtAffine S = ExtAffine::finite(FiniteWeyl::generator(s));
            ExtAffine d = diamond(w);
            ExtAffine x = d.inverse() * hw0 * S * d;
            ExtAffine ds = diamond(FiniteWeyl::generator(s) * w);
            ExtAffine y = ds.inverse() * hw0 * S * ds;
            auto [wl, wM] = levi_decompose(w, s == 1 ? Levi::M1 : Levi::M2);
            ExtAffine c = ExtAffine::finite(wM);
            ExtAffine z = c.inverse() * ExtAffine::translation(kEta) * S * c;
            out.family.push_back({w, s, x, x == y, same_mod_x0(x, y), x == z, same_mod_x0(x, z)});
        }
    int top = length(ExtAffine::translation(kEta));
    for (const auto& x : adm_cached(kEta)) {
        if (length(x) != top - 1) continue;
        (is_regular(x) ? out.regular : out.irregular).push_back(x);
    }
    return out;
}

LocalCase classify_local(const ExtAffine& g) {
    ExtAffine n = normalize_x0(g);
    for (auto w : FiniteWeyl::all())
        if (n == normalize_x0(ExtAffine::translation(w.act(kEta)))) return LocalCase::Extremal;
    for (auto w : FiniteWeyl::all())
        for (int s = 1; s <= 2; ++s) {
            auto [wl, wM] = levi_decompose(w, s == 1 ? Levi::M1 : Levi::M2);
            ExtAffine c = ExtAffine::finite(wM);
            ExtAffine z = c.inverse() * ExtAffine::translation(kEta) * ExtAffine::finite(FiniteWeyl::generator(s)) * c;
            if (n == normalize_x0(z)) return LocalCase::IrregularColengthOne;
        }
    // w~_2^-1 w~_h^-1 w0 w~_1 with w~_1 in Omega and w~_2 the element over A_1 with the same Omega-part.
    const ExtAffine hw0 = w_h().inverse() * ExtAffine::finite(FiniteWeyl::w0());
    for (Int c = 0; c <= 1; ++c) {
        ExtAffine w1 = element_with_alcove(restricted_alcove(0), c);
        ExtAffine w2 = element_with_alcove(restricted_alcove(1), c);
        if (n == normalize_x0(w2.inverse() * hw0 * w1)) return LocalCase::RegularColengthOne;
    }
    return LocalCase::Other;
}

}  // namespace gsp4
