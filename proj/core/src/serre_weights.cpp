#include "gsp4/serre_weights.hpp"

#include <algorithm>
#include <mutex>

#include "gsp4/admissible.hpp"

namespace gsp4 {

namespace {

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int mod(Int a, Int m) { return a - m * floor_div(a, m); }

Int ipow(Int p, int f) {
    Int r = 1;
    for (int i = 0; i < f; ++i) r *= p;
    return r;
}

void check_p(Int p) {
    if (p < 5) throw ValidationError("p must be a prime at least 5, got " + std::to_string(p));
}

// Representative modulo X^0 in each embedding with w1 having c = 0.
APPair normalize_pair(APPair q) {
    for (std::size_t j = 0; j < q.w1.size(); ++j) {
        Int c = q.w1[j].t.c;
        q.w1[j].t.c -= c;
        q.w2[j].t.c -= c;
    }
    return q;
}

// Membership in Adm(eta) up to X^0.
bool in_adm_eta_mod_x0(ExtAffine x) {
    Int d = cl(ExtAffine::translation(kEta)) - cl(x);
    if (d % 2 != 0) return false;
    x.t.c += d / 2;
    return in_adm(x, kEta);
}

std::vector<APPair> AP_base() {
    std::vector<APPair> out;
    const ExtAffine w0 = ExtAffine::finite(FiniteWeyl::w0());
    const ExtAffine wh_inv = w_h().inverse();
    for (const auto& x : adm_set(kEta)) {
        for (auto w : FiniteWeyl::all()) {
            ExtAffine w1 = diamond(w);
            ExtAffine w2 = w0 * w1 * x.inverse();
            if (!is_dominant(alcove_of(w2))) continue;
            if (!uparrow_leq(w1, wh_inv * w2)) continue;
            out.push_back(normalize_pair({{w1}, {w2}}));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<APPair> APprime_base() {
    std::vector<APPair> out;
    std::vector<Alcove> dominant;
    for (const auto& A : alcoves_in_box(kDefaultBox))
        if (is_dominant(A)) dominant.push_back(A);
    for (auto w : FiniteWeyl::all()) {
        ExtAffine w2 = diamond(w);
        Alcove B = alcove_of(w2);
        for (const auto& A : dominant) {
            if (!uparrow_leq(A, B)) continue;
            ExtAffine w1 = element_with_alcove(A, cl(w2));
            out.push_back(normalize_pair({{w1}, {w2}}));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<APPair> power(const std::vector<APPair>& base, int f) {
    std::vector<APPair> cur{APPair{}};
    for (int j = 0; j < f; ++j) {
        std::vector<APPair> next;
        for (const auto& q : cur)
            for (const auto& b : base) {
                APPair r = q;
                r.w1.push_back(b.w1[0]);
                r.w2.push_back(b.w2[0]);
                next.push_back(r);
            }
        cur = std::move(next);
    }
    for (auto& q : cur) q = normalize_pair(q);
    std::sort(cur.begin(), cur.end());
    return cur;
}

const std::vector<APPair>& cached(int f, bool prime) {
    if (f < 1) throw ValidationError("f must be positive");
    static std::mutex m;
    static std::map<std::pair<int, bool>, std::vector<APPair>> cache;
    std::lock_guard lock(m);
    auto it = cache.find({f, prime});
    if (it != cache.end()) return it->second;
    static const std::vector<APPair> ap = AP_base();
    static const std::vector<APPair> app = APprime_base();
    return cache.emplace(std::pair{f, prime}, power(prime ? app : ap, f)).first->second;
}

std::vector<Weight> translations(const Tuple& x) {
    std::vector<Weight> r;
    for (const auto& e : x) r.push_back(e.t);
    return r;
}

void check_depth(int have, int need, const char* what) {
    if (have < need)
        throw ValidationError(std::string(what) + " is " + std::to_string(have) + "-deep, need " +
                              std::to_string(need));
}

}  // namespace

APPair normalize(const APPair& q) { return normalize_pair(q); }

bool is_restricted(const Weight& l, Int p) {
    Int x = l.a - l.b, y = l.b;
    return 0 <= x && x <= p - 1 && 0 <= y && y <= p - 1;
}

std::vector<Weight> normalize_serre(std::vector<Weight> l, Int p) {
    const int f = static_cast<int>(l.size());
    const Int M = ipow(p, f) - 1;
    Int N = 0;
    for (int j = f - 1; j >= 0; --j) N = mod(N * p + l[j].c, M);
    for (auto& w : l) w.c = 0;
    l[0].c = N;
    return l;
}

bool SerreWeight::regular() const {
    for (const auto& l : lambda)
        if (l.a - l.b >= p - 1 || l.b >= p - 1) return false;
    return true;
}

int SerreWeight::depth() const {
    int d = static_cast<int>(p);
    for (const auto& l : lambda) d = std::min(d, gsp4::depth(l, p));
    return d;
}

SerreWeight make_serre_weight(std::vector<Weight> l, Int p) {
    check_p(p);
    if (l.empty()) throw ValidationError("Serre weight needs at least one embedding");
    for (const auto& w : l)
        if (!is_restricted(w, p)) throw ValidationError("weight " + to_string(w) + " is not p-restricted");
    return {p, normalize_serre(std::move(l), p)};
}

std::string to_string(const SerreWeight& s) {
    std::string r = "F(";
    for (std::size_t j = 0; j < s.lambda.size(); ++j) r += (j ? "," : "") + to_string(s.lambda[j]);
    return r + ")";
}

std::optional<std::vector<Weight>> align_to(const SerreWeight& s, const std::vector<Weight>& target) {
    const int f = s.f();
    if (static_cast<int>(target.size()) != f) throw ValidationError("embedding count mismatch");
    const Int p = s.p;
    // Adding (p - pi)nu with nu = (0,0;c_j) changes the class in embedding j by 2(p c_j - c_{j-1}).
    std::vector<Int> e(f);
    for (int j = 0; j < f; ++j) {
        Int d = cl(ExtAffine::translation(target[j])) - cl(ExtAffine::translation(s.lambda[j]));
        if (d % 2 != 0) return std::nullopt;
        e[j] = d / 2;
    }
    const Int M = ipow(p, f) - 1;
    std::vector<Weight> out = s.lambda;
    std::vector<Int> c(f);
    for (int j = 0; j < f; ++j) {
        Int num = 0;
        for (int k = 0; k < f; ++k) num += ipow(p, f - 1 - k) * e[((j - k) % f + f) % f];
        if (num % M != 0) return std::nullopt;
        c[j] = num / M;
    }
    for (int j = 0; j < f; ++j) out[j].c += p * c[j] - c[(j + f - 1) % f];
    return out;
}

bool uparrow_leq(const SerreWeight& s, const SerreWeight& s0) {
    if (s.p != s0.p || s.f() != s0.f()) throw ValidationError("incompatible Serre weights");
    auto rep = align_to(s, s0.lambda);
    if (!rep) return false;
    for (int j = 0; j < s.f(); ++j)
        if (!uparrow_leq((*rep)[j], s0.lambda[j], s.p)) return false;
    return true;
}

SerreWeight serre_weight_of_presentation(const Tuple& w1, const std::vector<Weight>& omega, Int p) {
    check_p(p);
    if (w1.size() != omega.size() || w1.empty()) throw ValidationError("embedding count mismatch");
    for (const auto& o : omega)
        if (depth_in_lowest_alcove(o - kEta, p) < 0)
            throw ValidationError("omega - eta = " + to_string(o - kEta) + " is not in the lowest alcove");
    Tuple r = pi_inverse(w1);
    std::vector<Weight> l;
    for (std::size_t j = 0; j < r.size(); ++j) {
        Weight x = p_dot(r[j], omega[j] - kEta, p);
        if (!is_restricted(x, p)) throw ValidationError("presentation out of range");
        l.push_back(x);
    }
    return {p, normalize_serre(std::move(l), p)};
}

SerreWeight R_map(const SerreWeight& s) {
    if (!s.regular()) throw ValidationError(to_string(s) + " is not regular");
    std::vector<Weight> l;
    for (const auto& x : s.lambda) l.push_back(p_dot(w_h(), x, s.p));
    return make_serre_weight(std::move(l), s.p);
}

Tuple TamePresentation::element() const {
    Tuple r;
    for (int j = 0; j < f(); ++j) r.push_back({mu[j] + kEta, s[j]});
    return r;
}

int TamePresentation::depth() const {
    int d = static_cast<int>(p);
    for (const auto& m : mu) d = std::min(d, depth_in_lowest_alcove(m, p));
    return d;
}

TamePresentation make_presentation(std::vector<FiniteWeyl> s, std::vector<Weight> mu, Int p) {
    check_p(p);
    if (s.size() != mu.size() || s.empty()) throw ValidationError("presentation needs matching s and mu of length f >= 1");
    TamePresentation t{std::move(s), std::move(mu), p};
    for (const auto& m : t.mu)
        if (depth_in_lowest_alcove(m, p) < 0) throw ValidationError("mu = " + to_string(m) + " is not in C_0");
    return t;
}

Tuple relative(const TamePresentation& rhobar, const TamePresentation& tau) {
    if (rhobar.p != tau.p || rhobar.f() != tau.f()) throw ValidationError("incompatible presentations");
    return inverse(tau.element()) * rhobar.element();
}

TamePresentation type_from_target(const TamePresentation& rhobar, const Tuple& g) {
    if (static_cast<int>(g.size()) != rhobar.f()) throw ValidationError("embedding count mismatch");
    Tuple x = rhobar.element() * inverse(g);
    std::vector<FiniteWeyl> s;
    std::vector<Weight> mu;
    for (const auto& e : x) {
        s.push_back(e.w);
        mu.push_back(e.t - kEta);
        if (depth_in_lowest_alcove(mu.back(), rhobar.p) < 0)
            throw ValidationError("malformed target: mu = " + to_string(mu.back()) + " is not in C_0");
    }
    return {std::move(s), std::move(mu), rhobar.p};
}

const std::vector<APPair>& enumerate_AP(int f) { return cached(f, false); }
const std::vector<APPair>& enumerate_APprime(int f) { return cached(f, true); }

SerreWeight F_tau(const TamePresentation& tau, const APPair& pair) {
    return serre_weight_of_presentation(pair.w1, translations(tau.element() * inverse(pair.w2)), tau.p);
}

SerreWeight F_rhobar(const TamePresentation& rhobar, const APPair& pair) {
    return serre_weight_of_presentation(pair.w2, translations(rhobar.element() * inverse(pair.w1)), rhobar.p);
}

std::vector<std::vector<FiniteWeyl>> weyl_tuples(int f) {
    std::vector<std::vector<FiniteWeyl>> cur{{}};
    for (int j = 0; j < f; ++j) {
        std::vector<std::vector<FiniteWeyl>> next;
        for (const auto& t : cur)
            for (auto w : FiniteWeyl::all()) {
                auto u = t;
                u.push_back(w);
                next.push_back(u);
            }
        cur = std::move(next);
    }
    return cur;
}

Tuple diamond(const std::vector<FiniteWeyl>& w) {
    Tuple r;
    for (auto x : w) r.push_back(diamond(x));
    return r;
}

APPair outer_pair(const std::vector<FiniteWeyl>& w) {
    Tuple d = diamond(w);
    return normalize_pair({d, constant_tuple(w_h(), static_cast<int>(w.size())) * d});
}

APPair obvious_pair(const std::vector<FiniteWeyl>& w) {
    Tuple d = diamond(w);
    return normalize_pair({d, d});
}

SerreWeight outer_weight(const TamePresentation& tau, const std::vector<FiniteWeyl>& w) {
    return F_tau(tau, outer_pair(w));
}

SerreWeight obvious_weight(const TamePresentation& rhobar, const std::vector<FiniteWeyl>& w) {
    return F_rhobar(rhobar, obvious_pair(w));
}

WeightTable jh_factors(const TamePresentation& tau, int min_depth) {
    check_depth(tau.depth(), min_depth, "type");
    WeightTable t;
    for (const auto& q : enumerate_AP(tau.f())) t.emplace(q, F_tau(tau, q));
    return t;
}

WeightTable w_question(const TamePresentation& rhobar, int min_depth) {
    check_depth(rhobar.depth(), min_depth, "representation");
    WeightTable t;
    for (const auto& q : enumerate_APprime(rhobar.f())) t.emplace(q, F_rhobar(rhobar, q));
    return t;
}

std::set<SerreWeight> image(const WeightTable& t) {
    std::set<SerreWeight> r;
    for (const auto& [q, s] : t) r.insert(s);
    return r;
}

std::set<SerreWeight> intersect_W_JH(const TamePresentation& rhobar, const TamePresentation& tau, int min_depth) {
    if (rhobar.p != tau.p || rhobar.f() != tau.f()) throw ValidationError("incompatible presentations");
    auto a = image(w_question(rhobar, min_depth));
    auto b = image(jh_factors(tau, min_depth));
    std::set<SerreWeight> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.begin()));
    return r;
}

bool ap_admissible(const APPair& q) {
    const ExtAffine w0 = ExtAffine::finite(FiniteWeyl::w0());
    for (std::size_t j = 0; j < q.w1.size(); ++j)
        if (!in_adm_eta_mod_x0(q.w2[j].inverse() * w0 * q.w1[j])) return false;
    return true;
}

}  // namespace gsp4
