#include "gsp4/affine_weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

namespace gsp4 {

namespace {

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

using Floors = std::array<Int, 4>;

constexpr std::array<Floors, 4> kRestrictedFloors{{{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 1}, {0, 0, 2, 1}}};

Floors floors_of(const std::array<Int, 4>& values, Int scale) {
    Floors f{};
    for (int i = 0; i < 4; ++i) f[i] = floor_div(values[i], scale);
    return f;
}

std::array<Int, 4> functionals_of(Int x, Int y) { return {x - y, y, x + y, x}; }

bool in_positive_cone(Int dx, Int dy) { return dx >= 0 && dx + dy >= 0; }

// d = x alpha_1 + y alpha_2 with x, y >= 0.
bool in_positive_span(const Weight& d) {
    Int x = d.a, y = -d.c;
    return x >= 0 && y >= 0 && d.b == -x + 2 * y;
}

}  // namespace

ExtAffine ExtAffine::inverse() const {
    FiniteWeyl wi = w.inverse();
    return {-wi.act(t), wi};
}

ExtAffine operator*(const ExtAffine& x, const ExtAffine& y) { return {x.t + x.w.act(y.t), x.w * y.w}; }

Tuple operator*(const Tuple& x, const Tuple& y) {
    if (x.size() != y.size()) throw ValidationError("tuple lengths differ");
    Tuple r(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) r[j] = x[j] * y[j];
    return r;
}

Tuple inverse(const Tuple& x) {
    Tuple r(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) r[j] = x[j].inverse();
    return r;
}

Tuple constant_tuple(const ExtAffine& x, int f) { return Tuple(static_cast<std::size_t>(f), x); }

DualElement star(const ExtAffine& x) { return {x.w.inverse(), x.t}; }

ExtAffine star(const DualElement& y) { return {y.t, y.w.inverse()}; }

Alcove alcove_of(const ExtAffine& x) {
    Weight b = x.w.act(Weight{3, 1, 0});  // c is irrelevant for the projection
    return {6 * x.t.a + b.a, 6 * x.t.b + b.b};
}

Alcove restricted_alcove(int i) {
    static constexpr std::array<Alcove, 4> bary{{{3, 1}, {5, 3}, {7, 3}, {9, 5}}};
    return bary.at(i);
}

std::array<Int, 4> functionals6(const Alcove& A) { return functionals_of(A.x6, A.y6); }

bool is_dominant(const Alcove& A) {
    auto f = functionals6(A);
    return f[0] > 0 && f[1] > 0;
}

int restricted_index(const Alcove& A) {
    Floors f = floors_of(functionals6(A), 6);
    for (int i = 0; i < 4; ++i)
        if (f == kRestrictedFloors[i]) return i;
    return -1;
}

bool in_box(const Alcove& A, int R) {
    for (Int v : functionals6(A))
        if (v > 6 * R || v < -6 * R) return false;
    return true;
}

std::vector<Alcove> alcoves_in_box(int R) {
    std::set<Alcove> seen{Alcove{}};
    std::queue<Alcove> todo;
    todo.push(Alcove{});
    const auto& simple = AffineSystem::full().simple_reflections();
    while (!todo.empty()) {
        Alcove A = todo.front();
        todo.pop();
        ExtAffine x = element_with_alcove(A, 0);
        for (const auto& s : simple) {
            Alcove B = alcove_of(x * s);
            if (in_box(B, R) && seen.insert(B).second) todo.push(B);
        }
    }
    return {seen.begin(), seen.end()};
}

std::string to_string(const Alcove& A) {
    auto frac = [](Int n) {
        Int g = std::gcd(n < 0 ? -n : n, Int{6});
        if (g == 6) return std::to_string(n / 6);
        return std::to_string(n / g) + "/" + std::to_string(6 / g);
    };
    return "(" + frac(A.x6) + ", " + frac(A.y6) + ")";
}

Int cl(const ExtAffine& x) { return x.t.a + x.t.b + 2 * x.t.c; }

ExtAffine affine_reflection(int root_index, Int k) {
    return {k * kPositiveRoots.at(root_index), FiniteWeyl::reflection(root_index)};
}

ExtAffine affine_simple(int i) { return AffineSystem::full().simple_reflections().at(i); }

const AffineSystem& AffineSystem::full() {
    static const AffineSystem sys(0, {0, 1, 2, 3},
                                  {affine_reflection(2, 1), ExtAffine::finite(FiniteWeyl::s1()),
                                   ExtAffine::finite(FiniteWeyl::s2())});
    return sys;
}

const AffineSystem& AffineSystem::levi(int simple) {
    static const AffineSystem m1(1, {0}, {affine_reflection(0, 1), affine_reflection(0, 0)});
    static const AffineSystem m2(2, {1}, {affine_reflection(1, 1), affine_reflection(1, 0)});
    if (simple == 1) return m1;
    if (simple == 2) return m2;
    throw ValidationError("Levi index must be 1 or 2");
}

int AffineSystem::length(const ExtAffine& x) const {
    auto base = functionals6(Alcove{});
    auto here = functionals6(alcove_of(x));
    Int n = 0;
    for (int r : roots_) {
        Int d = floor_div(here[r], 6) - floor_div(base[r], 6);
        n += d < 0 ? -d : d;
    }
    return static_cast<int>(n);
}

AffineSystem::Reduced AffineSystem::reduced(const ExtAffine& x) const {
    Reduced out{{}, x};
    int l = length(x);
    while (l > 0) {
        bool moved = false;
        for (std::size_t i = 0; i < simple_.size(); ++i) {
            ExtAffine y = simple_[i] * out.delta;
            int ly = length(y);
            if (ly < l) {
                out.word.push_back(static_cast<int>(i));
                out.delta = y;
                l = ly;
                moved = true;
                break;
            }
        }
        if (!moved) throw InvariantError("no left descent for an element of positive length");
    }
    return out;
}

bool AffineSystem::bruhat_leq(const ExtAffine& x, const ExtAffine& y) const {
    if (omega_part(x) != omega_part(y)) return false;
    return leq_rec(x, y);
}

bool AffineSystem::leq_rec(const ExtAffine& x, const ExtAffine& y) const {
    int lx = length(x), ly = length(y);
    if (lx > ly) return false;
    if (ly == 0) return x == y;
    if (lx == ly) return x == y;
    using Key = std::tuple<int, ExtAffine, ExtAffine>;
    thread_local std::map<Key, bool> memo;
    Key key{id_, x, y};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool result = false;
    for (const auto& s : simple_) {
        ExtAffine sy = s * y;
        if (length(sy) >= ly) continue;
        ExtAffine sx = s * x;
        result = length(sx) < lx ? leq_rec(sx, sy) : leq_rec(x, sy);
        break;
    }
    memo.emplace(std::move(key), result);
    return result;
}

std::vector<ExtAffine> AffineSystem::lower_interval(const ExtAffine& y) const {
    Reduced r = reduced(y);
    std::set<ExtAffine> out;
    std::size_t k = r.word.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        ExtAffine z = r.delta;
        for (std::size_t i = k; i-- > 0;)
            if (mask >> i & 1) z = simple_[r.word[i]] * z;
        out.insert(z);
    }
    return {out.begin(), out.end()};
}

std::vector<ExtAffine> AffineSystem::affine_reflections(int bound) const {
    std::vector<ExtAffine> out;
    for (int r : roots_)
        for (Int k = -bound; k <= bound; ++k) out.push_back(affine_reflection(r, k));
    return out;
}

int length(const ExtAffine& x) { return AffineSystem::full().length(x); }

int dual_length(const DualElement& y) {
    // Hyperplanes separating the antidominant base alcove from its image under w t_nu.
    Weight b = Weight{-3, -1, 0};
    Weight moved = y.w.act(6 * y.t + b);
    auto base = functionals_of(b.a, b.b);
    auto here = functionals_of(moved.a, moved.b);
    Int n = 0;
    for (int r = 0; r < 4; ++r) {
        Int d = floor_div(here[r], 6) - floor_div(base[r], 6);
        n += d < 0 ? -d : d;
    }
    return static_cast<int>(n);
}

bool bruhat_leq(const ExtAffine& x, const ExtAffine& y) { return AffineSystem::full().bruhat_leq(x, y); }

bool dual_bruhat_leq(const DualElement& x, const DualElement& y) {
    // Conjugation by -1 carries the antidominant base alcove to A_0.
    auto flip = [](const DualElement& d) { return ExtAffine{-d.w.act(d.t), d.w}; };
    return bruhat_leq(flip(x), flip(y));
}

ExtAffine omega_part(const ExtAffine& x) { return AffineSystem::full().omega_part(x); }

bool in_omega(const ExtAffine& x) { return length(x) == 0; }

bool uparrow_leq(const Alcove& A, const Alcove& B, int R) {
    if (!in_box(A, R) || !in_box(B, R))
        throw ValidationError("alcove outside the search box of radius R=" + std::to_string(R));
    if (A == B) return true;
    std::set<Alcove> seen{A};
    std::queue<Alcove> todo;
    todo.push(A);
    while (!todo.empty()) {
        Alcove C = todo.front();
        todo.pop();
        auto vals = functionals6(C);
        for (int r = 0; r < 4; ++r) {
            const Weight& al = kPositiveRoots[r];
            for (Int m = floor_div(vals[r], 6) + 1;; ++m) {
                Int shift = 6 * m - vals[r];  // positive
                Alcove D{C.x6 + shift * al.a, C.y6 + shift * al.b};
                if (!in_positive_cone(B.x6 - D.x6, B.y6 - D.y6)) break;
                if (D == B) return true;
                if (in_box(D, R) && seen.insert(D).second) todo.push(D);
            }
        }
    }
    return false;
}

bool uparrow_leq(const ExtAffine& x, const ExtAffine& y, int R) {
    if (omega_part(x) != omega_part(y)) return false;
    return uparrow_leq(alcove_of(x), alcove_of(y), R);
}

bool uparrow_leq(const Weight& l, const Weight& m, Int p) {
    if (l == m) return true;
    if (!in_positive_span(m - l)) return false;
    std::set<Weight> seen{l};
    std::queue<Weight> todo;
    todo.push(l);
    while (!todo.empty()) {
        Weight c = todo.front();
        todo.pop();
        for (int r = 0; r < 4; ++r) {
            Int v = pairing(c + kEta, kPositiveCoroots[r]);
            for (Int k = floor_div(v, p) + 1;; ++k) {
                Weight d = c + (p * k - v) * kPositiveRoots[r];
                if (!in_positive_span(m - d)) break;
                if (d == m) return true;
                if (seen.insert(d).second) todo.push(d);
            }
        }
    }
    return false;
}

ExtAffine w_h() { return ExtAffine::finite(FiniteWeyl::w0()) * ExtAffine::translation(-kEta); }

ExtAffine diamond(FiniteWeyl w) {
    Weight b = w.act(Weight{3, 1, 0});
    Int nb = -floor_div(b.b, 6);
    Int d = -floor_div(b.a - b.b, 6);
    ExtAffine x{Weight{d + nb, nb, 0}, w};
    if (restricted_index(alcove_of(x)) < 0) throw InvariantError("diamond lift is not restricted");
    return x;
}

ExtAffine normalize_x0(const ExtAffine& x) { return {Weight{x.t.a, x.t.b, 0}, x.w}; }

Tuple normalize_x0(const Tuple& x) {
    Tuple r(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) r[j] = normalize_x0(x[j]);
    return r;
}

ExtAffine element_with_alcove(const Alcove& A, Int cl_value) {
    for (auto w : FiniteWeyl::all()) {
        Weight b = w.act(Weight{3, 1, 0});
        Int dx = A.x6 - b.a, dy = A.y6 - b.b;
        if (dx % 6 != 0 || dy % 6 != 0) continue;
        Int a = dx / 6, bb = dy / 6;
        Int rest = cl_value - a - bb;
        if (rest % 2 != 0) continue;
        return {Weight{a, bb, rest / 2}, w};
    }
    throw ValidationError("no element with alcove " + to_string(A) + " and class " + std::to_string(cl_value));
}

Weight p_dot(const ExtAffine& x, const Weight& l, Int p) { return x.w.act(l + kEta) + p * x.t - kEta; }

int restricted_p_alcove(const Weight& l, Int p) {
    Weight s = l + kEta;
    auto vals = functionals_of(s.a, s.b);
    for (Int v : vals)
        if (v % p == 0) return -1;
    Floors f = floors_of(vals, p);
    for (int i = 0; i < 4; ++i)
        if (f == kRestrictedFloors[i]) return i;
    return -1;
}

std::string to_string(const ExtAffine& x) {
    return "t" + to_string(x.t) + (x.w.word().empty() ? "" : " " + x.w.word());
}

std::string to_string(const DualElement& y) {
    return (y.w.word().empty() ? "" : y.w.word() + " ") + "t" + to_string(y.t);
}

}  // namespace gsp4
