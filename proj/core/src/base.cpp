#include "gsp4/base.hpp"

#include <algorithm>
#include <cstdlib>

namespace gsp4 {

namespace {

using Mat3 = std::array<std::array<Int, 3>, 3>;

Mat3 mul(const Mat3& x, const Mat3& y) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[i][j] += x[i][k] * y[k][j];
    return r;
}

constexpr Mat3 kId{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
// Action on characters.
constexpr Mat3 kS1{{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
constexpr Mat3 kS2{{{1, 0, 0}, {0, -1, 0}, {0, 1, 1}}};
// Contragredient action on cocharacters.
constexpr Mat3 kS1v{{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
constexpr Mat3 kS2v{{{1, 0, 0}, {0, -1, 1}, {0, 0, 1}}};

struct Tables {
    std::array<std::string, 8> words{"", "s1", "s2", "s1s2", "s2s1", "s1s2s1", "s2s1s2", "s1s2s1s2"};
    std::array<Mat3, 8> on_weights{};
    std::array<Mat3, 8> on_coweights{};
    std::array<std::array<int, 8>, 8> product{};
    std::array<int, 8> inverse{};
    std::array<int, 4> reflection{};

    Tables() {
        for (int i = 0; i < 8; ++i) {
            Mat3 m = kId, mv = kId;
            const std::string& w = words[i];
            for (std::size_t k = 0; k < w.size(); k += 2) {
                bool first = w[k + 1] == '1';
                m = mul(m, first ? kS1 : kS2);
                mv = mul(mv, first ? kS1v : kS2v);
            }
            on_weights[i] = m;
            on_coweights[i] = mv;
        }
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) product[i][j] = find(mul(on_weights[i], on_weights[j]));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                if (product[i][j] == 0) inverse[i] = j;
        for (int r = 0; r < 4; ++r) {
            const Weight& al = kPositiveRoots[r];
            const Coweight& co = kPositiveCoroots[r];
            Mat3 m{};
            const Int av[3] = {al.a, al.b, al.c};
            const Int cv[3] = {co.a, co.b, co.c};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) m[i][j] = (i == j ? 1 : 0) - av[i] * cv[j];
            reflection[r] = find(m);
        }
    }

    int find(const Mat3& m) const {
        for (int i = 0; i < 8; ++i)
            if (on_weights[i] == m) return i;
        throw InvariantError("matrix is not a Weyl group element");
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

template <class V>
V apply(const Mat3& m, const V& x) {
    return V{m[0][0] * x.a + m[0][1] * x.b + m[0][2] * x.c, m[1][0] * x.a + m[1][1] * x.b + m[1][2] * x.c,
             m[2][0] * x.a + m[2][1] * x.b + m[2][2] * x.c};
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Int pairing(const Weight& l, const Coweight& m) { return l.a * m.a + l.b * m.b + l.c * m.c; }

std::array<Int, 4> std_cocharacter(const Coweight& m) { return {m.a, m.b, m.c - m.b, m.c - m.a}; }

std::array<Int, 4> std_character(const Weight& l) { return {l.a + l.b + l.c, l.a + l.c, l.b + l.c, l.c}; }

FiniteWeyl FiniteWeyl::s1() { return FiniteWeyl(1); }
FiniteWeyl FiniteWeyl::s2() { return FiniteWeyl(2); }
FiniteWeyl FiniteWeyl::w0() { return FiniteWeyl(7); }

FiniteWeyl FiniteWeyl::generator(int i) {
    if (i != 1 && i != 2) throw ValidationError("simple reflection index must be 1 or 2");
    return FiniteWeyl(i);
}

FiniteWeyl FiniteWeyl::from_word(const std::string& word) {
    FiniteWeyl r;
    if (word == "e") return r;
    if (word.size() % 2 != 0) throw ValidationError("malformed Weyl word '" + word + "'");
    for (std::size_t k = 0; k < word.size(); k += 2) {
        if (word[k] != 's' || (word[k + 1] != '1' && word[k + 1] != '2'))
            throw ValidationError("malformed Weyl word '" + word + "'");
        r = r * generator(word[k + 1] - '0');
    }
    return r;
}

const std::array<FiniteWeyl, 8>& FiniteWeyl::all() {
    static const std::array<FiniteWeyl, 8> a{FiniteWeyl(0), FiniteWeyl(1), FiniteWeyl(2), FiniteWeyl(3),
                                             FiniteWeyl(4), FiniteWeyl(5), FiniteWeyl(6), FiniteWeyl(7)};
    return a;
}

FiniteWeyl FiniteWeyl::reflection(int root_index) { return FiniteWeyl(tables().reflection.at(root_index)); }

const std::string& FiniteWeyl::word() const { return tables().words[id_]; }

int FiniteWeyl::length() const { return static_cast<int>(word().size() / 2); }

FiniteWeyl FiniteWeyl::inverse() const { return FiniteWeyl(tables().inverse[id_]); }

Weight FiniteWeyl::act(const Weight& l) const { return apply(tables().on_weights[id_], l); }

Coweight FiniteWeyl::act(const Coweight& m) const { return apply(tables().on_coweights[id_], m); }

FiniteWeyl operator*(FiniteWeyl x, FiniteWeyl y) { return FiniteWeyl(tables().product[x.id_][y.id_]); }

bool is_dominant(const Weight& l) {
    return pairing(l, kPositiveCoroots[0]) >= 0 && pairing(l, kPositiveCoroots[1]) >= 0;
}

bool is_m_deep(const Weight& l, int m, Int p) {
    if (m < 0) throw ValidationError("depth must be nonnegative");
    for (const auto& co : kPositiveCoroots) {
        Int v = pairing(l + kEta, co);
        Int r = v - p * floor_div(v, p);
        if (!(r > m && r < p - m)) return false;
    }
    return true;
}

bool is_m_generic(const Weight& l, int m, Int p) {
    if (m < 0) throw ValidationError("genericity must be nonnegative");
    for (const auto& co : kPositiveCoroots) {
        Int v = pairing(l, co);
        Int k0 = floor_div(-v, p);
        // |v + pk| is smallest for k adjacent to -v/p; roots and their negatives give the same values.
        for (Int k = k0 - 1; k <= k0 + 2; ++k)
            if (std::llabs(v + p * k) <= m) return false;
    }
    return true;
}

int depth(const Weight& l, Int p) {
    if (!is_m_deep(l, 0, p)) return -1;
    int m = 0;
    while (is_m_deep(l, m + 1, p)) ++m;
    return m;
}

int depth_in_lowest_alcove(const Weight& l, Int p) {
    int best = static_cast<int>(p);
    for (const auto& co : kPositiveCoroots) {
        Int v = pairing(l + kEta, co);
        if (v <= 0 || v >= p) return -1;
        best = std::min<int>(best, static_cast<int>(std::min(v - 1, p - v - 1)));
    }
    return best;
}

std::string to_string(const Weight& l) {
    return "(" + std::to_string(l.a) + "," + std::to_string(l.b) + ";" + std::to_string(l.c) + ")";
}

void check_root_datum() {
    auto fail = [](const std::string& what) { throw InvariantError("root datum: " + what); };
    for (int i = 0; i < 4; ++i)
        if (pairing(kPositiveRoots[i], kPositiveCoroots[i]) != 2) fail("<alpha, alpha^vee> != 2");
    // Cartan matrix of C2 on the simple pairs.
    if (pairing(kPositiveRoots[0], kPositiveCoroots[1]) != -1) fail("cartan entry (1,2)");
    if (pairing(kPositiveRoots[1], kPositiveCoroots[0]) != -2) fail("cartan entry (2,1)");
    const std::array<Int, 4> eta_values{1, 1, 3, 2};
    for (int i = 0; i < 4; ++i)
        if (pairing(kEta, kPositiveCoroots[i]) != eta_values[i]) fail("<eta, alpha^vee>");
    auto s1 = FiniteWeyl::s1(), s2 = FiniteWeyl::s2(), e = FiniteWeyl::identity();
    if (s1 * s1 != e || s2 * s2 != e) fail("generators are not involutions");
    auto c = s1 * s2;
    if (c * c * c * c != e || c * c == e) fail("(s1 s2) does not have order 4");
    for (auto x : FiniteWeyl::all())
        for (auto y : FiniteWeyl::all()) {
            Weight l{3, -5, 7};
            Coweight m{2, 9, -4};
            if ((x * y).act(l) != x.act(y.act(l))) fail("action is not compatible with products");
            if (pairing(x.act(l), x.act(m)) != pairing(l, m)) fail("pairing is not invariant");
        }
    for (int r = 0; r < 4; ++r) {
        Weight l{4, -1, 6};
        auto s = FiniteWeyl::reflection(r);
        if (s.act(l) != l - pairing(l, kPositiveCoroots[r]) * kPositiveRoots[r]) fail("reflection formula");
        if (s.act(kPositiveRoots[r]) != -kPositiveRoots[r]) fail("reflection does not negate its root");
    }
    Weight l{5, 2, -3};
    if (FiniteWeyl::w0().act(l) != Weight{-5, -2, 4}) fail("w0 does not negate the (a,b)-projection");
}

}  // namespace gsp4
