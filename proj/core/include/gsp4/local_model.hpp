#pragma once

#include <array>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gsp4/affine_weyl.hpp"
#include "gsp4/exact.hpp"

namespace gsp4 {

template <class R>
using Mat4 = std::array<std::array<R, 4>, 4>;
template <class K>
using PolyMat = Mat4<Laurent<K>>;

template <class R>
Mat4<R> identity4() {
    Mat4<R> m{};
    for (int i = 0; i < 4; ++i) m[i][i] = R(Int{1});
    return m;
}

template <class R>
Mat4<R> operator*(const Mat4<R>& a, const Mat4<R>& b) {
    Mat4<R> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    return r;
}

template <class R>
Mat4<R> operator+(const Mat4<R>& a, const Mat4<R>& b) {
    Mat4<R> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = a[i][j] + b[i][j];
    return r;
}

template <class R>
Mat4<R> transpose(const Mat4<R>& a) {
    Mat4<R> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = a[j][i];
    return r;
}

// Determinant of the submatrix on the given rows and columns, by cofactor expansion.
template <class R>
R minor_det(const Mat4<R>& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() == 1) return a[rows[0]][cols[0]];
    R r{};
    std::vector<int> sub(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<int> rest;
        for (std::size_t l = 0; l < cols.size(); ++l)
            if (l != k) rest.push_back(cols[l]);
        R term = a[rows[0]][cols[k]] * minor_det(a, sub, rest);
        r = (k % 2 == 0) ? r + term : r - term;
    }
    return r;
}

template <class R>
R det(const Mat4<R>& a) {
    return minor_det(a, {0, 1, 2, 3}, {0, 1, 2, 3});
}

// a * adj(a) = det(a).
template <class R>
Mat4<R> adjugate(const Mat4<R>& a) {
    Mat4<R> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::vector<int> rows, cols;
            for (int k = 0; k < 4; ++k) {
                if (k != j) rows.push_back(k);
                if (k != i) cols.push_back(k);
            }
            R m = minor_det(a, rows, cols);
            r[i][j] = ((i + j) % 2 == 0) ? m : R{} - m;
        }
    return r;
}

// The form with rows (0,0,0,1), (0,0,1,0), (0,-1,0,0), (-1,0,0,0).
template <class R>
Mat4<R> form_J() {
    Mat4<R> j{};
    j[0][3] = R(Int{1});
    j[1][2] = R(Int{1});
    j[2][1] = R(Int{-1});
    j[3][0] = R(Int{-1});
    return j;
}

// E(v) = v + p; p is zero in characteristic p.
template <class K>
Laurent<K> E_of(const K& p) {
    return Laurent<K>::v() + Laurent<K>(p);
}

template <class K>
PolyMat<K> constant_matrix(const Mat4<Int>& m) {
    PolyMat<K> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = Laurent<K>(K(m[i][j]));
    return r;
}

// The monomial matrix W(w) v^{T(nu)} of the dual element w t_nu, T(a,b;c) = (a+b+c, a+c, b+c, c).
Mat4<Int> weyl_matrix(FiniteWeyl w);
std::array<Int, 4> cocharacter_exponents(const Weight& nu);

template <class K>
PolyMat<K> monomial_matrix(const DualElement& z) {
    PolyMat<K> r = constant_matrix<K>(weyl_matrix(z.w));
    auto n = cocharacter_exponents(z.t);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = r[i][j].shift(static_cast<int>(n[j]));
    return r;
}

template <class K>
struct Similitude {
    bool ok = false;
    Laurent<K> c;       // A^t J A = c J when ok
    int fail_i = -1, fail_j = -1;
    K scalar{};         // c = scalar * v^v_power * E^e_power when unit
    int v_power = 0, e_power = 0;
    bool unit = false;
};

template <class K>
Similitude<K> symplectic_similitude(const PolyMat<K>& a, const K& p) {
    if (det(a).zero()) throw ValidationError("matrix is not invertible");
    const auto J = form_J<Laurent<K>>();
    const auto s = transpose(a) * J * a;
    Similitude<K> r;
    r.c = s[0][3];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!(s[i][j] == r.c * J[i][j])) {
                r.fail_i = i;
                r.fail_j = j;
                return r;
            }
    r.ok = true;
    if (r.c.zero()) return r;
    Laurent<K> x = r.c.shift(-r.c.val());
    if (!is_zero(p)) {
        r.e_power = order_at(x, K(-p));
        for (int k = 0; k < r.e_power; ++k) x = divmod(x, E_of(p)).first;
    }
    r.v_power = r.c.val();
    r.unit = x.deg() == 0;
    if (r.unit) r.scalar = x.coeff(0);
    if (is_zero(p)) r.e_power = r.v_power;
    return r;
}

// Elementary divisor exponents of E(v), largest first.
template <class K>
std::array<int, 4> e_divisor_pattern(const PolyMat<K>& a, const K& p) {
    if (det(a).zero()) throw ValidationError("matrix is singular");
    const K root = K(-p);
    std::array<int, 5> d{};
    for (int k = 1; k <= 4; ++k) {
        int best = -1;
        for (int rm = 0; rm < 16; ++rm) {
            if (__builtin_popcount(rm) != k) continue;
            for (int cm = 0; cm < 16; ++cm) {
                if (__builtin_popcount(cm) != k) continue;
                std::vector<int> rows, cols;
                for (int i = 0; i < 4; ++i) {
                    if (rm >> i & 1) rows.push_back(i);
                    if (cm >> i & 1) cols.push_back(i);
                }
                Laurent<K> m = minor_det(a, rows, cols);
                if (m.zero()) continue;
                int o = order_at(m, root);
                if (best < 0 || o < best) best = o;
            }
        }
        d[k] = best;
    }
    std::array<int, 4> e{};
    for (int k = 0; k < 4; ++k) e[k] = d[k + 1] - d[k];
    std::sort(e.begin(), e.end(), std::greater<>());
    return e;
}

// Dominance of elementary divisor patterns (both sorted decreasingly, equal totals).
bool pattern_dominated(const std::array<int, 4>& x, const std::array<int, 4>& y);

// Iwahori double coset of an invertible matrix over F_q((v)).
DualElement shape_of(const PolyMat<Fq>& a);

template <class K>
struct MonodromyParams {
    std::array<K, 4> diag;  // the diagonal of the monodromy twist

    // std(a) = (a1, a2, a3 - a2, a3 - a1).
    static MonodromyParams from_triple(const K& a1, const K& a2, const K& a3) {
        return {{a1, a2, K(a3 - a2), K(a3 - a1)}};
    }
};

template <class K>
struct MonodromyDefect {
    bool pass = true;
    int clause = 0;  // 1: pole, 2: not in the similitude Lie algebra, 3: not upper triangular mod v
    int i = -1, j = -1;
    std::string detail;
    Mat4<Laurent<K>> residue;  // (v + p) M when clause 1 passes
};

template <class K>
MonodromyDefect<K> monodromy_defect(const PolyMat<K>& a, const MonodromyParams<K>& params, const K& p) {
    const Laurent<K> d = det(a);
    if (d.zero()) throw ValidationError("matrix is singular");
    const auto adj = adjugate(a);
    PolyMat<K> da{}, D{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) da[i][j] = a[i][j].vdv();
        D[i][i] = Laurent<K>(params.diag[i]);
    }
    const auto N = da * adj + a * D * adj;
    const Laurent<K> E = E_of(p);
    MonodromyDefect<K> r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            RatFunc<K> x(E * N[i][j], d);
            if (x.zero()) continue;
            if (!x.polynomial() || x.val() < 0) {
                r.pass = false;
                r.clause = 1;
                r.i = i;
                r.j = j;
                int pole = x.polynomial() ? 0 : (is_zero(p) ? 0 : order_at(x.den, K(-p)));
                r.detail = "pole at entry (" + std::to_string(i) + "," + std::to_string(j) + "), E-order " +
                           std::to_string(pole + 1);
                return r;
            }
            r.residue[i][j] = x.num;
        }
    const auto J = form_J<Laurent<K>>();
    const auto y = transpose(r.residue) * J + J * r.residue;
    const Laurent<K> c = y[0][3];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!(y[i][j] == c * J[i][j])) {
                r.pass = false;
                r.clause = 2;
                r.i = i;
                r.j = j;
                r.detail = "not in the similitude Lie algebra at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                return r;
            }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j)
            if (!is_zero(r.residue[i][j].coeff(0))) {
                r.pass = false;
                r.clause = 3;
                r.i = i;
                r.j = j;
                r.detail = "reduction mod v is not upper triangular at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                return r;
            }
    return r;
}

// Coordinates of the regular colength-one universal matrix and the opaque scalars a0..a3, e.
template <class K>
struct RegColOneParams {
    K c00{1}, c21{}, c13{}, c31{}, c31p{}, c33{}, c33p{}, c33pp{};
    K a0{}, a1{}, a2{}, a3{}, e{1};

    // Monodromy twist Diag(a0 - 1, a1, a2 - 1, a3) / e.
    MonodromyParams<K> monodromy() const {
        if (is_zero(e)) throw ValidationError("e must be nonzero");
        return {{K((a0 - 1) / e), K(a1 / e), K((a2 - 1) / e), K(a3 / e)}};
    }
    // The coordinate y with c00 * y = p on the solved family.
    K y() const {
        K den = e + a0 - a3 - 1;
        if (is_zero(den)) throw ValidationError("denominator e + a0 - a3 - 1 vanishes");
        return K(K(e + a1 - a2 + 1) / den * c13 * c31 + K(a0 - a3 - 1 - e) / den * c33);
    }
};

// Free coordinates of the solved family: three affine ones and the pair (c00, y) on c00 * y = p.
inline constexpr int kRegColOneAffineCoordinates = 3;
inline constexpr int kRegColOneXpCoordinates = 2;

template <class K>
PolyMat<K> build_regcolone_matrix(const RegColOneParams<K>& q, const K& p) {
    const Laurent<K> E = E_of(p), v = Laurent<K>::v(), E2 = E * E;
    auto L = [](const K& x) { return Laurent<K>(x); };
    PolyMat<K> m{};
    m[0][0] = L(q.c00);
    m[0][1] = L(q.c00) * (L(q.c31p) + L(q.c31) * E);
    m[0][2] = L(K(q.c00 * q.c13));
    m[0][3] = L(K(q.c00 * q.c33p + p * q.c00 * q.c33 - p * p)) + L(K(q.c00 * q.c33 - p)) * E - E2;
    m[1][1] = E2;
    m[1][3] = L(q.c13) * E2;
    m[2][1] = L(q.c21) * v * E;
    m[2][2] = E;
    m[2][3] = L(K(-(q.c31p + p * q.c13 * q.c21))) * E + L(K(q.c13 * q.c21 - q.c31)) * E2;
    m[3][0] = v;
    m[3][1] = L(q.c31p) * v + L(q.c31) * v * E;
    m[3][2] = L(q.c13) * v;
    m[3][3] = L(q.c33pp) + L(q.c33p) * E + L(q.c33) * E2;
    return m;
}

// Solves c31', c33', c33'' from the monodromy condition and c33 from the relation c00 * y = p.
// In characteristic p the relation reads c00 * y = 0; c33 is kept as given when c00 = 0.
template <class K>
RegColOneParams<K> solve_regcolone(RegColOneParams<K> q, const K& p) {
    if (is_zero(q.e)) throw ValidationError("e must be nonzero");
    const K d0 = q.a0 - 1, d1 = q.a1, d2 = q.a2 - 1, d3 = q.a3;
    if (!(d0 + d3 == d1 + d2)) throw ValidationError("a0 + a3 must equal a1 + a2");
    const K den = q.e + q.a0 - q.a3 - 1;
    if (is_zero(den)) throw ValidationError("denominator e + a0 - a3 - 1 vanishes");
    if (is_zero(K(d0 - d1)) || is_zero(K(d3 - d0)) || is_zero(K(d3 - d0 + q.e)))
        throw ValidationError("degenerate monodromy parameters");
    if (is_zero(q.c00)) {
        if (!is_zero(p)) throw ValidationError("c00 must be nonzero in characteristic zero");
    } else {
        q.c33 = K((p / q.c00 - K(d2 - d1 - q.e) / K(d3 - d0 - q.e) * q.c13 * q.c31) * K(d3 - d0 - q.e) /
                  K(d3 - d0 + q.e));
    }
    q.c31p = K(-p * (q.e * q.c31 + (d0 - d2) * q.c13 * q.c21) / (d0 - d1));
    q.c33p = K((2 * q.e * q.c33 * p + (d1 - d2) * q.c13 * q.c31p - (d1 - d2 + 2 * q.e) * q.c13 * q.c31 * p) / (d3 - d0));
    q.c33pp = is_zero(p) ? K(0) : K(p * p * p / q.c00 - q.c33 * p * p - q.c33p * p);
    return q;
}

PolyMat<Fq> reduce(const PolyMat<Q>& a);

// A solved member of the family over Q whose coordinates reduce mod p, with c00 a p-adic unit.
RegColOneParams<Q> random_regcolone(std::mt19937_64& rng, Int p);

// A random element of the Iwahori of GSp4 over F_q[v], root entries of degree < max_degree.
PolyMat<Fq> random_iwahori(std::mt19937_64& rng, int max_degree = 2);

// {star(w2^-1 w_h^-1 w) : w <= w0 w1}.
std::set<DualElement> fixed_point_set_T(const ExtAffine& w1, const ExtAffine& w2);
// {star(w1^-1 w_h^-1 s w0 w) : w dominant, w up-arrow w1}, dropping length-zero w when s = s2.
std::set<DualElement> fixed_point_set_colone(const ExtAffine& w1, int s);

}  // namespace gsp4
