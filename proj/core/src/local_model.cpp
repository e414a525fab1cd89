#include "gsp4/local_model.hpp"

#include <algorithm>

#include "gsp4/admissible.hpp"

namespace gsp4 {

namespace {

// W(s1) swaps the middle coordinates with a sign, W(s2) swaps 1<->2 and 3<->4.
const Mat4<Int> kWs1{{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}}};
const Mat4<Int> kWs2{{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}};

// Root vectors of sp4 for the form J: positive ones, then negative ones.
Mat4<Int> root_vector(int k) {
    Mat4<Int> m{};
    auto set = [&](int i, int j, Int x) { m[i - 1][j - 1] = x; };
    switch (k) {
        case 0: set(1, 2, 1), set(3, 4, -1); break;
        case 1: set(1, 3, 1), set(2, 4, 1); break;
        case 2: set(1, 4, 1); break;
        case 3: set(2, 3, 1); break;
        case 4: set(2, 1, 1), set(4, 3, -1); break;
        case 5: set(3, 1, 1), set(4, 2, 1); break;
        case 6: set(4, 1, 1); break;
        case 7: set(3, 2, 1); break;
        default: break;
    }
    return m;
}

}  // namespace

Mat4<Int> weyl_matrix(FiniteWeyl w) {
    Mat4<Int> m = identity4<Int>();
    for (char ch : w.word())
        if (ch == '1') m = m * kWs1;
        else if (ch == '2') m = m * kWs2;
    return m;
}

std::array<Int, 4> cocharacter_exponents(const Weight& nu) { return {nu.a + nu.b + nu.c, nu.a + nu.c, nu.b + nu.c, nu.c}; }

bool pattern_dominated(const std::array<int, 4>& x, const std::array<int, 4>& y) {
    int sx = 0, sy = 0;
    for (int k = 0; k < 4; ++k) {
        sx += x[k];
        sy += y[k];
        if (sx > sy) return false;
    }
    return sx == sy;
}

DualElement shape_of(const PolyMat<Fq>& a) {
    if (det(a).zero()) throw ValidationError("matrix is not invertible");
    Mat4<RatFunc<Fq>> m{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = RatFunc<Fq>(a[i][j]);
    std::array<bool, 4> row_used{}, col_used{};
    std::array<int, 4> row_of{}, exponent{};
    for (int step = 0; step < 4; ++step) {
        int r = -1, c = -1;
        for (int i = 3; i >= 0; --i) {
            if (row_used[i]) continue;
            for (int j = 0; j < 4; ++j) {
                if (col_used[j] || m[i][j].zero()) continue;
                if (r < 0 || m[i][j].val() < m[r][c].val()) r = i, c = j;
            }
        }
        if (r < 0) throw ValidationError("matrix is not invertible");
        const RatFunc<Fq> piv = m[r][c];
        for (int i = 0; i < 4; ++i) {
            if (i == r || row_used[i] || m[i][c].zero()) continue;
            RatFunc<Fq> f = m[i][c] / piv;
            if (f.val() < (i > r ? 1 : 0)) throw InvariantError("row operation leaves the Iwahori");
            for (int j = 0; j < 4; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        for (int j = 0; j < 4; ++j) {
            if (j == c || col_used[j] || m[r][j].zero()) continue;
            RatFunc<Fq> f = m[r][j] / piv;
            if (f.val() < (c > j ? 1 : 0)) throw InvariantError("column operation leaves the Iwahori");
            for (int i = 0; i < 4; ++i) m[i][j] = m[i][j] - f * m[i][c];
        }
        row_used[r] = col_used[c] = true;
        row_of[c] = r;
        exponent[c] = piv.val();
    }
    const Int c = exponent[3], na = exponent[1] - c, nb = exponent[2] - c;
    if (exponent[0] != na + nb + c) throw InvariantError("shape is not symplectic-monomial");
    for (auto w : FiniteWeyl::all()) {
        Mat4<Int> p = weyl_matrix(w);
        bool match = true;
        for (int j = 0; j < 4 && match; ++j) match = p[row_of[j]][j] != 0;
        if (match) return {w, Weight{na, nb, c}};
    }
    throw InvariantError("shape is not symplectic-monomial");
}

PolyMat<Fq> reduce(const PolyMat<Q>& a) {
    PolyMat<Fq> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (const auto& [e, x] : a[i][j].c) r[i][j].add(e, reduce(x));
    return r;
}

RegColOneParams<Q> random_regcolone(std::mt19937_64& rng, Int p) {
    std::uniform_int_distribution<Int> num(-12, 12), den(1, 8);
    auto rational = [&] {
        Q x(num(rng), den(rng));
        x.canonicalize();
        return x;
    };
    auto coprime = [&](const Q& x) { return mpz_class(x.get_den() % p) != 0; };
    for (int tries = 0; tries < 100000; ++tries) {
        RegColOneParams<Q> q;
        q.c00 = rational();
        if (is_zero(q.c00) || mpz_class(q.c00.get_num() % p) == 0) continue;
        q.c21 = rational();
        q.c13 = rational();
        q.c31 = rational();
        q.a1 = num(rng);
        q.a2 = num(rng);
        q.a3 = num(rng);
        q.a0 = q.a1 + q.a2 - q.a3;
        q.e = rational();
        try {
            auto s = solve_regcolone(q, Q(p));
            if (coprime(s.e) && mpz_class(s.e.get_num() % p) != 0 && coprime(s.c21) && coprime(s.c13) && coprime(s.c31) && coprime(s.c31p) &&
                coprime(s.c33) && coprime(s.c33p) && coprime(s.c33pp) && coprime(Q(s.e + s.a0 - s.a3 - 1)))
                return s;
        } catch (const ValidationError&) {
        }
    }
    throw InvariantError("no reducible colength-one parameters found");
}

PolyMat<Fq> random_iwahori(std::mt19937_64& rng, int max_degree) {
    const Int q = Fq::modulus();
    std::uniform_int_distribution<Int> coef(0, q - 1), unit(1, q - 1);
    std::uniform_int_distribution<int> root(0, 7);
    auto poly = [&](int lowest) {
        Laurent<Fq> f;
        for (int e = lowest; e < lowest + max_degree; ++e) f.add(e, Fq(coef(rng)));
        return f;
    };
    Fq t1(unit(rng)), t2(unit(rng)), t3(unit(rng));
    PolyMat<Fq> g{};
    g[0][0] = t1;
    g[1][1] = t2;
    g[2][2] = t3;
    g[3][3] = t2 * t3 / t1;
    for (int k = 0; k < 10; ++k) {
        int r = root(rng);
        PolyMat<Fq> x = identity4<Laurent<Fq>>();
        Laurent<Fq> f = poly(r < 4 ? 0 : 1);
        Mat4<Int> e = root_vector(r);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (e[i][j] != 0) x[i][j] = x[i][j] + f * Laurent<Fq>(Fq(e[i][j]));
        g = g * x;
    }
    return g;
}

std::set<DualElement> fixed_point_set_T(const ExtAffine& w1, const ExtAffine& w2) {
    if (restricted_index(alcove_of(w2)) < 0 || !is_dominant(alcove_of(w1)))
        throw ValidationError("pair is not in AP'");
    const ExtAffine front = w2.inverse() * w_h().inverse();
    std::set<DualElement> r;
    for (const auto& w : AffineSystem::full().lower_interval(ExtAffine::finite(FiniteWeyl::w0()) * w1))
        r.insert(star(front * w));
    return r;
}

std::set<DualElement> fixed_point_set_colone(const ExtAffine& w1, int s) {
    if (restricted_index(alcove_of(w1)) < 0) throw ValidationError(to_string(w1) + " is not restricted");
    if (s != 1 && s != 2) throw ValidationError("s must be s1 or s2");
    const ExtAffine front = w1.inverse() * w_h().inverse() * ExtAffine::finite(FiniteWeyl::generator(s)) *
                            ExtAffine::finite(FiniteWeyl::w0());
    const Alcove top = alcove_of(w1);
    std::set<DualElement> r;
    for (const auto& A : alcoves_in_box(kDefaultBox)) {
        if (!is_dominant(A) || !uparrow_leq(A, top)) continue;
        ExtAffine w = element_with_alcove(A, cl(w1));
        if (s == 2 && in_omega(w)) continue;
        r.insert(star(front * w));
    }
    return r;
}

}  // namespace gsp4
