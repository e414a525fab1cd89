#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "gsp4/base.hpp"

namespace gsp4 {

using Q = mpq_class;

// Prime field element; the modulus is per thread and set with FqScope.
struct Fq {
    Int v = 0;

    static Int modulus();
    Fq() = default;
    Fq(Int x);  // NOLINT(google-explicit-constructor)

    Fq inverse() const;
    friend Fq operator+(Fq a, Fq b) { return Fq(a.v + b.v); }
    friend Fq operator-(Fq a, Fq b) { return Fq(a.v - b.v); }
    friend Fq operator-(Fq a) { return Fq(-a.v); }
    friend Fq operator*(Fq a, Fq b) { return Fq(static_cast<Int>((__int128)a.v * b.v % modulus())); }
    friend Fq operator/(Fq a, Fq b) { return a * b.inverse(); }
    Fq& operator+=(Fq b) { return *this = *this + b; }
    Fq& operator-=(Fq b) { return *this = *this - b; }
    Fq& operator*=(Fq b) { return *this = *this * b; }
    friend bool operator==(Fq a, Fq b) { return a.v == b.v; }
};

class FqScope {
public:
    explicit FqScope(Int q);
    ~FqScope();
    FqScope(const FqScope&) = delete;
    FqScope& operator=(const FqScope&) = delete;

private:
    Int previous_;
};

bool is_prime(Int q);

inline bool is_zero(const Q& x) { return sgn(x) == 0; }
inline bool is_zero(const Fq& x) { return x.v == 0; }
inline std::string to_string(const Q& x) { return x.get_str(); }
inline std::string to_string(const Fq& x) { return std::to_string(x.v); }
Fq reduce(const Q& x);  // error when the denominator vanishes mod q

// Laurent polynomial in v; zero coefficients are never stored.
template <class K>
struct Laurent {
    std::map<int, K> c;

    Laurent() = default;
    Laurent(const K& a) {  // NOLINT(google-explicit-constructor)
        if (!is_zero(a)) c.emplace(0, a);
    }
    Laurent(Int a) : Laurent(K(a)) {}  // NOLINT(google-explicit-constructor)
    static Laurent monomial(const K& a, int e) {
        Laurent r;
        if (!is_zero(a)) r.c.emplace(e, a);
        return r;
    }
    static Laurent v(int e = 1) { return monomial(K(1), e); }

    bool zero() const { return c.empty(); }
    int val() const { return c.begin()->first; }
    int deg() const { return c.rbegin()->first; }
    K lead() const { return c.rbegin()->second; }
    K coeff(int e) const {
        auto it = c.find(e);
        return it == c.end() ? K(0) : it->second;
    }

    Laurent& add(int e, const K& a) {
        if (is_zero(a)) return *this;
        auto it = c.find(e);
        if (it == c.end()) {
            c.emplace(e, a);
        } else {
            it->second += a;
            if (is_zero(it->second)) c.erase(it);
        }
        return *this;
    }
    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, a] : o.c) add(e, a);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, a] : o.c) add(e, K(-a));
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator-(const Laurent& a) { return Laurent{} - a; }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [e, x] : a.c)
            for (const auto& [f, y] : b.c) r.add(e + f, K(x * y));
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    Laurent shift(int k) const {
        Laurent r;
        for (const auto& [e, a] : c) r.c.emplace(e + k, a);
        return r;
    }
    // v d/dv.
    Laurent vdv() const {
        Laurent r;
        for (const auto& [e, a] : c) r.add(e, K(a * K(e)));
        return r;
    }
    K eval(const K& x) const {
        if (!zero() && val() < 0 && is_zero(x)) throw ValidationError("evaluation at a pole");
        K r(0);
        for (const auto& [e, a] : c) {
            K t = a;
            if (e >= 0)
                for (int i = 0; i < e; ++i) t *= x;
            else
                for (int i = 0; i < -e; ++i) t = t / x;
            r += t;
        }
        return r;
    }
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.c == b.c; }
};

template <class K>
std::string to_string(const Laurent<K>& a) {
    if (a.zero()) return "0";
    std::string r;
    for (const auto& [e, x] : a.c) {
        if (!r.empty()) r += " + ";
        r += "(" + to_string(x) + ")";
        if (e != 0) r += "v^" + std::to_string(e);
    }
    return r;
}

// Division with remainder of polynomials (both with nonnegative exponents).
template <class K>
std::pair<Laurent<K>, Laurent<K>> divmod(Laurent<K> a, const Laurent<K>& b) {
    if (b.zero()) throw ValidationError("division by zero polynomial");
    Laurent<K> q;
    while (!a.zero() && a.deg() >= b.deg()) {
        K f = a.lead() / b.lead();
        int e = a.deg() - b.deg();
        q.add(e, f);
        a -= Laurent<K>::monomial(f, e) * b;
    }
    return {q, a};
}

template <class K>
Laurent<K> monic(const Laurent<K>& a) {
    return a * Laurent<K>(K(K(1) / a.lead()));
}

template <class K>
Laurent<K> gcd(Laurent<K> a, Laurent<K> b) {
    while (!b.zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.zero() ? a : monic(a);
}

// Order of vanishing at v = root (at v = 0 this is the v-adic valuation).
template <class K>
int order_at(const Laurent<K>& a, const K& root) {
    if (a.zero()) throw ValidationError("order of the zero polynomial");
    if (is_zero(root)) return a.val();
    Laurent<K> x = a.shift(-a.val());
    const Laurent<K> lin = Laurent<K>::v() - Laurent<K>(root);
    int n = 0;
    for (;;) {
        auto [q, r] = divmod(x, lin);
        if (!r.zero()) return n;
        x = q;
        ++n;
    }
}

// Rational function num/den with den a monic polynomial with nonzero constant term.
template <class K>
struct RatFunc {
    Laurent<K> num;
    Laurent<K> den{K(1)};

    RatFunc() = default;
    RatFunc(const Laurent<K>& n) : num(n) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Laurent<K>& n, const Laurent<K>& d) {
        if (d.zero()) throw ValidationError("division by zero");
        if (n.zero()) return;
        int k = n.val() - d.val();
        Laurent<K> n0 = n.shift(-n.val()), d0 = d.shift(-d.val());
        Laurent<K> g = gcd(n0, d0);
        n0 = divmod(n0, g).first;
        d0 = divmod(d0, g).first;
        K l = d0.lead();
        num = (n0 * Laurent<K>(K(K(1) / l))).shift(k);
        den = monic(d0);
    }

    bool zero() const { return num.zero(); }
    int val() const { return num.val(); }
    bool polynomial() const { return den.deg() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return {a.num * b.num, a.den * b.den}; }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.zero()) throw ValidationError("division by zero");
        return {a.num * b.den, a.den * b.num};
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num == b.num && a.den == b.den; }
};

}  // namespace gsp4
