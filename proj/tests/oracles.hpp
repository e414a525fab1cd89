#pragma once
// Independent reference computations used to derive expected values.

#include <array>
#include <cstdint>

namespace oracle {

using I = std::int64_t;
using Mat4 = std::array<std::array<I, 4>, 4>;

// Diagonal exponents (in powers of t) of the displayed cocharacter (d,e;f).
inline std::array<I, 4> cocharacter_diag(I d, I e, I f) { return {d, e, f - e, f - d}; }

// Exponent of the character (a,b;c) on a diagonal element with entry exponents n.
// Uses x = n1, y = n2, z = n2 + n3.
inline I character_exponent(I a, I b, I c, const std::array<I, 4>& n) { return a * n[0] + b * n[1] + c * (n[1] + n[2]); }

inline constexpr Mat4 kS1{{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}};
inline constexpr Mat4 kS2{{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}}};

// Character t -> lambda(S^{-1} t S) written back in (a,b;c) coordinates.
// S is a signed permutation matrix, so S^{-1} t S permutes the diagonal.
inline std::array<I, 3> conjugate_character(const Mat4& S, I a, I b, I c) {
    // Row i of S has its nonzero entry in column sigma[i]; (S^{-1} t S)_jj = t_{sigma^{-1}(j)}.
    std::array<int, 4> sigma{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (S[i][j] != 0) sigma[i] = j;
    auto value = [&](const std::array<I, 4>& n) {
        std::array<I, 4> m{};
        for (int i = 0; i < 4; ++i) m[sigma[i]] = n[i];
        return character_exponent(a, b, c, m);
    };
    // Evaluate on the generic torus basis x, y, z.
    I ea = value({1, 0, 0, -1});
    I eb = value({0, 1, -1, 0});
    I ec = value({0, 0, 1, 1});
    return {ea, eb, ec};
}

}  // namespace oracle
