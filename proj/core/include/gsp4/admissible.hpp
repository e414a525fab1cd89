#pragma once

#include <utility>
#include <vector>

#include "gsp4/affine_weyl.hpp"

namespace gsp4 {

enum class Levi { T, M1, M2 };

std::vector<FiniteWeyl> levi_weyl(Levi M);
// W^M: minimal length representatives of W_M \ W.
bool is_min_coset_rep(FiniteWeyl w, Levi M);
// w = w_M * w^M.
std::pair<FiniteWeyl, FiniteWeyl> levi_decompose(FiniteWeyl w, Levi M);

// Sorted, duplicate free.
std::vector<ExtAffine> adm_set(const Weight& lambda);
std::vector<DualElement> adm_dual(const Weight& lambda);
bool in_adm(const ExtAffine& x, const Weight& lambda);

int colength(const ExtAffine& x, const Weight& lambda);
// The alcove of x lies in no critical strip 0 < l_alpha < 1.
bool is_regular(const ExtAffine& x);
std::vector<ExtAffine> adm_regular(const Weight& lambda);

// Adm_M(lambda) inside X*(T) x| W_M, with the Levi's own Bruhat order.
std::vector<ExtAffine> adm_levi(Levi M, const Weight& lambda);
std::vector<ExtAffine> adm_levi_conjugate(Levi M, FiniteWeyl wM, const Weight& lambda);

struct ColengthOne {
    struct Irregular {
        FiniteWeyl w;
        int s;                    // 1 or 2
        ExtAffine element;        // (w^diamond)^-1 w_h^-1 w0 s w^diamond
        bool partner_exact;       // equals the (sw)^diamond expression on the nose
        bool partner_mod_x0;      // ... modulo X^0
        bool levi_exact;          // equals (w^M)^-1 t_eta s w^M on the nose
        bool levi_mod_x0;
    };
    std::vector<Irregular> family;      // the 16 (w, s) expressions
    std::vector<ExtAffine> irregular;   // distinct colength-one irregular elements of Adm(eta)
    std::vector<ExtAffine> regular;     // colength-one regular elements of Adm(eta)
};
ColengthOne classify_colength_one();

// Position of a relative element among the cases of the colength-one analysis.
enum class LocalCase { Extremal, IrregularColengthOne, RegularColengthOne, Other };
LocalCase classify_local(const ExtAffine& g);

}  // namespace gsp4
