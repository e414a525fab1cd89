#pragma once

#include <string>
#include <vector>

#include "gsp4/base.hpp"

namespace gsp4 {

inline constexpr int kDefaultBox = 12;

// t_nu * w, acting on X*(T) (x) R by x -> nu + w(x).
struct ExtAffine {
    Weight t;
    FiniteWeyl w;

    static ExtAffine translation(const Weight& nu) { return {nu, FiniteWeyl::identity()}; }
    static ExtAffine finite(FiniteWeyl w) { return {Weight{}, w}; }

    ExtAffine inverse() const;
    Weight act(const Weight& x) const { return t + w.act(x); }

    friend ExtAffine operator*(const ExtAffine& x, const ExtAffine& y);
    friend auto operator<=>(const ExtAffine&, const ExtAffine&) = default;
};

// Per-embedding tuples.
using Tuple = std::vector<ExtAffine>;
Tuple operator*(const Tuple& x, const Tuple& y);
Tuple inverse(const Tuple& x);
Tuple constant_tuple(const ExtAffine& x, int f);

// w * t_nu in the dual group, written with the finite part first.
struct DualElement {
    FiniteWeyl w;
    Weight t;
    friend auto operator<=>(const DualElement&, const DualElement&) = default;
};

DualElement star(const ExtAffine& x);
ExtAffine star(const DualElement& y);

// Alcoves are stored by six times the (a,b)-projection of their barycenter.
struct Alcove {
    Int x6 = 3, y6 = 1;
    friend auto operator<=>(const Alcove&, const Alcove&) = default;
};

Alcove alcove_of(const ExtAffine& x);
Alcove restricted_alcove(int i);  // A_0 .. A_3
// Six times the coroot functionals x-y, y, x+y, x at the barycenter.
std::array<Int, 4> functionals6(const Alcove& A);
bool is_dominant(const Alcove& A);
int restricted_index(const Alcove& A);  // 0..3, or -1 when not restricted
bool in_box(const Alcove& A, int R);
std::vector<Alcove> alcoves_in_box(int R);
std::string to_string(const Alcove& A);

// The class map X*(T) -> X*(T)/(root lattice) = Z, a + b + 2c.
Int cl(const ExtAffine& x);

// An affine Weyl group attached to a set of positive roots (all of them, or a Levi's).
class AffineSystem {
public:
    static const AffineSystem& full();
    static const AffineSystem& levi(int simple);  // 1 or 2

    int length(const ExtAffine& x) const;
    const std::vector<ExtAffine>& simple_reflections() const { return simple_; }
    const std::vector<int>& roots() const { return roots_; }

    struct Reduced {
        std::vector<int> word;  // indices into simple_reflections()
        ExtAffine delta;        // length zero
    };
    Reduced reduced(const ExtAffine& x) const;
    ExtAffine omega_part(const ExtAffine& x) const { return reduced(x).delta; }

    bool bruhat_leq(const ExtAffine& x, const ExtAffine& y) const;
    // Every element below y, from the subwords of one reduced word.
    std::vector<ExtAffine> lower_interval(const ExtAffine& y) const;
    // Reflections s_{alpha,k} for roots of the system and |k| <= bound.
    std::vector<ExtAffine> affine_reflections(int bound) const;

private:
    AffineSystem(int id, std::vector<int> roots, std::vector<ExtAffine> simple)
        : id_(id), roots_(std::move(roots)), simple_(std::move(simple)) {}
    bool leq_rec(const ExtAffine& x, const ExtAffine& y) const;

    int id_;
    std::vector<int> roots_;
    std::vector<ExtAffine> simple_;
};

// s_{alpha_r, k} = t_{k alpha} s_alpha.
ExtAffine affine_reflection(int root_index, Int k);
// s0, s1, s2 of the full system.
ExtAffine affine_simple(int i);

int length(const ExtAffine& x);
int dual_length(const DualElement& y);
bool bruhat_leq(const ExtAffine& x, const ExtAffine& y);
bool dual_bruhat_leq(const DualElement& x, const DualElement& y);
ExtAffine omega_part(const ExtAffine& x);
bool in_omega(const ExtAffine& x);

bool uparrow_leq(const Alcove& A, const Alcove& B, int R = kDefaultBox);
bool uparrow_leq(const ExtAffine& x, const ExtAffine& y, int R = kDefaultBox);
// Linkage order on weights through the p-dilated dot action.
bool uparrow_leq(const Weight& l, const Weight& m, Int p);

// w~_h = w0 t_{-eta}.
ExtAffine w_h();
// The restricted lift of w, with translation c-coordinate 0.
ExtAffine diamond(FiniteWeyl w);
// Representative modulo X^0 with translation c-coordinate 0.
ExtAffine normalize_x0(const ExtAffine& x);
Tuple normalize_x0(const Tuple& x);
// The element with alcove A and class cl_value.
ExtAffine element_with_alcove(const Alcove& A, Int cl_value);

Weight p_dot(const ExtAffine& x, const Weight& l, Int p);
// Which eta-shifted restricted p-alcove C_0..C_3 contains l; -1 otherwise.
int restricted_p_alcove(const Weight& l, Int p);

std::string to_string(const ExtAffine& x);
std::string to_string(const DualElement& y);

}  // namespace gsp4
