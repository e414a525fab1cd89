#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsp4 {

using Int = std::int64_t;

// Raised when a caller-supplied value violates a documented precondition.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an internal consistency check fails.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

// The character (a,b;c): diag(x, y, z/y, z/x) -> x^a y^b z^c.
struct Weight {
    Int a = 0, b = 0, c = 0;

    friend Weight operator+(Weight l, Weight r) { return {l.a + r.a, l.b + r.b, l.c + r.c}; }
    friend Weight operator-(Weight l, Weight r) { return {l.a - r.a, l.b - r.b, l.c - r.c}; }
    friend Weight operator-(Weight l) { return {-l.a, -l.b, -l.c}; }
    friend Weight operator*(Int k, Weight l) { return {k * l.a, k * l.b, k * l.c}; }
    friend auto operator<=>(const Weight&, const Weight&) = default;
};

// The cocharacter (a,b;c): x -> diag(x^a, x^b, x^(c-b), x^(c-a)).
struct Coweight {
    Int a = 0, b = 0, c = 0;

    friend Coweight operator+(Coweight l, Coweight r) { return {l.a + r.a, l.b + r.b, l.c + r.c}; }
    friend Coweight operator-(Coweight l, Coweight r) { return {l.a - r.a, l.b - r.b, l.c - r.c}; }
    friend auto operator<=>(const Coweight&, const Coweight&) = default;
};

Int pairing(const Weight& l, const Coweight& m);

// Diagonal exponents of a cocharacter: (a, b, c-b, c-a).
std::array<Int, 4> std_cocharacter(const Coweight& m);
// The map T(a,b;c) = (a+b+c, a+c, b+c, c) on characters.
std::array<Int, 4> std_character(const Weight& l);

inline constexpr Weight kEta{2, 1, 0};

// Positive roots, simple ones first, with matching coroots.
inline constexpr std::array<Weight, 4> kPositiveRoots{{{1, -1, 0}, {0, 2, -1}, {1, 1, -1}, {2, 0, -1}}};
inline constexpr std::array<Coweight, 4> kPositiveCoroots{{{1, -1, 0}, {0, 1, 0}, {1, 1, 0}, {1, 0, 0}}};

class FiniteWeyl {
public:
    FiniteWeyl() = default;

    static FiniteWeyl identity() { return FiniteWeyl(0); }
    static FiniteWeyl s1();
    static FiniteWeyl s2();
    static FiniteWeyl w0();
    static FiniteWeyl generator(int i);  // i in {1,2}
    static FiniteWeyl from_word(const std::string& word);
    static const std::array<FiniteWeyl, 8>& all();

    // Reflection in the i-th positive root.
    static FiniteWeyl reflection(int root_index);

    const std::string& word() const;
    int length() const;
    int index() const { return id_; }
    FiniteWeyl inverse() const;

    Weight act(const Weight& l) const;
    Coweight act(const Coweight& m) const;

    friend FiniteWeyl operator*(FiniteWeyl x, FiniteWeyl y);
    friend auto operator<=>(const FiniteWeyl&, const FiniteWeyl&) = default;

private:
    explicit FiniteWeyl(int id) : id_(id) {}
    int id_ = 0;
};

bool is_dominant(const Weight& l);
bool is_m_deep(const Weight& l, int m, Int p);
bool is_m_generic(const Weight& l, int m, Int p);
// Largest m with l m-deep, or -1 when l sits on a p-wall.
int depth(const Weight& l, Int p);
// Largest m with l m-deep inside the lowest p-alcove, or -1 when not in it.
int depth_in_lowest_alcove(const Weight& l, Int p);

std::string to_string(const Weight& l);

// Throws InvariantError if any root-datum identity fails.
void check_root_datum();

}  // namespace gsp4
