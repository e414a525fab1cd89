#include "gsp4/exact.hpp"

namespace gsp4 {

namespace {
thread_local Int current_modulus = 0;
}

Int Fq::modulus() {
    if (current_modulus == 0) throw ValidationError("no prime field in scope");
    return current_modulus;
}

Fq::Fq(Int x) {
    Int q = modulus();
    v = x % q;
    if (v < 0) v += q;
}

Fq Fq::inverse() const {
    if (v == 0) throw ValidationError("division by zero in F_q");
    Int q = modulus(), a = v, b = q, x0 = 1, x1 = 0;
    while (b != 0) {
        Int t = a / b;
        a -= t * b;
        std::swap(a, b);
        x0 -= t * x1;
        std::swap(x0, x1);
    }
    return Fq(x0);
}

bool is_prime(Int q) {
    if (q < 2) return false;
    for (Int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

FqScope::FqScope(Int q) : previous_(current_modulus) {
    if (!is_prime(q)) throw ValidationError(std::to_string(q) + " is not prime");
    current_modulus = q;
}

FqScope::~FqScope() { current_modulus = previous_; }

Fq reduce(const Q& x) {
    const Int q = Fq::modulus();
    mpz_class n = x.get_num() % q, d = x.get_den() % q;
    if (d == 0) throw ValidationError("denominator of " + x.get_str() + " vanishes mod " + std::to_string(q));
    return Fq(n.get_si()) / Fq(d.get_si());
}

}  // namespace gsp4
