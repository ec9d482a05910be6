#include "cgraph/field.hpp"

namespace cgraph {

bool is_prime(long long p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (long long d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

FieldElement FieldElement::inv() const {
    if (v_ == 0) throw ZeroInverse();
    // Extended Euclid on (v, p); gcd is 1 since p is prime and v != 0 mod p.
    int r0 = mod_.value(), r1 = v_;
    int t0 = 0, t1 = 1;
    while (r1 != 0) {
        int q = r0 / r1;
        int r2 = r0 - q * r1;
        int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    return FieldElement(t0, mod_);
}

}  // namespace cgraph
