#ifndef CGRAPH_FIELD_HPP
#define CGRAPH_FIELD_HPP

#include <compare>

#include "cgraph/errors.hpp"

namespace cgraph {

// Deterministic trial division up to sqrt(p).
bool is_prime(long long p);

// A validated prime modulus. Construction fails on composites, so a Modulus
// in hand is proof that GF(p) exists.
class Modulus {
public:
    explicit Modulus(int p) : p_(p) {
        if (p < 2 || !is_prime(p)) throw NotPrime(p);
    }

    int value() const { return p_; }

    friend bool operator==(Modulus a, Modulus b) { return a.p_ == b.p_; }
    friend bool operator!=(Modulus a, Modulus b) { return a.p_ != b.p_; }

private:
    int p_;
};

// An element of GF(p). Carries its modulus; mixing moduli is an error,
// never a coercion. Values are reduced into [0, p-1] at construction.
class FieldElement {
public:
    FieldElement(long long value, Modulus mod)
        : v_(static_cast<int>(((value % mod.value()) + mod.value()) % mod.value())), mod_(mod) {}

    int value() const { return v_; }
    Modulus modulus() const { return mod_; }
    bool is_zero() const { return v_ == 0; }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        check_same(a, b);
        return FieldElement(a.v_ + b.v_, a.mod_);
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        check_same(a, b);
        return FieldElement(static_cast<long long>(a.v_) * b.v_, a.mod_);
    }
    // Additive inverse.
    friend FieldElement operator-(FieldElement a) { return FieldElement(-a.v_, a.mod_); }

    // Multiplicative inverse via extended Euclid; inv(0) is an error.
    FieldElement inv() const;

    friend bool operator==(FieldElement a, FieldElement b) {
        return a.mod_ == b.mod_ && a.v_ == b.v_;
    }
    friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

private:
    static void check_same(FieldElement a, FieldElement b) {
        if (a.mod_ != b.mod_) throw ModulusMismatch();
    }

    int v_;
    Modulus mod_;
};

inline FieldElement add(FieldElement a, FieldElement b) { return a + b; }
inline FieldElement mul(FieldElement a, FieldElement b) { return a * b; }
inline FieldElement neg(FieldElement a) { return -a; }
inline FieldElement inv(FieldElement a) { return a.inv(); }

}  // namespace cgraph

#endif
