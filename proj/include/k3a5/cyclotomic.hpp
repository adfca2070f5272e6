#pragma once

#include <string>

#include "k3a5/polynomial.hpp"
#include "k3a5/rational.hpp"

namespace k3a5 {

// Element of the cyclotomic field Q(zeta_n), stored as the residue of a
// rational polynomial modulo Phi_n.  The stored residue always has degree
// < phi(n).  The conductor is fixed per value: arithmetic between different
// conductors is an error, and moving between fields goes through embed(),
// never through silent coercion.
class CycloNumber {
    unsigned long conductor_ = 1;
    RatPoly residue_;

public:
    CycloNumber() = default;  // zero of Q = Q(zeta_1)
    CycloNumber(unsigned long n, const RatPoly& p);

    static CycloNumber zeta(unsigned long n, long power = 1);
    static CycloNumber from_rational(unsigned long n, const Rat& v);
    // sqrt(5) = 1 + 2*zeta_5 + 2*zeta_5^4, the positive square root.
    static CycloNumber sqrt5();

    unsigned long conductor() const { return conductor_; }
    const RatPoly& residue() const { return residue_; }

    bool is_zero() const { return residue_.is_zero(); }
    bool is_rational() const { return residue_.degree() <= 0; }
    Rat rational_value() const;

    CycloNumber operator-() const;
    CycloNumber operator+(const CycloNumber& o) const;
    CycloNumber operator-(const CycloNumber& o) const;
    CycloNumber operator*(const CycloNumber& o) const;
    CycloNumber operator*(const Rat& s) const;
    CycloNumber operator/(const CycloNumber& o) const { return *this * o.inverse(); }
    bool operator==(const CycloNumber& o) const {
        return conductor_ == o.conductor_ && residue_ == o.residue_;
    }

    CycloNumber inverse() const;
    CycloNumber pow(long e) const;
    CycloNumber conjugate() const;  // complex conjugation, zeta -> zeta^{-1}

    // Image under Q(zeta_n) -> Q(zeta_N), zeta_n -> zeta_N^{N/n}; requires n | N.
    CycloNumber embed(unsigned long big_conductor) const;

    std::string to_string() const;
};

inline CycloNumber operator*(const Rat& s, const CycloNumber& z) { return z * s; }

// Residue of an arbitrary rational polynomial modulo Phi_n.
CycloNumber cyclo_reduce(unsigned long n, const RatPoly& p);
CycloNumber cyclo_reduce(unsigned long n, const IntPoly& p);

// Evaluate p at a cyclotomic point (used for substitutions zeta -> zeta^k).
CycloNumber evaluate_at(const RatPoly& p, const CycloNumber& x);

}  // namespace k3a5
