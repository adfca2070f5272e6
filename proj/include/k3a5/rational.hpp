#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace k3a5 {

// All arithmetic in this project is exact.  Integers and rationals are
// GMP-backed; mpq_class keeps values in lowest terms with a positive
// denominator once canonicalized, which is exactly the invariant we need.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat frac(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat frac(long num, long den) { return frac(Int(num), Int(den)); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integer(q)) throw std::domain_error("rational is not an integer: " + q.get_str());
    return q.get_num();
}

inline long to_long(const Rat& q) {
    Int n = to_int(q);
    if (!n.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
    return n.get_si();
}

// Canonical residue of q modulo m (m > 0), in the half-open interval [0, m).
// Used to compare torsion-form values in Q/2Z and Q/Z.
inline Rat mod_residue(const Rat& q, const Rat& m) {
    if (m <= 0) throw std::domain_error("modulus must be positive");
    Rat t = q / m;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    return q - Rat(fl) * m;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& n) { return n.get_str(); }

}  // namespace k3a5
