#include "k3a5/cyclotomic.hpp"

#include <stdexcept>
#include <tuple>

namespace k3a5 {

namespace {

RatPoly reduce_mod_phi(unsigned long n, const RatPoly& p) {
    return p.divmod(to_rational(cyclotomic_polynomial(n))).second;
}

void require_same_field(const CycloNumber& a, const CycloNumber& b) {
    if (a.conductor() != b.conductor())
        throw std::invalid_argument("cyclotomic conductor mismatch (" +
                                    std::to_string(a.conductor()) + " vs " +
                                    std::to_string(b.conductor()) + "); embed explicitly");
}

// Extended Euclid over Q[x]: returns (g, u, v) with u*a + v*b = g.
std::tuple<RatPoly, RatPoly, RatPoly> extended_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly u0{Rat(1)}, u1;
    RatPoly v0, v1{Rat(1)};
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        RatPoly u2 = u0 - q * u1, v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    return {r0, u0, v0};
}

}  // namespace

CycloNumber::CycloNumber(unsigned long n, const RatPoly& p) : conductor_(n) {
    if (n == 0) throw std::invalid_argument("conductor must be positive");
    residue_ = reduce_mod_phi(n, p);
}

CycloNumber CycloNumber::zeta(unsigned long n, long power) {
    long e = power % static_cast<long>(n);
    if (e < 0) e += static_cast<long>(n);
    return CycloNumber(n, RatPoly::monomial(Rat(1), static_cast<std::size_t>(e)));
}

CycloNumber CycloNumber::from_rational(unsigned long n, const Rat& v) {
    return CycloNumber(n, RatPoly{v});
}

CycloNumber CycloNumber::sqrt5() {
    return from_rational(5, Rat(1)) + zeta(5, 1) * Rat(2) + zeta(5, 4) * Rat(2);
}

Rat CycloNumber::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + to_string());
    return residue_.coeff(0);
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber r;
    r.conductor_ = conductor_;
    r.residue_ = -residue_;
    return r;
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
    require_same_field(*this, o);
    CycloNumber r;
    r.conductor_ = conductor_;
    r.residue_ = residue_ + o.residue_;
    return r;
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const { return *this + (-o); }

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
    require_same_field(*this, o);
    return CycloNumber(conductor_, residue_ * o.residue_);
}

CycloNumber CycloNumber::operator*(const Rat& s) const {
    CycloNumber r;
    r.conductor_ = conductor_;
    r.residue_ = residue_ * s;
    return r;
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta_" +
                                           std::to_string(conductor_) + ")");
    // Phi_n is irreducible, so gcd(residue, Phi_n) is a nonzero constant.
    auto [g, u, v] = extended_gcd(residue_, to_rational(cyclotomic_polynomial(conductor_)));
    (void)v;
    if (g.degree() != 0) throw std::logic_error("cyclotomic gcd is not constant");
    return CycloNumber(conductor_, u * (Rat(1) / g.coeff(0)));
}

CycloNumber CycloNumber::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNumber acc = from_rational(conductor_, Rat(1));
    CycloNumber base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

CycloNumber CycloNumber::conjugate() const {
    return evaluate_at(residue_, zeta(conductor_, static_cast<long>(conductor_) - 1));
}

CycloNumber CycloNumber::embed(unsigned long big_conductor) const {
    if (big_conductor % conductor_ != 0)
        throw std::invalid_argument("embed target conductor must be a multiple of the source");
    return evaluate_at(residue_, zeta(big_conductor, static_cast<long>(big_conductor / conductor_)));
}

std::string CycloNumber::to_string() const {
    return residue_.to_string("z" + std::to_string(conductor_));
}

CycloNumber cyclo_reduce(unsigned long n, const RatPoly& p) { return CycloNumber(n, p); }
CycloNumber cyclo_reduce(unsigned long n, const IntPoly& p) { return CycloNumber(n, to_rational(p)); }

CycloNumber evaluate_at(const RatPoly& p, const CycloNumber& x) {
    CycloNumber acc = CycloNumber::from_rational(x.conductor(), Rat(0));
    for (std::size_t i = p.coefficients().size(); i-- > 0;)
        acc = acc * x + CycloNumber::from_rational(x.conductor(), p.coeff(i));
    return acc;
}

}  // namespace k3a5
