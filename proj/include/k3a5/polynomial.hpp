#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "k3a5/rational.hpp"

namespace k3a5 {

// Dense univariate polynomial over an exact coefficient ring (Int or Rat).
// Coefficient i multiplies x^i; the vector carries no trailing zeros, so the
// zero polynomial is the empty vector and degree() returns -1 for it.
template <class T>
class Polynomial {
    std::vector<T> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

public:
    Polynomial() = default;
    Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(const T& coeff, std::size_t deg) {
        std::vector<T> c(deg + 1, T(0));
        c[deg] = coeff;
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const std::vector<T>& coefficients() const { return c_; }

    T leading() const {
        if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    Polynomial operator-() const {
        std::vector<T> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Polynomial(std::move(r));
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return Polynomial(std::move(r));
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Polynomial(std::move(r));
    }

    Polynomial operator*(const T& s) const {
        std::vector<T> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
        return Polynomial(std::move(r));
    }

    // Long division.  Over Int the divisor's leading coefficient must divide
    // exactly at every step (always true for the monic divisors we use).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        Polynomial r = *this;
        std::vector<T> q(degree() >= d.degree() ? degree() - d.degree() + 1 : 0, T(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            T t;
            if constexpr (std::is_same_v<T, Int>) {
                if (!mpz_divisible_p(r.leading().get_mpz_t(), d.leading().get_mpz_t()))
                    throw std::domain_error("inexact integer polynomial division");
                t = r.leading() / d.leading();
            } else {
                t = r.leading() / d.leading();
            }
            std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
            q[shift] = t;
            r = r - d * monomial(t, shift);
        }
        return {Polynomial(std::move(q)), r};
    }

    T evaluate(const T& x) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    std::string to_string(const std::string& var = "x") const {
        using k3a5::to_string;
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += c_[i] > 0 ? " + " : " - ";
            else if (c_[i] < 0) s += "-";
            T a = c_[i] > 0 ? c_[i] : T(-c_[i]);
            if (i == 0 || a != 1) s += to_string(a);
            if (i > 0) {
                if (a != 1) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }
};

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;

RatPoly to_rational(const IntPoly& p);

unsigned long euler_phi(unsigned long n);
std::vector<unsigned long> divisors(unsigned long n);

// n-th cyclotomic polynomial, computed by exact division of x^n - 1 by the
// proper-divisor cyclotomics.  Memoized; results are immutable.
IntPoly cyclotomic_polynomial(unsigned long n);

}  // namespace k3a5
