#include "k3a5/polynomial.hpp"

#include <map>
#include <mutex>

namespace k3a5 {

RatPoly to_rational(const IntPoly& p) {
    std::vector<Rat> c(p.coefficients().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rat(p.coefficients()[i]);
    return RatPoly(std::move(c));
}

unsigned long euler_phi(unsigned long n) {
    if (n == 0) throw std::invalid_argument("euler_phi(0)");
    unsigned long result = n, m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<unsigned long> divisors(unsigned long n) {
    if (n == 0) throw std::invalid_argument("divisors(0)");
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

IntPoly cyclotomic_polynomial(unsigned long n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial(0)");
    static std::map<unsigned long, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Fill the cache bottom-up over divisors so each step only divides by
    // already-known polynomials: Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
    for (unsigned long d : divisors(n)) {
        if (cache.count(d)) continue;
        IntPoly p = IntPoly::monomial(Int(1), d) - IntPoly{Int(1)};
        for (unsigned long e : divisors(d)) {
            if (e == d) continue;
            auto [q, r] = p.divmod(cache.at(e));
            if (!r.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
            p = q;
        }
        cache.emplace(d, std::move(p));
    }
    return cache.at(n);
}

}  // namespace k3a5
