#include "k3a5/lefschetz.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace k3a5 {

long nikulin_fixed_point_count(int order) {
    switch (order) {
        case 2: return 8;
        case 3: return 6;
        case 4: return 4;
        case 5: return 4;
        case 6: return 2;
        case 7: return 3;
        case 8: return 2;
        default:
            throw std::invalid_argument("symplectic automorphisms of a K3 surface have order 2..8");
    }
}

std::vector<long> point_type_index_set(int order_i, int order_k) {
    if (order_i < 1 || order_k < 2) throw std::invalid_argument("need I >= 1 and k >= 2");
    if (std::gcd(order_i, order_k) != 1)
        throw std::invalid_argument("orders I and k must be coprime");
    const long n = static_cast<long>(order_k) * order_i;
    std::set<long> seen;
    std::vector<long> out;
    for (long i = 0; i < n; ++i) {
        if (i % order_k == 0) continue;
        long partner = ((-(order_k + i)) % n + n) % n;
        long rep = std::min(i, partner);
        if (seen.insert(rep).second) out.push_back(rep);
    }
    return out;  // ascending: reps are minima and i sweeps upward
}

std::pair<CycloNumber, CycloNumber> PointType::tangent_eigenvalues() const {
    const unsigned long n = static_cast<unsigned long>(order_k) * order_i;
    return {CycloNumber::zeta(n, -index), CycloNumber::zeta(n, order_k + index)};
}

std::vector<PointType> point_types(int order_i, int order_k) {
    std::vector<PointType> out;
    for (long i : point_type_index_set(order_i, order_k)) out.push_back({i, order_i, order_k});
    return out;
}

std::vector<std::string> FixedPointSystem::unknown_names() const {
    std::vector<std::string> names;
    names.reserve(indices.size());
    for (long i : indices) names.push_back("m" + std::to_string(i));
    return names;
}

namespace {

IntPoly one_minus_x_pow(long e, long n) {
    long r = ((e % n) + n) % n;
    if (r == 0) throw std::logic_error("denominator factor 1 - x^0 vanishes identically");
    return IntPoly{Int(1)} - IntPoly::monomial(Int(1), static_cast<std::size_t>(r));
}

CycloNumber reduced(unsigned long n, const IntPoly& p) { return cyclo_reduce(n, p); }

}  // namespace

FixedPointSystem build_mixed_order_system(int order_i, int order_k) {
    FixedPointSystem sys;
    sys.order_i = order_i;
    sys.order_k = order_k;
    sys.indices = point_type_index_set(order_i, order_k);
    const long n = static_cast<long>(order_k) * order_i;
    sys.conductor = static_cast<unsigned long>(n);

    // Local factor at type i: (1 - x^{-i})(1 - x^{k+i}), powers taken mod x^n = 1.
    std::vector<IntPoly> factors;
    for (long i : sys.indices)
        factors.push_back(one_minus_x_pow(-i, n) * one_minus_x_pow(order_k + i, n));

    IntPoly common(IntPoly{Int(1)});
    for (const IntPoly& f : factors) common = common * f;
    if (reduced(sys.conductor, common).is_zero())
        throw std::logic_error("common denominator vanishes modulo the cyclotomic polynomial");

    // sum_i m_i * (common / factor_i) = (1 + x^{-k}) * common, reduced mod Phi_n.
    CycloEquation eq;
    for (const IntPoly& f : factors) {
        auto [q, r] = common.divmod(f);
        if (!r.is_zero()) throw std::logic_error("inexact cofactor division");
        eq.coeffs.push_back(reduced(sys.conductor, q));
    }
    IntPoly lef = (IntPoly{Int(1)} + IntPoly::monomial(Int(1), static_cast<std::size_t>(n - order_k))) * common;
    eq.rhs = reduced(sys.conductor, lef);

    std::tie(sys.coeffs, sys.rhs) = flatten_cyclo_system({eq}, sys.conductor, sys.indices.size());
    sys.solved = solve_linear(sys.coeffs, sys.rhs);
    return sys;
}

long FixedPointSolution::total() const {
    long s = 0;
    for (long c : counts) s += c;
    return s;
}

std::vector<FixedPointSolution> enumerate_nonnegative_solutions(const FixedPointSystem& sys,
                                                                long bound) {
    std::vector<FixedPointSolution> out;
    const AffineSolutionSet& s = sys.solved;
    if (!s.consistent || bound < 0) return out;

    // Free parameters are themselves point counts, so each ranges over
    // [0, bound]; lexicographic sweep keeps the output deterministic.
    const std::size_t f = s.free_cols.size();
    std::vector<long> t(f, 0);
    for (;;) {
        std::vector<Rat> freev(f);
        for (std::size_t j = 0; j < f; ++j) freev[j] = Rat(t[j]);
        std::vector<Rat> x = affine_point(s, freev);
        bool ok = true;
        long sum = 0;
        std::vector<long> counts(x.size());
        for (std::size_t i = 0; i < x.size() && ok; ++i) {
            if (!is_integer(x[i]) || x[i] < 0) ok = false;
            else {
                counts[i] = to_long(x[i]);
                sum += counts[i];
            }
        }
        if (ok && sum <= bound) out.push_back({counts});

        bool advanced = false;
        for (std::size_t j = f; j-- > 0;) {
            if (++t[j] <= bound) {
                advanced = true;
                break;
            }
            t[j] = 0;
        }
        if (!advanced) break;
    }
    return out;
}

bool satisfies_lefschetz_identity(const FixedPointSystem& sys, const FixedPointSolution& sol) {
    if (sol.counts.size() != sys.indices.size())
        throw std::invalid_argument("solution length mismatch");
    const unsigned long n = sys.conductor;
    CycloNumber z = CycloNumber::zeta(n);
    CycloNumber total = -(CycloNumber::from_rational(n, Rat(1)) + z.pow(-sys.order_k));
    for (std::size_t t = 0; t < sys.indices.size(); ++t) {
        long i = sys.indices[t];
        CycloNumber denom = (CycloNumber::from_rational(n, Rat(1)) - z.pow(-i)) *
                            (CycloNumber::from_rational(n, Rat(1)) - z.pow(sys.order_k + i));
        total = total + denom.inverse() * Rat(sol.counts[t]);
    }
    return total.is_zero();
}

PureOrderRelation pure_order_relation(int order_i) {
    if (order_i != 3 && order_i != 4)
        throw std::invalid_argument("pure-order relation only derived for orders 3 and 4");
    const long n = order_i;
    const unsigned long conductor = static_cast<unsigned long>(n);

    // The unique unordered tangent pair (eta^a, eta^b) at an isolated point:
    // neither eigenvalue 1 and determinant eta.
    long pa = -1, pb = -1;
    int count = 0;
    for (long a = 1; a < n; ++a)
        for (long b = a; b < n; ++b)
            if ((a + b) % n == 1 % n) {
                pa = a;
                pb = b;
                ++count;
            }
    if (count != 1) throw std::logic_error("tangent eigenvalue pair is not unique");

    IntPoly point_den = one_minus_x_pow(pa, n) * one_minus_x_pow(pb, n);
    IntPoly curve_den = one_minus_x_pow(1, n) * one_minus_x_pow(1, n);
    IntPoly common = point_den * curve_den;
    if (reduced(conductor, common).is_zero())
        throw std::logic_error("common denominator vanishes modulo the cyclotomic polynomial");

    // m / point_den + n_h (1+x) / curve_den = 1 + x^{-1}, cleared of denominators.
    CycloEquation eq;
    eq.coeffs.push_back(reduced(conductor, curve_den));
    eq.coeffs.push_back(
        reduced(conductor, (IntPoly{Int(1)} + IntPoly::monomial(Int(1), 1)) * point_den));
    eq.rhs = reduced(conductor,
                     (IntPoly{Int(1)} + IntPoly::monomial(Int(1), static_cast<std::size_t>(n - 1))) * common);

    auto [a, b] = flatten_cyclo_system({eq}, conductor, 2);
    PureOrderRelation rel;
    rel.solved = solve_linear(a, b);
    if (!rel.solved.consistent || rel.solved.free_cols != std::vector<std::size_t>{1})
        throw std::logic_error("pure-order system did not solve to m as a function of n");
    rel.offset = to_long(rel.solved.particular[0]);
    rel.slope = to_long(rel.solved.kernel[0][0]);
    if (rel.slope <= 0) throw std::logic_error("unexpected slope sign");

    // Lower bound from m >= 0; upper bound is the recorded rank constraint on
    // the invariant transcendental eigenspace, not derived here.
    long nm = 0;
    while (rel.offset + rel.slope * (nm - 1) >= 0) --nm;
    rel.n_min = nm;
    rel.n_max = order_i == 3 ? 6 : 4;
    return rel;
}

long euler_number(long isolated, long half_curve_euler) {
    if (isolated < 0) throw std::domain_error("isolated point count must be nonnegative");
    return isolated + 2 * half_curve_euler;
}

}  // namespace k3a5
