#pragma once

#include <vector>

#include "k3a5/linear.hpp"

namespace k3a5 {

// Euler number of a K3 surface.
inline constexpr long k3_euler_number = 24;

// Fixed-point count of a symplectic automorphism of order 2..8 on a K3
// surface: 8, 6, 4, 4, 2, 3, 2.
long nikulin_fixed_point_count(int order);

// Canonical indices i of the isolated fixed-point types of an automorphism g
// with ord(g) = k*I, g acting on the 2-form through a primitive I-th root.
// A residue i mod kI is admitted iff the symplectic power g^I has no tangent
// eigenvalue 1 there (i != 0 mod k); the tangent pair (eta^{-i}, eta^{k+i})
// is unordered, so indices are taken up to the involution i -> -(k+i).
std::vector<long> point_type_index_set(int order_i, int order_k);

struct PointType {
    long index = 0;  // canonical representative under i -> -(k+i)
    int order_i = 0;
    int order_k = 0;

    // (eta^{-i}, eta^{k+i}); neither is 1 and the product is eta^k.
    std::pair<CycloNumber, CycloNumber> tangent_eigenvalues() const;
};

std::vector<PointType> point_types(int order_i, int order_k);

// The holomorphic fixed-point identity, cleared of denominators and reduced
// modulo Phi_{kI}: one rational linear equation per residue coefficient,
// phi(kI) equations total, in the unknown counts m_i.
struct FixedPointSystem {
    int order_i = 0;
    int order_k = 0;
    unsigned long conductor = 1;
    std::vector<long> indices;
    RatMatrix coeffs;
    std::vector<Rat> rhs;
    AffineSolutionSet solved;

    std::vector<std::string> unknown_names() const;
};

FixedPointSystem build_mixed_order_system(int order_i, int order_k);

struct FixedPointSolution {
    std::vector<long> counts;
    long total() const;
};

// All integer points of the solved system with every m_i >= 0 and
// sum m_i <= bound, enumerated lexicographically in the free parameters.
std::vector<FixedPointSolution> enumerate_nonnegative_solutions(const FixedPointSystem& sys,
                                                                long bound);

// Plug-back check: substitutes the solution into the original identity with a
// symbolic primitive kI-th root and tests for exact zero in Q(zeta_kI).
bool satisfies_lefschetz_identity(const FixedPointSystem& sys, const FixedPointSolution& sol);

// m = offset + slope * n for a purely non-symplectic automorphism of order I,
// solved from the same identity with one isolated-point unknown and one
// curve-count unknown.  n_max is the recorded rank bound, not derived here.
struct PureOrderRelation {
    long offset = 0;
    long slope = 0;
    long n_min = 0;
    long n_max = 0;
    AffineSolutionSet solved;
};

PureOrderRelation pure_order_relation(int order_i);

// chi_top of a fixed locus with m isolated points and curve Euler sum 2n.
long euler_number(long isolated, long half_curve_euler);

}  // namespace k3a5
