#pragma once

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <vector>

#include "k3a5/lattice.hpp"

namespace k3a5 {

// Admissible (m, d1, d) triple in the determinant bookkeeping
// 576 m^2 = d1^2 d^2 |det L|, with d1 the index of Z[C,D] in the invariant
// Neron-Severi part and d the glue order.
struct DetCase {
    long m = 0, d1 = 0, d = 0;
    auto operator<=>(const DetCase&) const = default;
};

std::set<DetCase> determinant_case_enumeration(const std::vector<Int>& abs_det_pool,
                                               const std::vector<long>& d1_pool,
                                               const std::vector<long>& d_pool, long m_max);

// Discriminant form of the invariant lattice taken from the Niemeier-lattice
// classification: (Z/30)^2 with generator Gram (-23/30, -1/5; -1/5, -35/30),
// ingested as cited external data.
TorsionForm classified_invariant_form();

// q_image(a g1 + b g2) = q_target(g1), cleared to an integer congruence
// a2*a^2 + b2*b^2 + ab*a*b = target (mod modulus).
struct QuadCongruence {
    long a2 = 0, b2 = 0, ab = 0, target = 0, modulus = 0;
    bool operator==(const QuadCongruence&) const = default;
};

QuadCongruence derive_isometry_congruence(const TorsionForm& target_form,
                                          const TorsionForm& image_form);

struct CongruenceCount {
    long count = 0;
    std::optional<std::pair<long, long>> witness;
};

CongruenceCount congruence_solution_count(const QuadCongruence& c);

// All group isomorphisms (Z/N)^2 -> (Z/N)^2 sending the `from` generators to
// matrix combinations of the `to` generators while preserving q mod 2Z and
// b mod Z.  Matrices (a, b, c, d) mean from_1 -> a*to_1 + b*to_2,
// from_2 -> c*to_1 + d*to_2; output in lexicographic order.
std::vector<std::array<long, 4>> exhaustive_isometry_search(const TorsionForm& from,
                                                            const TorsionForm& to);

bool isometry_set_is_group(const std::vector<std::array<long, 4>>& isometries, long modulus);

}  // namespace k3a5
