#pragma once

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <vector>

#include "k3a5/cyclotomic.hpp"

namespace k3a5 {

// Whether the order-4 generator stabilizes or switches each pair of
// conjugate representation summands; four configurations in total.
struct CaseConfig {
    bool chi4_stable = true;
    bool chi5_stable = true;
};

// Root-of-unity scalars entering the trace formulas.  The stable branches
// carry the scalars themselves (exponents of zeta_4, with the second chi_4
// scalar a sign times the first); the switch branches only ever see the
// products d1*d5 and e1*e6, which square to 1.
struct ScalarAssignment {
    long tr1 = 0;                                // Tr(g*|chi_1 + chi_1') in {0, 2}
    std::optional<std::array<int, 4>> d_stable;  // {d1 exp, d3 sign, d1' exp, d3' sign}
    std::optional<int> d_switch;                 // d1*d5 = +-1
    std::optional<std::array<int, 2>> e_stable;  // {e1 exp, e1' exp}
    std::optional<int> e_switch;                 // e1*e6 = +-1
};

struct EulerTuple {
    long n = 0, m = 0;
    long chi_g = 0, chi_g_tau = 0, chi_g2_tau = 0, chi_g2 = 0;
    auto operator<=>(const EulerTuple&) const = default;
};

// The four Euler numbers, evaluated exactly in Q(zeta_4); values may come out
// non-real or non-integral, which the caller filters.
struct TraceEvaluation {
    CycloNumber chi_g, chi_g_tau, chi_g2_tau, chi_g2;
    bool all_integers() const;
    std::array<long, 4> as_integers() const;  // {g, g_tau, g2_tau, g2}
};

TraceEvaluation evaluate_traces(const CaseConfig& config, const ScalarAssignment& assign);

std::vector<ScalarAssignment> assignment_grid(const CaseConfig& config);

// True iff the stable scalar multisets are closed under complex conjugation.
bool scalars_conjugation_symmetric(const ScalarAssignment& assign);

struct AdmissibleResult {
    std::set<EulerTuple> tuples;
    std::vector<ScalarAssignment> admitted;
    long grid_size = 0;
};

// Full grid sweep with the constraints of the fixed-point analysis:
// integrality, chi_g = 4(1+n) with -2 <= n <= 4, chi_{g tau} and
// chi_{g^2 tau} in {2,4,6} with chi_{g^2 tau} >= chi_{g tau}, the involution
// bound chi_{g^2} <= 18, and m = 4 + 2n >= 0.
AdmissibleResult admissible_tuples(const CaseConfig& config);

std::set<EulerTuple> admissible_tuples_all_configs();

// Candidate (genus, s) splittings of a fixed locus made of one curve of the
// given genus plus s rational curves, with total Euler number chi_g2.
std::set<std::pair<long, long>> fixed_locus_genus_candidates(long chi_g2, long s_max,
                                                             const std::set<long>& allowed_s);

}  // namespace k3a5
