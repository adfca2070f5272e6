#include "k3a5/cases.hpp"

#include <stdexcept>

namespace k3a5 {

namespace {

const unsigned long kConductor = 4;

CycloNumber z4(long e) { return CycloNumber::zeta(kConductor, e); }
CycloNumber c4(long v) { return CycloNumber::from_rational(kConductor, Rat(v)); }

void check_shape(const CaseConfig& config, const ScalarAssignment& a) {
    bool ok = (config.chi4_stable ? a.d_stable.has_value() && !a.d_switch
                                  : a.d_switch.has_value() && !a.d_stable) &&
              (config.chi5_stable ? a.e_stable.has_value() && !a.e_switch
                                  : a.e_switch.has_value() && !a.e_stable);
    if (!ok) throw std::invalid_argument("scalar assignment shape does not match configuration");
    if (a.tr1 != 0 && a.tr1 != 2) throw std::invalid_argument("tr1 must be 0 or 2");
}

}  // namespace

bool TraceEvaluation::all_integers() const {
    for (const CycloNumber* v : {&chi_g, &chi_g_tau, &chi_g2_tau, &chi_g2})
        if (!v->is_rational() || !is_integer(v->rational_value())) return false;
    return true;
}

std::array<long, 4> TraceEvaluation::as_integers() const {
    return {to_long(chi_g.rational_value()), to_long(chi_g_tau.rational_value()),
            to_long(chi_g2_tau.rational_value()), to_long(chi_g2.rational_value())};
}

TraceEvaluation evaluate_traces(const CaseConfig& config, const ScalarAssignment& assign) {
    check_shape(config, assign);
    const CycloNumber two = c4(2), tr1 = c4(assign.tr1);

    // chi_4-side sums entering the formulas.
    CycloNumber sum_d1 = c4(0), sum_d3 = c4(0), sum_d1_sq = c4(0);
    CycloNumber d_prod = c4(0);
    if (config.chi4_stable) {
        const auto& d = *assign.d_stable;
        CycloNumber d1 = z4(d[0]), d3 = z4(d[0]) * Rat(d[1]);
        CycloNumber d1p = z4(d[2]), d3p = z4(d[2]) * Rat(d[3]);
        sum_d1 = d1 + d1p;
        sum_d3 = d3 + d3p;
        sum_d1_sq = d1 * d1 + d1p * d1p;
    } else {
        d_prod = c4(*assign.d_switch);
    }

    // chi_5-side sums.
    CycloNumber sum_e1 = c4(0), sum_e1_sq = c4(0);
    CycloNumber e_prod = c4(0);
    if (config.chi5_stable) {
        const auto& e = *assign.e_stable;
        CycloNumber e1 = z4(e[0]), e1p = z4(e[1]);
        sum_e1 = e1 + e1p;
        sum_e1_sq = e1 * e1 + e1p * e1p;
    } else {
        e_prod = c4(*assign.e_switch);
    }

    TraceEvaluation ev{c4(0), c4(0), c4(0), c4(0)};
    if (config.chi4_stable && config.chi5_stable) {
        ev.chi_g = two + tr1 + sum_d1 + sum_d3 + sum_e1;
        ev.chi_g_tau = two + tr1 + sum_d1 - sum_d3 * Rat(2) + sum_e1;
        ev.chi_g2 = two + sum_d1_sq * Rat(4) + sum_e1_sq * Rat(5);
        ev.chi_g2_tau = two + sum_d1_sq - sum_e1_sq;
    } else if (!config.chi4_stable && config.chi5_stable) {
        ev.chi_g = two + tr1 + sum_e1;
        ev.chi_g_tau = ev.chi_g;
        ev.chi_g2 = two + d_prod * Rat(8) + sum_e1_sq * Rat(5);
        ev.chi_g2_tau = two + d_prod * Rat(2) - sum_e1_sq;
    } else if (config.chi4_stable && !config.chi5_stable) {
        ev.chi_g = two + tr1 + sum_d1 + sum_d3;
        ev.chi_g_tau = two + tr1 + sum_d1 - sum_d3 * Rat(2);
        ev.chi_g2 = two + sum_d1_sq * Rat(4) + e_prod * Rat(10);
        ev.chi_g2_tau = two + sum_d1_sq - e_prod * Rat(2);
    } else {
        ev.chi_g = two + tr1;
        ev.chi_g_tau = ev.chi_g;
        ev.chi_g2 = two + d_prod * Rat(8) + e_prod * Rat(10);
        ev.chi_g2_tau = two + d_prod * Rat(2) - e_prod * Rat(2);
    }
    return ev;
}

std::vector<ScalarAssignment> assignment_grid(const CaseConfig& config) {
    std::vector<std::array<int, 4>> d_stable_choices;
    std::vector<int> d_switch_choices;
    if (config.chi4_stable) {
        for (int d1 = 0; d1 < 4; ++d1)
            for (int s = -1; s <= 1; s += 2)
                for (int d1p = 0; d1p < 4; ++d1p)
                    for (int sp = -1; sp <= 1; sp += 2)
                        d_stable_choices.push_back({d1, s, d1p, sp});
    } else {
        d_switch_choices = {1, -1};
    }

    std::vector<std::array<int, 2>> e_stable_choices;
    std::vector<int> e_switch_choices;
    if (config.chi5_stable) {
        for (int e1 = 0; e1 < 4; ++e1)
            for (int e1p = 0; e1p < 4; ++e1p) e_stable_choices.push_back({e1, e1p});
    } else {
        e_switch_choices = {1, -1};
    }

    std::vector<ScalarAssignment> grid;
    for (long tr1 : {0L, 2L}) {
        auto with_e = [&](ScalarAssignment base) {
            if (config.chi5_stable)
                for (const auto& e : e_stable_choices) {
                    base.e_stable = e;
                    grid.push_back(base);
                }
            else
                for (int e : e_switch_choices) {
                    base.e_switch = e;
                    grid.push_back(base);
                }
        };
        ScalarAssignment base;
        base.tr1 = tr1;
        if (config.chi4_stable)
            for (const auto& d : d_stable_choices) {
                base.d_stable = d;
                with_e(base);
            }
        else
            for (int d : d_switch_choices) {
                base.d_switch = d;
                with_e(base);
            }
    }
    return grid;
}

bool scalars_conjugation_symmetric(const ScalarAssignment& assign) {
    auto symmetric = [](std::vector<int> exps) {
        std::multiset<int> s(exps.begin(), exps.end()), conj;
        for (int e : exps) conj.insert((4 - e) % 4);
        return s == conj;
    };
    if (assign.d_stable) {
        const auto& d = *assign.d_stable;
        int d3 = (d[0] + (d[1] < 0 ? 2 : 0)) % 4;      // -1 = zeta_4^2
        int d3p = (d[2] + (d[3] < 0 ? 2 : 0)) % 4;
        if (!symmetric({d[0], d3, d[2], d3p})) return false;
    }
    if (assign.e_stable && !symmetric({(*assign.e_stable)[0], (*assign.e_stable)[1]})) return false;
    return true;  // switch products are +-1, closed under conjugation
}

AdmissibleResult admissible_tuples(const CaseConfig& config) {
    AdmissibleResult res;
    for (const ScalarAssignment& assign : assignment_grid(config)) {
        ++res.grid_size;
        TraceEvaluation ev = evaluate_traces(config, assign);
        if (!ev.all_integers()) continue;
        auto [g, g_tau, g2_tau, g2] = ev.as_integers();

        if (g % 4 != 0) continue;
        long n = g / 4 - 1;
        if (n < -2 || n > 4) continue;
        long m = 4 + 2 * n;
        if (m < 0) continue;
        if (g_tau != 2 && g_tau != 4 && g_tau != 6) continue;
        if (g2_tau != 2 && g2_tau != 4 && g2_tau != 6) continue;
        if (g2_tau < g_tau) continue;
        if (g2 > 18) continue;

        res.tuples.insert({n, m, g, g_tau, g2_tau, g2});
        res.admitted.push_back(assign);
    }
    return res;
}

std::set<EulerTuple> admissible_tuples_all_configs() {
    std::set<EulerTuple> out;
    for (bool s4 : {true, false})
        for (bool s5 : {true, false}) {
            auto r = admissible_tuples({s4, s5});
            out.insert(r.tuples.begin(), r.tuples.end());
        }
    return out;
}

std::set<std::pair<long, long>> fixed_locus_genus_candidates(long chi_g2, long s_max,
                                                             const std::set<long>& allowed_s) {
    std::set<std::pair<long, long>> out;
    for (long s : allowed_s) {
        if (s < 1 || s > s_max) continue;
        long twice_genus = 2 + 2 * s - chi_g2;  // chi(C) + 2s = chi_g2 with chi(C) = 2 - 2g
        if (twice_genus < 0 || twice_genus % 2 != 0) continue;
        out.insert({twice_genus / 2, s});
    }
    return out;
}

}  // namespace k3a5
