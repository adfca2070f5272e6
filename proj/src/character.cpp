#include "k3a5/character.hpp"

#include <stdexcept>

#include "k3a5/linear.hpp"

namespace k3a5 {

CharacterTable CharacterTable::a5() {
    CharacterTable t;
    t.class_labels = {"1A", "2A", "3A", "5A", "5B"};
    t.class_sizes = {1, 15, 20, 12, 12};

    auto q = [](long v) { return CycloNumber::from_rational(5, Rat(v)); };
    CycloNumber golden_minus = (q(1) - CycloNumber::sqrt5()) * frac(1, 2);  // (1 - sqrt5)/2
    CycloNumber golden_plus = (q(1) + CycloNumber::sqrt5()) * frac(1, 2);   // (1 + sqrt5)/2

    t.values = {
        {q(1), q(1), q(1), q(1), q(1)},
        {q(3), q(-1), q(0), golden_minus, golden_plus},
        {q(3), q(-1), q(0), golden_plus, golden_minus},
        {q(4), q(0), q(1), q(-1), q(-1)},
        {q(5), q(1), q(-1), q(0), q(0)},
    };
    return t;
}

long CharacterTable::group_order() const {
    long n = 0;
    for (long s : class_sizes) n += s;
    return n;
}

std::size_t CharacterTable::class_pos(const std::string& label) const {
    for (std::size_t i = 0; i < class_labels.size(); ++i)
        if (class_labels[i] == label) return i;
    throw std::invalid_argument("unknown conjugacy class " + label);
}

const CycloNumber& CharacterTable::value(std::size_t character, const std::string& class_label) const {
    return values.at(character).at(class_pos(class_label));
}

Rat CharacterTable::inner_product(std::size_t i, std::size_t j) const {
    CycloNumber acc = CycloNumber::from_rational(5, Rat(0));
    for (std::size_t c = 0; c < class_labels.size(); ++c)
        acc = acc + values.at(i)[c] * values.at(j)[c].conjugate() * Rat(class_sizes[c]);
    return (acc * frac(1, group_order())).rational_value();
}

DecompositionResult decompose_neron_severi(long rank_s, long invariant_rank,
                                           const std::map<std::string, long>& euler_by_class,
                                           const CharacterTable& table) {
    for (const char* label : {"2A", "3A", "5A", "5B"})
        if (!euler_by_class.count(label))
            throw std::invalid_argument(std::string("missing Euler number for class ") + label);

    // Unknowns a2..a5.  First equation counts dimensions; each class C gives
    // Tr(a*|S_X) = chi_top(X^a) - 4 with the invariant part contributing
    // invariant_rank * chi_1.
    const unsigned long conductor = 5;
    auto q = [&](const Rat& v) { return CycloNumber::from_rational(conductor, v); };
    std::vector<CycloEquation> eqs;
    {
        CycloEquation dim;
        for (std::size_t ch = 1; ch < 5; ++ch) dim.coeffs.push_back(table.values[ch][0]);
        dim.rhs = q(Rat(rank_s - invariant_rank));
        eqs.push_back(std::move(dim));
    }
    for (const char* label : {"2A", "3A", "5A", "5B"}) {
        CycloEquation eq;
        for (std::size_t ch = 1; ch < 5; ++ch) eq.coeffs.push_back(table.value(ch, label));
        long trace = euler_by_class.at(label) - 4;
        eq.rhs = q(Rat(trace)) - table.value(0, label) * Rat(invariant_rank);
        eqs.push_back(std::move(eq));
    }

    auto [a, b] = flatten_cyclo_system(eqs, conductor, 4);
    AffineSolutionSet sol = solve_linear(a, b);

    DecompositionResult res;
    if (!sol.consistent) return res;

    // Enumerate integer points; the dimension equation bounds every a_i.
    std::vector<std::array<long, 5>> hits;
    long bound = rank_s;  // conservative
    std::size_t f = sol.free_cols.size();
    std::vector<long> t(f, 0);
    for (;;) {
        std::vector<Rat> freev(f);
        for (std::size_t j = 0; j < f; ++j) freev[j] = Rat(t[j]);
        std::vector<Rat> x = affine_point(sol, freev);
        bool ok = true;
        std::array<long, 5> a5{invariant_rank, 0, 0, 0, 0};
        for (std::size_t i = 0; i < 4 && ok; ++i) {
            if (!is_integer(x[i]) || x[i] < 0 || x[i] > bound) ok = false;
            else a5[i + 1] = to_long(x[i]);
        }
        if (ok) hits.push_back(a5);
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

    if (hits.empty()) return res;
    if (hits.size() > 1) {
        res.status = DecompositionResult::Status::not_unique;
        return res;
    }
    res.status = DecompositionResult::Status::unique;
    res.multiplicities = hits[0];
    return res;
}

}  // namespace k3a5
