#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "k3a5/cyclotomic.hpp"
#include "k3a5/perm_group.hpp"

namespace k3a5 {

// Ordinary character table of A5 over Q(zeta_5), classes 1A 2A 3A 5A 5B with
// sizes 1 15 20 12 12; the degree-3 characters carry (1 ± sqrt 5)/2.
struct CharacterTable {
    std::vector<std::string> class_labels;
    std::vector<long> class_sizes;
    std::vector<std::vector<CycloNumber>> values;  // [character][class]

    static CharacterTable a5();

    long group_order() const;
    std::size_t class_pos(const std::string& label) const;
    const CycloNumber& value(std::size_t character, const std::string& class_label) const;

    // <chi_i, chi_j> = (1/|G|) sum_C |C| chi_i(C) conj(chi_j(C)); always rational.
    Rat inner_product(std::size_t i, std::size_t j) const;
};

struct DecompositionResult {
    enum class Status { unique, no_solution, not_unique };
    Status status = Status::no_solution;
    std::array<long, 5> multiplicities{};  // a1..a5
};

// Multiplicities of the A5-representation on the rank-`rank_s` Neron-Severi
// lattice, solved from chi_top(X^a) = 4 + Tr(a*|S_X) over the four
// non-trivial classes plus the dimension count.  a1 is pinned to
// `invariant_rank` by the fixed-sublattice computation.
DecompositionResult decompose_neron_severi(long rank_s, long invariant_rank,
                                           const std::map<std::string, long>& euler_by_class,
                                           const CharacterTable& table);

}  // namespace k3a5
