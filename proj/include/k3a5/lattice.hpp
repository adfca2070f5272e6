#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3a5/matrix.hpp"

namespace k3a5 {

// Non-degenerate integral lattice given by a symmetric Gram matrix, with
// named basis vectors so that report output can use the source notation
// (C, D, u1, u2, t1, t2).
struct GramLattice {
    std::vector<std::string> labels;
    IntMatrix gram;

    GramLattice() = default;
    GramLattice(std::vector<std::string> basis_labels, IntMatrix gram_matrix);

    std::size_t rank() const { return labels.size(); }
    bool is_even() const;
    Int determinant() const;

    static GramLattice diagonal(std::vector<std::string> basis_labels, std::vector<Int> entries);
    // Rank-2 lattice with Gram [[0, s], [s, 0]]; U(6) is hyperbolic("u1","u2",6).
    static GramLattice hyperbolic(std::string l1, std::string l2, Int scale);
};

GramLattice direct_sum(const GramLattice& a, const GramLattice& b);

// Vector of L (x) Q in lattice-basis coordinates; DualVectors with all
// pairings integral are elements of the dual lattice L^vee.
struct DualVector {
    std::vector<Rat> coords;
    auto operator<=>(const DualVector&) const = default;
};

Rat inner(const GramLattice& l, const DualVector& x, const DualVector& y);
bool is_lattice_vector(const DualVector& x);
bool in_dual(const GramLattice& l, const DualVector& x);
DualVector add(const DualVector& x, const DualVector& y);
DualVector reduce_mod_lattice(const DualVector& x);  // coordinates into [0, 1)
std::string render(const GramLattice& l, const DualVector& x);

// Finite quadratic form on the discriminant group A_L = L^vee / L: cyclic
// invariants, generators, and the generator Gram with q-values normalized to
// [0, 2) on the diagonal (Q/2Z) and b-values to [0, 1) off it (Q/Z).
struct TorsionForm {
    std::vector<Int> invariants;            // orders > 1, divisibility chain
    std::vector<std::string> generator_names;
    std::vector<DualVector> generators;     // may be empty for cited fixtures
    RatMatrix gen_gram;

    Int order() const;
};

TorsionForm discriminant_group(const GramLattice& l);  // throws on det = 0

// Same group presented on caller-chosen dual vectors; verifies membership in
// L^vee and that the vectors generate A_L with independent cyclic factors.
TorsionForm torsion_form_on_generators(const GramLattice& l, std::vector<DualVector> gens,
                                       std::vector<std::string> names);

// Index of a finite-index sublattice given the rows of its basis in the
// superlattice's coordinates; checks E * G_sup * E^T = G_sub.
Int sublattice_index(const GramLattice& sub, const GramLattice& sup, const IntMatrix& embedding);

// Nonzero half-integer cosets theta with all pairings integral and
// theta^2 in 2Z; with `primitive_split` = rank of the first summand, both
// components are additionally required to be nonzero modulo the lattice.
std::vector<DualVector> even_overlattice_candidates(const GramLattice& l,
                                                    std::optional<std::size_t> primitive_split = {});

// Isotropic 2-elementary subgroup of A_S + A_T with injective projections;
// corresponds to an even overlattice in which S and T stay primitive.
struct GlueGroup {
    std::vector<DualVector> generators;  // in S+T coordinates
    std::vector<DualVector> elements;    // includes zero
    Int order() const { return Int(elements.size()); }
};

struct GlueSearch {
    std::vector<GlueGroup> groups;
    std::vector<std::string> obstructions;  // why candidate pairs failed
};

GlueSearch glue_feasibility(const GramLattice& s, const GramLattice& t, int required_d);

// Even overlattice L' = (S + T) + <glue>, with its basis in ambient
// S+T coordinates.
struct Overlattice {
    GramLattice lattice;
    RatMatrix basis_rows;  // rows = L' basis in ambient coordinates
    GramLattice ambient;
};

Overlattice build_overlattice(const GramLattice& s, const GramLattice& t, const GlueGroup& glue);

TorsionForm overlattice_discriminant(const Overlattice& ov);

// Discriminant form of the overlattice on generators supplied in ambient
// coordinates (e.g. dual-basis combinations t_i^*, u_j^*).
TorsionForm overlattice_form_on(const Overlattice& ov, std::vector<DualVector> ambient_gens,
                                std::vector<std::string> names);

// Gram matrix of a new basis, given as rational rows over the old one; the
// result must be integral (i.e. the rows must span an integral lattice).
GramLattice rebase(const GramLattice& l, const RatMatrix& new_basis_rows,
                   std::vector<std::string> labels);

// Subgroup of A_T fixed by the order-4 rotation t1 -> t2 -> -t1 on
// T = diag(2m, 2m): pairs (a, b) mod 2m with 2m | a+b and 2m | a-b.
std::vector<std::pair<long, long>> order4_rotation_fixed_part(long m);

// Structured-text fixture format: integer Gram matrices, rational vectors as
// numerator/denominator pairs.  Round-trips bit-exactly.
std::string serialize(const GramLattice& l);
GramLattice parse_gram_lattice(const std::string& text);
std::string serialize(const DualVector& v);
DualVector parse_dual_vector(const std::string& text);
std::string serialize(const GlueGroup& g);
GlueGroup parse_glue_group(const std::string& text);

}  // namespace k3a5
