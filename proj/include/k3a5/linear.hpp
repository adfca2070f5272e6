#pragma once

#include <string>
#include <vector>

#include "k3a5/cyclotomic.hpp"
#include "k3a5/matrix.hpp"
#include "k3a5/rational.hpp"

namespace k3a5 {

// Exact description of {x : A x = b}.  `rref` is the reduced row-echelon form
// of the augmented matrix with zero rows dropped; it is a canonical invariant
// of the solution set, so two systems describe the same affine set iff their
// rref matrices are equal (given equal variable counts).
struct AffineSolutionSet {
    bool consistent = false;
    std::size_t num_vars = 0;
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> free_cols;
    std::vector<Rat> particular;             // free coordinates set to zero
    std::vector<std::vector<Rat>> kernel;    // one basis vector per free column
    RatMatrix rref;

    bool same_set_as(const AffineSolutionSet& o) const {
        return consistent == o.consistent && num_vars == o.num_vars &&
               (!consistent || rref == o.rref);
    }
};

AffineSolutionSet solve_linear(const RatMatrix& a, const std::vector<Rat>& b);

// Point evaluation of the parametrization at a free-variable assignment.
std::vector<Rat> affine_point(const AffineSolutionSet& s, const std::vector<Rat>& free_values);

bool affine_contains(const AffineSolutionSet& s, const std::vector<Rat>& x);

// Human-readable relations "m2 = -1 + m3, ..." read off the canonical rref.
std::string render_relations(const AffineSolutionSet& s, const std::vector<std::string>& names);

// One linear equation over Q(zeta_n); flattening over the power basis of the
// field turns each such equation into phi(n) rational equations.
struct CycloEquation {
    std::vector<CycloNumber> coeffs;
    CycloNumber rhs;
};

std::pair<RatMatrix, std::vector<Rat>> flatten_cyclo_system(
    const std::vector<CycloEquation>& eqs, unsigned long conductor, std::size_t num_vars);

}  // namespace k3a5
