#include "k3a5/linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3a5 {

AffineSolutionSet solve_linear(const RatMatrix& a, const std::vector<Rat>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("system shape mismatch");
    const std::size_t m = a.rows(), n = a.cols();

    RatMatrix w(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
        w(i, n) = b[i];
    }

    // Gauss-Jordan to reduced row-echelon form.
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t p = row;
        while (p < m && w(p, col) == 0) ++p;
        if (p == m) continue;
        if (p != row)
            for (std::size_t j = 0; j <= n; ++j) std::swap(w(row, j), w(p, j));
        Rat piv = w(row, col);
        for (std::size_t j = 0; j <= n; ++j) w(row, j) /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || w(i, col) == 0) continue;
            Rat f = w(i, col);
            for (std::size_t j = 0; j <= n; ++j) w(i, j) -= f * w(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }

    AffineSolutionSet s;
    s.num_vars = n;
    s.pivot_cols = pivot_cols;

    // Any leftover row with zero coefficients and nonzero rhs kills the system.
    for (std::size_t i = row; i < m; ++i)
        if (w(i, n) != 0) {
            s.consistent = false;
            return s;
        }
    s.consistent = true;

    const std::size_t rank = pivot_cols.size();
    s.rref = RatMatrix(rank, n + 1);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j <= n; ++j) s.rref(i, j) = w(i, j);

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) s.free_cols.push_back(c);

    s.particular.assign(n, Rat(0));
    for (std::size_t i = 0; i < rank; ++i) s.particular[pivot_cols[i]] = s.rref(i, n);

    for (std::size_t f : s.free_cols) {
        std::vector<Rat> k(n, Rat(0));
        k[f] = 1;
        for (std::size_t i = 0; i < rank; ++i) k[pivot_cols[i]] = -s.rref(i, f);
        s.kernel.push_back(std::move(k));
    }
    return s;
}

std::vector<Rat> affine_point(const AffineSolutionSet& s, const std::vector<Rat>& free_values) {
    if (!s.consistent) throw std::domain_error("inconsistent system has no points");
    if (free_values.size() != s.free_cols.size())
        throw std::invalid_argument("free-variable count mismatch");
    std::vector<Rat> x = s.particular;
    for (std::size_t j = 0; j < free_values.size(); ++j)
        for (std::size_t i = 0; i < s.num_vars; ++i) x[i] += free_values[j] * s.kernel[j][i];
    return x;
}

bool affine_contains(const AffineSolutionSet& s, const std::vector<Rat>& x) {
    if (!s.consistent || x.size() != s.num_vars) return false;
    for (std::size_t i = 0; i < s.rref.rows(); ++i) {
        Rat acc(0);
        for (std::size_t j = 0; j < s.num_vars; ++j) acc += s.rref(i, j) * x[j];
        if (acc != s.rref(i, s.num_vars)) return false;
    }
    return true;
}

std::string render_relations(const AffineSolutionSet& s, const std::vector<std::string>& names) {
    if (names.size() != s.num_vars) throw std::invalid_argument("variable name count mismatch");
    if (!s.consistent) return "<inconsistent>";
    std::string out;
    for (std::size_t i = 0; i < s.rref.rows(); ++i) {
        if (!out.empty()) out += ", ";
        out += names[s.pivot_cols[i]] + " = ";
        std::string rhs;
        Rat c = s.rref(i, s.num_vars);
        if (c != 0) rhs += to_string(c);
        for (std::size_t f : s.free_cols) {
            Rat coef = -s.rref(i, f);
            if (coef == 0) continue;
            if (!rhs.empty()) rhs += coef > 0 ? " + " : " - ";
            else if (coef < 0) rhs += "-";
            Rat a = abs(coef);
            if (a != 1) rhs += to_string(a) + "*";
            rhs += names[f];
        }
        out += rhs.empty() ? "0" : rhs;
    }
    return out;
}

std::pair<RatMatrix, std::vector<Rat>> flatten_cyclo_system(
    const std::vector<CycloEquation>& eqs, unsigned long conductor, std::size_t num_vars) {
    const std::size_t dim = euler_phi(conductor);
    RatMatrix a(eqs.size() * dim, num_vars);
    std::vector<Rat> b(eqs.size() * dim, Rat(0));
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        if (eqs[e].coeffs.size() != num_vars)
            throw std::invalid_argument("cyclotomic equation has wrong coefficient count");
        for (std::size_t v = 0; v < num_vars; ++v) {
            const CycloNumber& c = eqs[e].coeffs[v];
            if (c.conductor() != conductor)
                throw std::invalid_argument("cyclotomic equation conductor mismatch");
            for (std::size_t d = 0; d < dim; ++d) a(e * dim + d, v) = c.residue().coeff(d);
        }
        if (eqs[e].rhs.conductor() != conductor)
            throw std::invalid_argument("cyclotomic equation conductor mismatch");
        for (std::size_t d = 0; d < dim; ++d) b[e * dim + d] = eqs[e].rhs.residue().coeff(d);
    }
    return {a, b};
}

}  // namespace k3a5
