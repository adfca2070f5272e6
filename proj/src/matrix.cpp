#include "k3a5/matrix.hpp"

#include <algorithm>

namespace k3a5 {

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

IntMatrix to_integer(const RatMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = to_int(m(i, j));
    return r;
}

Int determinant(const IntMatrix& m_in) {
    if (m_in.rows() != m_in.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m_in.rows();
    if (n == 0) return 1;
    IntMatrix m = m_in;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

Rat determinant(const RatMatrix& m_in) {
    if (m_in.rows() != m_in.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m_in.rows();
    RatMatrix m = m_in;
    Rat det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            Rat f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

RatMatrix inverse(const RatMatrix& m_in) {
    if (m_in.rows() != m_in.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m_in.rows();
    RatMatrix m = m_in, inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) throw std::domain_error("singular matrix has no inverse");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(k, j), m(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        Rat piv = m(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k) == 0) continue;
            Rat f = m(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

std::vector<Rat> matvec(const RatMatrix& m, const std::vector<Rat>& x) {
    if (m.cols() != x.size()) throw std::invalid_argument("matvec shape mismatch");
    std::vector<Rat> r(m.rows(), Rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * x[j];
    return r;
}

std::vector<Int> SnfResult::invariant_factors() const {
    std::vector<Int> f;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) f.push_back(d(i, i));
    return f;
}

namespace {

// Quotient minimizing |a - q*p|; keeps coefficient growth down during SNF.
Int nearest_quotient(const Int& a, const Int& p) {
    Int q = a / p;  // truncated
    Int r = a - q * p;
    if (r != 0) {
        Int two_r = 2 * r, ap = abs(p);
        if (abs(two_r) > ap) q += (r > 0) == (p > 0) ? 1 : -1;
    }
    return q;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m_in) {
    const std::size_t rows = m_in.rows(), cols = m_in.cols();
    IntMatrix a = m_in;
    IntMatrix u = IntMatrix::identity(rows), v = IntMatrix::identity(cols);

    // Row/column operations keep the invariant u * m_in * v = a.
    auto row_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols; ++k) std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < rows; ++k) std::swap(u(i, k), u(j, k));
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows; ++k) std::swap(a(k, i), a(k, j));
        for (std::size_t k = 0; k < cols; ++k) std::swap(v(k, i), v(k, j));
    };
    auto row_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < cols; ++k) a(dst, k) -= q * a(src, k);
        for (std::size_t k = 0; k < rows; ++k) u(dst, k) -= q * u(src, k);
    };
    auto col_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < rows; ++k) a(k, dst) -= q * a(k, src);
        for (std::size_t k = 0; k < cols; ++k) v(k, dst) -= q * v(k, src);
    };

    const std::size_t limit = std::min(rows, cols);
    for (std::size_t t = 0; t < limit; ++t) {
        for (;;) {
            // Smallest-absolute-value pivot in the trailing submatrix.
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (a(i, j) == 0) continue;
                    if (!found || abs(a(i, j)) < abs(a(pi, pj))) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) goto done;  // trailing submatrix is zero
            if (pi != t) row_swap(t, pi);
            if (pj != t) col_swap(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                row_sub(i, t, nearest_quotient(a(i, t), a(t, t)));
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                col_sub(j, t, nearest_quotient(a(t, j), a(t, t)));
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility fix: fold in a row whose entries the pivot misses.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < rows && divides_all; ++i)
                for (std::size_t j = t + 1; j < cols && divides_all; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        row_sub(t, i, Int(-1));
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (a(t, t) < 0) {
            for (std::size_t k = 0; k < cols; ++k) a(t, k) = -a(t, k);
            for (std::size_t k = 0; k < rows; ++k) u(t, k) = -u(t, k);
        }
    }
done:
    return {a, u, v};
}

IntMatrix hermite_row_basis(const IntMatrix& gens) {
    const std::size_t rows = gens.rows(), cols = gens.cols();
    IntMatrix a = gens;
    auto row_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols; ++k) std::swap(a(i, k), a(j, k));
    };
    auto row_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < cols; ++k) a(dst, k) -= q * a(src, k);
    };

    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        for (;;) {
            std::size_t p = r;
            bool found = false;
            for (std::size_t i = r; i < rows; ++i) {
                if (a(i, j) == 0) continue;
                if (!found || abs(a(i, j)) < abs(a(p, j))) {
                    p = i;
                    found = true;
                }
            }
            if (!found) break;
            if (p != r) row_swap(r, p);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a(i, j) == 0) continue;
                row_sub(i, r, nearest_quotient(a(i, j), a(r, j)));
                if (a(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (a(r, j) == 0) continue;
        if (a(r, j) < 0)
            for (std::size_t k = 0; k < cols; ++k) a(r, k) = -a(r, k);
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a(i, j).get_mpz_t(), a(r, j).get_mpz_t());
            row_sub(i, r, q);
        }
        ++r;
    }
    IntMatrix basis(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < cols; ++k) basis(i, k) = a(i, k);
    return basis;
}

}  // namespace k3a5
