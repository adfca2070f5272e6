#include "k3a5/obstruction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace k3a5 {

std::set<DetCase> determinant_case_enumeration(const std::vector<Int>& abs_det_pool,
                                               const std::vector<long>& d1_pool,
                                               const std::vector<long>& d_pool, long m_max) {
    std::set<DetCase> out;
    for (long m = 1; m <= m_max; ++m)
        for (long d1 : d1_pool)
            for (long d : d_pool)
                for (const Int& det : abs_det_pool)
                    if (Int(576) * m * m == Int(d1) * d1 * d * d * det)
                        out.insert({m, d1, d});
    return out;
}

TorsionForm classified_invariant_form() {
    TorsionForm f;
    f.invariants = {30, 30};
    f.generator_names = {"e1*", "e2*+e3*+e4*"};
    f.gen_gram = RatMatrix(2, 2);
    f.gen_gram(0, 0) = mod_residue(frac(-23, 30), Rat(2));
    f.gen_gram(1, 1) = mod_residue(frac(-35, 30), Rat(2));
    f.gen_gram(0, 1) = f.gen_gram(1, 0) = mod_residue(frac(-1, 5), Rat(1));
    return f;
}

namespace {

struct ScaledForm {
    long n;        // both cyclic factors are Z/n
    long q1, q2;   // n * q(g_i) mod 2n
    long b12;      // n * b(g_1, g_2) mod n
};

ScaledForm scale_form(const TorsionForm& f) {
    if (f.invariants.size() != 2 || f.invariants[0] != f.invariants[1])
        throw std::invalid_argument("form is not homogeneous of rank 2");
    if (!f.invariants[0].fits_slong_p()) throw std::overflow_error("invariant too large");
    ScaledForm s;
    s.n = f.invariants[0].get_si();
    auto scaled = [&](const Rat& v, long modulus) {
        Rat t = v * s.n;
        if (!is_integer(t)) throw std::invalid_argument("form value does not scale integrally");
        return to_long(Rat(mod_residue(t, Rat(modulus))));
    };
    s.q1 = scaled(f.gen_gram(0, 0), 2 * s.n);
    s.q2 = scaled(f.gen_gram(1, 1), 2 * s.n);
    s.b12 = scaled(f.gen_gram(0, 1), s.n);
    return s;
}

}  // namespace

QuadCongruence derive_isometry_congruence(const TorsionForm& target_form,
                                          const TorsionForm& image_form) {
    ScaledForm img = scale_form(image_form);
    ScaledForm tgt = scale_form(target_form);
    if (img.n != tgt.n) throw std::invalid_argument("discriminant group mismatch");
    // q(a g1 + b g2) = q1 a^2 + q2 b^2 + 2 b12 ab, all mod 2Z, times n.
    return QuadCongruence{img.q1, img.q2, (2 * img.b12) % (2 * img.n), tgt.q1, 2 * img.n};
}

CongruenceCount congruence_solution_count(const QuadCongruence& c) {
    if (c.modulus <= 0) throw std::invalid_argument("modulus must be positive");
    CongruenceCount res;
    const long mod = c.modulus;
    const long target = ((c.target % mod) + mod) % mod;
    for (long a = 0; a < mod; ++a)
        for (long b = 0; b < mod; ++b) {
            long v = ((c.a2 * a * a + c.b2 * b * b + c.ab * a * b) % mod + mod) % mod;
            if (v == target) {
                ++res.count;
                if (!res.witness) res.witness = {a, b};
            }
        }
    return res;
}

std::vector<std::array<long, 4>> exhaustive_isometry_search(const TorsionForm& from,
                                                            const TorsionForm& to) {
    ScaledForm src = scale_form(from);
    ScaledForm dst = scale_form(to);
    if (src.n != dst.n) throw std::invalid_argument("discriminant group mismatch");
    const long n = src.n, two_n = 2 * n;

    auto q = [&](long a, long b) {
        return ((dst.q1 * a * a + dst.q2 * b * b + 2 * dst.b12 * a * b) % two_n + two_n) % two_n;
    };
    auto bil = [&](long a, long b, long c, long d) {
        return ((dst.q1 * a * c + dst.q2 * b * d + dst.b12 * (a * d + b * c)) % n + n) % n;
    };
    const long want_q1 = ((src.q1 % two_n) + two_n) % two_n;
    const long want_q2 = ((src.q2 % two_n) + two_n) % two_n;
    const long want_b = ((src.b12 % n) + n) % n;

    std::vector<std::array<long, 4>> found;
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
            if (q(a, b) != want_q1) continue;
            for (long c = 0; c < n; ++c)
                for (long d = 0; d < n; ++d) {
                    if (std::gcd(((a * d - b * c) % n + n) % n, n) != 1) continue;  // bijective
                    if (q(c, d) != want_q2) continue;
                    if (bil(a, b, c, d) != want_b) continue;
                    found.push_back({a, b, c, d});
                }
        }
    return found;
}

bool isometry_set_is_group(const std::vector<std::array<long, 4>>& isometries, long modulus) {
    if (isometries.empty()) return false;
    std::set<std::array<long, 4>> s(isometries.begin(), isometries.end());
    if (!s.count({1, 0, 0, 1})) return false;
    for (const auto& x : isometries)
        for (const auto& y : isometries) {
            // Composition of generator images: apply y, then x.
            std::array<long, 4> z{(y[0] * x[0] + y[1] * x[2]) % modulus,
                                  (y[0] * x[1] + y[1] * x[3]) % modulus,
                                  (y[2] * x[0] + y[3] * x[2]) % modulus,
                                  (y[2] * x[1] + y[3] * x[3]) % modulus};
            if (!s.count(z)) return false;
        }
    return true;  // finite, closed, contains identity: a group
}

}  // namespace k3a5
