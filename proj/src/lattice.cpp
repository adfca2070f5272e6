#include "k3a5/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace k3a5 {

GramLattice::GramLattice(std::vector<std::string> basis_labels, IntMatrix gram_matrix)
    : labels(std::move(basis_labels)), gram(std::move(gram_matrix)) {
    if (gram.rows() != gram.cols() || gram.rows() != labels.size())
        throw std::invalid_argument("Gram matrix shape does not match basis");
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = i + 1; j < gram.cols(); ++j)
            if (gram(i, j) != gram(j, i)) throw std::invalid_argument("Gram matrix not symmetric");
}

bool GramLattice::is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (gram(i, i) % 2 != 0) return false;
    return true;
}

Int GramLattice::determinant() const { return k3a5::determinant(gram); }

GramLattice GramLattice::diagonal(std::vector<std::string> basis_labels, std::vector<Int> entries) {
    IntMatrix g(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = entries[i];
    return GramLattice(std::move(basis_labels), std::move(g));
}

GramLattice GramLattice::hyperbolic(std::string l1, std::string l2, Int scale) {
    IntMatrix g(2, 2);
    g(0, 1) = scale;
    g(1, 0) = scale;
    return GramLattice({std::move(l1), std::move(l2)}, std::move(g));
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
    std::vector<std::string> labels = a.labels;
    labels.insert(labels.end(), b.labels.begin(), b.labels.end());
    IntMatrix g(a.rank() + b.rank(), a.rank() + b.rank());
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j) g(i, j) = a.gram(i, j);
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.rank(); ++j) g(a.rank() + i, a.rank() + j) = b.gram(i, j);
    return GramLattice(std::move(labels), std::move(g));
}

Rat inner(const GramLattice& l, const DualVector& x, const DualVector& y) {
    if (x.coords.size() != l.rank() || y.coords.size() != l.rank())
        throw std::invalid_argument("vector length does not match lattice rank");
    Rat acc(0);
    for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = 0; j < l.rank(); ++j)
            acc += x.coords[i] * Rat(l.gram(i, j)) * y.coords[j];
    return acc;
}

bool is_lattice_vector(const DualVector& x) {
    for (const Rat& c : x.coords)
        if (!is_integer(c)) return false;
    return true;
}

bool in_dual(const GramLattice& l, const DualVector& x) {
    for (std::size_t i = 0; i < l.rank(); ++i) {
        Rat acc(0);
        for (std::size_t j = 0; j < l.rank(); ++j) acc += Rat(l.gram(i, j)) * x.coords[j];
        if (!is_integer(acc)) return false;
    }
    return true;
}

DualVector add(const DualVector& x, const DualVector& y) {
    if (x.coords.size() != y.coords.size()) throw std::invalid_argument("vector length mismatch");
    DualVector r = x;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += y.coords[i];
    return r;
}

DualVector reduce_mod_lattice(const DualVector& x) {
    DualVector r = x;
    for (Rat& c : r.coords) c = mod_residue(c, Rat(1));
    return r;
}

std::string render(const GramLattice& l, const DualVector& x) {
    std::string s;
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        const Rat& c = x.coords[i];
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        Rat a = abs(c);
        if (a != 1) s += to_string(a) + "*";
        s += l.labels[i];
    }
    return s.empty() ? "0" : s;
}

Int TorsionForm::order() const {
    Int n(1);
    for (const Int& d : invariants) n *= d;
    return n;
}

namespace {

RatMatrix normalized_generator_gram(const GramLattice& l, const std::vector<DualVector>& gens) {
    RatMatrix g(gens.size(), gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            Rat v = inner(l, gens[i], gens[j]);
            g(i, j) = i == j ? mod_residue(v, Rat(2)) : mod_residue(v, Rat(1));
        }
    return g;
}

// Coordinates of a dual vector in Z^n / G Z^n, diagonalized through the SNF
// of the Gram matrix: x -> U * (G x) read modulo the invariant factors.
std::vector<Int> snf_coordinates(const GramLattice& l, const SnfResult& snf, const DualVector& x) {
    std::vector<Rat> gx = matvec(to_rational(l.gram), x.coords);
    std::vector<Int> w(gx.size());
    for (std::size_t i = 0; i < gx.size(); ++i) w[i] = to_int(gx[i]);  // throws if not dual
    std::vector<Int> y(w.size(), Int(0));
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = 0; j < w.size(); ++j) y[i] += snf.u(i, j) * w[j];
        const Int& d = snf.d(i, i);
        if (d != 0) {
            mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), d.get_mpz_t());
        } else if (y[i] != 0) {
            throw std::logic_error("dual vector escapes the discriminant group");
        }
    }
    return y;
}

Int element_order(const std::vector<Int>& y, const std::vector<Int>& diag) {
    Int ord(1);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (diag[i] == 0 || y[i] == 0) continue;
        Int g = gcd(y[i], diag[i]);
        ord = lcm(ord, Int(diag[i] / g));
    }
    return ord;
}

}  // namespace

TorsionForm discriminant_group(const GramLattice& l) {
    Int det = l.determinant();
    if (det == 0) throw std::domain_error("degenerate lattice has no discriminant group");
    SnfResult snf = smith_normal_form(l.gram);

    // Z^n/GZ^n = (+) Z/d_i via w -> U w; the factor-i generator pulls back to
    // U^{-1} e_i, whose dual-lattice representative is G^{-1} U^{-1} e_i.
    RatMatrix uinv = inverse(to_rational(snf.u));
    RatMatrix ginv = inverse(to_rational(l.gram));

    TorsionForm form;
    std::vector<DualVector> gens;
    for (std::size_t i = 0; i < l.rank(); ++i) {
        const Int& d = snf.d(i, i);
        if (d <= 1) continue;
        std::vector<Rat> w(l.rank(), Rat(0));
        for (std::size_t r = 0; r < l.rank(); ++r) w[r] = uinv(r, i);
        DualVector gen{matvec(ginv, w)};
        gens.push_back(reduce_mod_lattice(gen));
        form.invariants.push_back(d);
        form.generator_names.push_back("g" + std::to_string(form.invariants.size()));
    }
    form.generators = gens;
    form.gen_gram = normalized_generator_gram(l, gens);
    return form;
}

TorsionForm torsion_form_on_generators(const GramLattice& l, std::vector<DualVector> gens,
                                       std::vector<std::string> names) {
    if (names.size() != gens.size()) throw std::invalid_argument("generator name count mismatch");
    for (const DualVector& g : gens)
        if (!in_dual(l, g)) throw std::invalid_argument("generator is not in the dual lattice");

    SnfResult snf = smith_normal_form(l.gram);
    std::vector<Int> diag;
    for (std::size_t i = 0; i < l.rank(); ++i) diag.push_back(snf.d(i, i));

    TorsionForm form;
    std::vector<std::vector<Int>> coords;
    for (const DualVector& g : gens) {
        std::vector<Int> y = snf_coordinates(l, snf, g);
        form.invariants.push_back(element_order(y, diag));
        coords.push_back(std::move(y));
    }

    // The generated subgroup must be all of A_L and split as the direct sum
    // of the cyclic factors <g_i> (size check does both at once).
    std::set<std::vector<Int>> span;
    std::vector<Int> counters(gens.size(), Int(0));
    for (;;) {
        std::vector<Int> v(l.rank(), Int(0));
        for (std::size_t g = 0; g < gens.size(); ++g)
            for (std::size_t i = 0; i < l.rank(); ++i) v[i] += counters[g] * coords[g][i];
        for (std::size_t i = 0; i < l.rank(); ++i)
            if (diag[i] != 0) mpz_fdiv_r(v[i].get_mpz_t(), v[i].get_mpz_t(), diag[i].get_mpz_t());
        span.insert(v);
        std::size_t g = 0;
        while (g < gens.size() && ++counters[g] >= form.invariants[g]) counters[g++] = 0;
        if (g == gens.size()) break;
    }
    Int expected(1);
    for (const Int& o : form.invariants) expected *= o;
    if (Int(span.size()) != expected)
        throw std::invalid_argument("generators do not split the discriminant group");
    if (expected != abs(l.determinant()))
        throw std::invalid_argument("generators do not generate the discriminant group");

    form.generator_names = std::move(names);
    form.generators = std::move(gens);
    form.gen_gram = normalized_generator_gram(l, form.generators);
    return form;
}

Int sublattice_index(const GramLattice& sub, const GramLattice& sup, const IntMatrix& embedding) {
    if (sub.rank() != sup.rank()) throw std::invalid_argument("sublattice rank mismatch");
    if (embedding.rows() != sub.rank() || embedding.cols() != sup.rank())
        throw std::invalid_argument("embedding matrix shape mismatch");
    IntMatrix check = embedding * sup.gram * embedding.transpose();
    if (!(check == sub.gram))
        throw std::invalid_argument("embedding does not carry the sublattice Gram matrix");
    Int idx = abs(determinant(embedding));
    if (idx == 0) throw std::invalid_argument("embedding is not of finite index");
    if (abs(sub.determinant()) != idx * idx * abs(sup.determinant()))
        throw std::logic_error("determinant law violated");
    return idx;
}

std::vector<DualVector> even_overlattice_candidates(const GramLattice& l,
                                                    std::optional<std::size_t> primitive_split) {
    const std::size_t n = l.rank();
    std::vector<DualVector> out;
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        if (primitive_split) {
            unsigned long first = mask & ((1ul << *primitive_split) - 1);
            if (first == 0 || first == mask) continue;
        }
        DualVector theta;
        theta.coords.assign(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) theta.coords[i] = frac(1, 2);
        if (!in_dual(l, theta)) continue;
        Rat norm = inner(l, theta, theta);
        if (!is_integer(norm) || to_int(norm) % 2 != 0) continue;
        out.push_back(std::move(theta));
    }
    return out;
}

GlueSearch glue_feasibility(const GramLattice& s, const GramLattice& t, int required_d) {
    if (required_d != 1 && required_d != 2 && required_d != 4)
        throw std::invalid_argument("glue order must be 1, 2 or 4");
    GramLattice sum = direct_sum(s, t);
    std::vector<DualVector> cands = even_overlattice_candidates(sum, s.rank());

    GlueSearch search;
    DualVector zero;
    zero.coords.assign(sum.rank(), Rat(0));

    if (required_d == 1) {
        search.groups.push_back(GlueGroup{{}, {zero}});
        return search;
    }
    if (required_d == 2) {
        for (const DualVector& theta : cands)
            search.groups.push_back(GlueGroup{{theta}, {zero, theta}});
        return search;
    }

    std::set<std::vector<DualVector>> seen;
    auto candidate_set = std::set<DualVector>(cands.begin(), cands.end());
    for (std::size_t i = 0; i < cands.size(); ++i)
        for (std::size_t j = i + 1; j < cands.size(); ++j) {
            Rat pairing = inner(sum, cands[i], cands[j]);
            if (!is_integer(pairing)) {
                search.obstructions.push_back("(" + render(sum, cands[i]) + ") . (" +
                                              render(sum, cands[j]) + ") = " + to_string(pairing) +
                                              " is not an integer");
                continue;
            }
            DualVector third = reduce_mod_lattice(add(cands[i], cands[j]));
            if (!candidate_set.count(third)) {
                search.obstructions.push_back("sum " + render(sum, third) +
                                              " is not an admissible glue vector");
                continue;
            }
            std::vector<DualVector> elems{zero, cands[i], cands[j], third};
            std::sort(elems.begin(), elems.end());
            if (seen.insert(elems).second)
                search.groups.push_back(GlueGroup{{cands[i], cands[j]}, elems});
        }
    return search;
}

Overlattice build_overlattice(const GramLattice& s, const GramLattice& t, const GlueGroup& glue) {
    GramLattice ambient = direct_sum(s, t);
    const std::size_t n = ambient.rank();

    // Generators of 2L' over Z: 2*(ambient basis) and 2*(glue vectors).
    IntMatrix gens(n + glue.generators.size(), n);
    for (std::size_t i = 0; i < n; ++i) gens(i, i) = 2;
    for (std::size_t g = 0; g < glue.generators.size(); ++g)
        for (std::size_t j = 0; j < n; ++j) {
            Rat scaled = glue.generators[g].coords[j] * 2;
            gens(n + g, j) = to_int(scaled);  // glue vectors are half-integral
        }
    IntMatrix basis2 = hermite_row_basis(gens);
    if (basis2.rows() != n) throw std::logic_error("overlattice basis does not have full rank");

    RatMatrix rows(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows(i, j) = Rat(basis2(i, j)) / 2;

    RatMatrix gram_q = rows * to_rational(ambient.gram) * rows.transpose();
    IntMatrix gram;
    try {
        gram = to_integer(gram_q);
    } catch (const std::domain_error&) {
        throw std::invalid_argument("glue group does not define an integral overlattice");
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("w" + std::to_string(i + 1));
    GramLattice lattice(std::move(labels), std::move(gram));
    if (!lattice.is_even())
        throw std::invalid_argument("glue group does not define an even overlattice");

    Int d = glue.order();
    if (abs(lattice.determinant()) * d * d != abs(ambient.determinant()))
        throw std::logic_error("overlattice determinant law violated");
    return Overlattice{std::move(lattice), std::move(rows), std::move(ambient)};
}

TorsionForm overlattice_discriminant(const Overlattice& ov) {
    return discriminant_group(ov.lattice);
}

TorsionForm overlattice_form_on(const Overlattice& ov, std::vector<DualVector> ambient_gens,
                                std::vector<std::string> names) {
    // Convert ambient coordinates c to overlattice-basis coordinates y with
    // c = R^T y; pairings are unchanged.
    RatMatrix conv = inverse(ov.basis_rows.transpose());
    std::vector<DualVector> gens;
    for (const DualVector& g : ambient_gens) gens.push_back(DualVector{matvec(conv, g.coords)});
    return torsion_form_on_generators(ov.lattice, std::move(gens), std::move(names));
}

GramLattice rebase(const GramLattice& l, const RatMatrix& new_basis_rows,
                   std::vector<std::string> labels) {
    if (new_basis_rows.rows() != l.rank() || new_basis_rows.cols() != l.rank())
        throw std::invalid_argument("basis change must be square of full rank");
    RatMatrix g = new_basis_rows * to_rational(l.gram) * new_basis_rows.transpose();
    return GramLattice(std::move(labels), to_integer(g));
}

namespace {

nlohmann::ordered_json dual_to_json(const DualVector& v) {
    nlohmann::ordered_json coords = nlohmann::ordered_json::array();
    for (const Rat& c : v.coords)
        coords.push_back({to_string(Int(c.get_num())), to_string(Int(c.get_den()))});
    return coords;
}

DualVector dual_from_json(const nlohmann::json& j) {
    DualVector v;
    for (const auto& pair : j)
        v.coords.push_back(frac(Int(pair.at(0).get<std::string>()),
                                Int(pair.at(1).get<std::string>())));
    return v;
}

}  // namespace

std::string serialize(const GramLattice& l) {
    nlohmann::ordered_json j;
    j["labels"] = l.labels;
    j["gram"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < l.rank(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < l.rank(); ++k) row.push_back(to_string(l.gram(i, k)));
        j["gram"].push_back(std::move(row));
    }
    return j.dump();
}

GramLattice parse_gram_lattice(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    IntMatrix gram(labels.size(), labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t k = 0; k < labels.size(); ++k)
            gram(i, k) = Int(j.at("gram").at(i).at(k).get<std::string>());
    return GramLattice(std::move(labels), std::move(gram));
}

std::string serialize(const DualVector& v) {
    nlohmann::ordered_json j;
    j["coords"] = dual_to_json(v);
    return j.dump();
}

DualVector parse_dual_vector(const std::string& text) {
    return dual_from_json(nlohmann::json::parse(text).at("coords"));
}

std::string serialize(const GlueGroup& g) {
    nlohmann::ordered_json j;
    j["generators"] = nlohmann::ordered_json::array();
    for (const DualVector& v : g.generators) j["generators"].push_back(dual_to_json(v));
    j["elements"] = nlohmann::ordered_json::array();
    for (const DualVector& v : g.elements) j["elements"].push_back(dual_to_json(v));
    return j.dump();
}

GlueGroup parse_glue_group(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    GlueGroup g;
    for (const auto& v : j.at("generators")) g.generators.push_back(dual_from_json(v));
    for (const auto& v : j.at("elements")) g.elements.push_back(dual_from_json(v));
    return g;
}

std::vector<std::pair<long, long>> order4_rotation_fixed_part(long m) {
    if (m < 1) throw std::invalid_argument("scale m must be positive");
    const long mod = 2 * m;
    std::vector<std::pair<long, long>> fixed;
    for (long a = 0; a < mod; ++a)
        for (long b = 0; b < mod; ++b)
            if ((a + b) % mod == 0 && ((a - b) % mod + mod) % mod == 0) fixed.push_back({a, b});
    return fixed;
}

}  // namespace k3a5
