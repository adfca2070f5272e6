#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "k3a5/lattice.hpp"

using namespace k3a5;

namespace {

GramLattice l0() { return GramLattice::diagonal({"C", "D"}, {Int(12), Int(-12)}); }
GramLattice u6() { return GramLattice::hyperbolic("u1", "u2", Int(6)); }
GramLattice t2m(long m) {
    return GramLattice::diagonal({"t1", "t2"}, {Int(2 * m), Int(2 * m)});
}

}  // namespace

TEST_CASE("gram lattice basics") {
    CHECK(l0().determinant() == -144);
    CHECK(u6().determinant() == -36);
    CHECK(t2m(5).determinant() == 100);
    CHECK(l0().is_even());
    CHECK(u6().is_even());
    CHECK(direct_sum(u6(), t2m(5)).determinant() == -3600);
    IntMatrix bad(2, 2);
    bad(0, 1) = 1;
    CHECK_THROWS_AS(GramLattice({"a", "b"}, bad), std::invalid_argument);
}

TEST_CASE("discriminant groups of the fixture lattices") {
    SUBCASE("diag(12,-12) -> (Z/12)^2") {
        TorsionForm f = discriminant_group(l0());
        CHECK(f.invariants == std::vector<Int>{12, 12});
        CHECK(f.order() == 144);
    }
    SUBCASE("U(6) -> (Z/6)^2") {
        TorsionForm f = discriminant_group(u6());
        CHECK(f.invariants == std::vector<Int>{6, 6});
        CHECK(f.order() == 36);
    }
    SUBCASE("diag(10,10) -> (Z/10)^2 with q = 1/10 on t_i/10") {
        GramLattice t = t2m(5);
        TorsionForm f = discriminant_group(t);
        CHECK(f.invariants == std::vector<Int>{10, 10});
        DualVector gen1{{frac(1, 10), Rat(0)}};
        DualVector gen2{{Rat(0), frac(1, 10)}};
        TorsionForm g = torsion_form_on_generators(t, {gen1, gen2}, {"t1/10", "t2/10"});
        CHECK(g.gen_gram(0, 0) == frac(1, 10));
        CHECK(g.gen_gram(1, 1) == frac(1, 10));
        CHECK(g.gen_gram(0, 1) == Rat(0));
    }
    SUBCASE("degenerate lattice is rejected") {
        CHECK_THROWS_AS(discriminant_group(GramLattice::diagonal({"a"}, {Int(0)})),
                        std::domain_error);
    }
}

TEST_CASE("discriminant group order equals |det| on random even lattices") {
    std::mt19937_64 rng(20240915);
    std::uniform_int_distribution<long> entry(-6, 6);
    int built = 0;
    while (built < 40) {
        std::size_t n = 2 + rng() % 2;  // rank 2 or 3
        IntMatrix g(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            g(i, i) = 2 * entry(rng);
            for (std::size_t j = i + 1; j < n; ++j) g(i, j) = g(j, i) = entry(rng);
        }
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i + 1));
        GramLattice l(labels, g);
        if (l.determinant() == 0) continue;
        ++built;
        TorsionForm f = discriminant_group(l);
        CHECK(f.order() == abs(l.determinant()));

        // q/b polarization on all generator pairs:
        // q(x+y) - q(x) - q(y) = 2 b(x,y) (mod 2Z)
        for (std::size_t i = 0; i < f.generators.size(); ++i)
            for (std::size_t j = 0; j < f.generators.size(); ++j) {
                if (i == j) continue;
                DualVector sum = add(f.generators[i], f.generators[j]);
                Rat lhs = mod_residue(inner(l, sum, sum) - inner(l, f.generators[i], f.generators[i]) -
                                          inner(l, f.generators[j], f.generators[j]),
                                      Rat(2));
                Rat rhs = mod_residue(Rat(2) * inner(l, f.generators[i], f.generators[j]), Rat(2));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("sublattice index") {
    IntMatrix emb(2, 2);
    emb(0, 0) = 1; emb(0, 1) = 1;
    emb(1, 0) = 1; emb(1, 1) = -1;
    CHECK(sublattice_index(l0(), u6(), emb) == 2);
    CHECK(sublattice_index(u6(), u6(), IntMatrix::identity(2)) == 1);
    // wrong Gram relation is rejected
    CHECK_THROWS_AS(sublattice_index(u6(), l0(), emb), std::invalid_argument);
    CHECK_THROWS_AS(sublattice_index(l0(), direct_sum(u6(), t2m(5)), emb), std::invalid_argument);
}

TEST_CASE("even overlattice candidates") {
    SUBCASE("diag(12,-12): only (C+D)/2 survives") {
        auto cands = even_overlattice_candidates(l0());
        REQUIRE(cands.size() == 1);
        CHECK(cands[0].coords == std::vector<Rat>{frac(1, 2), frac(1, 2)});
        // the rejected vectors violate evenness
        DualVector c_half{{frac(1, 2), Rat(0)}}, d_half{{Rat(0), frac(1, 2)}};
        CHECK(to_int(inner(l0(), c_half, c_half)) % 2 != 0);
        CHECK(to_int(inner(l0(), d_half, d_half)) % 2 != 0);
    }
    SUBCASE("U(6) + diag(20,20) with the primitivity split: the four glue candidates") {
        GramLattice sum = direct_sum(u6(), t2m(10));
        auto cands = even_overlattice_candidates(sum, 2);
        std::set<std::vector<Rat>> got;
        for (const auto& c : cands) got.insert(c.coords);
        Rat h = frac(1, 2), z(0);
        CHECK(got == std::set<std::vector<Rat>>{
                         {h, h, h, z},    // theta^1 = (u1+u2)/2 + t1/2
                         {h, h, z, h},    // theta^2
                         {h, z, h, h},    // theta_1 = u1/2 + (t1+t2)/2
                         {z, h, h, h}});  // theta_2
    }
    SUBCASE("U(6) + diag(10,10): only the full half-sum") {
        GramLattice sum = direct_sum(u6(), t2m(5));
        auto cands = even_overlattice_candidates(sum, 2);
        REQUIRE(cands.size() == 1);
        CHECK(cands[0].coords == std::vector<Rat>(4, frac(1, 2)));
    }
    SUBCASE("diag(12,-12) + diag(10,10): exactly theta_1, theta_2") {
        GramLattice sum = direct_sum(l0(), t2m(5));
        auto cands = even_overlattice_candidates(sum, 2);
        std::set<std::vector<Rat>> got;
        for (const auto& c : cands) got.insert(c.coords);
        Rat h = frac(1, 2), z(0);
        CHECK(got == std::set<std::vector<Rat>>{{h, z, h, h}, {z, h, h, h}});
    }
    SUBCASE("candidates all have even square") {
        for (const auto& c : even_overlattice_candidates(direct_sum(u6(), t2m(10)))) {
            Rat n = inner(direct_sum(u6(), t2m(10)), c, c);
            CHECK(is_integer(n));
            CHECK(to_int(n) % 2 == 0);
        }
    }
}

TEST_CASE("glue feasibility in the three determinant cases") {
    SUBCASE("order 1 is always the trivial glue") {
        GlueSearch s = glue_feasibility(u6(), t2m(5), 1);
        REQUIRE(s.groups.size() == 1);
        CHECK(s.groups[0].order() == 1);
    }
    SUBCASE("case S = U(6), T = diag(20,20), d = 4: empty, 13/2 obstruction") {
        GlueSearch s = glue_feasibility(u6(), t2m(10), 4);
        CHECK(s.groups.empty());
        bool found = false;
        for (const std::string& o : s.obstructions)
            if (o.find("13/2") != std::string::npos) found = true;
        CHECK(found);
        // the obstruction value itself
        GramLattice sum = direct_sum(u6(), t2m(10));
        DualVector theta_up{{frac(1, 2), frac(1, 2), frac(1, 2), Rat(0)}};
        DualVector theta_down{{frac(1, 2), Rat(0), frac(1, 2), frac(1, 2)}};
        CHECK(inner(sum, theta_up, theta_down) == frac(13, 2));
    }
    SUBCASE("case S = diag(12,-12), T = diag(10,10), d = 4: empty") {
        GlueSearch s = glue_feasibility(l0(), t2m(5), 4);
        CHECK(s.groups.empty());
        // theta_1 - theta_2 is purely algebraic, so the pair cannot glue
        GramLattice sum = direct_sum(l0(), t2m(5));
        auto cands = even_overlattice_candidates(sum, 2);
        REQUIRE(cands.size() == 2);
        DualVector diff = reduce_mod_lattice(add(cands[0], cands[1]));
        bool t_part_zero = diff.coords[2] == 0 && diff.coords[3] == 0;
        CHECK(t_part_zero);
    }
    SUBCASE("case S = U(6), T = diag(10,10), d = 2: unique glue") {
        GlueSearch s = glue_feasibility(u6(), t2m(5), 2);
        REQUIRE(s.groups.size() == 1);
        CHECK(s.groups[0].order() == 2);
        CHECK(s.groups[0].generators[0].coords == std::vector<Rat>(4, frac(1, 2)));
    }
    SUBCASE("glue orders outside {1,2,4} are rejected") {
        CHECK_THROWS_AS(glue_feasibility(u6(), t2m(5), 3), std::invalid_argument);
    }
}

TEST_CASE("a non-even glue vector cannot build an overlattice") {
    // C/2 has odd square, so the extension is not an even lattice.
    DualVector bad{{frac(1, 2), Rat(0), Rat(0), Rat(0)}};
    DualVector zero{{Rat(0), Rat(0), Rat(0), Rat(0)}};
    GlueGroup g{{bad}, {zero, bad}};
    CHECK_THROWS_AS(build_overlattice(l0(), t2m(5), g), std::invalid_argument);
}

TEST_CASE("overlattice of the unique glue") {
    GlueSearch s = glue_feasibility(u6(), t2m(5), 2);
    Overlattice ov = build_overlattice(u6(), t2m(5), s.groups[0]);

    CHECK(abs(ov.lattice.determinant()) == 900);  // 3600 / 2^2
    CHECK(ov.lattice.is_even());

    TorsionForm disc = overlattice_discriminant(ov);
    CHECK(disc.invariants == std::vector<Int>{30, 30});

    // delta_1 = (1/10) t2 + (1/6)(2 u1 + u2), delta_2 = (1/10) t1 + (1/6) u2
    DualVector d1{{frac(1, 3), frac(1, 6), Rat(0), frac(1, 10)}};
    DualVector d2{{Rat(0), frac(1, 6), frac(1, 10), Rat(0)}};

    // dual membership against the overlattice basis and the glue vector
    GramLattice ambient = ov.ambient;
    DualVector theta{{frac(1, 2), frac(1, 2), frac(1, 2), frac(1, 2)}};
    for (const DualVector* v : {&d1, &d2}) {
        CHECK(is_integer(inner(ambient, *v, theta)));
        for (std::size_t i = 0; i < 4; ++i) {
            DualVector basis_vec{{Rat(0), Rat(0), Rat(0), Rat(0)}};
            basis_vec.coords[i] = 1;
            CHECK(is_integer(inner(ambient, *v, basis_vec)));
        }
    }

    TorsionForm form = overlattice_form_on(ov, {d1, d2}, {"delta1", "delta2"});
    CHECK(form.invariants == std::vector<Int>{30, 30});
    CHECK(form.gen_gram(0, 0) == frac(23, 30));
    CHECK(form.gen_gram(0, 1) == frac(1, 3));
    CHECK(form.gen_gram(1, 0) == frac(1, 3));
    CHECK(form.gen_gram(1, 1) == frac(1, 10));
}

TEST_CASE("trivial glue keeps the product discriminant") {
    GlueSearch s = glue_feasibility(u6(), t2m(5), 1);
    Overlattice ov = build_overlattice(u6(), t2m(5), s.groups[0]);
    TorsionForm f = overlattice_discriminant(ov);
    CHECK(f.order() == 3600);
    CHECK(f.invariants == std::vector<Int>{2, 2, 30, 30});  // (Z/6)^2 + (Z/10)^2
}

TEST_CASE("rebase to the U(6) basis") {
    RatMatrix rows(2, 2);
    rows(0, 0) = frac(1, 2); rows(0, 1) = frac(1, 2);
    rows(1, 0) = frac(1, 2); rows(1, 1) = frac(-1, 2);
    GramLattice rb = rebase(l0(), rows, {"u1", "u2"});
    CHECK(rb.gram == u6().gram);
    // a non-integral basis change is rejected
    RatMatrix bad(2, 2);
    bad(0, 0) = frac(1, 3); bad(1, 1) = 1;
    CHECK_THROWS_AS(rebase(l0(), bad, {"x", "y"}), std::domain_error);
}

TEST_CASE("fixture serialization") {
    SUBCASE("gram lattices round-trip and pin the fixtures bit-exactly") {
        for (const GramLattice& l : {l0(), u6(), t2m(5), direct_sum(u6(), t2m(5))}) {
            GramLattice back = parse_gram_lattice(serialize(l));
            CHECK(back.labels == l.labels);
            CHECK(back.gram == l.gram);
            CHECK(serialize(back) == serialize(l));
        }
        CHECK(serialize(u6()) ==
              R"({"labels":["u1","u2"],"gram":[["0","6"],["6","0"]]})");
    }
    SUBCASE("dual vectors as numerator/denominator pairs") {
        DualVector d1{{frac(1, 3), frac(1, 6), Rat(0), frac(1, 10)}};
        CHECK(serialize(d1) ==
              R"({"coords":[["1","3"],["1","6"],["0","1"],["1","10"]]})");
        CHECK(parse_dual_vector(serialize(d1)) == d1);
    }
    SUBCASE("glue groups") {
        GlueSearch s = glue_feasibility(u6(), t2m(5), 2);
        GlueGroup back = parse_glue_group(serialize(s.groups[0]));
        CHECK(back.generators == s.groups[0].generators);
        CHECK(back.elements == s.groups[0].elements);
    }
}

TEST_CASE("order-4 rotation fixed part") {
    auto f5 = order4_rotation_fixed_part(5);
    CHECK(f5 == std::vector<std::pair<long, long>>{{0, 0}, {5, 5}});
    auto f1 = order4_rotation_fixed_part(1);
    CHECK(f1 == std::vector<std::pair<long, long>>{{0, 0}, {1, 1}});
    for (long m : {1L, 2L, 3L, 5L, 10L})
        for (auto [a, b] : order4_rotation_fixed_part(m)) {
            CHECK((2 * a) % (2 * m) == 0);  // 2-elementary
            CHECK((2 * b) % (2 * m) == 0);
        }
}
