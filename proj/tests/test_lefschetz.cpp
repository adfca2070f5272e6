#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <utility>

#include "k3a5/lefschetz.hpp"

using namespace k3a5;

TEST_CASE("nikulin fixed point counts") {
    long expected[] = {8, 6, 4, 4, 2, 3, 2};
    for (int order = 2; order <= 8; ++order)
        CHECK(nikulin_fixed_point_count(order) == expected[order - 2]);
    CHECK_THROWS_AS(nikulin_fixed_point_count(1), std::invalid_argument);
    CHECK_THROWS_AS(nikulin_fixed_point_count(9), std::invalid_argument);
}

TEST_CASE("point type index sets match the quoted lists") {
    CHECK(point_type_index_set(3, 5) == std::vector<long>{1, 2, 3, 4, 11, 12});
    CHECK(point_type_index_set(4, 5) == std::vector<long>{1, 2, 3, 4, 6, 7, 16, 17});
    CHECK(point_type_index_set(4, 3) == std::vector<long>{1, 2, 4, 10});
    CHECK_THROWS_AS(point_type_index_set(4, 2), std::invalid_argument);  // gcd = 2
    CHECK_THROWS_AS(point_type_index_set(3, 1), std::invalid_argument);
}

TEST_CASE("index set is closed under the pairing involution") {
    for (auto [i, k] : {std::pair<int, int>{3, 5}, {4, 5}, {4, 3}, {3, 7}, {5, 4}}) {
        long n = static_cast<long>(i) * k;
        auto idx = point_type_index_set(i, k);
        std::set<long> reps(idx.begin(), idx.end());
        for (long r : idx) {
            long partner = ((-(k + r)) % n + n) % n;
            CHECK(partner % k != 0);
            CHECK(reps.count(std::min(r, partner)) == 1);
            CHECK(r <= partner);
        }
    }
}

TEST_CASE("point types carry valid tangent eigenvalue pairs") {
    for (auto [i, k] : {std::pair<int, int>{3, 5}, {4, 5}, {4, 3}}) {
        unsigned long n = static_cast<unsigned long>(i) * k;
        CycloNumber one = CycloNumber::from_rational(n, Rat(1));
        for (const PointType& p : point_types(i, k)) {
            auto [a, b] = p.tangent_eigenvalues();
            CHECK(!(a == one));
            CHECK(!(b == one));
            CHECK(a * b == CycloNumber::zeta(n, k));  // determinant is the 2-form multiplier
        }
    }
}

TEST_CASE("mixed-order systems have phi(kI) equations") {
    CHECK(build_mixed_order_system(3, 5).coeffs.rows() == 8);
    CHECK(build_mixed_order_system(4, 5).coeffs.rows() == 8);
    CHECK(build_mixed_order_system(4, 3).coeffs.rows() == 4);
}

TEST_CASE("solution sets of the three mixed systems") {
    SUBCASE("(3,5): unique [1,0,1,1,0,1]") {
        auto sys = build_mixed_order_system(3, 5);
        auto sols = enumerate_nonnegative_solutions(sys, nikulin_fixed_point_count(5));
        REQUIRE(sols.size() == 1);
        CHECK(sols[0].counts == std::vector<long>{1, 0, 1, 1, 0, 1});
        CHECK(sols[0].total() == 4);
        CHECK(satisfies_lefschetz_identity(sys, sols[0]));
    }
    SUBCASE("(4,5): unique [1,1,0,0,1,0,0,1]") {
        auto sys = build_mixed_order_system(4, 5);
        auto sols = enumerate_nonnegative_solutions(sys, nikulin_fixed_point_count(5));
        REQUIRE(sols.size() == 1);
        CHECK(sols[0].counts == std::vector<long>{1, 1, 0, 0, 1, 0, 0, 1});
        CHECK(sols[0].total() == 4);
        CHECK(satisfies_lefschetz_identity(sys, sols[0]));
    }
    SUBCASE("(4,3): exactly four solutions") {
        auto sys = build_mixed_order_system(4, 3);
        auto sols = enumerate_nonnegative_solutions(sys, nikulin_fixed_point_count(3));
        REQUIRE(sols.size() == 4);
        std::set<std::vector<long>> got;
        std::multiset<long> totals;
        for (const auto& s : sols) {
            got.insert(s.counts);
            totals.insert(s.total());
            CHECK(satisfies_lefschetz_identity(sys, s));
            CHECK(s.total() <= nikulin_fixed_point_count(3));
        }
        CHECK(got == std::set<std::vector<long>>{
                         {3, 0, 0, 1}, {1, 0, 1, 0}, {2, 1, 2, 1}, {0, 1, 3, 0}});
        CHECK(totals == std::multiset<long>{2, 4, 4, 6});
    }
}

TEST_CASE("plug-back rejects wrong count vectors") {
    auto sys = build_mixed_order_system(3, 5);
    FixedPointSolution wrong{{1, 0, 1, 1, 0, 2}};
    CHECK(!satisfies_lefschetz_identity(sys, wrong));
    CHECK_THROWS_AS(satisfies_lefschetz_identity(sys, FixedPointSolution{{1, 2}}),
                    std::invalid_argument);
}

TEST_CASE("pure-order relations emerge from the solver") {
    PureOrderRelation r3 = pure_order_relation(3);
    CHECK(r3.offset == 3);
    CHECK(r3.slope == 1);
    CHECK(r3.n_min == -3);
    CHECK(r3.n_max == 6);

    PureOrderRelation r4 = pure_order_relation(4);
    CHECK(r4.offset == 4);
    CHECK(r4.slope == 2);
    CHECK(r4.n_min == -2);
    CHECK(r4.n_max == 4);
    // n = 0 gives m = 4 and chi = 4
    CHECK(euler_number(r4.offset, 0) == 4);

    CHECK_THROWS_AS(pure_order_relation(5), std::invalid_argument);
}

TEST_CASE("euler number") {
    CHECK(euler_number(6, 1) == 8);
    CHECK(euler_number(0, 0) == 0);
    CHECK(euler_number(4, 0) == 4);
    CHECK(euler_number(2, -1) == 0);
    CHECK_THROWS_AS(euler_number(-1, 0), std::domain_error);
}

TEST_CASE("solutions respect the symplectic-power bound") {
    for (auto [i, k] : {std::pair<int, int>{3, 5}, {4, 5}, {4, 3}}) {
        auto sys = build_mixed_order_system(i, k);
        long bound = nikulin_fixed_point_count(k);
        for (const auto& s : enumerate_nonnegative_solutions(sys, bound)) {
            CHECK(s.total() <= bound);
            for (long c : s.counts) CHECK(c >= 0);
        }
    }
}
