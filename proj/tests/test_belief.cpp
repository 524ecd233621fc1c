#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "evcd/belief.hpp"
#include "evcd/errors.hpp"
#include "test_support.hpp"

using namespace evcd;

namespace {

// bba builder over a full powerset catalog from (set, mass) pairs
Eigen::VectorXd bba(const FocalSetCatalog& cat,
                    std::initializer_list<std::pair<FocalSet, double>> items) {
    Eigen::VectorXd m = Eigen::VectorXd::Zero(cat.size());
    for (auto [s, v] : items) m(cat.index_of(s)) = v;
    return m;
}

}  // namespace

TEST_CASE("catalog ordering and sizes") {
    FocalSetCatalog cat = FocalSetCatalog::full_powerset(3);
    CHECK(cat.size() == 8);
    CHECK(cat.set(0) == 0u);               // {}
    CHECK(cat.set(1) == 0b001u);           // {1}
    CHECK(cat.set(2) == 0b010u);           // {2}
    CHECK(cat.set(3) == 0b100u);           // {3}
    CHECK(cat.set(4) == 0b011u);           // {1,2}
    CHECK(cat.set(5) == 0b101u);           // {1,3}
    CHECK(cat.set(6) == 0b110u);           // {2,3}
    CHECK(cat.set(7) == 0b111u);           // omega
    CHECK(cat.is_full_powerset());

    // lexicographic on member indices, not on bitmask value
    FocalSetCatalog cat4(4, 2);
    CHECK(cat4.set_name(5) == "{1,2}");
    CHECK(cat4.set_name(6) == "{1,3}");
    CHECK(cat4.set_name(7) == "{1,4}");
    CHECK(cat4.set_name(8) == "{2,3}");
    CHECK(cat4.set(cat4.size() - 1) == 0b1111u);  // omega last
    CHECK(cat4.size() == 1 + 4 + 6 + 1);
}

TEST_CASE("pair-restricted catalog at c = 10") {
    FocalSetCatalog cat = FocalSetCatalog::pair_restricted(10);
    CHECK(cat.size() == 1 + 10 + 45 + 1);
    CHECK(cat.set_name(0) == "{}");
    CHECK(cat.set_name(cat.size() - 1) == "{1,2,3,4,5,6,7,8,9,10}");
}

TEST_CASE("bel on hand-built bbas") {
    FocalSetCatalog cat = FocalSetCatalog::full_powerset(2);
    const FocalSet w1 = 0b01, omega = 0b11;
    CHECK(bel(cat, bba(cat, {{omega, 1.0}}), w1) == doctest::Approx(0.0));
    CHECK(bel(cat, bba(cat, {{w1, 1.0}}), w1) == doctest::Approx(1.0));
    Eigen::VectorXd m = bba(cat, {{0u, 0.2}, {w1, 0.3}, {omega, 0.5}});
    CHECK(bel(cat, m, w1) == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("pl on hand-built bbas") {
    FocalSetCatalog cat = FocalSetCatalog::full_powerset(2);
    const FocalSet w1 = 0b01, omega = 0b11;
    CHECK(pl(cat, bba(cat, {{omega, 1.0}}), w1) == doctest::Approx(1.0));
    Eigen::VectorXd m = bba(cat, {{0u, 0.2}, {w1, 0.3}, {omega, 0.5}});
    CHECK(pl(cat, m, w1) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(pl(cat, m, omega) == doctest::Approx(0.8).epsilon(1e-15));  // 1 - m({})
}

TEST_CASE("contour") {
    FocalSetCatalog cat3 = FocalSetCatalog::full_powerset(3);
    Eigen::VectorXd certain = bba(cat3, {{0b010u, 1.0}});
    CHECK(contour(cat3, certain).isApprox(Eigen::Vector3d(0, 1, 0)));
    Eigen::VectorXd vac = bba(cat3, {{0b111u, 1.0}});
    CHECK(contour(cat3, vac).isApprox(Eigen::Vector3d(1, 1, 1)));

    FocalSetCatalog cat2 = FocalSetCatalog::full_powerset(2);
    Eigen::VectorXd m = bba(cat2, {{0u, 0.2}, {0b01u, 0.3}, {0b11u, 0.5}});
    Eigen::VectorXd pl = contour(cat2, m);
    CHECK(pl(0) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(pl(1) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("pignistic") {
    FocalSetCatalog cat = FocalSetCatalog::full_powerset(2);
    Eigen::VectorXd certain = bba(cat, {{0b01u, 1.0}});
    CHECK(pignistic(cat, certain).isApprox(Eigen::Vector2d(1, 0)));
    Eigen::VectorXd vac = bba(cat, {{0b11u, 1.0}});
    CHECK(pignistic(cat, vac).isApprox(Eigen::Vector2d(0.5, 0.5)));
    Eigen::VectorXd m = bba(cat, {{0u, 0.2}, {0b01u, 0.3}, {0b11u, 0.5}});
    Eigen::VectorXd p = pignistic(cat, m);
    CHECK(p(0) == doctest::Approx(0.6875).epsilon(1e-15));
    CHECK(p(1) == doctest::Approx(0.3125).epsilon(1e-15));

    Eigen::VectorXd conflict = bba(cat, {{0u, 1.0}});
    CHECK_THROWS_AS(pignistic(cat, conflict), NumericError);
}

TEST_CASE("hard credal assignment") {
    FocalSetCatalog cat = FocalSetCatalog::full_powerset(2);
    Eigen::MatrixXd m(3, 4);
    // rows aligned with catalog order {}, {1}, {2}, {1,2}
    m << 0.0, 1.0, 0.0, 0.0,   // certain singleton
         0.1, 0.2, 0.1, 0.6,   // pair wins -> imprecise
         0.7, 0.1, 0.1, 0.1;   // outlier (mass on empty), winner by tie-break
    CredalPartition p{cat, m};
    HardCredalAssignment a = hard_credal_assignment(p);
    CHECK(a.set_index[0] == cat.index_of(0b01u));
    CHECK_FALSE(a.imprecise[0]);
    CHECK(a.set_index[1] == cat.index_of(0b11u));
    CHECK(a.imprecise[1]);
    // tie between {1}, {2}, {1,2}: smaller cardinality then catalog order
    CHECK(a.set_index[2] == cat.index_of(0b01u));
    CHECK(a.outlier[2]);
    CHECK_FALSE(a.outlier[0]);
}

TEST_CASE("belief properties against brute-force oracles") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 400; ++trial) {
        const int c = 2 + static_cast<int>(rng() % 4);  // c in [2,5]
        FocalSetCatalog cat = FocalSetCatalog::full_powerset(c);
        Eigen::VectorXd m = evcd_test::random_bba(cat.size(), rng);
        const FocalSet omega = (FocalSet{1} << c) - 1u;
        const FocalSet a = static_cast<FocalSet>(rng()) & omega;

        const double b = bel(cat, m, a);
        const double q = pl(cat, m, a);
        CHECK(b == doctest::Approx(evcd_test::bel_oracle(cat, m, a)).epsilon(1e-12));
        CHECK(q == doctest::Approx(evcd_test::pl_oracle(cat, m, a)).epsilon(1e-12));
        CHECK(b <= q + 1e-12);
        // Bel(A) + Pl(~A) = 1 - m(empty)
        CHECK(b + pl(cat, m, omega & ~a) ==
              doctest::Approx(1.0 - m(0)).epsilon(1e-12));

        Eigen::VectorXd p = pignistic(cat, m);
        CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(p.minCoeff() >= -1e-15);

        Eigen::VectorXd cont = contour(cat, m);
        for (int k = 0; k < c; ++k) CHECK(cont(k) <= 1.0 - m(0) + 1e-12);
    }
}

TEST_CASE("Bayesian bba: contour = pignistic = singleton masses") {
    std::mt19937_64 rng(5);
    FocalSetCatalog cat = FocalSetCatalog::full_powerset(4);
    Eigen::VectorXd m = Eigen::VectorXd::Zero(cat.size());
    Eigen::VectorXd s = evcd_test::random_bba(4, rng);
    for (int k = 0; k < 4; ++k) m(cat.index_of(FocalSet{1} << k)) = s(k);
    CHECK(contour(cat, m).isApprox(s, 1e-14));
    CHECK(pignistic(cat, m).isApprox(s, 1e-14));
}

TEST_CASE("catalog validation") {
    CHECK_THROWS_AS(FocalSetCatalog(0, 1), InputError);
    CHECK_THROWS_AS(FocalSetCatalog(3, 0), InputError);
    CHECK_THROWS_AS(FocalSetCatalog(3, 4), InputError);
    // degenerate one-community frame is allowed for reductions
    CHECK(FocalSetCatalog(1, 1).size() == 2);
}
