#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sectorlens/lp.hpp"
#include "sectorlens/zoo.hpp"

using namespace sectorlens;

namespace {

RMat mat(int rows, int cols, std::initializer_list<Rational> xs) {
    RMat m(rows, cols);
    auto it = xs.begin();
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            m(r, c) = *it++;
        }
    }
    return m;
}

RVec vec(std::initializer_list<Rational> xs) {
    RVec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const auto& x : xs) {
        v[i++] = x;
    }
    return v;
}

LPProblem two_var(RVec objective, RMat a, RVec b) {
    LPProblem p;
    p.n_vars = 2;
    p.objective = std::move(objective);
    p.a_ub = std::move(a);
    p.b_ub = std::move(b);
    for (Eigen::Index i = 0; i < p.b_ub.size(); ++i) {
        p.ub_ids.push_back("r" + std::to_string(i));
    }
    p.a_eq = RMat(0, 2);
    p.b_eq = RVec(0);
    return p;
}

}  // namespace

TEST_CASE("textbook LP") {
    // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18, x, y >= 0: optimum 36 at (2, 6).
    const auto r = solve_lp(two_var(vec({3, 5}), mat(3, 2, {1, 0, 0, 2, 3, 2}), vec({4, 12, 18})));
    REQUIRE(r.status == LPStatus::optimal);
    CHECK(r.value == 36);
    CHECK(r.x == vec({2, 6}));
}

TEST_CASE("fractional optimum is exact") {
    // max x + y, 3x + y <= 2, x + 3y <= 2: optimum 1 at (1/2, 1/2).
    const auto r = solve_lp(two_var(vec({1, 1}), mat(2, 2, {3, 1, 1, 3}), vec({2, 2})));
    REQUIRE(r.status == LPStatus::optimal);
    CHECK(r.value == 1);
    CHECK(r.x == vec({Rational(1, 2), Rational(1, 2)}));
    // max x + 3y: the vertices (2/3, 0), (0, 2/3), (1/2, 1/2) give 2/3, 2, 2.
    const auto r2 = solve_lp(two_var(vec({1, 3}), mat(2, 2, {3, 1, 1, 3}), vec({2, 2})));
    CHECK(r2.value == 2);
    // max x + 4y: the optimum moves to (0, 2/3).
    const auto r3 = solve_lp(two_var(vec({1, 4}), mat(2, 2, {3, 1, 1, 3}), vec({2, 2})));
    CHECK(r3.value == Rational(8, 3));
    CHECK(r3.x == vec({0, Rational(2, 3)}));
}

TEST_CASE("equalities, negative right-hand sides, infeasible and unbounded") {
    LPProblem p = two_var(vec({1, 0}), mat(1, 2, {-1, 0}), vec({-1}));  // x >= 1
    p.a_eq = mat(1, 2, {1, 1});
    p.b_eq = vec({3});
    p.eq_ids = {"sum"};
    const auto r = solve_lp(p);
    REQUIRE(r.status == LPStatus::optimal);
    CHECK(r.value == 3);

    const auto inf = solve_lp(two_var(vec({1, 1}), mat(2, 2, {1, 0, -1, 0}), vec({1, -2})));
    CHECK(inf.status == LPStatus::infeasible);
    const auto unb = solve_lp(two_var(vec({1, 1}), mat(1, 2, {1, -1}), vec({1})));
    CHECK(unb.status == LPStatus::unbounded);
}

TEST_CASE("degenerate LP terminates") {
    // Several constraints through the optimum (1, 1).
    const auto r = solve_lp(two_var(vec({1, 1}), mat(4, 2, {1, 0, 0, 1, 1, 1, 2, 1}), vec({1, 1, 2, 3})));
    REQUIRE(r.status == LPStatus::optimal);
    CHECK(r.value == 2);
}

TEST_CASE("max S_N over the even-N system") {
    const int expect[] = {9, 33, 129, 513, 2049, 8193, 32769};
    for (int n = 4, i = 0; n <= 16; n += 2, ++i) {
        const auto p = build_maxSN_primal(n);
        const auto r = solve_lp(p);
        REQUIRE(r.status == LPStatus::optimal);
        CHECK(r.value == expect[i]);
        CHECK(r.value == pow2(n - 1) + 1);
    }
    CHECK_THROWS_AS(build_maxSN_primal(5), capability_error);
    CHECK_THROWS_AS(build_maxSN_primal(18), contract_error);
}

TEST_CASE("dual witness is feasible for the primal matrices") {
    for (int n = 4; n <= 16; n += 2) {
        INFO("N = " << n);
        const auto p = build_maxSN_primal(n);
        const auto w = verify_dual_witness(n);
        // Weak duality: y >= 0 and A_ub^T y + A_eq^T y' >= c give c.x <= b.(y, y').
        RVec q = p.a_ub.transpose() * w.y + p.a_eq.transpose() * w.y_prime;
        CHECK(q == w.q);
        for (int m = 0; m < n; ++m) {
            CHECK(q[m] >= p.objective[m]);
        }
        for (Eigen::Index i = 0; i < w.y.size(); ++i) {
            CHECK(w.y[i] >= 0);
        }
        const Rational bound = p.b_ub.dot(w.y) + p.b_eq.dot(w.y_prime);
        CHECK(bound == w.objective);
        CHECK(bound == solve_lp(p).value);
    }
    for (int n = 18; n <= 24; n += 2) {
        CHECK(verify_dual_witness(n).objective == pow2(n - 1) + 1);
    }
    CHECK_THROWS_AS(verify_dual_witness(7), contract_error);
    CHECK_THROWS_AS(verify_dual_witness(26), contract_error);
}

TEST_CASE("max S_N over R agrees with the reduced system and GHZ") {
    for (int n : {4, 6, 8}) {
        const auto r = solve_lp(lp_from_region(build_region(n, "R"), objective_sector(n, n)));
        REQUIRE(r.status == LPStatus::optimal);
        CHECK(r.value == pow2(n - 1) + 1);
        CHECK(to_double(r.value) == doctest::Approx(sector_lengths(ghz(n))[n]));
    }
}

TEST_CASE("binomial bounds at N = 9 and N = 12") {
    const auto a = solve_lp(lp_from_region(build_region(9, "R"), objective_sector(9, 4)));
    CHECK(a.value <= 126);
    CHECK(a.value == 126);
    const auto b = solve_lp(lp_from_region(build_region(12, "R"), objective_sector(12, 5)));
    CHECK(b.value <= 792);
    CHECK(b.value == 792);
}

TEST_CASE("minimization over R") {
    RVec c = -objective_sector(6, 4);
    const auto r = solve_lp(lp_from_region(build_region(6, "R"), c));
    REQUIRE(r.status == LPStatus::optimal);
    CHECK(-r.value == 0);
}

TEST_CASE("S_1 and S_2 bounds") {
    for (int n = 2; n <= 10; ++n) {
        INFO("N = " << n);
        const auto b = bound_S1_S2(n);
        // The product state attains both, except S_2 at N = 2 where GHZ(2) gives 3.
        CHECK(b.s1 == n);
        CHECK(b.s2 == to_rational(binomial(n, 2) + (n == 2 ? 2 : 0)));
        CHECK(b.small_n == (n == 2));
    }
}
