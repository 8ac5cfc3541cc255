#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sectorlens/search.hpp"
#include "sectorlens/tables.hpp"
#include "sectorlens/zoo.hpp"

using namespace sectorlens;

namespace {

// Central differences of objective_value along Re and Im of each amplitude.
double gradient_error(const SearchObjective& obj, const Eigen::VectorXcd& psi) {
    const Eigen::VectorXcd g = objective_gradient(obj, psi);
    double worst = 0;
    const double h = 1e-5;
    for (Eigen::Index k = 0; k < psi.size(); ++k) {
        for (int part = 0; part < 2; ++part) {
            Eigen::VectorXcd d = Eigen::VectorXcd::Zero(psi.size());
            d[k] = part ? Complex(0, h) : Complex(h, 0);
            const double fd = (objective_value(obj, psi + d) - objective_value(obj, psi - d)) / (2 * h);
            const double an = part ? g[k].imag() : g[k].real();
            worst = std::max(worst, std::abs(fd - an) / std::max(1.0, std::abs(an)));
        }
    }
    return worst;
}

}  // namespace

TEST_CASE("objective values") {
    std::mt19937_64 rng(71);
    for (int n = 2; n <= 5; ++n) {
        const auto psi = haar_random(n, rng);
        const auto s = sector_lengths(psi);
        const auto obj = linear_objective(n, "S1 + 2*S2 - Se0");
        const RVec c = parse_objective(n, "S1 + 2*S2 - Se0");
        double oracle = 0;
        for (int m = 0; m <= n; ++m) {
            oracle += to_double(c[m]) * s[m];
        }
        CHECK(objective_value(obj, psi.amplitudes()) == doctest::Approx(oracle).epsilon(1e-10));
        // Homogeneous of degree four in the amplitudes.
        CHECK(objective_value(obj, 2.0 * psi.amplitudes()) == doctest::Approx(16 * oracle).epsilon(1e-10));
        const auto po = purity_overlap_objective(n, {1});
        CHECK(objective_value(po, psi.amplitudes()) == doctest::Approx(purity_overlap_functional(psi, {1})));
    }
}

TEST_CASE("gradients match finite differences") {
    std::mt19937_64 rng(73);
    for (int n = 2; n <= 4; ++n) {
        const Eigen::VectorXcd psi = 1.3 * haar_random(n, rng).amplitudes();
        CHECK(gradient_error(linear_objective(n, "S2"), psi) < 1e-6);
        CHECK(gradient_error(linear_objective(n, "Se1 - 2*S1 + 1/3*SN"), psi) < 1e-6);
        CHECK(gradient_error(purity_overlap_objective(n, {n}), psi) < 1e-6);
        if (n > 2) {
            CHECK(gradient_error(purity_overlap_objective(n, {1, n}), psi) < 1e-6);
        }
    }
}

TEST_CASE("known extrema") {
    SearchProblem p;
    p.objective = linear_objective(3, "S3");
    p.direction = Direction::maximize;
    p.restarts = 8;
    p.seed = 1;
    CHECK(optimize(p).value == doctest::Approx(4.0).epsilon(1e-8));

    p.objective = linear_objective(4, "S2");
    p.direction = Direction::minimize;
    p.restarts = 16;
    const auto r = optimize(p);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-6));
    REQUIRE(r.region);
    CHECK(r.region->member);
    CHECK(std::abs(r.sectors[2] - r.value) < 1e-9);
    CHECK(r.trace.size() == 16);
}

TEST_CASE("results depend only on the seed") {
    SearchProblem p;
    p.objective = linear_objective(4, "S4");
    p.direction = Direction::minimize;
    p.restarts = 6;
    p.seed = 99;
    p.threads = 1;
    const auto a = optimize(p);
    p.threads = 3;
    const auto b = optimize(p);
    CHECK(a.best_restart == b.best_restart);
    CHECK(a.value == b.value);
    CHECK((a.state.amplitudes() - b.state.amplitudes()).norm() == 0.0);
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        CHECK(a.trace[i].seed == restart_seed(99, static_cast<int>(i)));
        CHECK(a.trace[i].value == b.trace[i].value);
    }
    p.seed = 100;
    CHECK(optimize(p).trace[0].seed != a.trace[0].seed);
}

TEST_CASE("supplied start states") {
    SearchProblem p;
    p.objective = linear_objective(4, "S4");
    p.direction = Direction::maximize;
    p.restarts = 1;
    p.starts = {ghz(4)};
    const auto r = optimize(p);
    CHECK(r.value == doctest::Approx(9.0));
    CHECK(r.trace[0].seed == 0);
    CHECK(r.trace[0].converged);
    p.starts = {ghz(3)};
    CHECK_THROWS_AS(optimize(p), contract_error);
}

TEST_CASE("purity plus overlap minimum") {
    const auto r = optimize_purity_overlap(4, {1, 2}, 16, 5);
    CHECK(r.search.value == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(r.conjecture == Rational(1, 2));
    CHECK(r.purity + r.overlap == doctest::Approx(r.search.value));
    CHECK(std::abs(r.gap) < 1e-6);
    const auto single = optimize_purity_overlap(3, {2}, 4, 5);
    CHECK(single.search.value == doctest::Approx(1.0));
}

TEST_CASE("gap probe") {
    const auto g = gap_probe(6, objective_sector(6, 4), Direction::minimize, 16, 3);
    CHECK(g.lp_value == 0);
    CHECK(g.search_value == doctest::Approx(5.0).epsilon(1e-6));
    CHECK(g.gap == doctest::Approx(5.0).epsilon(1e-6));
    const auto tight = gap_probe(4, objective_sector(4, 4), Direction::maximize, 8, 3);
    CHECK(tight.lp_value == 9);
    CHECK(tight.gap < 1e-8);
}

TEST_CASE("search contracts") {
    SearchProblem p;
    p.objective = linear_objective(9, "S2");
    CHECK_THROWS_AS(optimize(p), capability_error);
    CHECK_THROWS_AS(purity_overlap_objective(4, {5}), contract_error);
    CHECK_THROWS_AS(purity_overlap_objective(4, {1, 2, 3, 4}), contract_error);
    CHECK_THROWS_AS(parse_direction("sideways"), contract_error);
    CHECK(default_restarts(6) == 64);
    CHECK(default_restarts(7) == 256);
    CHECK(worker_count(3) == 3);
}
