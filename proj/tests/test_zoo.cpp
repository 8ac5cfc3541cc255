#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sectorlens/zoo.hpp"

using namespace sectorlens;

namespace {

void check_vector(const SectorVector& s, const std::vector<double>& tail) {
    REQUIRE(s.size() == static_cast<Eigen::Index>(tail.size() + 1));
    CHECK(s[0] == doctest::Approx(1.0));
    for (std::size_t m = 0; m < tail.size(); ++m) {
        INFO("m = " << m + 1);
        CHECK(std::abs(s[static_cast<Eigen::Index>(m + 1)] - tail[m]) < 1e-9);
    }
}

}  // namespace

TEST_CASE("published sector vectors") {
    check_vector(sector_lengths(build("tetra")), {0, 2, 8, 5});
    check_vector(sector_lengths(build("AME(5,2)")), {0, 0, 10, 15, 6});
    check_vector(sector_lengths(build("psi5")), {1, 2, 10, 13, 5});
    check_vector(sector_lengths(build("AME(6,2)")), {0, 0, 0, 45, 0, 18});
    check_vector(sector_lengths(build("psi6")), {0, 0, 8, 21, 24, 10});
    check_vector(sector_lengths(build("pyramid")), {0, 27.0 / 5, 8, 51.0 / 5, 24, 77.0 / 5});
    check_vector(sector_lengths(build("psi7")), {0, 7, 14, 7, 28, 49, 22});
    check_vector(sector_lengths(build("psiM7")), {0, 0, 3, 29, 42, 34, 19});
    check_vector(sector_lengths(build("psi7b")),
                 {25.0 / 13, 9.0 / 13, 125.0 / 13, 35, 603.0 / 13, 355.0 / 13, 79.0 / 13});
    check_vector(sector_lengths(build("psiM8")), {0, 0, 0, 26, 64, 72, 64, 29});
    check_vector(sector_lengths(build("tetra^2")), {0, 4, 16, 14, 32, 84, 80, 25});
    check_vector(sector_lengths(build("psi1_8")), {0, 0, 0, 42, 0, 168, 0, 45});
}

TEST_CASE("recorded discrepancies are detected") {
    const auto printed = sector_lengths(build("AME(6,2)-printed"));
    CHECK(std::abs(printed[3] - 45) > 1e-3);
    const auto* e = find_zoo_entry("AME(6,2)-printed");
    REQUIRE(e != nullptr);
    CHECK(!e->discrepancy.empty());

    // The eight-qubit tetrahedral state: printed vector is seven entries long and S_2 != 0.
    const auto t8 = sector_lengths(build("tetra8"));
    CHECK(t8.size() == 9);
    CHECK(t8.sum() == doctest::Approx(256.0));
    CHECK(t8[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(t8[2] == doctest::Approx(28.0 / 3));
    CHECK(t8[7] == doctest::Approx(592.0 / 7));
    const auto* t = find_zoo_entry("tetra8");
    REQUIRE(t != nullptr);
    CHECK(t->provenance == Provenance::computed);
    CHECK(!t->printed.empty());
}

TEST_CASE("catalog verification has no unexpected failures") {
    const auto rep = verify_catalog();
    CHECK(rep.unexpected_failures() == 0);
    int known = 0;
    for (const auto& c : rep.checks) {
        if (!c.ok) {
            CHECK(c.known_discrepancy);
            ++known;
        }
    }
    CHECK(known >= 2);
}

TEST_CASE("marginal spectra") {
    // All two-qubit marginals of AME(5,2) are maximally mixed.
    for (const auto& spec : marginal_spectra(build("AME(5,2)"), 2)) {
        REQUIRE(spec.size() == 4);
        for (double v : spec) {
            CHECK(v == doctest::Approx(0.25));
        }
    }
    // GHZ(3) two-qubit marginals have spectrum {1/2, 1/2, 0, 0}; zeros are dropped.
    const auto ghz_spectra = marginal_spectra(ghz(3), 2);
    CHECK(ghz_spectra.size() == 3);
    for (const auto& spec : ghz_spectra) {
        REQUIRE(spec.size() == 2);
        CHECK(spec[0] == doctest::Approx(0.5));
        CHECK(spec[1] == doctest::Approx(0.5));
    }
}

TEST_CASE("state expression grammar") {
    CHECK(build("GHZ(3)*zero(2)").n_qubits() == 5);
    CHECK(build("|0>^3").n_qubits() == 3);
    // Sector vectors of product states convolve: (1, 0, 3, 4) * (1, 0, 3, 4).
    check_vector(sector_lengths(build("GHZ(3)^2")), {0, 6, 8, 9, 24, 16});
    check_vector(sector_lengths(build("GHZ(2)*zero(1)")), {1, 3, 3});
    check_vector(sector_lengths(build("Dicke(2,1)")), {0, 3});
    CHECK_THROWS_AS(build("nonsense"), contract_error);
    CHECK_THROWS_AS(build("GHZ(0)"), contract_error);
    CHECK_THROWS_AS(build("Dicke(3,4)"), contract_error);
    CHECK_THROWS_AS(build("GHZ(7)*GHZ(7)"), capability_error);
}

TEST_CASE("number expressions") {
    CHECK(eval_number("pi/2") == doctest::Approx(std::numbers::pi / 2));
    CHECK(eval_number("-1/sqrt(2)") == doctest::Approx(-1 / std::sqrt(2.0)));
    CHECK(eval_number("2*(3+1)") == doctest::Approx(8));
    CHECK_THROWS_AS(eval_number("2+"), contract_error);
}

TEST_CASE("GHZ phase parameter") {
    const auto a = sector_lengths(ghz(5, 0.7));
    const auto b = sector_lengths(ghz(5));
    CHECK(a[5] < b[5]);
    CHECK(sector_lengths(ghz(5, std::numbers::pi / 2))[5] == doctest::Approx(b[5]));
}

TEST_CASE("psi_eta family lies on S2 = 2 S1 = 2 cos^2(2 eta)") {
    for (int i = 0; i <= 40; ++i) {
        const double eta = std::numbers::pi / 2 * i / 40;
        const auto s = sector_lengths(psi_eta_family(eta));
        const double c = std::cos(2 * eta);
        CHECK(std::abs(s[1] - c * c) < 1e-9);
        CHECK(std::abs(s[2] - 2 * c * c) < 1e-9);
    }
}

TEST_CASE("phi_eta family follows its closed form") {
    for (int i = 0; i <= 40; ++i) {
        const double eta = std::numbers::pi * i / 40;
        const auto s = sector_lengths(phi_eta_family(eta));
        const double rhs = (28 * std::sin(eta) - 6 * std::sin(2 * eta) - 4 * std::cos(eta) - std::cos(2 * eta) + 37) /
                           std::pow(std::sin(eta) + std::cos(eta) + 3, 2);
        CHECK(std::abs(s[2] - rhs) < 1e-9);
        CHECK(std::abs(2 * s[1] - rhs) < 1e-9);
    }
}

TEST_CASE("left boundary family") {
    const auto lo = sector_lengths(boundary_family(0.25, -0.25, -1));
    CHECK(std::abs(lo[1]) < 1e-9);
    CHECK(std::abs(lo[2]) < 1e-9);
    const auto hi = sector_lengths(boundary_family(-1 / std::sqrt(2.0), 0, 0));
    CHECK(std::abs(hi[1]) < 1e-9);
    CHECK(std::abs(hi[2] - 10) < 1e-9);
    CHECK_THROWS_AS(boundary_family(1, 1, 1), contract_error);
    // The norm polynomial equals the squared amplitude norm.
    for (double t : {-2.0, -0.5, 0.0, 0.3, 1.7}) {
        CHECK(boundary_family_norm(0.4, -0.9, t) ==
              doctest::Approx(boundary_family_vector(0.4, -0.9, t).squaredNorm()).epsilon(1e-12));
    }
}

TEST_CASE("family scans") {
    const auto pts = family_scan("boundary", {{-1, 1, 4}, {-1, 1, 4}, {-2, 2, 5}});
    CHECK(pts.size() == 80);
    for (const auto& p : pts) {
        CHECK(p.ok);
        CHECK(std::abs(p.s[1]) < 1e-9);
        CHECK(boundary_family_norm(p.params[0], p.params[1], p.params[2]) == doctest::Approx(1.0));
    }
    for (const auto& p : family_scan("psi4", {{0, std::numbers::pi / 2, 5}, {0, 2 * std::numbers::pi, 7}})) {
        CHECK(p.ok);
    }
    CHECK_THROWS_AS(family_point("psi_eta", {2.0}), contract_error);
    CHECK_THROWS_AS(family_point("GHZ", {3}), contract_error);
    CHECK_THROWS_AS(family_point("boundary", {0, 0, 1}), contract_error);
}
