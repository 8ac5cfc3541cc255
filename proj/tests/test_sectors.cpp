#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sectorlens/sectors.hpp"
#include "sectorlens/zoo.hpp"

using namespace sectorlens;

namespace {

// S_m as the literal sum of squared Pauli expectations.
Eigen::VectorXd brute_sectors(const PureState& psi) {
    const int n = psi.n_qubits();
    Eigen::VectorXd s = Eigen::VectorXd::Zero(n + 1);
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    for (std::uint64_t code = 0; code < count; ++code) {
        const auto p = PauliIndex::from_code(code, n);
        const double e = expect_pauli(psi, p);
        s[p.weight()] += e * e;
    }
    return s;
}

double choose(int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace

TEST_CASE("fast paths agree with the Pauli sum") {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 5; ++n) {
        for (int rep = 0; rep < 4; ++rep) {
            const auto psi = haar_random(n, rng);
            const auto oracle = brute_sectors(psi);
            CHECK((sector_lengths(psi) - oracle).cwiseAbs().maxCoeff() < 1e-10);
            CHECK((sector_lengths_walsh(psi) - oracle).cwiseAbs().maxCoeff() < 1e-10);
            CHECK((sector_lengths_from_purities(psi) - oracle).cwiseAbs().maxCoeff() < 1e-10);
            const Eigen::MatrixXcd rho = psi.amplitudes() * psi.amplitudes().adjoint();
            CHECK((sector_lengths(rho) - oracle).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("closed forms for product and GHZ states") {
    for (int n = 1; n <= 8; ++n) {
        const auto zero = sector_lengths(zero_state(n));
        const auto g = sector_lengths(ghz(n));
        for (int m = 0; m <= n; ++m) {
            CHECK(zero[m] == doctest::Approx(choose(n, m)).epsilon(1e-12));
            double expect = 0;
            if (m == 0) {
                expect = 1;
            } else if (m == n) {
                expect = std::ldexp(1.0, n - 1) + (n % 2 == 0 ? 1 : 0);
            } else if (m % 2 == 0) {
                expect = choose(n, m);
            }
            CHECK(std::abs(g[m] - expect) < 1e-9);
        }
    }
}

TEST_CASE("maximally mixed state has only S_0") {
    const auto s = sector_lengths(Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(8, 8) / 8.0));
    CHECK(s[0] == doctest::Approx(1.0));
    CHECK(s.tail(3).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("pure-state identities") {
    std::mt19937_64 rng(17);
    for (int n = 2; n <= 6; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            const auto psi = haar_random(n, rng);
            const auto s = sector_lengths(psi);
            CHECK(s.sum() == doctest::Approx(std::ldexp(1.0, n)).epsilon(1e-10));
            if (n % 2 == 1) {
                CHECK(std::abs(overlap_from_sectors<double>(s)) < 1e-10);
            }
            CHECK(overlap_R(psi) == doctest::Approx(overlap_from_sectors<double>(s)).epsilon(1e-10));
            for (int k = 0; k <= n; ++k) {
                const auto [lhs, rhs] = macwilliams_sides<double>(s, k);
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("subset purity sums match explicit partial traces") {
    std::mt19937_64 rng(23);
    for (int n = 2; n <= 5; ++n) {
        const auto psi = haar_random(n, rng);
        const auto s = sector_lengths(psi);
        for (int k = 1; k < n; ++k) {
            double purities = 0, overlaps = 0;
            for (const auto& sub : subsets(n, k)) {
                const auto r = partial_trace(psi, sub);
                purities += purity(r.matrix);
                overlaps += overlap_R(r);
            }
            CHECK(purity_sum_formula<double>(s, k) == doctest::Approx(purities).epsilon(1e-10));
            CHECK(overlap_sum_formula<double>(s, k) == doctest::Approx(overlaps).epsilon(1e-10));
            const auto [p, o] = reduced_purity_sum(psi, k);
            CHECK(p == doctest::Approx(purities).epsilon(1e-10));
            CHECK(o == doctest::Approx(overlaps).epsilon(1e-10));
            CHECK(linear_entropy_avg(psi, k) == doctest::Approx(2 * (choose(n, k) - purities)).epsilon(1e-10));
            CHECK(linear_entropy_formula<double>(s, k) == doctest::Approx(2 * (choose(n, k) - purities)).epsilon(1e-10));
        }
    }
}

TEST_CASE("subset purities indexed by mask") {
    std::mt19937_64 rng(29);
    const auto psi = haar_random(4, rng);
    const auto all = subset_purities(psi);
    REQUIRE(all.size() == 16);
    CHECK(all[0] == doctest::Approx(1.0));
    CHECK(all[15] == doctest::Approx(1.0));
    CHECK(all[0b1000] == doctest::Approx(purity(partial_trace(psi, {1}).matrix)).epsilon(1e-12));
    CHECK(all[0b0011] == doctest::Approx(purity(partial_trace(psi, {3, 4}).matrix)).epsilon(1e-12));
    CHECK(all[0b1101] == doctest::Approx(purity(partial_trace(psi, {1, 2, 4}).matrix)).epsilon(1e-12));
}

TEST_CASE("single-qubit purity plus overlap is one") {
    std::mt19937_64 rng(31);
    for (int n = 2; n <= 6; ++n) {
        const auto psi = haar_random(n, rng);
        for (int q = 1; q <= n; ++q) {
            CHECK(purity_overlap_functional(psi, {q}) == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("walsh-hadamard transform is its own inverse up to scale") {
    std::vector<Complex> d{{1, 0}, {2, 1}, {0, -1}, {3, 0}};
    const auto orig = d;
    walsh_hadamard(d.data(), d.size());
    CHECK(std::abs(d[0] - Complex(6, 0)) < 1e-15);
    walsh_hadamard(d.data(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(std::abs(d[i] / 4.0 - orig[i]) < 1e-15);
    }
}
