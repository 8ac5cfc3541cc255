// Copyright 2026 The sectorlens Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sectorlens/shadow.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace sectorlens {

namespace {

Int128 pow3(int e) {
    Int128 v = 1;
    for (int i = 0; i < e; ++i) {
        v *= 3;
    }
    return v;
}

int parity(std::uint64_t v) {
    return std::popcount(v) & 1;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Eigen::MatrixXcd pauli1(int a) {
    return pauli_matrix(PauliIndex({static_cast<std::uint8_t>(a)}));
}

// Tr(σ M1 σ M2) without forming σ.
Complex sandwich_trace(const Eigen::MatrixXcd& m1, const Eigen::MatrixXcd& m2, const PauliIndex& mu) {
    const auto dim = static_cast<std::uint64_t>(m1.rows());
    const std::uint64_t x = mu.x_mask();
    const std::uint64_t z = mu.z_mask();
    const double sign_y = (mu.y_count() % 2) ? -1.0 : 1.0;  // i^{2 n_y}
    Complex acc = 0.0;
    for (std::uint64_t r = 0; r < dim; ++r) {
        const int pr = parity((r ^ x) & z);
        for (std::uint64_t c = 0; c < dim; ++c) {
            Complex v = m1(static_cast<Eigen::Index>(r ^ x), static_cast<Eigen::Index>(c ^ x)) *
                        m2(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(r));
            acc += (pr ^ parity(c & z)) ? -v : v;
        }
    }
    return sign_y * acc;
}

void check_dense_operator(const Eigen::MatrixXcd& m, const char* name) {
    const auto dim = static_cast<std::uint64_t>(m.rows());
    if (m.rows() != m.cols() || !std::has_single_bit(dim)) {
        throw contract_error(std::string(name) + " must be a square 2^N matrix");
    }
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
        throw contract_error(std::string(name) + " is not Hermitian");
    }
}

void require_duality(const char* what, double lhs, double rhs, double x, double y) {
    if (std::abs(lhs - rhs) > 1e-8 * std::max(1.0, std::abs(lhs))) {
        std::ostringstream msg;
        msg.precision(17);
        msg << what << " duality fails at (" << x << ", " << y << "): " << lhs << " vs " << rhs;
        throw computation_error(msg.str());
    }
}

// Maps ψ⊗ψ (copy ordering) to the site-paired ordering: digit α = 2 b_α(copy 1) + b_α(copy 2).
Eigen::VectorXcd doubled_pair_order(const PureState& psi) {
    const int n = psi.n_qubits();
    const std::uint64_t dim = psi.dim();
    Eigen::VectorXcd out(static_cast<Eigen::Index>(dim * dim));
    for (std::uint64_t i1 = 0; i1 < dim; ++i1) {
        for (std::uint64_t i2 = 0; i2 < dim; ++i2) {
            std::uint64_t idx = 0;
            for (int q = 1; q <= n; ++q) {
                const std::uint64_t bit = qubit_bit(q, n);
                const std::uint64_t digit = ((i1 & bit) ? 2 : 0) | ((i2 & bit) ? 1 : 0);
                idx = idx * 4 + digit;
            }
            out[static_cast<Eigen::Index>(idx)] = psi[i1] * psi[i2];
        }
    }
    return out;
}

// Builds Σ over placements of `j` copies of `hit` among N sites, `miss` elsewhere.
std::vector<Eigen::MatrixXcd> graded_products(int n, const Eigen::MatrixXcd& miss, const Eigen::MatrixXcd& hit) {
    std::vector<Eigen::MatrixXcd> e(1, Eigen::MatrixXcd::Identity(1, 1));
    for (int site = 1; site <= n; ++site) {
        const Eigen::Index d = e[0].rows() * 4;
        std::vector<Eigen::MatrixXcd> next(site + 1, Eigen::MatrixXcd::Zero(d, d));
        for (int j = 0; j < site; ++j) {
            next[j] += kron(e[j], miss);
            next[j + 1] += kron(e[j], hit);
        }
        e = std::move(next);
    }
    return e;
}

std::map<long long, long long> merge_spectrum(const std::vector<std::pair<long long, long long>>& entries) {
    std::map<long long, long long> out;
    for (const auto& [value, mult] : entries) {
        out[value] += mult;
    }
    return out;
}

}  // namespace

Int128 kravchuk(int g, int m, int n) {
    if (n < 0 || g < 0 || g > n || m < 0 || m > n) {
        throw contract_error("kravchuk needs 0 <= g, m <= N");
    }
    Int128 acc = 0;
    for (int i = 0; i <= g; ++i) {
        Int128 term = pow3(g - i) * binomial(m, i) * binomial(n - m, g - i);
        acc += (i % 2) ? -term : term;
    }
    return acc;
}

KravchukTable::KravchukTable(int n) : n_(n), values_(static_cast<std::size_t>((n + 1) * (n + 1))) {
    for (int g = 0; g <= n; ++g) {
        for (int m = 0; m <= n; ++m) {
            values_[static_cast<std::size_t>(g * (n + 1) + m)] = kravchuk(g, m, n);
        }
    }
}

const KravchukTable& kravchuk_table(int n) {
    if (n < 0 || n > kKravchukCap) {
        throw capability_error("Kravchuk tables are capped at N=" + std::to_string(kKravchukCap));
    }
    static std::mutex mu;
    static std::array<std::unique_ptr<KravchukTable>, kKravchukCap + 1> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (!slot) {
        slot = std::make_unique<KravchukTable>(n);
    }
    return *slot;
}

double enumerator_polynomial(const Eigen::VectorXd& coeffs, double x, double y) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    double acc = 0.0;
    for (int m = 0; m <= n; ++m) {
        acc += coeffs[m] * std::pow(x, n - m) * std::pow(y, m);
    }
    return acc;
}

EnumeratorPair shor_laflamme(const Eigen::MatrixXcd& m1, const Eigen::MatrixXcd& m2) {
    check_dense_operator(m1, "M1");
    check_dense_operator(m2, "M2");
    if (m1.rows() != m2.rows()) {
        throw contract_error("M1 and M2 must act on the same number of qubits");
    }
    const int n = std::countr_zero(static_cast<std::uint64_t>(m1.rows()));
    if (n > 6) {
        throw capability_error("dense enumerators are capped at N=6");
    }
    const Eigen::MatrixXcd m2_flip = spin_flip(m2);
    EnumeratorPair out{Eigen::VectorXd::Zero(n + 1), Eigen::VectorXd::Zero(n + 1), Eigen::VectorXd::Zero(n + 1)};
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    for (std::uint64_t code = 0; code < count; ++code) {
        PauliIndex mu = PauliIndex::from_code(code, n);
        const int w = mu.weight();
        out.A[w] += (trace_pauli(m1, mu) * trace_pauli(m2, mu)).real();
        out.B[w] += sandwich_trace(m1, m2, mu).real();
        out.C[w] += sandwich_trace(m1, m2_flip, mu).real();
    }
    for (auto [x, y] : {std::pair{1.0, 0.0}, std::pair{1.0, 1.0}, std::pair{2.0, 1.0}}) {
        require_duality("A/B", enumerator_polynomial(out.B, x, y),
                        enumerator_polynomial(out.A, (x + 3 * y) / 2, (x - y) / 2), x, y);
        require_duality("A/C", enumerator_polynomial(out.C, x, y),
                        enumerator_polynomial(out.A, (x + 3 * y) / 2, (y - x) / 2), x, y);
    }
    return out;
}

DoubleCopyReport double_copy_spectrum_check(int n, std::uint64_t seed, int random_states) {
    if (n < 1 || n > 4) {
        throw capability_error("dense double-copy check is limited to 1 <= N <= 4");
    }
    DoubleCopyReport rep;
    rep.n = n;

    Eigen::MatrixXcd pair_sum = Eigen::MatrixXcd::Zero(4, 4);
    for (int a = 1; a <= 3; ++a) {
        pair_sum += kron(pauli1(a), pauli1(a));
    }
    const Eigen::MatrixXcd id4 = Eigen::MatrixXcd::Identity(4, 4);
    const Eigen::MatrixXcd swap = (id4 + pair_sum) / 2.0;
    const Eigen::MatrixXcd p_sym = (id4 + swap) / 2.0;
    const Eigen::MatrixXcd p_anti = (id4 - swap) / 2.0;

    const auto sector_ops = graded_products(n, id4, pair_sum);
    const auto shadow_ops = graded_products(n, p_anti, p_sym);

    const auto& k = kravchuk_table(n);
    rep.spectra_match = true;
    for (int m = 0; m <= n; ++m) {
        std::vector<std::pair<long long, long long>> exp;
        for (int g = 0; g <= n; ++g) {
            long long value = static_cast<long long>((m % 2) ? -k(m, g) : k(m, g));
            exp.emplace_back(value, static_cast<long long>(binomial(n, g) * pow3(g)));
        }
        rep.expected.push_back(merge_spectrum(exp));

        const Eigen::MatrixXcd& op = sector_ops[m];
        if (op.imag().cwiseAbs().maxCoeff() > 1e-12) {
            throw computation_error("paired sector operator has a non-real entry");
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.real(), Eigen::EigenvaluesOnly);
        std::vector<std::pair<long long, long long>> obs;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
            const double v = es.eigenvalues()[i];
            const double r = std::round(v);
            rep.max_rounding_error = std::max(rep.max_rounding_error, std::abs(v - r));
            obs.emplace_back(static_cast<long long>(r), 1);
        }
        rep.observed.push_back(merge_spectrum(obs));
        if (rep.observed.back() != rep.expected.back()) {
            rep.spectra_match = false;
        }
    }
    for (int a = 0; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            const Eigen::MatrixXcd c = sector_ops[a] * sector_ops[b] - sector_ops[b] * sector_ops[a];
            rep.max_commutator = std::max(rep.max_commutator, c.cwiseAbs().maxCoeff());
        }
    }

    std::mt19937_64 rng(seed);
    for (int t = 0; t < random_states; ++t) {
        PureState psi = haar_random(n, rng);
        const Eigen::VectorXcd doubled = doubled_pair_order(psi);
        const SectorVector s = sector_lengths(psi);
        const Eigen::VectorXd e = shadow_enumerators<double>(s);
        for (int g = 0; g <= n; ++g) {
            const double q = doubled.dot(shadow_ops[g] * doubled).real();
            rep.max_shadow_deviation = std::max(rep.max_shadow_deviation, std::abs(std::ldexp(q, n) - e[g]));
            const double sm = doubled.dot(sector_ops[g] * doubled).real();
            rep.max_shadow_deviation = std::max(rep.max_shadow_deviation, std::abs(sm - s[g]));
        }
    }
    rep.ok = rep.spectra_match && rep.max_rounding_error < 1e-8 && rep.max_commutator < 1e-9 &&
             rep.max_shadow_deviation < 1e-9;
    return rep;
}

std::vector<double> sector_operator_coefficients(int n, int m) {
    if (m < 0 || m > n) {
        throw contract_error("sector index must be in 0..N");
    }
    const auto& k = kravchuk_table(n);
    std::vector<double> p(std::size_t{1} << n);
    for (std::uint64_t s = 0; s < p.size(); ++s) {
        const double v = static_cast<double>(k(m, std::popcount(s)));
        p[s] = (m % 2) ? -v : v;
    }
    return p;
}

std::vector<double> shadow_projector_coefficients(int n, int g) {
    if (g < 0 || g > n) {
        throw contract_error("shadow index must be in 0..N");
    }
    std::vector<double> p(std::size_t{1} << n);
    for (std::uint64_t s = 0; s < p.size(); ++s) {
        p[s] = std::popcount(s) == g ? 1.0 : 0.0;
    }
    return p;
}

double concurrence_general(const PureState& state, const std::vector<double>& p) {
    const int n = state.n_qubits();
    if (p.size() != state.dim()) {
        throw contract_error("coefficient vector must have 2^N entries");
    }
    // c_T = Σ_s p_s (-1)^{|T \ s|} = (-1)^{|T|} WHT(p)[T].
    std::vector<double> c(p);
    for (std::size_t h = 1; h < c.size(); h <<= 1) {
        for (std::size_t i = 0; i < c.size(); i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double u = c[j];
                const double v = c[j + h];
                c[j] = u + v;
                c[j + h] = u - v;
            }
        }
    }
    const auto pur = subset_purities(state);
    double acc = 0.0;
    for (std::uint64_t t = 0; t < c.size(); ++t) {
        acc += (parity(t) ? -c[t] : c[t]) * pur[t];
    }
    const double value = std::ldexp(acc, -n);
    if (value < -1e-9) {
        std::ostringstream msg;
        msg << "concurrence radicand " << value << " is negative; the operator is not positive on this state";
        throw computation_error(msg.str());
    }
    return 2.0 * std::sqrt(std::max(0.0, value));
}

}  // namespace sectorlens
