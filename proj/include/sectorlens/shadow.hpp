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

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "sectorlens/numeric.hpp"
#include "sectorlens/pauli.hpp"
#include "sectorlens/sectors.hpp"

namespace sectorlens {

inline constexpr int kKravchukCap = 32;

// K_g(m, N) = Σ_i (-1)^i 3^{g-i} C(m, i) C(N-m, g-i).
Int128 kravchuk(int g, int m, int n);

// Immutable (N+1) x (N+1) table; entry (g, m) = K_g(m, N). Built once per N.
class KravchukTable {
   public:
    explicit KravchukTable(int n);
    int n() const { return n_; }
    Int128 operator()(int g, int m) const { return values_[static_cast<std::size_t>(g * (n_ + 1) + m)]; }

   private:
    int n_;
    std::vector<Int128> values_;
};

const KravchukTable& kravchuk_table(int n);

// S_g^(e) = 2^{-N} Σ_m (-1)^m K_g(m, N) S_m.
template <typename Scalar>
Vec<Scalar> shadow_enumerators(const Vec<Scalar>& s) {
    const int n = sector_qubits(s);
    const auto& k = kravchuk_table(n);
    Vec<Scalar> out(n + 1);
    for (int g = 0; g <= n; ++g) {
        Scalar acc(0);
        for (int m = 0; m <= n; ++m) {
            Scalar term = from_integer<Scalar>(k(g, m)) * s[m];
            acc += (m % 2) ? Scalar(-term) : term;
        }
        out[g] = acc * power_of_two<Scalar>(-n);
    }
    return out;
}

// Inverse map: S_m = (-1)^m 2^{-N} Σ_g K_m(g, N) S_g^(e).
template <typename Scalar>
Vec<Scalar> sectors_from_shadow(const Vec<Scalar>& e) {
    const int n = sector_qubits(e);
    const auto& k = kravchuk_table(n);
    Vec<Scalar> out(n + 1);
    for (int m = 0; m <= n; ++m) {
        Scalar acc(0);
        for (int g = 0; g <= n; ++g) {
            acc += from_integer<Scalar>(k(m, g)) * e[g];
        }
        acc *= power_of_two<Scalar>(-n);
        out[m] = (m % 2) ? Scalar(-acc) : acc;
    }
    return out;
}

// 2^{-N} Σ_m K_{g}(m, N) S_m for each g; nonnegative for physical states.
template <typename Scalar>
Vec<Scalar> unsigned_kravchuk_transform(const Vec<Scalar>& s) {
    const int n = sector_qubits(s);
    const auto& k = kravchuk_table(n);
    Vec<Scalar> out(n + 1);
    for (int g = 0; g <= n; ++g) {
        Scalar acc(0);
        for (int m = 0; m <= n; ++m) {
            acc += from_integer<Scalar>(k(g, m)) * s[m];
        }
        out[g] = acc * power_of_two<Scalar>(-n);
    }
    return out;
}

// 2^{-k} Σ_{i<=k} (-1)^i K_m(i, k) C(N-i, k-i) S_i; subset-averaged shadow bound.
template <typename Scalar>
Scalar subset_shadow_bound(const Vec<Scalar>& s, int k, int m) {
    const int n = sector_qubits(s);
    Scalar acc(0);
    for (int i = 0; i <= k; ++i) {
        Scalar term = from_integer<Scalar>(kravchuk(m, i, k)) * binom<Scalar>(n - i, k - i) * s[i];
        acc += (i % 2) ? Scalar(-term) : term;
    }
    return acc * power_of_two<Scalar>(-k);
}

// Shor-Laflamme enumerators. A_m(ρ,ρ) = S_m with no extra prefactor.
struct EnumeratorPair {
    Eigen::VectorXd A;
    Eigen::VectorXd B;
    Eigen::VectorXd C;
};

// Dense path, N <= 6. Verifies the A/B and A/C polynomial dualities at sample points.
EnumeratorPair shor_laflamme(const Eigen::MatrixXcd& m1, const Eigen::MatrixXcd& m2);

// Σ_m c_m x^{N-m} y^m.
double enumerator_polynomial(const Eigen::VectorXd& coeffs, double x, double y);

struct DoubleCopyReport {
    int n = 0;
    // Per m: eigenvalue -> multiplicity.
    std::vector<std::map<long long, long long>> expected;
    std::vector<std::map<long long, long long>> observed;
    double max_rounding_error = 0.0;
    double max_commutator = 0.0;
    double max_shadow_deviation = 0.0;
    bool spectra_match = false;
    bool ok = false;
};

// Builds Σ_{wt=m} σ_μ⊗σ_μ densely (N <= 4), compares spectra to (-1)^m K_m(g, N)
// with multiplicity C(N,g) 3^g, checks pairwise commutation, and compares
// 2^N ⟨Ψ|Q_g|Ψ⟩ with the shadow enumerators on random doubled states.
DoubleCopyReport double_copy_spectrum_check(int n, std::uint64_t seed = 7, int random_states = 8);

// Coefficients p_s over s ∈ {0,1}^N (mask in basis bit convention, bit set = triplet).
std::vector<double> sector_operator_coefficients(int n, int m);
std::vector<double> shadow_projector_coefficients(int n, int g);

// 2 sqrt(⟨ψψ| Σ_s p_s ⊗ P_{s_α} |ψψ⟩); throws if the radicand is below -1e-9.
double concurrence_general(const PureState& state, const std::vector<double>& p);

}  // namespace sectorlens
