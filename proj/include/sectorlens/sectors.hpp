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

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sectorlens/numeric.hpp"
#include "sectorlens/pauli.hpp"

namespace sectorlens {

// (S_0, ..., S_N).
using SectorVector = Eigen::VectorXd;

inline constexpr int kEnumerationCap = 8;

// Enumerates all 4^N Pauli strings. N <= kEnumerationCap.
SectorVector sector_lengths(const PureState& state);

// Same quantity for a dense (possibly mixed) operator on k <= kEnumerationCap qubits.
SectorVector sector_lengths(const Eigen::MatrixXcd& rho);

// Walsh-Hadamard route: all ⟨X^a Z^b⟩ in O(4^N N). Any N up to kMaxQubits.
SectorVector sector_lengths_walsh(const PureState& state);

// Inverts the triangular subset-purity relation; any N up to kMaxQubits.
SectorVector sector_lengths_from_purities(const PureState& state);

// Tr(ρ_A²) for every subset A, indexed by the qubit mask of A (basis bit convention).
std::vector<double> subset_purities(const PureState& state);

// F[a * 2^N + b] = ⟨ψ|X^a Z^b|ψ⟩ for the unnormalized vector psi.
void correlation_table(const Eigen::VectorXcd& psi, std::vector<Complex>& out);

// In-place unnormalized Walsh-Hadamard transform; size must be a power of two.
void walsh_hadamard(Complex* data, std::size_t size);

double purity(const Eigen::MatrixXcd& rho);

// Tr(ρ ρ̃).
double overlap_R(const PureState& state);
double overlap_R(const ReducedState& reduced);

// (Σ_{|A|=k} Tr ρ_A², Σ_{|A|=k} R_{ρ_A}) by direct reduction, cross-checked
// against the sector formulas to 1e-8. Requires 1 <= k <= N-1.
std::pair<double, double> reduced_purity_sum(const PureState& state, int k);

// Sum of the linear entropies 2(1 - Tr ρ_A²) over k-subsets. Requires 1 <= k <= N-1.
double linear_entropy_avg(const PureState& state, int k);

// Tr(ρ_A²) + R_{ρ_A}. Requires 1 <= |A| <= N-1.
double purity_overlap_functional(const PureState& state, const std::vector<int>& subset);

// ---- Closed forms in terms of the sector vector; Scalar is double or Rational.

template <typename Scalar>
int sector_qubits(const Vec<Scalar>& s) {
    return static_cast<int>(s.size()) - 1;
}

// 2^{-N} Σ (-1)^m S_m.
template <typename Scalar>
Scalar overlap_from_sectors(const Vec<Scalar>& s) {
    const int n = sector_qubits(s);
    Scalar acc(0);
    for (int m = 0; m <= n; ++m) {
        acc += (m % 2 ? Scalar(-1) : Scalar(1)) * s[m];
    }
    return acc * power_of_two<Scalar>(-n);
}

// Σ_{|A|=k} Tr ρ_A² for a pure state.
template <typename Scalar>
Scalar purity_sum_formula(const Vec<Scalar>& s, int k) {
    const int n = sector_qubits(s);
    Scalar acc(0);
    for (int m = 0; m <= k; ++m) {
        acc += binom<Scalar>(n - m, k - m) * s[m];
    }
    return acc * power_of_two<Scalar>(-k);
}

// Σ_{|A|=k} R_{ρ_A} for a pure state.
template <typename Scalar>
Scalar overlap_sum_formula(const Vec<Scalar>& s, int k) {
    const int n = sector_qubits(s);
    Scalar acc(0);
    for (int m = 0; m <= k; ++m) {
        acc += (m % 2 ? Scalar(-1) : Scalar(1)) * binom<Scalar>(n - m, k - m) * s[m];
    }
    return acc * power_of_two<Scalar>(-k);
}

template <typename Scalar>
Scalar linear_entropy_formula(const Vec<Scalar>& s, int k) {
    const int n = sector_qubits(s);
    Scalar acc(0);
    for (int m = 0; m <= k; ++m) {
        acc += binom<Scalar>(k, m) / binom<Scalar>(n, m) * s[m];
    }
    return Scalar(2) * binom<Scalar>(n, k) * (Scalar(1) - power_of_two<Scalar>(-k) * acc);
}

// Both sides of the purity-symmetry identity between k- and (N-k)-subsets.
template <typename Scalar>
std::pair<Scalar, Scalar> macwilliams_sides(const Vec<Scalar>& s, int k) {
    const int n = sector_qubits(s);
    Scalar lhs(0), rhs(0);
    for (int m = 0; m <= n - k; ++m) {
        lhs += binom<Scalar>(n - m, k) * s[m];
    }
    for (int m = 0; m <= k; ++m) {
        rhs += binom<Scalar>(n - m, n - k) * s[m];
    }
    return {lhs * power_of_two<Scalar>(k - n), rhs * power_of_two<Scalar>(-k)};
}

}  // namespace sectorlens
