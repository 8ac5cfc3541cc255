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

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sectorlens/numeric.hpp"

namespace sectorlens {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 12;

// Pure state on n qubits. Basis index bit (n - q) holds qubit q, so qubit 1 is
// the most significant bit.
class PureState {
   public:
    // Rescales amplitudes whose norm is within 1e-6 of one; otherwise throws.
    PureState(int n_qubits, Eigen::VectorXcd amplitudes);

    static PureState basis(int n_qubits, std::uint64_t index);

    int n_qubits() const { return n_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_; }
    const Eigen::VectorXcd& amplitudes() const { return psi_; }
    Complex operator[](std::uint64_t i) const { return psi_[static_cast<Eigen::Index>(i)]; }

   private:
    int n_;
    Eigen::VectorXcd psi_;
};

// |a> ⊗ |b>: qubits of a come first.
PureState tensor(const PureState& a, const PureState& b);

// Haar-distributed pure state (normalized complex Gaussian vector).
PureState haar_random(int n_qubits, std::mt19937_64& rng);

// Bit of qubit label q (1-based) in an n-qubit basis index.
inline std::uint64_t qubit_bit(int q, int n) {
    return std::uint64_t{1} << (n - q);
}

// Pauli string σ_μ, μ_q ∈ {0,1,2,3} = {I,X,Y,Z}.
class PauliIndex {
   public:
    explicit PauliIndex(std::vector<std::uint8_t> indices);
    // Letters I, X, Y, Z (or digits 0-3), qubit 1 first.
    static PauliIndex parse(const std::string& text);
    // Inverse of code(): digit q of the base-4 integer (most significant first).
    static PauliIndex from_code(std::uint64_t code, int n);

    int size() const { return static_cast<int>(idx_.size()); }
    int weight() const;
    std::uint8_t operator[](int q) const { return idx_[q]; }
    const std::vector<std::uint8_t>& indices() const { return idx_; }
    std::string str() const;

    // σ_μ|j> = i^{n_y} (-1)^{|j & z_mask|} |j ^ x_mask>.
    std::uint64_t x_mask() const;
    std::uint64_t z_mask() const;
    int y_count() const;

   private:
    std::vector<std::uint8_t> idx_;
};

// i^k for integer k.
Complex i_power(int k);

struct ReducedState {
    std::vector<int> subset;  // sorted labels, first label is the most significant bit
    Eigen::MatrixXcd matrix;

    int n_qubits() const { return static_cast<int>(subset.size()); }
};

double expect_pauli(const PureState& state, const PauliIndex& mu);

// Tr(σ_μ ρ) for a dense 2^k x 2^k operator.
Complex trace_pauli(const Eigen::MatrixXcd& rho, const PauliIndex& mu);

ReducedState partial_trace(const PureState& state, const std::vector<int>& keep);

// σ_y^{⊗N} |ψ*>.
PureState time_reverse(const PureState& state);

// σ_y^{⊗k} ρ* σ_y^{⊗k} for a 2^k x 2^k matrix.
Eigen::MatrixXcd spin_flip(const Eigen::MatrixXcd& rho);

// Dense σ_μ; meant for oracles on few qubits.
Eigen::MatrixXcd pauli_matrix(const PauliIndex& mu);

}  // namespace sectorlens
