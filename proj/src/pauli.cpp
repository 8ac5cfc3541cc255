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

#include "sectorlens/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace sectorlens {

namespace {

inline int parity(std::uint64_t v) {
    return std::popcount(v) & 1;
}

}  // namespace

PureState::PureState(int n_qubits, Eigen::VectorXcd amplitudes) : n_(n_qubits), psi_(std::move(amplitudes)) {
    if (n_ < 1 || n_ > kMaxQubits) {
        throw contract_error("n_qubits must be in 1.." + std::to_string(kMaxQubits) + ", got " +
                             std::to_string(n_));
    }
    if (static_cast<std::uint64_t>(psi_.size()) != dim()) {
        throw contract_error("expected " + std::to_string(dim()) + " amplitudes, got " +
                             std::to_string(psi_.size()));
    }
    if (!psi_.allFinite()) {
        throw contract_error("amplitudes must be finite");
    }
    double norm = psi_.norm();
    if (std::abs(norm - 1.0) > 1e-6) {
        std::ostringstream msg;
        msg << "state norm " << norm << " deviates from 1 by more than 1e-6";
        throw contract_error(msg.str());
    }
    psi_ /= norm;
}

PureState PureState::basis(int n_qubits, std::uint64_t index) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
    if (index >= static_cast<std::uint64_t>(v.size())) {
        throw contract_error("basis index out of range");
    }
    v[static_cast<Eigen::Index>(index)] = 1.0;
    return PureState(n_qubits, std::move(v));
}

PureState tensor(const PureState& a, const PureState& b) {
    int n = a.n_qubits() + b.n_qubits();
    if (n > kMaxQubits) {
        throw capability_error("tensor product exceeds " + std::to_string(kMaxQubits) + " qubits");
    }
    Eigen::VectorXcd v(Eigen::Index{1} << n);
    const auto db = static_cast<Eigen::Index>(b.dim());
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(a.dim()); ++i) {
        v.segment(i * db, db) = a.amplitudes()[i] * b.amplitudes();
    }
    return PureState(n, std::move(v));
}

PureState haar_random(int n_qubits, std::mt19937_64& rng) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw contract_error("n_qubits must be in 1.." + std::to_string(kMaxQubits));
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(Eigen::Index{1} << n_qubits);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double re = gauss(rng);
        double im = gauss(rng);
        v[i] = Complex(re, im);
    }
    v.normalize();
    return PureState(n_qubits, std::move(v));
}

PauliIndex::PauliIndex(std::vector<std::uint8_t> indices) : idx_(std::move(indices)) {
    for (auto m : idx_) {
        if (m > 3) {
            throw contract_error("Pauli index entries must be in {0,1,2,3}");
        }
    }
}

PauliIndex PauliIndex::parse(const std::string& text) {
    std::vector<std::uint8_t> v;
    for (char c : text) {
        switch (c) {
            case 'I': case 'i': case '0': v.push_back(0); break;
            case 'X': case 'x': case '1': v.push_back(1); break;
            case 'Y': case 'y': case '2': v.push_back(2); break;
            case 'Z': case 'z': case '3': v.push_back(3); break;
            default: throw contract_error(std::string("bad Pauli letter '") + c + "'");
        }
    }
    return PauliIndex(std::move(v));
}

PauliIndex PauliIndex::from_code(std::uint64_t code, int n) {
    std::vector<std::uint8_t> v(n);
    for (int q = n - 1; q >= 0; --q) {
        v[q] = static_cast<std::uint8_t>(code & 3);
        code >>= 2;
    }
    return PauliIndex(std::move(v));
}

int PauliIndex::weight() const {
    return static_cast<int>(std::count_if(idx_.begin(), idx_.end(), [](std::uint8_t m) { return m != 0; }));
}

std::string PauliIndex::str() const {
    static const char letters[] = "IXYZ";
    std::string s;
    for (auto m : idx_) {
        s.push_back(letters[m]);
    }
    return s;
}

std::uint64_t PauliIndex::x_mask() const {
    const int n = size();
    std::uint64_t m = 0;
    for (int q = 0; q < n; ++q) {
        if (idx_[q] == 1 || idx_[q] == 2) {
            m |= qubit_bit(q + 1, n);
        }
    }
    return m;
}

std::uint64_t PauliIndex::z_mask() const {
    const int n = size();
    std::uint64_t m = 0;
    for (int q = 0; q < n; ++q) {
        if (idx_[q] == 2 || idx_[q] == 3) {
            m |= qubit_bit(q + 1, n);
        }
    }
    return m;
}

int PauliIndex::y_count() const {
    return static_cast<int>(std::count(idx_.begin(), idx_.end(), std::uint8_t{2}));
}

Complex i_power(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

double expect_pauli(const PureState& state, const PauliIndex& mu) {
    if (mu.size() != state.n_qubits()) {
        throw contract_error("Pauli string length " + std::to_string(mu.size()) + " does not match " +
                             std::to_string(state.n_qubits()) + " qubits");
    }
    const std::uint64_t x = mu.x_mask();
    const std::uint64_t z = mu.z_mask();
    const auto& psi = state.amplitudes();
    Complex acc = 0.0;
    for (std::uint64_t l = 0; l < state.dim(); ++l) {
        Complex term = std::conj(psi[static_cast<Eigen::Index>(l ^ x)]) * psi[static_cast<Eigen::Index>(l)];
        acc += parity(l & z) ? -term : term;
    }
    acc *= i_power(mu.y_count());
    if (std::abs(acc.imag()) > 1e-9) {
        throw computation_error("expectation of " + mu.str() + " has imaginary part " +
                                std::to_string(acc.imag()));
    }
    return acc.real();
}

Complex trace_pauli(const Eigen::MatrixXcd& rho, const PauliIndex& mu) {
    const auto dim = static_cast<std::uint64_t>(rho.rows());
    if (rho.cols() != rho.rows() || dim != (std::uint64_t{1} << mu.size())) {
        throw contract_error("operator dimension does not match the Pauli string");
    }
    const std::uint64_t x = mu.x_mask();
    const std::uint64_t z = mu.z_mask();
    Complex acc = 0.0;
    for (std::uint64_t l = 0; l < dim; ++l) {
        Complex term = rho(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(l ^ x));
        acc += parity(l & z) ? -term : term;
    }
    return acc * i_power(mu.y_count());
}

ReducedState partial_trace(const PureState& state, const std::vector<int>& keep) {
    const int n = state.n_qubits();
    std::vector<int> a = keep;
    std::sort(a.begin(), a.end());
    if (a.empty()) {
        throw contract_error("partial_trace needs a nonempty set of kept qubits");
    }
    if (std::adjacent_find(a.begin(), a.end()) != a.end() || a.front() < 1 || a.back() > n) {
        throw contract_error("kept qubit labels must be distinct and within 1.." + std::to_string(n));
    }
    std::vector<int> rest;
    for (int q = 1; q <= n; ++q) {
        if (!std::binary_search(a.begin(), a.end(), q)) {
            rest.push_back(q);
        }
    }
    auto scatter = [n](const std::vector<int>& labels) {
        const int k = static_cast<int>(labels.size());
        std::vector<std::uint64_t> out(std::size_t{1} << k);
        for (std::uint64_t r = 0; r < out.size(); ++r) {
            std::uint64_t b = 0;
            for (int i = 0; i < k; ++i) {
                if ((r >> (k - 1 - i)) & 1) {
                    b |= qubit_bit(labels[i], n);
                }
            }
            out[r] = b;
        }
        return out;
    };
    const auto rows = scatter(a);
    const auto cols = scatter(rest);
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t e = 0; e < cols.size(); ++e) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(e)) = state[rows[r] | cols[e]];
        }
    }
    return ReducedState{a, m * m.adjoint()};
}

PureState time_reverse(const PureState& state) {
    const int n = state.n_qubits();
    const std::uint64_t full = state.dim() - 1;
    const Complex phase = i_power(n);
    Eigen::VectorXcd out(state.amplitudes().size());
    for (std::uint64_t j = 0; j <= full; ++j) {
        Complex v = phase * std::conj(state[j]);
        out[static_cast<Eigen::Index>(j ^ full)] = parity(j) ? -v : v;
    }
    return PureState(n, std::move(out));
}

Eigen::MatrixXcd spin_flip(const Eigen::MatrixXcd& rho) {
    const auto dim = static_cast<std::uint64_t>(rho.rows());
    if (rho.cols() != rho.rows() || !std::has_single_bit(dim)) {
        throw contract_error("spin_flip needs a square 2^k matrix");
    }
    const std::uint64_t full = dim - 1;
    Eigen::MatrixXcd out(rho.rows(), rho.cols());
    for (std::uint64_t r = 0; r < dim; ++r) {
        for (std::uint64_t c = 0; c < dim; ++c) {
            Complex v = std::conj(rho(static_cast<Eigen::Index>(r ^ full), static_cast<Eigen::Index>(c ^ full)));
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = parity(r ^ c) ? -v : v;
        }
    }
    return out;
}

Eigen::MatrixXcd pauli_matrix(const PauliIndex& mu) {
    const std::uint64_t dim = std::uint64_t{1} << mu.size();
    const std::uint64_t x = mu.x_mask();
    const std::uint64_t z = mu.z_mask();
    const Complex ph = i_power(mu.y_count());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t l = 0; l < dim; ++l) {
        m(static_cast<Eigen::Index>(l ^ x), static_cast<Eigen::Index>(l)) = parity(l & z) ? -ph : ph;
    }
    return m;
}

}  // namespace sectorlens
