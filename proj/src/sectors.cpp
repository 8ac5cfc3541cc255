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

#include "sectorlens/sectors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace sectorlens {

namespace {

void require_agreement(const char* what, double direct, double formula) {
    if (std::abs(direct - formula) > 1e-8 * std::max(1.0, std::abs(direct))) {
        std::ostringstream msg;
        msg.precision(17);
        msg << what << ": direct value " << direct << " disagrees with sector formula " << formula;
        throw computation_error(msg.str());
    }
}

std::vector<int> labels_of_mask(std::uint64_t mask, int n) {
    std::vector<int> out;
    for (int q = 1; q <= n; ++q) {
        if (mask & qubit_bit(q, n)) {
            out.push_back(q);
        }
    }
    return out;
}

void check_subset(const std::vector<int>& subset, int n) {
    std::vector<int> a = subset;
    std::sort(a.begin(), a.end());
    if (a.empty() || static_cast<int>(a.size()) >= n) {
        throw contract_error("subset size must be in 1..N-1");
    }
    if (std::adjacent_find(a.begin(), a.end()) != a.end() || a.front() < 1 || a.back() > n) {
        throw contract_error("subset labels must be distinct and within 1..N");
    }
}

SectorVector sectors_for(const PureState& state) {
    return state.n_qubits() <= kEnumerationCap ? sector_lengths(state) : sector_lengths_walsh(state);
}

}  // namespace

SectorVector sector_lengths(const PureState& state) {
    const int n = state.n_qubits();
    if (n > kEnumerationCap) {
        throw capability_error("direct Pauli enumeration is capped at N=" + std::to_string(kEnumerationCap) +
                               "; use sector_lengths_from_purities for N=" + std::to_string(n));
    }
    SectorVector s = SectorVector::Zero(n + 1);
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    for (std::uint64_t code = 0; code < count; ++code) {
        PauliIndex mu = PauliIndex::from_code(code, n);
        double x = expect_pauli(state, mu);
        s[mu.weight()] += x * x;
    }
    return s;
}

SectorVector sector_lengths(const Eigen::MatrixXcd& rho) {
    const auto dim = static_cast<std::uint64_t>(rho.rows());
    if (rho.rows() != rho.cols() || !std::has_single_bit(dim)) {
        throw contract_error("sector_lengths needs a square 2^k operator");
    }
    const int k = std::countr_zero(dim);
    if (k > kEnumerationCap) {
        throw capability_error("dense sector enumeration is capped at " + std::to_string(kEnumerationCap) + " qubits");
    }
    SectorVector s = SectorVector::Zero(k + 1);
    const std::uint64_t count = std::uint64_t{1} << (2 * k);
    for (std::uint64_t code = 0; code < count; ++code) {
        PauliIndex mu = PauliIndex::from_code(code, k);
        Complex x = trace_pauli(rho, mu);
        if (std::abs(x.imag()) > 1e-9) {
            throw contract_error("operator is not Hermitian");
        }
        s[mu.weight()] += x.real() * x.real();
    }
    return s;
}

void walsh_hadamard(Complex* data, std::size_t size) {
    for (std::size_t h = 1; h < size; h <<= 1) {
        for (std::size_t i = 0; i < size; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                Complex u = data[j];
                Complex v = data[j + h];
                data[j] = u + v;
                data[j + h] = u - v;
            }
        }
    }
}

void correlation_table(const Eigen::VectorXcd& psi, std::vector<Complex>& out) {
    const auto dim = static_cast<std::size_t>(psi.size());
    out.resize(dim * dim);
    for (std::size_t a = 0; a < dim; ++a) {
        Complex* row = out.data() + a * dim;
        for (std::size_t i = 0; i < dim; ++i) {
            row[i] = std::conj(psi[static_cast<Eigen::Index>(i ^ a)]) * psi[static_cast<Eigen::Index>(i)];
        }
        walsh_hadamard(row, dim);
    }
}

SectorVector sector_lengths_walsh(const PureState& state) {
    const int n = state.n_qubits();
    const std::size_t dim = state.dim();
    SectorVector s = SectorVector::Zero(n + 1);
    std::vector<Complex> row(dim);
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t i = 0; i < dim; ++i) {
            row[i] = std::conj(state[i ^ a]) * state[i];
        }
        walsh_hadamard(row.data(), dim);
        for (std::size_t b = 0; b < dim; ++b) {
            s[std::popcount(a | b)] += std::norm(row[b]);
        }
    }
    return s;
}

double purity(const Eigen::MatrixXcd& rho) {
    return rho.squaredNorm();
}

std::vector<double> subset_purities(const PureState& state) {
    const int n = state.n_qubits();
    const std::uint64_t full = state.dim() - 1;
    std::vector<double> out(state.dim(), 0.0);
    out[0] = 1.0;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        // Pure global state: both sides of a cut have equal purity.
        std::uint64_t side = std::popcount(mask) * 2 <= n ? mask : (full ^ mask);
        if (side == 0) {
            out[mask] = 1.0;
            continue;
        }
        out[mask] = purity(partial_trace(state, labels_of_mask(side, n)).matrix);
    }
    return out;
}

SectorVector sector_lengths_from_purities(const PureState& state) {
    const int n = state.n_qubits();
    const auto pur = subset_purities(state);
    std::vector<double> by_size(n + 1, 0.0);
    for (std::uint64_t mask = 0; mask < pur.size(); ++mask) {
        by_size[std::popcount(mask)] += pur[mask];
    }
    SectorVector s(n + 1);
    for (int k = 0; k <= n; ++k) {
        double v = std::ldexp(by_size[k], k);
        for (int m = 0; m < k; ++m) {
            v -= binom<double>(n - m, k - m) * s[m];
        }
        s[k] = v;
    }
    return s;
}

double overlap_R(const PureState& state) {
    return std::norm(state.amplitudes().dot(time_reverse(state).amplitudes()));
}

double overlap_R(const ReducedState& reduced) {
    return (reduced.matrix * spin_flip(reduced.matrix)).trace().real();
}

std::pair<double, double> reduced_purity_sum(const PureState& state, int k) {
    const int n = state.n_qubits();
    if (k < 1 || k > n - 1) {
        throw contract_error("k must be in 1..N-1");
    }
    double pur = 0.0;
    double ovl = 0.0;
    for (const auto& a : subsets(n, k)) {
        ReducedState r = partial_trace(state, a);
        pur += purity(r.matrix);
        ovl += overlap_R(r);
    }
    const SectorVector s = sectors_for(state);
    require_agreement("subset purity sum", pur, purity_sum_formula<double>(s, k));
    require_agreement("subset overlap sum", ovl, overlap_sum_formula<double>(s, k));
    return {pur, ovl};
}

double linear_entropy_avg(const PureState& state, int k) {
    const int n = state.n_qubits();
    if (k < 1 || k > n - 1) {
        throw contract_error("k must be in 1..N-1");
    }
    double direct = 0.0;
    for (const auto& a : subsets(n, k)) {
        direct += 2.0 * (1.0 - purity(partial_trace(state, a).matrix));
    }
    const double formula = linear_entropy_formula<double>(sectors_for(state), k);
    require_agreement("average linear entropy", direct, formula);
    return formula;
}

double purity_overlap_functional(const PureState& state, const std::vector<int>& subset) {
    check_subset(subset, state.n_qubits());
    ReducedState r = partial_trace(state, subset);
    return purity(r.matrix) + overlap_R(r);
}

}  // namespace sectorlens
