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
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sectorlens/numeric.hpp"
#include "sectorlens/pauli.hpp"
#include "sectorlens/region.hpp"
#include "sectorlens/sectors.hpp"

namespace sectorlens {

enum class Direction { minimize, maximize };

Direction parse_direction(const std::string& text);
std::string to_string(Direction d);

// Either Σ c_m S_m (shadow enumerators and average linear entropies are of this
// form) or Tr ρ_A² + R_{ρ_A} for a fixed subset A.
struct SearchObjective {
    enum class Kind { linear, purity_overlap };
    Kind kind = Kind::linear;
    int n = 0;
    Eigen::VectorXd coeffs;  // over S_0..S_N
    std::vector<int> subset;
    std::string label;
};

SearchObjective linear_objective(int n, const RVec& coeffs, std::string label);
// Parses the objective grammar of parse_objective().
SearchObjective linear_objective(int n, const std::string& text);
SearchObjective purity_overlap_objective(int n, std::vector<int> subset);

// The objective as a homogeneous quartic in the raw amplitudes (no normalization).
double objective_value(const SearchObjective& objective, const Eigen::VectorXcd& psi);
// ∂f/∂Re ψ_j + i ∂f/∂Im ψ_j.
Eigen::VectorXcd objective_gradient(const SearchObjective& objective, const Eigen::VectorXcd& psi);

inline constexpr int kSearchMaxQubits = 8;
inline constexpr int kPurityOverlapMaxQubits = 10;

struct SearchProblem {
    SearchObjective objective;
    Direction direction = Direction::minimize;
    int restarts = 0;  // 0: 64 for N <= 6, 256 above
    std::uint64_t seed = 0;
    int max_iterations = 10000;
    double gradient_tol = 1e-9;
    int threads = 0;  // 0: SECTORLENS_THREADS or hardware concurrency
    std::vector<PureState> starts;  // used for the first restarts before Haar states
};

struct RestartTrace {
    int index = 0;
    std::uint64_t seed = 0;  // Haar seed; 0 when the restart began from a supplied state
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct SearchResult {
    double value = 0.0;  // recomputed from the best state
    PureState state = PureState::basis(1, 0);
    int best_restart = 0;
    std::vector<RestartTrace> trace;
    SectorVector sectors;
    std::optional<RegionReport> region;  // membership in R (N >= 2)
};

int default_restarts(int n);
int worker_count(int requested);

// Per-restart seed: splitmix64(seed + index).
std::uint64_t restart_seed(std::uint64_t seed, int index);

SearchResult optimize(const SearchProblem& problem);

struct PurityOverlapResult {
    SearchResult search;
    double purity = 0.0;
    double overlap = 0.0;
    Rational conjecture;
    double gap = 0.0;  // search value - conjecture
};

// Minimizes Tr ρ_A² + R_{ρ_A}; 1 <= |A| < N <= 10.
PurityOverlapResult optimize_purity_overlap(int n, const std::vector<int>& subset, int restarts = 0,
                                            std::uint64_t seed = 0);

struct GapReport {
    int n = 0;
    Direction direction = Direction::minimize;
    Rational lp_value;  // optimum over R
    double search_value = 0.0;
    double gap = 0.0;  // |lp - search|, evidence only
    SearchResult search;
};

GapReport gap_probe(int n, const RVec& objective, Direction direction, int restarts = 0, std::uint64_t seed = 0);

}  // namespace sectorlens
