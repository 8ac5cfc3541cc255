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

#include <string>
#include <vector>

#include "sectorlens/numeric.hpp"
#include "sectorlens/region.hpp"

namespace sectorlens {

// maximize objective · x + objective_constant
// subject to a_ub x <= b_ub, a_eq x = b_eq, x >= 0.
// For sector problems x = (S_1, ..., S_N).
struct LPProblem {
    int n_vars = 0;
    RVec objective;
    Rational objective_constant = 0;
    RMat a_ub;
    RVec b_ub;
    std::vector<std::string> ub_ids;
    RMat a_eq;
    RVec b_eq;
    std::vector<std::string> eq_ids;
};

enum class LPStatus { optimal, infeasible, unbounded };

std::string to_string(LPStatus status);

struct LPResult {
    LPStatus status = LPStatus::infeasible;
    Rational value;
    RVec x;
};

// Exact two-phase simplex with Bland's rule. Equalities are substituted out
// first. The returned point is re-checked against every original row.
LPResult solve_lp(const LPProblem& problem);

// S_0 = 1 is folded into the right-hand sides and the objective constant.
LPProblem lp_from_region(const RegionSpec& region, const RVec& objective);

// Maximize S_N subject to the odd-k even-part rows and the k < N/2 purity
// symmetry rows only. Even N in 4..16.
LPProblem build_maxSN_primal(int n);

struct DualWitness {
    int n = 0;
    RVec y;        // y_q, q = 1..N/2-1 at index q-1
    RVec y_prime;  // y'_k, k = 0..N/2-1
    RVec q;        // Q_m, m = 1..N at index m-1
    Rational objective;
};

// Builds the closed-form dual point for even N in 4..24 and certifies it:
// y >= 0, Q_m >= c_m, the vanishing pattern of Q_{N-r}, and objective 2^{N-1}+1.
// Throws computation_error naming the offending index.
DualWitness verify_dual_witness(int n);

struct S1S2Bound {
    Rational s1;
    Rational s2;
    bool small_n = false;  // N = 2: S_2 bound read off S_1 + S_2 = 3
};

// S_1 <= N from the k = 2 purity/overlap rows, S_2 <= C(N,2) from the k = 3
// even-part row; cross-checked against solve_lp over R3.
S1S2Bound bound_S1_S2(int n);

}  // namespace sectorlens
