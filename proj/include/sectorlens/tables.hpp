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

#include <optional>
#include <string>
#include <vector>

#include "sectorlens/numeric.hpp"
#include "sectorlens/region.hpp"
#include "sectorlens/sectors.hpp"

namespace sectorlens {

// ---- Published reference data. State expressions use the zoo grammar.

struct TableIRow {
    int n = 0;
    std::string label;
    std::string expression;
    RVec free;         // (S_1, ..., S_d) over the free coordinates of R
    bool edge = false;  // listed as an edge point rather than a vertex
};
const std::vector<TableIRow>& table_one();

struct TableIIRow {
    int n = 0;
    std::string label;
    std::string expression;
    std::vector<std::string> minimizes;  // objective names, e.g. "EL1", "Se0"
    std::vector<std::string> maximizes;
    std::vector<std::string> numerical_only;  // extremal claims resting on numerics alone
};
const std::vector<TableIIRow>& table_two();

// Objectives covered by table_two() for one N.
std::vector<std::string> table_two_objectives(int n);

struct TableIIIRow {
    int n = 0;
    int m = 0;
    Rational min;
    std::string min_label;
    std::string min_expression;
    Rational max;
    std::string max_label;
    std::string max_expression;
};
const std::vector<TableIIIRow>& table_three();

struct TableIVRow {
    int n = 0;
    int k = 0;  // A = first k qubits
    Rational min;
    std::string label;
    std::string expression;  // empty for numerical-only rows
    double purity = 0.0;     // published split (Tr ρ_A², R_ρA)
    double overlap = 0.0;
    bool any_state = false;
};
const std::vector<TableIVRow>& table_four();

// Minimum of Tr ρ_A² + R over pure states as conjectured from the table:
// 1 for k = 1, 2^{k-N} for 2k > N, else 2^{1-k}.
Rational purity_overlap_conjecture(int n, int k);

struct PublishedForm {
    int n = 0;
    std::string region;
    std::vector<std::string> relations;
};
// Eliminated (in)equality systems for N = 2..6 and the reduced six-qubit polytope.
const std::vector<PublishedForm>& published_forms();

// ---- Regeneration from engine computations

struct TableIEntry {
    TableIRow row;
    SectorVector engine;
    bool matches = false;    // engine sectors equal the published point (1e-9)
    bool member = false;     // exact point lies in R
    bool vertex = false;     // exact point is a vertex of R
    bool reduced_vertex = false;  // N = 6: vertex of R6-reduced
};
std::vector<TableIEntry> regenerate_table_one();

struct TableIIEntry {
    int n = 0;
    std::string objective;
    bool maximize = false;
    Rational extremum;  // over the vertices of R
    std::vector<std::string> published;  // states listed for this objective and direction
    std::vector<std::string> derived;    // Table I states attaining the extremum
    bool numerical_only = false;
    bool matches = false;
};
std::vector<TableIIEntry> regenerate_table_two();

struct TableIIIEntry {
    int n = 0;
    int m = 0;
    bool maximize = false;
    Rational published;
    std::string label;
    std::string expression;
    double engine = 0.0;   // S_m of the named state
    Rational lp_bound;     // exact extremum of S_m over R
    bool matches = false;  // engine equals published within 1e-9
    bool proven = false;   // published value equals the R extremum
};
std::vector<TableIIIEntry> regenerate_table_three(int n_max = 8);

struct TableIVEntry {
    TableIVRow row;
    std::optional<double> engine;  // purity + overlap of the named state
    std::optional<double> purity;
    std::optional<double> overlap;
    Rational conjecture;
    bool matches = false;
};
std::vector<TableIVEntry> regenerate_table_four();

}  // namespace sectorlens
