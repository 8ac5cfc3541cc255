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
#include "sectorlens/pauli.hpp"
#include "sectorlens/sectors.hpp"

namespace sectorlens {

// coeffs · (S_0, ..., S_N)  (= or <=)  rhs.
struct Constraint {
    std::string id;
    RVec coeffs;
    Rational rhs;
};

// Named regions: "R1", "R2", "R3", "R" (= R2 ∩ R3) and "R6-reduced" (N = 6 only,
// R cut by five extra faces found numerically; not a proven outer bound).
struct RegionSpec {
    int n = 0;
    std::string name;
    std::vector<Constraint> equalities;
    std::vector<Constraint> inequalities;  // sense <=
};

RegionSpec build_region(int n, const std::string& which);

// Single-constraint families, exposed for tests and the LP builder.
std::vector<Constraint> positivity_rows(int n);
std::vector<Constraint> macwilliams_rows(int n);
std::vector<Constraint> shadow_rows(int n);
std::vector<Constraint> schmidt_rows(int n);  // the three k-indexed families defining R3

// Affine row a·x <= b over the free coordinates; `ids` lists every source
// constraint that collapsed onto this row.
struct ProjectedRow {
    std::vector<std::string> ids;
    RVec a;
    Rational b;
};

// S = offset + basis · x with x = (S_f) for f in free_vars.
struct EliminatedRegion {
    int n = 0;
    std::vector<int> free_vars;
    std::vector<int> pivot_vars;
    RVec offset;
    RMat basis;
    std::vector<ProjectedRow> inequalities;

    int dim() const { return static_cast<int>(free_vars.size()); }
    RVec lift(const RVec& x) const;
    // Pivot variable `m` as (constant, coefficients over free coordinates).
    std::pair<Rational, RVec> expression(int m) const;
};

// Row-reduces the equalities with pivot preference S_0, S_N, S_{N-1}, ...,
// substitutes into every inequality, drops rows that become constant and merges
// positively proportional rows. Throws computation_error if a constant row is violated.
EliminatedRegion eliminate(const RegionSpec& region);

// Scales a row so its first nonzero coefficient has magnitude one.
ProjectedRow normalized(const ProjectedRow& row);

struct Vertex {
    RVec x;  // free coordinates
    RVec s;  // full (S_0, ..., S_N)
    std::vector<std::size_t> tight;  // indices into EliminatedRegion::inequalities
};

// Exact vertices by intersecting every d-subset of faces; free dimension must be <= 3.
std::vector<Vertex> enumerate_vertices(const EliminatedRegion& reduced);
std::vector<Vertex> enumerate_vertices(const RegionSpec& region);

// Rows of `reduced` that are facets of the polytope spanned by `vertices`
// (tight vertices span a (d-1)-dimensional affine hull), normalized and deduplicated.
std::vector<ProjectedRow> facets(const EliminatedRegion& reduced, const std::vector<Vertex>& vertices);

// Region from text relations over S_0..S_N such as "S4=3-2*S1+S2" or the
// chain "0<=S1<=S2-2<=4"; S_0 = 1 and S_m >= 0 (m >= 1) are always added.
RegionSpec region_from_relations(int n, const std::string& name, const std::vector<std::string>& relations);

struct Slack {
    std::string id;
    double value;  // rhs - lhs, divided by the row's max |coefficient|
};

struct RegionReport {
    bool member = false;
    std::vector<Slack> violated;
    std::vector<std::string> tight;
    double margin = 0.0;      // smallest normalized inequality slack
    double snap_error = 0.0;  // max |S_m - snapped S_m|
};

// Snaps each S_m to a rational (denominator <= 1e9) and evaluates every row exactly.
RegionReport check_membership(const SectorVector& s, const RegionSpec& region, double tol = 1e-7);
RegionReport check_membership(const RVec& s, const RegionSpec& region, double tol = 0.0);

// Linear objectives are coefficient vectors over (S_0, ..., S_N); since S_0 = 1
// the S_0 entry carries any constant term.
RVec objective_sector(int n, int m);
RVec objective_shadow(int n, int g);
RVec objective_linear_entropy(int n, int k);

// Sums of terms like "S3", "SN", "-2*S1", "Se2" (shadow), "EL1" (linear entropy
// summed over subsets), "3/2" (constant). Example: "S2-2*S1+4".
RVec parse_objective(int n, const std::string& text);

struct Extremum {
    Rational min;
    Rational max;
    std::vector<Vertex> argmin;
    std::vector<Vertex> argmax;
};

Extremum extremize_linear_on_vertices(const RegionSpec& region, const RVec& objective);
Extremum extremize_linear_on_vertices(const std::vector<Vertex>& vertices, const RVec& objective);

Rational evaluate(const RVec& objective, const RVec& s);

// Largest d with S_m = 0 (1e-9) for all 1 <= m <= d-1.
int qecc_detect(const PureState& state);

}  // namespace sectorlens
