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

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sectorlens/numeric.hpp"
#include "sectorlens/pauli.hpp"
#include "sectorlens/sectors.hpp"

namespace sectorlens {

enum class Provenance { none, published, computed };

std::string to_string(Provenance p);

// Claimed reduced spectra for k-qubit marginals: each group lists how many
// marginals (-1 = all remaining) carry the given nonzero eigenvalues.
struct SpectrumClaim {
    int k = 0;
    std::vector<std::pair<int, std::vector<double>>> groups;
};

struct ZooEntry {
    std::string name;
    int n_qubits = 0;
    std::string description;
    std::optional<RVec> expected;  // (S_0, ..., S_N)
    Provenance provenance = Provenance::none;
    std::string discrepancy;  // empty when the entry is clean
    std::string printed;      // published vector text when it is not usable as-is
    int claimed_uniformity = 0;
    std::vector<SpectrumClaim> spectra;
    std::function<Eigen::VectorXcd()> amplitudes;  // unnormalized builder output
};

// Fixed named states, in catalog order.
const std::vector<ZooEntry>& zoo_catalog();
const ZooEntry* find_zoo_entry(const std::string& name);

// Parametric families accepted by build(): name and parameter names.
struct FamilyInfo {
    std::string name;
    std::vector<std::string> params;
    std::string description;
};
const std::vector<FamilyInfo>& zoo_families();

// ---- Builders

// cos(φ/2)|0...0> + sin(φ/2)|1...1>; φ = π/2 gives the standard GHZ state.
PureState ghz(int n, double phi);
PureState ghz(int n);
PureState dicke(int n, int excitations);
PureState zero_state(int n);

PureState psi4_family(double theta, double phi);
// Real 5-qubit family with S_1 = 0. Throws contract_error when the norm
// polynomial differs from one by more than 1e-9.
PureState boundary_family(double x, double y, double t);
// Unnormalized amplitude vector of boundary_family and its norm polynomial.
Eigen::VectorXcd boundary_family_vector(double x, double y, double t);
double boundary_family_norm(double x, double y, double t);
PureState psi_eta_family(double eta);
PureState phi_eta_family(double eta);

// Named fixed state from the catalog.
PureState build_named(const std::string& name);

// Expression grammar:
//   expr   := factor ('*' factor)*          tensor product, left factor first
//   factor := atom ('^' integer)?           tensor power
//   atom   := catalog name | family '(' args ')' | GHZ(N[,phi]) | Dicke(N,a)
//           | zero(N) | haar(N,seed) | '0' | '1'
// Arguments accept numbers, pi, sqrt(.), + - * / and parentheses.
// "|" and ">" are ignored, so "|AME(5,2)>|0>" style input also parses
// when factors are joined by '*'.
PureState build(const std::string& expression);

// Evaluates a numeric argument expression such as "-1/sqrt(2)" or "pi/4".
double eval_number(const std::string& text);

// ---- Family scans

struct ParamRange {
    double lo = 0.0;
    double hi = 0.0;
    int steps = 1;
};

struct FamilyPoint {
    std::vector<double> params;
    SectorVector s;
    double residual = 0.0;  // largest deviation from the family's closed-form relations
    bool ok = false;
};

// Sweeps the cartesian grid; ranges are validated against the family domain.
// For the boundary family (x, y) are rescaled onto the norm constraint.
std::vector<FamilyPoint> family_scan(const std::string& family, const std::vector<ParamRange>& grid,
                                     double tol = 1e-9);
FamilyPoint family_point(const std::string& family, const std::vector<double>& params,
                         double tol = 1e-9);

// ---- Catalog verification

struct CatalogCheck {
    std::string entry;
    std::string check;
    std::string expected;
    std::string computed;
    bool ok = false;
    bool known_discrepancy = false;
};

struct CatalogReport {
    std::vector<CatalogCheck> checks;
    // Checks that failed without a recorded discrepancy.
    int unexpected_failures() const;
};

CatalogReport verify_catalog();

// Sorted nonzero (> 1e-9) eigenvalues of every k-qubit marginal, in subsets() order.
std::vector<std::vector<double>> marginal_spectra(const PureState& state, int k);

}  // namespace sectorlens
