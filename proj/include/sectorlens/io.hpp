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

#include <json.hpp>

#include "sectorlens/lp.hpp"
#include "sectorlens/numeric.hpp"
#include "sectorlens/pauli.hpp"
#include "sectorlens/region.hpp"
#include "sectorlens/sectors.hpp"

namespace sectorlens {

using Json = nlohmann::ordered_json;

// State file: {"n_qubits": N, "amplitudes": [[re, im], ...]}, basis index
// ascending, qubit 1 most significant.
Json state_to_json(const PureState& state);
PureState state_from_json(const Json& j);
PureState load_state(const std::string& path);
void save_state(const std::string& path, const PureState& state);

// FNV-1a over the amplitudes rounded to 1e-12, as 16 hex digits.
std::string state_hash(const PureState& state);

// Rationals travel as [numerator, denominator]; each part is a JSON integer
// when it fits in 64 bits and a decimal string otherwise.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json rationals_to_json(const RVec& v);

// Doubles within 1e-9 of an integer print as that integer; others use 12
// significant digits.
std::string format_number(double x);
// "(1, 0, 0, 10, 15, 6)"
std::string format_vector(const Eigen::VectorXd& v);
std::string format_vector(const RVec& v);

Json sectors_to_json(const SectorVector& s, const std::string& name, const PureState& state);
std::string sectors_csv(const SectorVector& s);
// Every entry is listed; entries with N - g odd carry "vanishes": true.
Json shadow_to_json(const Eigen::VectorXd& shadow, const std::string& name, const PureState& state);
std::string shadow_csv(const Eigen::VectorXd& shadow);

Json constraint_to_json(const Constraint& c);
Json region_to_json(const RegionSpec& region);
Json projected_row_to_json(const ProjectedRow& row);
Json vertices_to_json(const EliminatedRegion& reduced, const std::vector<Vertex>& vertices);
Json report_to_json(const RegionReport& report);
Json dual_witness_to_json(const DualWitness& w);

// Quotes a CSV field when it holds a comma, quote or newline.
std::string csv_field(const std::string& text);

}  // namespace sectorlens
