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

#include "sectorlens/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <boost/multiprecision/gmp.hpp>

namespace sectorlens {

namespace {

using boost::multiprecision::mpz_int;

Json integer_to_json(const mpz_int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

mpz_int integer_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return mpz_int(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        try {
            return mpz_int(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw contract_error("expected an integer, got " + j.dump());
}

Json row_json(const RVec& coeffs, const Rational& rhs) {
    return Json{{"coeffs", rationals_to_json(coeffs)}, {"rhs", rational_to_json(rhs)}};
}

Json ids_json(const std::vector<std::string>& ids) {
    Json out = Json::array();
    for (const auto& id : ids) {
        out.push_back(id);
    }
    return out;
}

}  // namespace

Json state_to_json(const PureState& state) {
    Json amps = Json::array();
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        amps.push_back(Json::array({state[i].real(), state[i].imag()}));
    }
    return Json{{"n_qubits", state.n_qubits()}, {"amplitudes", amps}};
}

PureState state_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n_qubits") || !j.contains("amplitudes")) {
        throw contract_error("state file needs n_qubits and amplitudes");
    }
    if (!j["n_qubits"].is_number_integer()) {
        throw contract_error("n_qubits must be an integer");
    }
    const int n = j["n_qubits"].get<int>();
    if (n < 1 || n > kMaxQubits) {
        throw contract_error("n_qubits must be in 1.." + std::to_string(kMaxQubits));
    }
    const Json& amps = j["amplitudes"];
    const std::size_t dim = std::size_t{1} << n;
    if (!amps.is_array() || amps.size() != dim) {
        throw contract_error("amplitudes must list 2^n_qubits = " + std::to_string(dim) + " entries");
    }
    Eigen::VectorXcd psi(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        const Json& a = amps[i];
        if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
            throw contract_error("amplitude " + std::to_string(i) + " must be [re, im]");
        }
        psi[static_cast<Eigen::Index>(i)] = Complex(a[0].get<double>(), a[1].get<double>());
    }
    return PureState(n, std::move(psi));
}

PureState load_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw contract_error("cannot open state file '" + path + "'");
    }
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw contract_error("state file '" + path + "' is not valid JSON: " + e.what());
    }
    return state_from_json(j);
}

void save_state(const std::string& path, const PureState& state) {
    std::ofstream out(path);
    if (!out) {
        throw contract_error("cannot write state file '" + path + "'");
    }
    out << state_to_json(state).dump(2) << '\n';
}

std::string state_hash(const PureState& state) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::int64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= static_cast<std::uint64_t>(v >> (8 * b)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    mix(state.n_qubits());
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        mix(std::llround(state[i].real() * 1e12));
        mix(std::llround(state[i].imag() * 1e12));
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json rational_to_json(const Rational& q) {
    return Json::array({integer_to_json(numerator(q)), integer_to_json(denominator(q))});
}

Rational rational_from_json(const Json& j) {
    if (j.is_array() && j.size() == 2) {
        const mpz_int den = integer_from_json(j[1]);
        if (den == 0) {
            throw contract_error("rational with zero denominator");
        }
        return Rational(integer_from_json(j[0]), den);
    }
    if (j.is_number_integer() || j.is_string()) {
        return Rational(integer_from_json(j));
    }
    throw contract_error("expected [numerator, denominator], got " + j.dump());
}

Json rationals_to_json(const RVec& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(rational_to_json(v[i]));
    }
    return out;
}

std::string format_number(double x) {
    const double r = std::round(x);
    if (std::abs(x - r) < 1e-9) {
        return std::to_string(static_cast<long long>(r));
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string format_vector(const Eigen::VectorXd& v) {
    std::string out = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + format_number(v[i]);
    }
    return out + ")";
}

std::string format_vector(const RVec& v) {
    std::string out = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + to_string(v[i]);
    }
    return out + ")";
}

Json sectors_to_json(const SectorVector& s, const std::string& name, const PureState& state) {
    return Json{{"state", name},
                {"hash", state_hash(state)},
                {"n_qubits", state.n_qubits()},
                {"sectors", std::vector<double>(s.data(), s.data() + s.size())}};
}

namespace {

// Full precision, but round-off around integers is dropped.
void write_csv_number(std::ostream& out, double x) {
    const double r = std::round(x);
    if (std::abs(x - r) < 1e-12) {
        out << (r == 0 ? 0.0 : r);
    } else {
        out << x;
    }
}

}  // namespace

std::string sectors_csv(const SectorVector& s) {
    std::ostringstream out;
    out.precision(17);
    out << "m,S_m\n";
    for (Eigen::Index m = 0; m < s.size(); ++m) {
        out << m << ',';
        write_csv_number(out, s[m]);
        out << '\n';
    }
    return out.str();
}

Json shadow_to_json(const Eigen::VectorXd& shadow, const std::string& name, const PureState& state) {
    const int n = static_cast<int>(shadow.size()) - 1;
    Json entries = Json::array();
    for (int g = 0; g <= n; ++g) {
        entries.push_back(Json{{"g", g}, {"value", shadow[g]}, {"vanishes", (n - g) % 2 == 1}});
    }
    return Json{{"state", name}, {"hash", state_hash(state)}, {"n_qubits", n}, {"shadow", entries}};
}

std::string shadow_csv(const Eigen::VectorXd& shadow) {
    std::ostringstream out;
    out.precision(17);
    const int n = static_cast<int>(shadow.size()) - 1;
    out << "g,Se_g,vanishes\n";
    for (int g = 0; g <= n; ++g) {
        out << g << ',';
        write_csv_number(out, shadow[g]);
        out << ',' << ((n - g) % 2 ? 1 : 0) << '\n';
    }
    return out.str();
}

Json constraint_to_json(const Constraint& c) {
    Json j = row_json(c.coeffs, c.rhs);
    j["id"] = c.id;
    return j;
}

Json region_to_json(const RegionSpec& region) {
    Json eq = Json::array();
    Json ub = Json::array();
    for (const auto& c : region.equalities) {
        eq.push_back(constraint_to_json(c));
    }
    for (const auto& c : region.inequalities) {
        ub.push_back(constraint_to_json(c));
    }
    return Json{{"n", region.n}, {"region", region.name}, {"variables", "S_0..S_N"},
                {"equalities", eq}, {"inequalities", ub}, {"inequality_sense", "<="}};
}

Json projected_row_to_json(const ProjectedRow& row) {
    Json j = row_json(row.a, row.b);
    j["ids"] = ids_json(row.ids);
    return j;
}

Json vertices_to_json(const EliminatedRegion& reduced, const std::vector<Vertex>& vertices) {
    Json free = Json::array();
    for (int v : reduced.free_vars) {
        free.push_back("S" + std::to_string(v));
    }
    Json list = Json::array();
    for (const auto& v : vertices) {
        Json tight = Json::array();
        for (std::size_t t : v.tight) {
            tight.push_back(ids_json(reduced.inequalities[t].ids));
        }
        list.push_back(Json{{"free", rationals_to_json(v.x)}, {"sectors", rationals_to_json(v.s)}, {"tight", tight}});
    }
    return Json{{"n", reduced.n}, {"free_vars", free}, {"vertices", list}};
}

Json report_to_json(const RegionReport& report) {
    Json violated = Json::array();
    for (const auto& v : report.violated) {
        violated.push_back(Json{{"id", v.id}, {"slack", v.value}});
    }
    return Json{{"member", report.member},
                {"margin", report.margin},
                {"snap_error", report.snap_error},
                {"tight", ids_json(report.tight)},
                {"violated", violated}};
}

Json dual_witness_to_json(const DualWitness& w) {
    return Json{{"n", w.n},
                {"objective", rational_to_json(w.objective)},
                {"y", rationals_to_json(w.y)},
                {"y_prime", rationals_to_json(w.y_prime)},
                {"Q", rationals_to_json(w.q)}};
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

}  // namespace sectorlens
