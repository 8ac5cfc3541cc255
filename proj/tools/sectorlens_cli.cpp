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

// sectorlens command-line interface. Exit codes: 0 success, 1 computation or
// certification failure, 2 usage error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sectorlens/io.hpp"
#include "sectorlens/lp.hpp"
#include "sectorlens/region.hpp"
#include "sectorlens/search.hpp"
#include "sectorlens/sectors.hpp"
#include "sectorlens/shadow.hpp"
#include "sectorlens/tables.hpp"
#include "sectorlens/zoo.hpp"

namespace sl = sectorlens;
using sl::Json;

namespace {

enum class Format { human, json, csv };

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Non-zero exit without an error message: the result itself was printed.
struct failed_result {
    int code = 1;
};

struct StateSource {
    std::string zoo;
    std::string file;

    void add_to(CLI::App* sub) {
        auto* z = sub->add_option("--zoo", zoo, "state expression, e.g. AME(5,2) or GHZ(3)*zero(2)");
        auto* f = sub->add_option("--state", file, "state file (JSON)");
        z->excludes(f);
    }

    std::pair<sl::PureState, std::string> load() const {
        if (zoo.empty() == file.empty()) {
            throw usage_error("exactly one of --zoo or --state is required");
        }
        if (!zoo.empty()) {
            return {sl::build(zoo), zoo};
        }
        return {sl::load_state(file), file};
    }
};

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) {
        s.append(width - s.size(), ' ');
    }
    return s;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? sep : "") + parts[i];
    }
    return out;
}

std::vector<int> parse_subset(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw usage_error("cannot parse subset entry '" + item + "'");
        }
    }
    return out;
}

// Comma-separated exact values (S_0, ..., S_N), e.g. "1,0,7/2,4".
sl::RVec parse_sectors(const std::string& text) {
    std::vector<sl::Rational> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            vals.emplace_back(item);
        } catch (const std::exception&) {
            throw usage_error("cannot parse sector value '" + item + "'");
        }
    }
    if (vals.size() < 2) {
        throw usage_error("--sectors needs S_0 through S_N");
    }
    sl::RVec v(static_cast<Eigen::Index>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = vals[i];
    }
    return v;
}

class Cli {
   public:
    explicit Cli(std::ostream& out) : out_(out) {}

    Format format = Format::human;

    void emit(const Json& j) { out_ << j.dump(2) << '\n'; }
    std::ostream& out() { return out_; }

    // ---- subcommands

    int sector(const StateSource& src, const std::string& method) {
        auto [state, name] = src.load();
        sl::SectorVector s;
        if (method == "walsh") {
            s = sl::sector_lengths_walsh(state);
        } else if (method == "purities") {
            s = sl::sector_lengths_from_purities(state);
        } else {
            s = sl::sector_lengths(state);
        }
        if (format == Format::json) {
            emit(sl::sectors_to_json(s, name, state));
        } else if (format == Format::csv) {
            out_ << sl::sectors_csv(s);
        } else {
            out_ << sl::format_vector(s) << '\n';
        }
        return 0;
    }

    int shadow(const StateSource& src) {
        auto [state, name] = src.load();
        const Eigen::VectorXd e = sl::shadow_enumerators<double>(sl::sector_lengths(state));
        if (format == Format::json) {
            emit(sl::shadow_to_json(e, name, state));
        } else if (format == Format::csv) {
            out_ << sl::shadow_csv(e);
        } else {
            out_ << sl::format_vector(e) << '\n';
        }
        return 0;
    }

    int check(const StateSource& src, const std::string& sectors, const std::string& region_name) {
        std::string name;
        std::string shown;
        Json sectors_json;
        sl::RegionReport rep;
        if (!sectors.empty()) {
            if (!src.zoo.empty() || !src.file.empty()) {
                throw usage_error("--sectors excludes --zoo and --state");
            }
            const sl::RVec s = parse_sectors(sectors);
            rep = sl::check_membership(s, sl::build_region(static_cast<int>(s.size()) - 1, region_name));
            name = "S";
            shown = sl::format_vector(s);
            sectors_json = sl::rationals_to_json(s);
        } else {
            auto [state, label] = src.load();
            const auto s = sl::sector_lengths(state);
            rep = sl::check_membership(s, sl::build_region(state.n_qubits(), region_name));
            name = label;
            shown = sl::format_vector(s);
            sectors_json = std::vector<double>(s.data(), s.data() + s.size());
        }
        if (format == Format::json) {
            Json j = sl::report_to_json(rep);
            j["state"] = name;
            j["region"] = region_name;
            j["sectors"] = sectors_json;
            emit(j);
        } else if (format == Format::csv) {
            out_ << "constraint,status,slack\n";
            for (const auto& t : rep.tight) {
                out_ << sl::csv_field(t) << ",tight,0\n";
            }
            for (const auto& v : rep.violated) {
                out_ << sl::csv_field(v.id) << ",violated," << v.value << '\n';
            }
        } else {
            out_ << name << ' ' << shown << (rep.member ? " is a member of " : " lies outside ")
                 << region_name << '\n';
            out_ << "margin " << sl::format_number(rep.margin) << ", sectors snapped to rationals within "
                 << rep.snap_error << '\n';
            if (!rep.tight.empty()) {
                out_ << "zero slack: " << join(rep.tight, ", ") << '\n';
            }
            for (const auto& v : rep.violated) {
                out_ << "violated: " << v.id << " (slack " << v.value << ")\n";
            }
        }
        if (!rep.member) {
            throw failed_result{};
        }
        return 0;
    }

    int zoo_list() {
        const auto& cat = sl::zoo_catalog();
        if (format == Format::json) {
            Json entries = Json::array();
            for (const auto& e : cat) {
                entries.push_back(Json{{"name", e.name},
                                       {"n_qubits", e.n_qubits},
                                       {"description", e.description},
                                       {"provenance", sl::to_string(e.provenance)},
                                       {"discrepancy", e.discrepancy}});
            }
            Json fams = Json::array();
            for (const auto& f : sl::zoo_families()) {
                fams.push_back(Json{{"name", f.name}, {"params", f.params}, {"description", f.description}});
            }
            emit(Json{{"entries", entries}, {"families", fams}});
        } else if (format == Format::csv) {
            out_ << "name,n_qubits,provenance,description\n";
            for (const auto& e : cat) {
                out_ << sl::csv_field(e.name) << ',' << e.n_qubits << ',' << sl::to_string(e.provenance) << ','
                     << sl::csv_field(e.description) << '\n';
            }
        } else {
            for (const auto& e : cat) {
                out_ << pad(e.name, 18) << " N=" << pad(std::to_string(e.n_qubits), 3) << e.description
                     << (e.discrepancy.empty() ? "" : "  [discrepancy]") << '\n';
            }
            out_ << "\nfamilies:\n";
            for (const auto& f : sl::zoo_families()) {
                out_ << "  " << pad(f.name + "(" + join(f.params, ",") + ")", 18) << f.description << '\n';
            }
        }
        return 0;
    }

    int zoo_show(const std::string& name, const std::string& export_path) {
        const sl::ZooEntry* entry = sl::find_zoo_entry(name);
        const sl::PureState state = sl::build(name);
        const auto s = sl::sector_lengths(state);
        if (!export_path.empty()) {
            sl::save_state(export_path, state);
        }
        if (format == Format::json) {
            Json j = sl::sectors_to_json(s, name, state);
            if (entry != nullptr) {
                j["description"] = entry->description;
                j["provenance"] = sl::to_string(entry->provenance);
                if (entry->expected) {
                    j["expected"] = sl::rationals_to_json(*entry->expected);
                }
                j["discrepancy"] = entry->discrepancy;
                j["printed"] = entry->printed;
            }
            j["state_file"] = sl::state_to_json(state);
            emit(j);
        } else if (format == Format::csv) {
            out_ << sl::sectors_csv(s);
        } else {
            out_ << name << " (N=" << state.n_qubits() << ")\n";
            if (entry != nullptr) {
                out_ << "  " << entry->description << '\n';
                if (entry->expected) {
                    out_ << "  expected  " << sl::format_vector(*entry->expected) << " ("
                         << sl::to_string(entry->provenance) << ")\n";
                }
                if (!entry->printed.empty()) {
                    out_ << "  printed   " << entry->printed << '\n';
                }
                if (!entry->discrepancy.empty()) {
                    out_ << "  note: " << entry->discrepancy << '\n';
                }
            }
            out_ << "  computed  " << sl::format_vector(s) << '\n';
            if (!export_path.empty()) {
                out_ << "  state written to " << export_path << '\n';
            }
        }
        return 0;
    }

    int zoo_verify() {
        const auto rep = sl::verify_catalog();
        if (format == Format::json) {
            Json checks = Json::array();
            for (const auto& c : rep.checks) {
                checks.push_back(Json{{"entry", c.entry},
                                      {"check", c.check},
                                      {"expected", c.expected},
                                      {"computed", c.computed},
                                      {"ok", c.ok},
                                      {"known_discrepancy", c.known_discrepancy}});
            }
            emit(Json{{"checks", checks}, {"unexpected_failures", rep.unexpected_failures()}});
        } else if (format == Format::csv) {
            out_ << "entry,check,ok,known_discrepancy,expected,computed\n";
            for (const auto& c : rep.checks) {
                out_ << sl::csv_field(c.entry) << ',' << sl::csv_field(c.check) << ',' << c.ok << ','
                     << c.known_discrepancy << ',' << sl::csv_field(c.expected) << ',' << sl::csv_field(c.computed)
                     << '\n';
            }
        } else {
            for (const auto& c : rep.checks) {
                const char* tag = c.ok ? "ok  " : (c.known_discrepancy ? "KNOWN" : "FAIL");
                out_ << pad(tag, 6) << pad(c.entry, 18) << pad(c.check, 36) << c.computed;
                if (!c.ok) {
                    out_ << "  (expected " << c.expected << ")";
                }
                out_ << '\n';
            }
            out_ << rep.unexpected_failures() << " unexpected failure(s)\n";
        }
        if (rep.unexpected_failures() > 0) {
            throw failed_result{};
        }
        return 0;
    }

    int vertices(int n, const std::string& region_name, bool with_facets) {
        const auto region = sl::build_region(n, region_name);
        const auto reduced = sl::eliminate(region);
        const auto verts = sl::enumerate_vertices(reduced);
        std::vector<sl::ProjectedRow> fac;
        if (with_facets) {
            fac = sl::facets(reduced, verts);
        }
        if (format == Format::json) {
            Json j = sl::vertices_to_json(reduced, verts);
            j["region"] = sl::region_to_json(region);
            if (with_facets) {
                Json f = Json::array();
                for (const auto& r : fac) {
                    f.push_back(sl::projected_row_to_json(r));
                }
                j["facets"] = f;
            }
            emit(j);
        } else if (format == Format::csv) {
            std::vector<std::string> head;
            for (int m = 0; m <= n; ++m) {
                head.push_back("S" + std::to_string(m));
            }
            out_ << join(head, ",") << '\n';
            for (const auto& v : verts) {
                std::vector<std::string> row;
                for (Eigen::Index m = 0; m < v.s.size(); ++m) {
                    row.push_back(sl::to_string(v.s[m]));
                }
                out_ << join(row, ",") << '\n';
            }
        } else {
            std::vector<std::string> free;
            for (int v : reduced.free_vars) {
                free.push_back("S" + std::to_string(v));
            }
            out_ << region_name << " for N=" << n << ": " << verts.size() << " vertices, free coordinates ("
                 << join(free, ", ") << ")\n";
            for (const auto& v : verts) {
                out_ << "  " << sl::format_vector(v.s) << '\n';
            }
            if (with_facets) {
                out_ << fac.size() << " facets (a . x <= b over the free coordinates):\n";
                for (const auto& r : fac) {
                    out_ << "  " << sl::format_vector(r.a) << " <= " << sl::to_string(r.b) << "   ["
                         << join(r.ids, ", ") << "]\n";
                }
            }
        }
        return 0;
    }

    int lp_bound(int n, const std::string& objective, const std::string& direction, const std::string& region_name) {
        const sl::Direction dir = sl::parse_direction(direction);
        const bool sn_max = (objective == "SN" || objective == "S" + std::to_string(n)) &&
                            dir == sl::Direction::maximize && region_name.empty();
        Json j{{"n", n}, {"objective", objective}, {"direction", sl::to_string(dir)}};
        std::string human;
        if (sn_max && n % 2 == 1) {
            const sl::Rational cited = sl::pow2(n - 1);
            j["value"] = sl::rational_to_json(cited);
            j["status"] = "cited, not certified here";
            human = sl::to_string(cited) + " (cited, not certified here)";
        } else if (sn_max) {
            const auto primal = sl::solve_lp(sl::build_maxSN_primal(n));
            if (primal.status != sl::LPStatus::optimal) {
                throw sl::computation_error("max S_N primal is " + sl::to_string(primal.status));
            }
            const auto witness = sl::verify_dual_witness(n);
            if (witness.objective != primal.value) {
                throw sl::computation_error("dual witness objective " + sl::to_string(witness.objective) +
                                            " differs from the primal optimum " + sl::to_string(primal.value));
            }
            j["value"] = sl::rational_to_json(primal.value);
            j["status"] = "certified, dual witness matched";
            j["witness"] = sl::dual_witness_to_json(witness);
            human = sl::to_string(primal.value) + " (certified, dual witness matched)";
        } else {
            const std::string rname = region_name.empty() ? "R" : region_name;
            sl::RVec c = sl::parse_objective(n, objective);
            if (dir == sl::Direction::minimize) {
                c = -c;
            }
            const auto res = sl::solve_lp(sl::lp_from_region(sl::build_region(n, rname), c));
            if (res.status != sl::LPStatus::optimal) {
                throw sl::computation_error("LP over " + rname + " is " + sl::to_string(res.status));
            }
            const sl::Rational value = dir == sl::Direction::minimize ? sl::Rational(-res.value) : res.value;
            j["region"] = rname;
            j["value"] = sl::rational_to_json(value);
            j["status"] = "exact LP optimum over " + rname;
            j["argopt"] = sl::rationals_to_json(res.x);
            human = sl::to_string(value) + " (exact LP optimum over " + rname + ")";
        }
        if (format == Format::json) {
            emit(j);
        } else if (format == Format::csv) {
            out_ << "n,objective,direction,value,status\n"
                 << n << ',' << sl::csv_field(objective) << ',' << sl::to_string(dir) << ','
                 << sl::to_string(sl::rational_from_json(j["value"])) << ',' << sl::csv_field(j["status"]) << '\n';
        } else {
            out_ << human << '\n';
        }
        return 0;
    }

    int dual_witness(int n) {
        const auto w = sl::verify_dual_witness(n);
        if (format == Format::json) {
            Json j = sl::dual_witness_to_json(w);
            j["verified"] = true;
            emit(j);
        } else if (format == Format::csv) {
            out_ << "name,index,value\n";
            for (Eigen::Index i = 0; i < w.y.size(); ++i) {
                out_ << "y," << i + 1 << ',' << sl::to_string(w.y[i]) << '\n';
            }
            for (Eigen::Index i = 0; i < w.y_prime.size(); ++i) {
                out_ << "y_prime," << i << ',' << sl::to_string(w.y_prime[i]) << '\n';
            }
            for (Eigen::Index i = 0; i < w.q.size(); ++i) {
                out_ << "Q," << i + 1 << ',' << sl::to_string(w.q[i]) << '\n';
            }
        } else {
            out_ << "N=" << n << ": dual witness feasible, objective " << sl::to_string(w.objective) << '\n';
            out_ << "  y  = " << sl::format_vector(w.y) << '\n';
            out_ << "  y' = " << sl::format_vector(w.y_prime) << '\n';
            out_ << "  Q  = " << sl::format_vector(w.q) << '\n';
        }
        return 0;
    }

    int optimize(int n, const std::string& objective, const std::string& subset, const std::string& direction,
                 int restarts, std::uint64_t seed, int threads, int max_iterations) {
        sl::SearchProblem p;
        if (!subset.empty()) {
            if (objective != "purity-overlap") {
                throw usage_error("--subset applies only to --objective purity-overlap");
            }
            p.objective = sl::purity_overlap_objective(n, parse_subset(subset));
        } else if (objective == "purity-overlap") {
            throw usage_error("--objective purity-overlap needs --subset");
        } else {
            p.objective = sl::linear_objective(n, objective);
        }
        p.direction = sl::parse_direction(direction);
        p.restarts = restarts;
        p.seed = seed;
        p.threads = threads;
        p.max_iterations = max_iterations;
        const auto res = sl::optimize(p);
        const int converged = static_cast<int>(
            std::count_if(res.trace.begin(), res.trace.end(), [](const sl::RestartTrace& t) { return t.converged; }));
        if (format == Format::json) {
            Json j{{"n", n},
                   {"objective", p.objective.label},
                   {"direction", sl::to_string(p.direction)},
                   {"restarts", static_cast<int>(res.trace.size())},
                   {"seed", seed},
                   {"value", res.value},
                   {"best_restart", res.best_restart},
                   {"converged_restarts", converged},
                   {"sectors", std::vector<double>(res.sectors.data(), res.sectors.data() + res.sectors.size())},
                   {"state", sl::state_to_json(res.state)}};
            if (res.region) {
                j["member_of_R"] = res.region->member;
            }
            emit(j);
        } else if (format == Format::csv) {
            out_ << "restart,seed,value,iterations,converged\n";
            out_.precision(17);
            for (const auto& t : res.trace) {
                out_ << t.index << ',' << t.seed << ',' << t.value << ',' << t.iterations << ',' << t.converged
                     << '\n';
            }
        } else {
            out_ << sl::to_string(p.direction) << ' ' << p.objective.label << " over N=" << n
                 << " pure states: " << sl::format_number(res.value) << " (numerical, not certified)\n";
            out_ << "  best restart " << res.best_restart << " of " << res.trace.size() << ", " << converged
                 << " converged, seed " << seed << '\n';
            out_ << "  sectors " << sl::format_vector(res.sectors) << '\n';
            if (res.region) {
                out_ << "  " << (res.region->member ? "member of R" : "outside R") << '\n';
            }
        }
        return 0;
    }

    int gap(int n, const std::string& objective, const std::string& direction, int restarts, std::uint64_t seed) {
        const auto rep = sl::gap_probe(n, sl::parse_objective(n, objective), sl::parse_direction(direction),
                                       restarts, seed);
        if (format == Format::json) {
            emit(Json{{"n", n},
                      {"objective", objective},
                      {"direction", sl::to_string(rep.direction)},
                      {"lp_value", sl::rational_to_json(rep.lp_value)},
                      {"search_value", rep.search_value},
                      {"gap", rep.gap},
                      {"state", sl::state_to_json(rep.search.state)}});
        } else if (format == Format::csv) {
            out_.precision(17);
            out_ << "n,objective,direction,lp_value,search_value,gap\n"
                 << n << ',' << sl::csv_field(objective) << ',' << sl::to_string(rep.direction) << ','
                 << sl::to_string(rep.lp_value) << ',' << rep.search_value << ',' << rep.gap << '\n';
        } else {
            out_ << sl::to_string(rep.direction) << ' ' << objective << ", N=" << n << '\n';
            out_ << "  LP over R    " << sl::to_string(rep.lp_value) << " (" << sl::format_number(sl::to_double(rep.lp_value))
                 << ")\n";
            out_ << "  pure states  " << sl::format_number(rep.search_value) << " (numerical)\n";
            out_ << "  gap          " << rep.gap << '\n';
        }
        return 0;
    }

    int entropy(const StateSource& src, int k) {
        auto [state, name] = src.load();
        const int n = state.n_qubits();
        if (k < 1 || k > n - 1) {
            throw usage_error("--k must be in 1.." + std::to_string(n - 1));
        }
        const double direct = sl::linear_entropy_avg(state, k);
        const double formula = sl::linear_entropy_formula<double>(sl::sector_lengths(state), k);
        if (format == Format::json) {
            emit(Json{{"state", name}, {"n_qubits", n}, {"k", k}, {"value", direct}, {"from_sectors", formula}});
        } else if (format == Format::csv) {
            out_.precision(17);
            out_ << "k,value,from_sectors\n" << k << ',' << direct << ',' << formula << '\n';
        } else {
            out_ << "linear entropy summed over " << k << "-qubit subsets: " << sl::format_number(direct)
                 << " (from sectors " << sl::format_number(formula) << ")\n";
        }
        return 0;
    }

    int table(const std::string& which);
    int scan(const std::string& family, const std::vector<std::string>& grid, int haar_n, int samples,
             std::uint64_t seed);

   private:
    int table_one();
    int table_two();
    int table_three();
    int table_four();

    std::ostream& out_;
};

int Cli::table(const std::string& which) {
    if (which == "I") {
        return table_one();
    }
    if (which == "II") {
        return table_two();
    }
    if (which == "III") {
        return table_three();
    }
    return table_four();
}

int Cli::table_one() {
    const auto rows = sl::regenerate_table_one();
    bool ok = true;
    Json list = Json::array();
    if (format == Format::csv) {
        out_ << "n,state,published,engine,diff,member,vertex_of_R,vertex_of_R6_reduced,listed_as\n";
    }
    for (const auto& e : rows) {
        double diff = 0.0;
        Eigen::VectorXd eng(e.row.free.size());
        for (Eigen::Index i = 0; i < e.row.free.size(); ++i) {
            eng[i] = e.engine[i + 1];
            diff = std::max(diff, std::abs(eng[i] - sl::to_double(e.row.free[i])));
        }
        const bool row_ok = e.matches && e.member;
        ok = ok && row_ok;
        const std::string listed = e.row.edge ? "edge" : "vertex";
        if (format == Format::json) {
            list.push_back(Json{{"n", e.row.n},
                                {"state", e.row.label},
                                {"published", sl::rationals_to_json(e.row.free)},
                                {"engine", std::vector<double>(eng.data(), eng.data() + eng.size())},
                                {"diff", diff},
                                {"matches", e.matches},
                                {"member", e.member},
                                {"vertex_of_R", e.vertex},
                                {"vertex_of_R6_reduced", e.reduced_vertex},
                                {"listed_as", listed}});
        } else if (format == Format::csv) {
            out_ << e.row.n << ',' << sl::csv_field(e.row.label) << ',' << sl::csv_field(sl::format_vector(e.row.free))
                 << ',' << sl::csv_field(sl::format_vector(eng)) << ',' << diff << ',' << e.member << ',' << e.vertex
                 << ',' << e.reduced_vertex << ',' << listed << '\n';
        } else {
            out_ << "N=" << e.row.n << "  " << pad(e.row.label, 12) << pad(sl::format_vector(e.row.free), 30)
                 << "diff " << pad(sl::format_number(diff), 8) << (e.member ? "in R" : "NOT in R")
                 << (e.vertex ? ", vertex of R" : ", not a vertex of R")
                 << (e.row.n != 6 ? "" : e.reduced_vertex ? ", vertex of R6-reduced" : ", not a vertex of R6-reduced")
                 << " (listed as " << listed << ")"
                 << (row_ok ? "" : "  MISMATCH") << '\n';
        }
    }
    if (format == Format::json) {
        emit(Json{{"table", "I"}, {"rows", list}, {"all_match", ok}});
    }
    if (!ok) {
        throw failed_result{};
    }
    return 0;
}

int Cli::table_two() {
    const auto rows = sl::regenerate_table_two();
    bool ok = true;
    Json list = Json::array();
    if (format == Format::csv) {
        out_ << "n,objective,direction,extremum,published,derived,status\n";
    }
    for (const auto& e : rows) {
        const std::string status =
            e.matches ? "derived from R" : (e.numerical_only ? "numerical only, not certified" : "MISMATCH");
        ok = ok && (e.matches || e.numerical_only);
        const std::string dir = e.maximize ? "max" : "min";
        if (format == Format::json) {
            list.push_back(Json{{"n", e.n},
                                {"objective", e.objective},
                                {"direction", dir},
                                {"extremum_over_R", sl::rational_to_json(e.extremum)},
                                {"published", e.published},
                                {"derived", e.derived},
                                {"status", status}});
        } else if (format == Format::csv) {
            out_ << e.n << ',' << e.objective << ',' << dir << ',' << sl::to_string(e.extremum) << ','
                 << sl::csv_field(join(e.published, ";")) << ',' << sl::csv_field(join(e.derived, ";")) << ','
                 << sl::csv_field(status) << '\n';
        } else {
            out_ << "N=" << e.n << "  " << dir << ' ' << pad(e.objective, 5) << pad(sl::to_string(e.extremum), 8)
                 << "published {" << join(e.published, ", ") << "}  derived {" << join(e.derived, ", ") << "}  "
                 << status << '\n';
        }
    }
    if (format == Format::json) {
        emit(Json{{"table", "II"}, {"rows", list}, {"all_match", ok}});
    }
    if (!ok) {
        throw failed_result{};
    }
    return 0;
}

int Cli::table_three() {
    const auto rows = sl::regenerate_table_three();
    bool ok = true;
    Json list = Json::array();
    if (format == Format::csv) {
        out_ << "n,m,direction,published,state,engine,diff,lp_bound,status\n";
    }
    for (const auto& e : rows) {
        const double diff = std::abs(e.engine - sl::to_double(e.published));
        const std::string status = e.proven ? "proven" : "putative (numerical)";
        const std::string dir = e.maximize ? "max" : "min";
        ok = ok && e.matches;
        if (format == Format::json) {
            list.push_back(Json{{"n", e.n},
                                {"m", e.m},
                                {"direction", dir},
                                {"published", sl::rational_to_json(e.published)},
                                {"state", e.label},
                                {"engine", e.engine},
                                {"diff", diff},
                                {"lp_bound", sl::rational_to_json(e.lp_bound)},
                                {"status", status}});
        } else if (format == Format::csv) {
            out_ << e.n << ',' << e.m << ',' << dir << ',' << sl::to_string(e.published) << ','
                 << sl::csv_field(e.label) << ',' << e.engine << ',' << diff << ',' << sl::to_string(e.lp_bound)
                 << ',' << status << '\n';
        } else {
            out_ << "N=" << e.n << " S" << e.m << ' ' << dir << "  " << pad(sl::to_string(e.published), 10)
                 << pad(e.label, 12) << "diff " << pad(sl::format_number(diff), 8) << "LP " << pad(sl::to_string(e.lp_bound), 12)
                 << status << (e.matches ? "" : "  MISMATCH") << '\n';
        }
    }
    if (format == Format::json) {
        emit(Json{{"table", "III"}, {"rows", list}, {"all_match", ok}});
    }
    if (!ok) {
        throw failed_result{};
    }
    return 0;
}

int Cli::table_four() {
    const auto rows = sl::regenerate_table_four();
    bool ok = true;
    Json list = Json::array();
    if (format == Format::csv) {
        out_ << "n,k,published,state,engine,diff,conjecture\n";
    }
    for (const auto& e : rows) {
        ok = ok && e.matches;
        const std::string state = e.row.expression.empty() ? "numerical" : e.row.label;
        const std::string engine = e.engine ? sl::format_number(*e.engine) : "-";
        const std::string diff = e.engine ? sl::format_number(std::abs(*e.engine - sl::to_double(e.row.min))) : "-";
        if (format == Format::json) {
            Json j{{"n", e.row.n},
                   {"k", e.row.k},
                   {"published", sl::rational_to_json(e.row.min)},
                   {"state", state},
                   {"conjecture", sl::rational_to_json(e.conjecture)},
                   {"matches", e.matches}};
            if (e.engine) {
                j["engine"] = *e.engine;
                j["purity"] = *e.purity;
                j["overlap"] = *e.overlap;
            }
            list.push_back(j);
        } else if (format == Format::csv) {
            out_ << e.row.n << ',' << e.row.k << ',' << sl::to_string(e.row.min) << ',' << sl::csv_field(state) << ','
                 << engine << ',' << diff << ',' << sl::to_string(e.conjecture) << '\n';
        } else {
            out_ << "N=" << pad(std::to_string(e.row.n), 3) << "k=" << e.row.k << "  " << pad(sl::to_string(e.row.min), 8)
                 << pad(state, 16) << "engine " << pad(engine, 10) << "diff " << pad(diff, 6) << "conjecture "
                 << sl::to_string(e.conjecture) << (e.matches ? "" : "  MISMATCH") << '\n';
        }
    }
    if (format == Format::json) {
        emit(Json{{"table", "IV"}, {"rows", list}, {"all_match", ok}});
    }
    if (!ok) {
        throw failed_result{};
    }
    return 0;
}

int Cli::scan(const std::string& family, const std::vector<std::string>& grid, int haar_n, int samples,
              std::uint64_t seed) {
    if (family.empty() == (haar_n == 0)) {
        throw usage_error("scan needs exactly one of --family or --haar");
    }
    auto emit_s = [this](const sl::SectorVector& s) {
        const int n = static_cast<int>(s.size()) - 1;
        for (int m = 1; m <= std::min(n, 3); ++m) {
            out_ << ',' << s[m];
        }
    };
    auto head_s = [](int n) {
        std::string h;
        for (int m = 1; m <= std::min(n, 3); ++m) {
            h += ",S" + std::to_string(m);
        }
        return h;
    };
    out_.precision(17);
    if (haar_n != 0) {
        if (haar_n < 1 || haar_n > sl::kMaxQubits) {
            throw usage_error("--haar qubit count out of range");
        }
        std::mt19937_64 rng(seed);
        out_ << "sample" << head_s(haar_n) << '\n';
        for (int i = 0; i < samples; ++i) {
            out_ << i;
            emit_s(sl::sector_lengths(sl::haar_random(haar_n, rng)));
            out_ << '\n';
        }
        return 0;
    }
    const sl::FamilyInfo* info = nullptr;
    for (const auto& f : sl::zoo_families()) {
        if (f.name == family) {
            info = &f;
        }
    }
    if (info == nullptr) {
        throw usage_error("unknown family '" + family + "'");
    }
    std::vector<sl::ParamRange> ranges;
    for (const auto& g : grid) {
        const auto a = g.find(':');
        const auto b = g.rfind(':');
        if (a == std::string::npos || a == b) {
            throw usage_error("grid entries are lo:hi:steps, got '" + g + "'");
        }
        sl::ParamRange r;
        r.lo = sl::eval_number(g.substr(0, a));
        r.hi = sl::eval_number(g.substr(a + 1, b - a - 1));
        try {
            r.steps = std::stoi(g.substr(b + 1));
        } catch (const std::exception&) {
            throw usage_error("grid step count must be an integer in '" + g + "'");
        }
        ranges.push_back(r);
    }
    if (ranges.size() != info->params.size()) {
        throw usage_error("family " + family + " takes " + std::to_string(info->params.size()) + " grid range(s) (" +
                          join(info->params, ", ") + ")");
    }
    const auto points = sl::family_scan(family, ranges);
    const int n = points.empty() ? 0 : static_cast<int>(points.front().s.size()) - 1;
    out_ << join(info->params, ",") << head_s(n) << ",residual\n";
    bool ok = true;
    for (const auto& p : points) {
        std::vector<std::string> params;
        for (double v : p.params) {
            std::ostringstream ss;
            ss.precision(17);
            ss << v;
            params.push_back(ss.str());
        }
        out_ << join(params, ",");
        emit_s(p.s);
        out_ << ',' << p.residual << '\n';
        ok = ok && p.ok;
    }
    if (!ok) {
        throw failed_result{};
    }
    return 0;
}

Format peek_format(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if ((a == "--format" && i + 1 < argc && std::string(argv[i + 1]) == "json") || a == "--format=json") {
            return Format::json;
        }
    }
    return Format::human;
}

int report_error(Format format, int code, const std::string& kind, const std::string& message) {
    if (format == Format::json) {
        std::cerr << Json{{"error", message}, {"kind", kind}, {"exit_code", code}}.dump() << '\n';
    } else {
        std::cerr << "sectorlens: " << message << '\n';
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sector lengths, shadow enumerators and monogamy polytopes of multiqubit pure states"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format_name = "human";
    app.add_option("--format", format_name, "output format")->check(CLI::IsMember({"human", "json", "csv"}));

    Cli cli(std::cout);
    std::function<int()> action;

    StateSource sector_src;
    std::string sector_method = "auto";
    auto* sector = app.add_subcommand("sector", "sector lengths S_0..S_N of a state");
    sector_src.add_to(sector);
    sector->add_option("--method", sector_method, "auto, walsh or purities")
        ->check(CLI::IsMember({"auto", "walsh", "purities"}));
    sector->callback([&] { action = [&] { return cli.sector(sector_src, sector_method); }; });

    StateSource shadow_src;
    auto* shadow = app.add_subcommand("shadow", "shadow enumerators of a state");
    shadow_src.add_to(shadow);
    shadow->callback([&] { action = [&] { return cli.shadow(shadow_src); }; });

    StateSource check_src;
    std::string check_region = "R";
    std::string check_sectors;
    auto* check = app.add_subcommand("check", "membership of a state's sector vector in a region");
    check_src.add_to(check);
    check->add_option("--sectors", check_sectors, "exact sector vector instead of a state, e.g. 1,0,7/2,4");
    check->add_option("--region", check_region, "R1, R2, R3, R or R6-reduced");
    check->callback([&] { action = [&] { return cli.check(check_src, check_sectors, check_region); }; });

    auto* zoo = app.add_subcommand("zoo", "named states");
    zoo->require_subcommand(1);
    zoo->fallthrough();
    auto* zoo_list = zoo->add_subcommand("list", "list catalog entries and families");
    zoo_list->callback([&] { action = [&] { return cli.zoo_list(); }; });
    std::string show_name;
    std::string show_export;
    auto* zoo_show = zoo->add_subcommand("show", "sector vector and notes for one state");
    zoo_show->add_option("name", show_name, "catalog name or state expression")->required();
    zoo_show->add_option("--export", show_export, "write the state file here");
    zoo_show->callback([&] { action = [&] { return cli.zoo_show(show_name, show_export); }; });
    auto* zoo_verify = zoo->add_subcommand("verify", "recompute every catalog claim");
    zoo_verify->callback([&] { action = [&] { return cli.zoo_verify(); }; });

    int vert_n = 0;
    std::string vert_region = "R";
    bool vert_facets = false;
    auto* vertices = app.add_subcommand("vertices", "exact vertex enumeration of a region");
    vertices->add_option("-n,--n", vert_n, "qubit count")->required();
    vertices->add_option("--region", vert_region, "R1, R2, R3, R or R6-reduced");
    vertices->add_flag("--facets", vert_facets, "also list facets over the free coordinates");
    vertices->callback([&] { action = [&] { return cli.vertices(vert_n, vert_region, vert_facets); }; });

    int lp_n = 0;
    std::string lp_objective = "SN";
    std::string lp_direction = "max";
    std::string lp_region;
    auto* lp = app.add_subcommand("lp-bound", "exact LP bound of a linear objective");
    lp->add_option("-n,--n", lp_n, "qubit count")->required();
    lp->add_option("--objective", lp_objective, "e.g. SN, S4, Se2, EL3, S1+2*S2");
    lp->add_option("--direction", lp_direction, "min or max");
    lp->add_option("--region", lp_region, "region (default: the max S_N system for SN, else R)");
    lp->callback([&] { action = [&] { return cli.lp_bound(lp_n, lp_objective, lp_direction, lp_region); }; });

    int dw_n = 0;
    auto* dw = app.add_subcommand("dual-witness", "verify and dump the max S_N dual witness");
    dw->add_option("-n,--n", dw_n, "even qubit count 4..24")->required();
    dw->callback([&] { action = [&] { return cli.dual_witness(dw_n); }; });

    int opt_n = 0;
    std::string opt_objective;
    std::string opt_subset;
    std::string opt_direction = "min";
    int opt_restarts = 0;
    std::uint64_t opt_seed = 0;
    int opt_threads = 0;
    int opt_iters = 10000;
    auto* opt = app.add_subcommand("optimize", "multi-start search over pure states");
    opt->add_option("-n,--n", opt_n, "qubit count")->required();
    opt->add_option("--objective", opt_objective, "linear objective, or purity-overlap with --subset")->required();
    opt->add_option("--subset", opt_subset, "comma-separated qubits for purity-overlap");
    opt->add_option("--direction", opt_direction, "min or max");
    opt->add_option("--restarts", opt_restarts, "restart count (0: 64 for N <= 6, else 256)");
    opt->add_option("--seed", opt_seed, "base seed");
    opt->add_option("--threads", opt_threads, "worker threads (0: SECTORLENS_THREADS or all cores)");
    opt->add_option("--max-iterations", opt_iters, "iteration cap per restart");
    opt->callback([&] {
        action = [&] {
            return cli.optimize(opt_n, opt_objective, opt_subset, opt_direction, opt_restarts, opt_seed, opt_threads,
                                opt_iters);
        };
    });

    int gap_n = 0;
    std::string gap_objective;
    std::string gap_direction = "max";
    int gap_restarts = 0;
    std::uint64_t gap_seed = 0;
    auto* gap = app.add_subcommand("gap", "LP optimum over R against the best pure state found");
    gap->add_option("-n,--n", gap_n, "qubit count")->required();
    gap->add_option("--objective", gap_objective, "linear objective")->required();
    gap->add_option("--direction", gap_direction, "min or max");
    gap->add_option("--restarts", gap_restarts, "restart count");
    gap->add_option("--seed", gap_seed, "base seed");
    gap->callback(
        [&] { action = [&] { return cli.gap(gap_n, gap_objective, gap_direction, gap_restarts, gap_seed); }; });

    StateSource ent_src;
    int ent_k = 1;
    auto* ent = app.add_subcommand("entropy", "linear entropy summed over k-qubit subsets");
    ent_src.add_to(ent);
    ent->add_option("-k,--k", ent_k, "subset size");
    ent->callback([&] { action = [&] { return cli.entropy(ent_src, ent_k); }; });

    std::string table_which;
    auto* table = app.add_subcommand("table", "regenerate a reference table from engine computations");
    table->add_option("--which", table_which, "I, II, III or IV")
        ->required()
        ->check(CLI::IsMember({"I", "II", "III", "IV"}));
    table->callback([&] { action = [&] { return cli.table(table_which); }; });

    std::string scan_family;
    std::vector<std::string> scan_grid;
    int scan_haar = 0;
    int scan_samples = 1000;
    std::uint64_t scan_seed = 0;
    auto* scan = app.add_subcommand("scan", "CSV of (S1, S2[, S3]) over a family grid or Haar samples");
    scan->add_option("--family", scan_family, "family name (see zoo list)");
    scan->add_option("--grid", scan_grid, "lo:hi:steps per family parameter");
    scan->add_option("--haar", scan_haar, "qubit count for Haar sampling");
    scan->add_option("--samples", scan_samples, "Haar sample count");
    scan->add_option("--seed", scan_seed, "Haar seed");
    scan->callback([&] {
        action = [&] { return cli.scan(scan_family, scan_grid, scan_haar, scan_samples, scan_seed); };
    });

    const Format early = peek_format(argc, argv);
    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        if (early == Format::json) {
            return report_error(early, 2, "usage", e.what());
        }
        app.exit(e);
        return 2;
    }
    cli.format = format_name == "json" ? Format::json : format_name == "csv" ? Format::csv : Format::human;
    try {
        return action();
    } catch (const failed_result& f) {
        return f.code;
    } catch (const usage_error& e) {
        return report_error(cli.format, 2, "usage", e.what());
    } catch (const sl::contract_error& e) {
        return report_error(cli.format, 2, "usage", e.what());
    } catch (const sl::capability_error& e) {
        return report_error(cli.format, 1, "capability", e.what());
    } catch (const std::exception& e) {
        return report_error(cli.format, 1, "computation", e.what());
    }
}
