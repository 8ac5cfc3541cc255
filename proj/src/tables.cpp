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

#include "sectorlens/tables.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "sectorlens/lp.hpp"
#include "sectorlens/zoo.hpp"

namespace sectorlens {

namespace {

RVec rvec(std::initializer_list<const char*> values) {
    RVec v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (const char* x : values) {
        v[i++] = Rational(x);
    }
    return v;
}

bool same(const RVec& a, const RVec& b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            return false;
        }
    }
    return true;
}

std::string zero_label(int n) {
    return "|0>^" + std::to_string(n);
}

std::string zero_expr(int n) {
    return "zero(" + std::to_string(n) + ")";
}

std::string ghz_expr(int n) {
    return "GHZ(" + std::to_string(n) + ")";
}

Rational lp_extremum(const RegionSpec& region, int m, bool maximize) {
    RVec obj = objective_sector(region.n, m);
    if (!maximize) {
        obj = -obj;
    }
    const LPResult r = solve_lp(lp_from_region(region, obj));
    if (r.status != LPStatus::optimal) {
        throw computation_error("LP over " + region.name + " is " + to_string(r.status));
    }
    return maximize ? r.value : Rational(-r.value);
}

}  // namespace

const std::vector<TableIRow>& table_one() {
    static const std::vector<TableIRow> rows = {
        {2, "GHZ(2)", "GHZ(2)", rvec({"0"}), false},
        {2, zero_label(2), zero_expr(2), rvec({"2"}), false},
        {3, "GHZ(3)", "GHZ(3)", rvec({"0"}), false},
        {3, zero_label(3), zero_expr(3), rvec({"3"}), false},
        {4, "tetra", "tetra", rvec({"0", "2"}), false},
        {4, "GHZ(4)", "GHZ(4)", rvec({"0", "6"}), false},
        {4, zero_label(4), zero_expr(4), rvec({"4", "6"}), false},
        {5, "AME(5,2)", "AME(5,2)", rvec({"0", "0"}), false},
        {5, "GHZ(5)", "GHZ(5)", rvec({"0", "10"}), false},
        {5, zero_label(5), zero_expr(5), rvec({"5", "10"}), false},
        {6, "AME(6,2)", "AME(6,2)", rvec({"0", "0", "0"}), false},
        {6, "psi6", "psi6", rvec({"0", "0", "8"}), false},
        {6, "GHZ(6)", "GHZ(6)", rvec({"0", "15", "0"}), false},
        {6, zero_label(6), zero_expr(6), rvec({"6", "15", "20"}), false},
        {6, "AME(5,2)|0>", "AME(5,2)*0", rvec({"1", "0", "10"}), false},
        {6, "GHZ(3)^2", "GHZ(3)^2", rvec({"0", "6", "8"}), true},
        {6, "GHZ(5)|0>", "GHZ(5)*0", rvec({"1", "10", "10"}), true},
        {6, "GHZ(3)|0>^3", "GHZ(3)*0^3", rvec({"3", "6", "14"}), true},
    };
    return rows;
}

const std::vector<TableIIRow>& table_two() {
    static const std::vector<TableIIRow> rows = {
        {4, "tetra", "tetra", {"Se0"}, {"EL1", "EL2", "Se2"}, {}},
        {4, "GHZ(4)", "GHZ(4)", {}, {"EL1", "Se0"}, {}},
        {4, zero_label(4), zero_expr(4), {"EL1", "EL2", "Se0", "Se2"}, {}, {}},
        {5, "AME(5,2)", "AME(5,2)", {"Se1"}, {"EL1", "EL2", "Se3"}, {}},
        {5, "GHZ(5)", "GHZ(5)", {}, {"EL1", "Se1"}, {}},
        {5, zero_label(5), zero_expr(5), {"EL1", "EL2", "Se1", "Se3"}, {}, {}},
        {6, "AME(6,2)", "AME(6,2)", {"Se2"}, {"EL1", "EL2", "EL3", "Se0", "Se4"}, {}},
        {6, "psi6", "psi6", {"Se0"}, {"EL1", "EL2"}, {}},
        {6, "GHZ(6)", "GHZ(6)", {}, {"EL1", "Se0", "Se2"}, {"Se2"}},
        {6, zero_label(6), zero_expr(6), {"EL1", "EL2", "EL3", "Se0", "Se2", "Se4"}, {}, {}},
        {6, "AME(5,2)|0>", "AME(5,2)*0", {"Se0", "Se2"}, {}, {}},
        {6, "GHZ(3)^2", "GHZ(3)^2", {"Se0"}, {"EL1"}, {}},
        {6, "GHZ(5)|0>", "GHZ(5)*0", {"Se0"}, {}, {}},
        {6, "GHZ(3)|0>^3", "GHZ(3)*0^3", {"Se0", "Se2"}, {}, {}},
    };
    return rows;
}

std::vector<std::string> table_two_objectives(int n) {
    switch (n) {
        case 4:
            return {"EL1", "EL2", "Se0", "Se2"};
        case 5:
            return {"EL1", "EL2", "Se1", "Se3"};
        case 6:
            return {"EL1", "EL2", "EL3", "Se0", "Se2", "Se4"};
        default:
            throw contract_error("table II covers N = 4, 5, 6");
    }
}

const std::vector<TableIIIRow>& table_three() {
    static const std::vector<TableIIIRow> rows = [] {
        std::vector<TableIIIRow> out;
        auto add = [&](int n, int m, const char* mn, std::string mn_label, std::string mn_expr, const char* mx,
                       std::string mx_label, std::string mx_expr) {
            out.push_back({n, m, Rational(mn), std::move(mn_label), std::move(mn_expr), Rational(mx),
                           std::move(mx_label), std::move(mx_expr)});
        };
        auto z = [](int n) { return std::make_pair(zero_label(n), zero_expr(n)); };
        auto g = [](int n) { return std::make_pair(ghz_expr(n), ghz_expr(n)); };
        auto row = [&](int n, int m, const char* mn, std::pair<std::string, std::string> a, const char* mx,
                       std::pair<std::string, std::string> b) {
            add(n, m, mn, a.first, a.second, mx, b.first, b.second);
        };
        auto named = [](std::string label, std::string expr) { return std::make_pair(label, expr); };

        row(2, 1, "0", g(2), "2", z(2));
        row(2, 2, "1", z(2), "3", g(2));

        row(3, 1, "0", g(3), "3", z(3));
        row(3, 2, "3", named("any state", "GHZ(3)"), "3", named("any state", "GHZ(3)"));
        row(3, 3, "1", z(3), "4", g(3));

        row(4, 1, "0", g(4), "4", z(4));
        row(4, 2, "2", named("tetra", "tetra"), "6", z(4));
        row(4, 3, "0", g(4), "8", named("tetra", "tetra"));
        row(4, 4, "1", z(4), "9", g(4));

        row(5, 1, "0", g(5), "5", z(5));
        row(5, 2, "0", named("AME(5,2)", "AME(5,2)"), "10", z(5));
        row(5, 3, "0", g(5), "10", z(5));
        row(5, 4, "5", z(5), "15", named("AME(5,2)", "AME(5,2)"));
        row(5, 5, "1", z(5), "16", g(5));

        row(6, 1, "0", g(6), "6", z(6));
        row(6, 2, "0", named("AME(6,2)", "AME(6,2)"), "15", z(6));
        row(6, 3, "0", g(6), "20", z(6));
        row(6, 4, "5", named("GHZ(5)|0>", "GHZ(5)*0"), "45", named("AME(6,2)", "AME(6,2)"));
        row(6, 5, "0", g(6), "24", named("pyramid", "pyramid"));
        row(6, 6, "1", z(6), "33", g(6));

        row(7, 1, "0", g(7), "7", z(7));
        row(7, 2, "0", named("AME(6,2)|0>", "AME(6,2)*0"), "21", z(7));
        row(7, 3, "0", g(7), "35", z(7));
        row(7, 4, "7", named("psi7", "psi7"), "45", named("AME(6,2)|0>", "AME(6,2)*0"));
        row(7, 5, "0", g(7), "603/13", named("psi7b", "psi7b"));
        row(7, 6, "7", z(7), "49", named("psi7", "psi7"));
        row(7, 7, "1", z(7), "64", g(7));

        row(8, 1, "0", g(8), "8", z(8));
        row(8, 2, "0", named("psiM8", "psiM8"), "28", z(8));
        row(8, 3, "0", g(8), "56", z(8));
        row(8, 4, "14", named("tetra^2", "tetra^2"), "70", z(8));
        row(8, 5, "0", g(8), "90", named("AME(6,2)|0>^2", "AME(6,2)*0^2"));
        row(8, 6, "7", named("GHZ(7)|0>", "GHZ(7)*0"), "168", named("psi1_8", "psi1_8"));
        row(8, 7, "0", g(8), "592/7", named("tetra8", "tetra8"));
        row(8, 8, "1", z(8), "129", g(8));
        return out;
    }();
    return rows;
}

const std::vector<TableIVRow>& table_four() {
    static const std::vector<TableIVRow> rows = [] {
        std::vector<TableIVRow> out;
        auto add = [&](int n, int k, const char* mn, std::string label, std::string expr, double p, double r,
                       bool any = false) {
            out.push_back({n, k, Rational(mn), std::move(label), std::move(expr), p, r, any});
        };
        for (int n = 2; n <= 6; ++n) {
            add(n, 1, "1", "any state", zero_expr(n), 1.0, 0.0, true);
        }
        add(3, 2, "1/2", "|0>GHZ(2)", "0*GHZ(2)", 0.5, 0);
        add(4, 3, "1/2", "|0>GHZ(3)", "0*GHZ(3)", 0.5, 0);
        add(5, 4, "1/2", "|0>GHZ(4)", "0*GHZ(4)", 0.5, 0);
        add(6, 5, "1/2", "|0>GHZ(5)", "0*GHZ(5)", 0.5, 0);
        add(4, 2, "1/2", "|0>GHZ(3)", "0*GHZ(3)", 0.5, 0);
        add(5, 3, "1/4", "AME(5,2)", "AME(5,2)", 0.25, 0);
        add(6, 4, "1/4", "|0>AME(5,2)", "0*AME(5,2)", 0.25, 0);
        add(7, 5, "1/4", "GHZ(2)AME(5,2)", "GHZ(2)*AME(5,2)", 0.25, 0);
        add(8, 6, "1/4", "|0>^2 AME(6,2)", "0^2*AME(6,2)", 0.25, 0);
        add(9, 7, "1/4", "|0>^3 AME(6,2)", "0^3*AME(6,2)", 0.25, 0);
        add(5, 2, "1/2", "AME(5,2)", "AME(5,2)", 0.25, 0.25);
        add(6, 3, "1/4", "AME(6,2)", "AME(6,2)", 0.125, 0.125);
        add(7, 4, "1/8", "|0>AME(6,2)", "0*AME(6,2)", 0.125, 0);
        add(8, 5, "1/8", "|0>^2 AME(6,2)", "0^2*AME(6,2)", 0.125, 0);
        add(9, 6, "1/8", "|0>^3 AME(6,2)", "0^3*AME(6,2)", 0.125, 0);
        add(6, 2, "1/2", "AME(6,2)", "AME(6,2)", 0.25, 0.25);
        add(7, 3, "1/4", "|0>AME(6,2)", "0*AME(6,2)", 0.25, 0);
        add(8, 4, "1/8", "|0>psiM7", "0*psiM7", 0.125, 0);
        add(9, 5, "1/16", "numerical", "", 0.0625, 0);
        add(10, 6, "1/16", "numerical", "", 0.0625, 0);
        add(7, 2, "1/2", "AME(6,2)|0>", "AME(6,2)*0", 0.25, 0.25);
        add(8, 3, "1/4", "AME(6,2)|0>^2", "AME(6,2)*0^2", 0.125, 0.125);
        add(9, 4, "1/8", "|0>psiM8", "0*psiM8", 0.125, 0);
        add(10, 5, "1/16", "numerical", "", 0.04787, 0.01463);
        return out;
    }();
    return rows;
}

Rational purity_overlap_conjecture(int n, int k) {
    if (k < 1 || k >= n) {
        throw contract_error("need 1 <= k < N");
    }
    if (k == 1) {
        return 1;
    }
    return 2 * k > n ? pow2(k - n) : pow2(1 - k);
}

const std::vector<PublishedForm>& published_forms() {
    static const std::vector<PublishedForm> forms = [] {
        std::vector<PublishedForm> out;
        const std::vector<std::string> n2 = {"S1+S2=3", "0<=1-S1+S2<=4"};
        for (const char* r : {"R1", "R2", "R3", "R"}) {
            out.push_back({2, r, n2});
        }
        const std::vector<std::string> n3 = {"S2=3", "S1+S3=4"};
        out.push_back({3, "R1", n3});
        for (const char* r : {"R2", "R3", "R"}) {
            auto rel = n3;
            rel.emplace_back("0<=S1<=3");
            out.push_back({3, r, rel});
        }
        const std::vector<std::string> n4 = {"S4=3-2*S1+S2", "S3=12+S1-2*S2", "2<=S2-S1<=6"};
        out.push_back({4, "R1", n4});
        auto n4r2 = n4;
        n4r2.emplace_back("3*S1+S2<=18");
        out.push_back({4, "R2", n4r2});
        auto n4r3 = n4;
        n4r3.emplace_back("S2<=6");
        out.push_back({4, "R3", n4r3});
        out.push_back({4, "R", {"S4=3-2*S1+S2", "S3=12+S1-2*S2", "0<=S1<=S2-2<=4"}});

        const std::vector<std::string> n5 = {"S3=10+2*S1-S2", "S4=15-S2", "S5=6-3*S1+S2", "S2<=15",
                                             "3*S1-6<=S2<=2*S1+10"};
        out.push_back({5, "R1", n5});
        auto n5r2 = n5;
        n5r2.emplace_back("2*S1<=S2");
        n5r2.emplace_back("2*S1+S2<=20");
        out.push_back({5, "R2", n5r2});
        auto n5r3 = n5r2;
        n5r3.emplace_back("S2<=10");
        out.push_back({5, "R3", n5r3});
        out.push_back({5, "R", {"S3=10+2*S1-S2", "S4=15-S2", "S5=6-3*S1+S2", "0<=S1<=5", "2*S1<=S2<=10"}});

        const std::vector<std::string> n6 = {"S4=45+10*S1-2*S2-3*S3", "S5=3*S3-9*S1", "S6=18-2*S1+S2-S3",
                                             "-8<=2*S1-S3<=0"};
        const std::vector<std::string> r2 = {"30*S1<=8*S2+3*S3", "10*S1+16*S2+3*S3<=360"};
        const std::vector<std::string> r3 = {"10*S1+S3-20<=4*S2<=60", "10*S1<=3*S3"};
        out.push_back({6, "R1", n6});
        auto n6r2 = n6;
        n6r2.insert(n6r2.end(), r2.begin(), r2.end());
        out.push_back({6, "R2", n6r2});
        auto n6r3 = n6;
        n6r3.insert(n6r3.end(), r3.begin(), r3.end());
        out.push_back({6, "R3", n6r3});
        auto n6r = n6r2;
        n6r.insert(n6r.end(), r3.begin(), r3.end());
        out.push_back({6, "R", n6r});
        out.push_back({6,
                       "R6-reduced",
                       {"S4=45+10*S1-2*S2-3*S3", "S5=3*S3-9*S1", "S6=18-2*S1+S2-S3", "10*S1-3*S3<=0",
                        "30*S1-8*S2-3*S3<=0", "-10*S1+4*S2+3*S3<=60", "-5*S1+S2+S3<=15", "-2*S1+S3<=8",
                        "S4>=5"}});
        return out;
    }();
    return forms;
}

std::vector<TableIEntry> regenerate_table_one() {
    std::vector<TableIEntry> out;
    std::map<int, EliminatedRegion> reduced;
    std::map<int, std::vector<Vertex>> vertices;
    for (int n = 2; n <= 6; ++n) {
        reduced.emplace(n, eliminate(build_region(n, "R")));
        vertices.emplace(n, enumerate_vertices(reduced.at(n)));
    }
    const auto r6 = enumerate_vertices(build_region(6, "R6-reduced"));
    for (const auto& row : table_one()) {
        TableIEntry e;
        e.row = row;
        e.engine = sector_lengths_walsh(build(row.expression));
        const auto& red = reduced.at(row.n);
        double dev = 0;
        for (int j = 0; j < red.dim(); ++j) {
            dev = std::max(dev, std::abs(e.engine[red.free_vars[static_cast<std::size_t>(j)]] - to_double(row.free[j])));
        }
        const RVec s = red.lift(row.free);
        for (int m = 0; m <= row.n; ++m) {
            dev = std::max(dev, std::abs(e.engine[m] - to_double(s[m])));
        }
        e.matches = dev <= 1e-9;
        e.member = check_membership(s, build_region(row.n, "R")).member;
        const auto& vs = vertices.at(row.n);
        e.vertex = std::any_of(vs.begin(), vs.end(), [&](const Vertex& v) { return same(v.x, row.free); });
        if (row.n == 6) {
            e.reduced_vertex = std::any_of(r6.begin(), r6.end(), [&](const Vertex& v) { return same(v.x, row.free); });
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<TableIIEntry> regenerate_table_two() {
    std::vector<TableIIEntry> out;
    for (int n = 4; n <= 6; ++n) {
        const EliminatedRegion red = eliminate(build_region(n, "R"));
        const auto vs = enumerate_vertices(red);
        for (const auto& name : table_two_objectives(n)) {
            const RVec obj = parse_objective(n, name);
            const Extremum ext = extremize_linear_on_vertices(vs, obj);
            for (bool maximize : {false, true}) {
                TableIIEntry e;
                e.n = n;
                e.objective = name;
                e.maximize = maximize;
                e.extremum = maximize ? ext.max : ext.min;
                for (const auto& row : table_two()) {
                    if (row.n != n) {
                        continue;
                    }
                    const auto& list = maximize ? row.maximizes : row.minimizes;
                    if (std::find(list.begin(), list.end(), name) != list.end()) {
                        e.published.push_back(row.label);
                        if (maximize && std::find(row.numerical_only.begin(), row.numerical_only.end(), name) !=
                                            row.numerical_only.end()) {
                            e.numerical_only = true;
                        }
                    }
                }
                for (const auto& row : table_one()) {
                    if (row.n == n && evaluate(obj, red.lift(row.free)) == e.extremum) {
                        e.derived.push_back(row.label);
                    }
                }
                auto a = e.published;
                auto b = e.derived;
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                e.matches = a == b;
                out.push_back(std::move(e));
            }
        }
    }
    return out;
}

std::vector<TableIIIEntry> regenerate_table_three(int n_max) {
    std::vector<TableIIIEntry> out;
    std::map<int, RegionSpec> regions;
    for (const auto& row : table_three()) {
        if (row.n > n_max) {
            continue;
        }
        if (!regions.count(row.n)) {
            regions.emplace(row.n, build_region(row.n, "R"));
        }
        const RegionSpec& region = regions.at(row.n);
        for (bool maximize : {false, true}) {
            TableIIIEntry e;
            e.n = row.n;
            e.m = row.m;
            e.maximize = maximize;
            e.published = maximize ? row.max : row.min;
            e.label = maximize ? row.max_label : row.min_label;
            e.expression = maximize ? row.max_expression : row.min_expression;
            e.engine = sector_lengths_walsh(build(e.expression))[row.m];
            e.lp_bound = lp_extremum(region, row.m, maximize);
            e.matches = std::abs(e.engine - to_double(e.published)) <= 1e-9;
            e.proven = e.published == e.lp_bound;
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<TableIVEntry> regenerate_table_four() {
    std::vector<TableIVEntry> out;
    for (const auto& row : table_four()) {
        TableIVEntry e;
        e.row = row;
        e.conjecture = purity_overlap_conjecture(row.n, row.k);
        if (!row.expression.empty()) {
            const PureState state = build(row.expression);
            std::vector<int> a;
            for (int q = 1; q <= row.k; ++q) {
                a.push_back(q);
            }
            const ReducedState r = partial_trace(state, a);
            e.purity = purity(r.matrix);
            e.overlap = overlap_R(r);
            e.engine = *e.purity + *e.overlap;
            e.matches = std::abs(*e.engine - to_double(row.min)) <= 1e-9 && e.conjecture == row.min;
            if (!row.any_state) {
                e.matches = e.matches && std::abs(*e.purity - row.purity) <= 1e-9 &&
                            std::abs(*e.overlap - row.overlap) <= 1e-9;
            }
        } else {
            e.matches = e.conjecture == row.min;
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace sectorlens
