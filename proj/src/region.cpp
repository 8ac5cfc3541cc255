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

#include "sectorlens/region.hpp"

#include <algorithm>
#include <cmath>
#include <regex>

#include "sectorlens/shadow.hpp"

namespace sectorlens {

namespace {

RVec zeros(int n) {
    return RVec::Constant(n + 1, Rational(0));
}

RVec unit(int n, int m) {
    RVec v = zeros(n);
    v[m] = 1;
    return v;
}

std::string indexed(const std::string& base, int k) {
    return base + "[" + std::to_string(k) + "]";
}

Rational max_abs(const RVec& v) {
    Rational m = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        m = std::max(m, Rational(abs(v[i])));
    }
    return m;
}

Rational dot(const RVec& a, const RVec& b) {
    Rational acc = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] != 0) {
            acc += a[i] * b[i];
        }
    }
    return acc;
}

bool is_zero(const RVec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            return false;
        }
    }
    return true;
}

bool lex_less(const RVec& a, const RVec& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            return a[i] < b[i];
        }
    }
    return false;
}

bool equal(const RVec& a, const RVec& b) {
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

std::vector<Constraint> r1_equalities(int n) {
    std::vector<Constraint> eq;
    eq.push_back({"S0=1", unit(n, 0), Rational(1)});
    eq.push_back({"sum=2^N", RVec::Constant(n + 1, Rational(1)), pow2(n)});
    if (n % 2) {
        RVec alt = zeros(n);
        for (int m = 0; m <= n; ++m) {
            alt[m] = (m % 2) ? -1 : 1;
        }
        eq.push_back({"alternating=0", alt, Rational(0)});
    }
    for (auto& row : macwilliams_rows(n)) {
        eq.push_back(std::move(row));
    }
    return eq;
}

std::vector<Constraint> r1_inequalities(int n) {
    std::vector<Constraint> ineq = positivity_rows(n);
    if (n % 2 == 0) {
        RVec alt = zeros(n);
        for (int m = 0; m <= n; ++m) {
            alt[m] = (m % 2) ? -1 : 1;
        }
        ineq.push_back({"alternating>=0", RVec(-alt), Rational(0)});
        ineq.push_back({"alternating<=2^N", alt, pow2(n)});
    }
    return ineq;
}

std::vector<Constraint> reduced6_rows() {
    // Rows over (S_1, S_2, S_3) with rhs, plus the S_4 >= 5 cut.
    static const int rows[5][4] = {
        {10, 0, -3, 0}, {30, -8, -3, 0}, {-10, 4, 3, 60}, {-5, 1, 1, 15}, {-2, 0, 1, 8},
    };
    std::vector<Constraint> out;
    for (int i = 0; i < 5; ++i) {
        RVec a = zeros(6);
        for (int j = 0; j < 3; ++j) {
            a[j + 1] = rows[i][j];
        }
        out.push_back({indexed("reduced6", i + 1), a, Rational(rows[i][3])});
    }
    out.push_back({"S4>=5", RVec(-unit(6, 4)), Rational(-5)});
    return out;
}

void append(std::vector<Constraint>& to, std::vector<Constraint> from) {
    for (auto& c : from) {
        to.push_back(std::move(c));
    }
}

}  // namespace

std::vector<Constraint> positivity_rows(int n) {
    std::vector<Constraint> out;
    for (int m = 1; m <= n; ++m) {
        out.push_back({indexed("S>=0", m), RVec(-unit(n, m)), Rational(0)});
    }
    return out;
}

std::vector<Constraint> macwilliams_rows(int n) {
    std::vector<Constraint> out;
    for (int k = 0; k <= n; ++k) {
        RVec a = zeros(n);
        for (int m = 0; m <= n - k; ++m) {
            a[m] += binom<Rational>(n - m, k) * pow2(k - n);
        }
        for (int m = 0; m <= k; ++m) {
            a[m] -= binom<Rational>(n - m, n - k) * pow2(-k);
        }
        out.push_back({indexed("macwilliams", k), a, Rational(0)});
    }
    return out;
}

std::vector<Constraint> shadow_rows(int n) {
    const auto& k = kravchuk_table(n);
    std::vector<Constraint> out;
    for (int g = 0; g <= n; ++g) {
        RVec a = zeros(n);
        for (int m = 0; m <= n; ++m) {
            Rational v = to_rational(k(g, m));
            a[m] = (m % 2) ? v : Rational(-v);
        }
        out.push_back({indexed("shadow", g), a, Rational(0)});
    }
    return out;
}

std::vector<Constraint> schmidt_rows(int n) {
    std::vector<Constraint> out;
    for (int k = 1; k <= n; ++k) {
        const Rational total = binom<Rational>(n, k);
        RVec pur = zeros(n);
        RVec ovl = zeros(n);
        for (int m = 0; m <= k; ++m) {
            pur[m] = binom<Rational>(n - m, k - m);
            ovl[m] = (m % 2) ? Rational(-pur[m]) : pur[m];
        }
        RVec even = zeros(n);
        for (int m = 0; 2 * m <= k - 1; ++m) {
            even[2 * m] = binom<Rational>(n - 2 * m, k - 2 * m);
        }
        out.push_back({indexed("purity-sum>=", k), RVec(-pur), Rational(-pow2(k - std::min(k, n - k)) * total)});
        out.push_back({indexed("purity-sum<=", k), pur, Rational(pow2(k) * total)});
        out.push_back({indexed("overlap-sum>=", k), RVec(-ovl), Rational(0)});
        out.push_back({indexed("overlap-sum<=", k), ovl, Rational(pow2(k) * total)});
        out.push_back({indexed("even-part<=", k), even,
                       Rational(pow2(k - 2) * Rational(3 + ((k % 2) ? -1 : 1)) * total)});
    }
    return out;
}

RegionSpec build_region(int n, const std::string& which) {
    if (n < 1 || n > kMaxQubits) {
        throw contract_error("region size must be 1 <= N <= " + std::to_string(kMaxQubits));
    }
    const bool r2 = which == "R2" || which == "R" || which == "R6-reduced";
    const bool r3 = which == "R3" || which == "R" || which == "R6-reduced";
    if (!r2 && !r3 && which != "R1") {
        throw contract_error("unknown region '" + which + "' (expected R1, R2, R3, R or R6-reduced)");
    }
    if (which == "R6-reduced" && n != 6) {
        throw contract_error("R6-reduced is defined for N = 6 only");
    }
    RegionSpec spec;
    spec.n = n;
    spec.name = which;
    spec.equalities = r1_equalities(n);
    spec.inequalities = r1_inequalities(n);
    if (r2) {
        append(spec.inequalities, shadow_rows(n));
    }
    if (r3) {
        append(spec.inequalities, schmidt_rows(n));
    }
    if (which == "R6-reduced") {
        append(spec.inequalities, reduced6_rows());
    }
    return spec;
}

RVec EliminatedRegion::lift(const RVec& x) const {
    RVec s = offset;
    for (int j = 0; j < dim(); ++j) {
        for (Eigen::Index m = 0; m < s.size(); ++m) {
            if (basis(m, j) != 0) {
                s[m] += basis(m, j) * x[j];
            }
        }
    }
    return s;
}

std::pair<Rational, RVec> EliminatedRegion::expression(int m) const {
    RVec c(dim());
    for (int j = 0; j < dim(); ++j) {
        c[j] = basis(m, j);
    }
    return {offset[m], c};
}

ProjectedRow normalized(const ProjectedRow& row) {
    ProjectedRow out = row;
    for (Eigen::Index i = 0; i < row.a.size(); ++i) {
        if (row.a[i] != 0) {
            const Rational s = abs(row.a[i]);
            for (Eigen::Index j = 0; j < row.a.size(); ++j) {
                out.a[j] = row.a[j] / s;
            }
            out.b = row.b / s;
            break;
        }
    }
    return out;
}

EliminatedRegion eliminate(const RegionSpec& region) {
    const int n = region.n;
    const int cols = n + 1;
    const auto rows = static_cast<Eigen::Index>(region.equalities.size());
    RMat e(rows, cols + 1);
    for (Eigen::Index r = 0; r < rows; ++r) {
        e.row(r).head(cols) = region.equalities[static_cast<std::size_t>(r)].coeffs.transpose();
        e(r, cols) = region.equalities[static_cast<std::size_t>(r)].rhs;
    }
    std::vector<int> order{0};
    for (int m = n; m >= 1; --m) {
        order.push_back(m);
    }
    std::vector<std::pair<int, Eigen::Index>> pivots;  // (column, row)
    Eigen::Index next = 0;
    for (int c : order) {
        Eigen::Index p = next;
        while (p < rows && e(p, c) == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        if (p != next) {
            e.row(p).swap(e.row(next));
        }
        const Rational inv = 1 / e(next, c);
        for (Eigen::Index k = 0; k <= cols; ++k) {
            e(next, k) *= inv;
        }
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r != next && e(r, c) != 0) {
                const Rational f = e(r, c);
                for (Eigen::Index k = 0; k <= cols; ++k) {
                    e(r, k) -= f * e(next, k);
                }
            }
        }
        pivots.emplace_back(c, next);
        ++next;
    }
    for (Eigen::Index r = next; r < rows; ++r) {
        if (e(r, cols) != 0) {
            throw computation_error("region equalities are inconsistent");
        }
    }

    EliminatedRegion out;
    out.n = n;
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (auto [c, r] : pivots) {
        is_pivot[static_cast<std::size_t>(c)] = true;
        out.pivot_vars.push_back(c);
    }
    std::sort(out.pivot_vars.begin(), out.pivot_vars.end());
    for (int m = 0; m < cols; ++m) {
        if (!is_pivot[static_cast<std::size_t>(m)]) {
            out.free_vars.push_back(m);
        }
    }
    const int d = out.dim();
    out.offset = RVec::Constant(cols, Rational(0));
    out.basis = RMat::Constant(cols, d, Rational(0));
    for (int j = 0; j < d; ++j) {
        out.basis(out.free_vars[static_cast<std::size_t>(j)], j) = 1;
    }
    for (auto [c, r] : pivots) {
        out.offset[c] = e(r, cols);
        for (int j = 0; j < d; ++j) {
            out.basis(c, j) = -e(r, out.free_vars[static_cast<std::size_t>(j)]);
        }
    }

    for (const auto& ineq : region.inequalities) {
        ProjectedRow row;
        row.ids = {ineq.id};
        row.a = RVec(d);
        for (int j = 0; j < d; ++j) {
            row.a[j] = dot(ineq.coeffs, out.basis.col(j));
        }
        row.b = ineq.rhs - dot(ineq.coeffs, out.offset);
        if (is_zero(row.a)) {
            if (row.b < 0) {
                throw computation_error("constraint " + ineq.id + " is infeasible after elimination");
            }
            continue;
        }
        row = normalized(row);
        auto same = std::find_if(out.inequalities.begin(), out.inequalities.end(), [&](const ProjectedRow& o) {
            return equal(o.a, row.a);
        });
        if (same == out.inequalities.end()) {
            out.inequalities.push_back(std::move(row));
        } else if (row.b < same->b) {
            row.ids.insert(row.ids.end(), same->ids.begin(), same->ids.end());
            *same = std::move(row);
        } else {
            same->ids.push_back(ineq.id);
        }
    }
    return out;
}

std::vector<Vertex> enumerate_vertices(const EliminatedRegion& reduced) {
    const int d = reduced.dim();
    if (d > 3) {
        throw capability_error("vertex enumeration supports free dimension <= 3, got " + std::to_string(d));
    }
    const auto& rows = reduced.inequalities;
    const std::size_t count = rows.size();
    std::vector<Vertex> out;
    auto consider = [&](const RVec& x) {
        Vertex v;
        for (std::size_t i = 0; i < count; ++i) {
            const Rational lhs = dot(rows[i].a, x);
            if (lhs > rows[i].b) {
                return;
            }
            if (lhs == rows[i].b) {
                v.tight.push_back(i);
            }
        }
        for (const auto& o : out) {
            if (equal(o.x, x)) {
                return;
            }
        }
        v.x = x;
        v.s = reduced.lift(x);
        out.push_back(std::move(v));
    };
    if (d == 0) {
        consider(RVec(0));
        return out;
    }
    std::vector<std::size_t> pick(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        pick[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
    }
    if (count < static_cast<std::size_t>(d)) {
        return out;
    }
    while (true) {
        RMat a(d, d);
        RVec b(d);
        for (int i = 0; i < d; ++i) {
            a.row(i) = rows[pick[static_cast<std::size_t>(i)]].a.transpose();
            b[i] = rows[pick[static_cast<std::size_t>(i)]].b;
        }
        if (auto x = solve_exact(a, b)) {
            consider(*x);
        }
        int i = d - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == count - static_cast<std::size_t>(d - i)) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j) {
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    std::sort(out.begin(), out.end(), [](const Vertex& a, const Vertex& b) { return lex_less(a.x, b.x); });
    return out;
}

std::vector<Vertex> enumerate_vertices(const RegionSpec& region) {
    return enumerate_vertices(eliminate(region));
}

namespace {

int exact_rank(RMat m) {
    int rank = 0;
    for (Eigen::Index c = 0; c < m.cols() && rank < m.rows(); ++c) {
        Eigen::Index p = rank;
        while (p < m.rows() && m(p, c) == 0) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        m.row(p).swap(m.row(rank));
        for (Eigen::Index r = rank + 1; r < m.rows(); ++r) {
            if (m(r, c) != 0) {
                const Rational f = m(r, c) / m(rank, c);
                for (Eigen::Index k = c; k < m.cols(); ++k) {
                    m(r, k) -= f * m(rank, k);
                }
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::vector<ProjectedRow> facets(const EliminatedRegion& reduced, const std::vector<Vertex>& vertices) {
    const int d = reduced.dim();
    std::vector<ProjectedRow> out;
    for (std::size_t i = 0; i < reduced.inequalities.size(); ++i) {
        std::vector<const Vertex*> tight;
        for (const auto& v : vertices) {
            if (std::find(v.tight.begin(), v.tight.end(), i) != v.tight.end()) {
                tight.push_back(&v);
            }
        }
        if (tight.empty()) {
            continue;
        }
        RMat diff(static_cast<Eigen::Index>(tight.size()), d);
        for (std::size_t k = 0; k < tight.size(); ++k) {
            diff.row(static_cast<Eigen::Index>(k)) = (tight[k]->x - tight[0]->x).transpose();
        }
        if (exact_rank(diff) != d - 1) {
            continue;
        }
        ProjectedRow row = normalized(reduced.inequalities[i]);
        const bool seen = std::any_of(out.begin(), out.end(), [&](const ProjectedRow& o) {
            return equal(o.a, row.a) && o.b == row.b;
        });
        if (!seen) {
            out.push_back(std::move(row));
        }
    }
    std::sort(out.begin(), out.end(), [](const ProjectedRow& a, const ProjectedRow& b) {
        return lex_less(a.a, b.a) || (equal(a.a, b.a) && a.b < b.b);
    });
    return out;
}

RegionSpec region_from_relations(int n, const std::string& name, const std::vector<std::string>& relations) {
    RegionSpec spec;
    spec.n = n;
    spec.name = name;
    spec.equalities.push_back({"S0=1", unit(n, 0), 1});
    for (int m = 1; m <= n; ++m) {
        spec.inequalities.push_back({indexed("S>=0", m), -unit(n, m), 0});
    }
    for (const auto& rel : relations) {
        std::vector<std::string> parts;
        std::vector<std::string> ops;
        std::size_t start = 0;
        for (std::size_t i = 0; i < rel.size();) {
            if (rel.compare(i, 2, "<=") == 0 || rel.compare(i, 2, ">=") == 0) {
                parts.push_back(rel.substr(start, i - start));
                ops.push_back(rel.substr(i, 2));
                i += 2;
                start = i;
            } else if (rel[i] == '=') {
                parts.push_back(rel.substr(start, i - start));
                ops.emplace_back("=");
                start = ++i;
            } else {
                ++i;
            }
        }
        parts.push_back(rel.substr(start));
        if (ops.empty()) {
            throw contract_error("relation '" + rel + "' has no comparison");
        }
        for (std::size_t k = 0; k < ops.size(); ++k) {
            // Constants are carried by the S_0 entry; move them to the right-hand side.
            const RVec diff = parse_objective(n, parts[k]) - parse_objective(n, parts[k + 1]);
            RVec coeffs = diff;
            coeffs[0] = 0;
            const Rational rhs = -diff[0];
            if (ops[k] == "=") {
                spec.equalities.push_back({rel, coeffs, rhs});
            } else if (ops[k] == "<=") {
                spec.inequalities.push_back({rel, coeffs, rhs});
            } else {
                spec.inequalities.push_back({rel, RVec(-coeffs), -rhs});
            }
        }
    }
    return spec;
}

RegionReport check_membership(const RVec& s, const RegionSpec& region, double tol) {
    if (s.size() != region.n + 1) {
        throw contract_error("sector vector has " + std::to_string(s.size()) + " entries, region expects " +
                             std::to_string(region.n + 1));
    }
    RegionReport rep;
    rep.margin = INFINITY;
    for (const auto& c : region.equalities) {
        const Rational scale = max_abs(c.coeffs);
        if (scale == 0) {
            continue;
        }
        const double r = to_double(Rational((c.rhs - dot(c.coeffs, s)) / scale));
        if (std::abs(r) > tol) {
            rep.violated.push_back({c.id, r});
        }
    }
    for (const auto& c : region.inequalities) {
        const Rational scale = max_abs(c.coeffs);
        const Rational slack_exact = scale == 0 ? c.rhs : Rational((c.rhs - dot(c.coeffs, s)) / scale);
        const double slack = to_double(slack_exact);
        rep.margin = std::min(rep.margin, slack);
        if (slack < -tol) {
            rep.violated.push_back({c.id, slack});
        } else if (slack_exact == 0 || std::abs(slack) <= tol) {
            rep.tight.push_back(c.id);
        }
    }
    rep.member = rep.violated.empty();
    return rep;
}

RegionReport check_membership(const SectorVector& s, const RegionSpec& region, double tol) {
    RVec q(s.size());
    double err = 0.0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        q[i] = snap(s[i]);
        err = std::max(err, std::abs(s[i] - to_double(q[i])));
    }
    RegionReport rep = check_membership(q, region, tol);
    rep.snap_error = err;
    return rep;
}

RVec objective_sector(int n, int m) {
    if (m < 0 || m > n) {
        throw contract_error("sector index out of range");
    }
    return unit(n, m);
}

RVec objective_shadow(int n, int g) {
    if (g < 0 || g > n) {
        throw contract_error("shadow index out of range");
    }
    const auto& k = kravchuk_table(n);
    RVec a(n + 1);
    for (int m = 0; m <= n; ++m) {
        Rational v = to_rational(k(g, m)) * pow2(-n);
        a[m] = (m % 2) ? Rational(-v) : v;
    }
    return a;
}

RVec objective_linear_entropy(int n, int k) {
    if (k < 1 || k > n - 1) {
        throw contract_error("linear entropy needs 1 <= k <= N-1");
    }
    const Rational scale = 2 * binom<Rational>(n, k);
    RVec a = zeros(n);
    a[0] = scale;
    for (int m = 0; m <= k; ++m) {
        a[m] -= scale * pow2(-k) * binom<Rational>(k, m) / binom<Rational>(n, m);
    }
    return a;
}

RVec parse_objective(int n, const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw contract_error("empty objective");
    }
    static const std::regex term(R"(^(\d+(?:/\d+)?)?\*?(Se\d+|EL\d+|S\d+|SN)?$)");
    RVec out = zeros(n);
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') {
                sign = -sign;
            }
            ++pos;
        }
        std::size_t end = s.find_first_of("+-", pos);
        std::string body = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? s.size() : end;
        std::smatch mt;
        if (body.empty() || !std::regex_match(body, mt, term) || (!mt[1].matched && !mt[2].matched)) {
            throw contract_error("cannot parse objective term '" + body + "'");
        }
        Rational coef = mt[1].matched ? Rational(mt[1].str()) : Rational(1);
        if (sign < 0) {
            coef = -coef;
        }
        if (!mt[2].matched) {
            out[0] += coef;
            continue;
        }
        const std::string atom = mt[2].str();
        RVec piece;
        if (atom == "SN") {
            piece = objective_sector(n, n);
        } else if (atom.rfind("Se", 0) == 0) {
            piece = objective_shadow(n, std::stoi(atom.substr(2)));
        } else if (atom.rfind("EL", 0) == 0) {
            piece = objective_linear_entropy(n, std::stoi(atom.substr(2)));
        } else {
            piece = objective_sector(n, std::stoi(atom.substr(1)));
        }
        for (int m = 0; m <= n; ++m) {
            out[m] += coef * piece[m];
        }
    }
    return out;
}

Rational evaluate(const RVec& objective, const RVec& s) {
    if (objective.size() != s.size()) {
        throw contract_error("objective and sector vector sizes differ");
    }
    return dot(objective, s);
}

Extremum extremize_linear_on_vertices(const std::vector<Vertex>& vertices, const RVec& objective) {
    if (vertices.empty()) {
        throw computation_error("region has no vertices");
    }
    Extremum ex;
    bool first = true;
    for (const auto& v : vertices) {
        const Rational val = evaluate(objective, v.s);
        if (first || val < ex.min) {
            ex.min = val;
            ex.argmin.clear();
        }
        if (first || val > ex.max) {
            ex.max = val;
            ex.argmax.clear();
        }
        if (val == ex.min) {
            ex.argmin.push_back(v);
        }
        if (val == ex.max) {
            ex.argmax.push_back(v);
        }
        first = false;
    }
    return ex;
}

Extremum extremize_linear_on_vertices(const RegionSpec& region, const RVec& objective) {
    return extremize_linear_on_vertices(enumerate_vertices(region), objective);
}

int qecc_detect(const PureState& state) {
    const SectorVector s =
        state.n_qubits() <= kEnumerationCap ? sector_lengths(state) : sector_lengths_walsh(state);
    const int n = state.n_qubits();
    int m = 1;
    while (m <= n && std::abs(s[m]) < 1e-9) {
        ++m;
    }
    return m;
}

}  // namespace sectorlens
