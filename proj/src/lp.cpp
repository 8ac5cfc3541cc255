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

#include "sectorlens/lp.hpp"

#include <algorithm>

namespace sectorlens {

namespace {

// Dense tableau. Row `m` holds reduced costs; its last entry is -z.
struct Tableau {
    RMat t;
    std::vector<int> basis;
    int rows() const { return static_cast<int>(basis.size()); }
    int rhs() const { return static_cast<int>(t.cols()) - 1; }

    void pivot(int r, int c) {
        const Rational inv = 1 / t(r, c);
        for (Eigen::Index j = 0; j < t.cols(); ++j) {
            t(r, j) *= inv;
        }
        for (Eigen::Index i = 0; i < t.rows(); ++i) {
            if (i != r && t(i, c) != 0) {
                const Rational f = t(i, c);
                for (Eigen::Index j = 0; j < t.cols(); ++j) {
                    if (t(r, j) != 0) {
                        t(i, j) -= f * t(r, j);
                    }
                }
            }
        }
        basis[static_cast<std::size_t>(r)] = c;
    }

    // Maximizes over columns [0, allowed). Returns false when unbounded.
    bool run(int allowed) {
        const int m = rows();
        while (true) {
            int enter = -1;
            for (int j = 0; j < allowed; ++j) {
                if (t(m, j) > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) {
                return true;
            }
            int leave = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (t(i, enter) > 0) {
                    Rational ratio = t(i, rhs()) / t(i, enter);
                    if (leave < 0 || ratio < best ||
                        (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                        leave = i;
                        best = ratio;
                    }
                }
            }
            if (leave < 0) {
                return false;
            }
            pivot(leave, enter);
        }
    }
};

struct Substitution {
    std::vector<int> free_vars;
    std::vector<std::pair<int, RVec>> pivots;  // x_p = row[0] - Σ_j row[1 + j] x_{free_j}
};

Rational dot(const RVec& a, const RVec& b) {
    Rational acc = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) {
            acc += a[i] * b[i];
        }
    }
    return acc;
}

// Row-reduces the equalities, pivoting on the highest-index variables first.
// Returns false if inconsistent.
bool substitute(const LPProblem& p, Substitution& sub) {
    const int n = p.n_vars;
    const Eigen::Index rows = p.a_eq.rows();
    RMat e(rows, n + 1);
    if (rows > 0) {
        e.leftCols(n) = p.a_eq;
        e.col(n) = p.b_eq;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    std::vector<std::pair<int, Eigen::Index>> piv;
    Eigen::Index next = 0;
    for (int c = n - 1; c >= 0; --c) {
        Eigen::Index r = next;
        while (r < rows && e(r, c) == 0) {
            ++r;
        }
        if (r == rows) {
            continue;
        }
        if (r != next) {
            e.row(r).swap(e.row(next));
        }
        const Rational inv = 1 / e(next, c);
        for (Eigen::Index k = 0; k <= n; ++k) {
            e(next, k) *= inv;
        }
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i != next && e(i, c) != 0) {
                const Rational f = e(i, c);
                for (Eigen::Index k = 0; k <= n; ++k) {
                    e(i, k) -= f * e(next, k);
                }
            }
        }
        is_pivot[static_cast<std::size_t>(c)] = true;
        piv.emplace_back(c, next);
        ++next;
    }
    for (Eigen::Index r = next; r < rows; ++r) {
        if (e(r, n) != 0) {
            return false;
        }
    }
    for (int j = 0; j < n; ++j) {
        if (!is_pivot[static_cast<std::size_t>(j)]) {
            sub.free_vars.push_back(j);
        }
    }
    for (auto [c, r] : piv) {
        RVec row(1 + static_cast<Eigen::Index>(sub.free_vars.size()));
        row[0] = e(r, n);
        for (std::size_t j = 0; j < sub.free_vars.size(); ++j) {
            row[static_cast<Eigen::Index>(1 + j)] = e(r, sub.free_vars[j]);
        }
        sub.pivots.emplace_back(c, row);
    }
    return true;
}

void require_feasible(const LPProblem& p, const RVec& x) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (x[i] < 0) {
            throw computation_error("simplex returned a negative variable");
        }
    }
    for (Eigen::Index r = 0; r < p.a_ub.rows(); ++r) {
        if (dot(p.a_ub.row(r).transpose(), x) > p.b_ub[r]) {
            throw computation_error("simplex point violates inequality " + p.ub_ids[static_cast<std::size_t>(r)]);
        }
    }
    for (Eigen::Index r = 0; r < p.a_eq.rows(); ++r) {
        if (dot(p.a_eq.row(r).transpose(), x) != p.b_eq[r]) {
            throw computation_error("simplex point violates equality " + p.eq_ids[static_cast<std::size_t>(r)]);
        }
    }
}

RVec zero_vec(Eigen::Index n) {
    return RVec::Constant(n, Rational(0));
}

}  // namespace

std::string to_string(LPStatus status) {
    switch (status) {
        case LPStatus::optimal: return "optimal";
        case LPStatus::infeasible: return "infeasible";
        default: return "unbounded";
    }
}

LPResult solve_lp(const LPProblem& p) {
    const int n = p.n_vars;
    if (p.objective.size() != n || p.a_ub.cols() != (p.a_ub.rows() ? n : p.a_ub.cols()) ||
        p.b_ub.size() != p.a_ub.rows() || p.b_eq.size() != p.a_eq.rows()) {
        throw contract_error("LP problem has inconsistent dimensions");
    }
    LPResult res;
    Substitution sub;
    if (!substitute(p, sub)) {
        res.status = LPStatus::infeasible;
        return res;
    }
    const int d = static_cast<int>(sub.free_vars.size());

    // Inequalities over free variables: original rows, then x_p >= 0 for pivots.
    std::vector<RVec> a_rows;
    std::vector<Rational> b_rows;
    auto project = [&](const RVec& coeffs, const Rational& rhs) {
        RVec a(d);
        Rational b = rhs;
        for (int j = 0; j < d; ++j) {
            a[j] = coeffs[sub.free_vars[static_cast<std::size_t>(j)]];
        }
        for (const auto& [c, row] : sub.pivots) {
            if (coeffs[c] == 0) {
                continue;
            }
            b -= coeffs[c] * row[0];
            for (int j = 0; j < d; ++j) {
                a[j] -= coeffs[c] * row[1 + j];
            }
        }
        a_rows.push_back(a);
        b_rows.push_back(b);
    };
    for (Eigen::Index r = 0; r < p.a_ub.rows(); ++r) {
        project(p.a_ub.row(r).transpose(), p.b_ub[r]);
    }
    for (const auto& [c, row] : sub.pivots) {
        RVec coeffs = zero_vec(n);
        coeffs[c] = -1;
        project(coeffs, Rational(0));
    }
    RVec obj(d);
    Rational obj_const = p.objective_constant;
    for (int j = 0; j < d; ++j) {
        obj[j] = p.objective[sub.free_vars[static_cast<std::size_t>(j)]];
    }
    for (const auto& [c, row] : sub.pivots) {
        if (p.objective[c] == 0) {
            continue;
        }
        obj_const += p.objective[c] * row[0];
        for (int j = 0; j < d; ++j) {
            obj[j] -= p.objective[c] * row[1 + j];
        }
    }

    // Columns: d structural, m slacks, then artificials.
    const int m = static_cast<int>(a_rows.size());
    std::vector<int> needs_art;
    for (int i = 0; i < m; ++i) {
        if (b_rows[static_cast<std::size_t>(i)] < 0) {
            needs_art.push_back(i);
        }
    }
    const int n_art = static_cast<int>(needs_art.size());
    const int cols = d + m + n_art;
    Tableau tab;
    tab.t = RMat::Constant(m + 1, cols + 1, Rational(0));
    tab.basis.assign(static_cast<std::size_t>(m), 0);
    int art = 0;
    for (int i = 0; i < m; ++i) {
        const bool neg = b_rows[static_cast<std::size_t>(i)] < 0;
        const Rational s = neg ? -1 : 1;
        for (int j = 0; j < d; ++j) {
            tab.t(i, j) = s * a_rows[static_cast<std::size_t>(i)][j];
        }
        tab.t(i, d + i) = s;
        tab.t(i, cols) = s * b_rows[static_cast<std::size_t>(i)];
        if (neg) {
            tab.t(i, d + m + art) = 1;
            tab.basis[static_cast<std::size_t>(i)] = d + m + art;
            ++art;
        } else {
            tab.basis[static_cast<std::size_t>(i)] = d + i;
        }
    }

    if (n_art > 0) {
        // Phase 1: maximize -Σ artificials.
        for (int j = 0; j <= cols; ++j) {
            Rational acc = 0;
            for (int i : needs_art) {
                acc += tab.t(i, j);
            }
            tab.t(m, j) = acc;
        }
        for (int k = 0; k < n_art; ++k) {
            tab.t(m, d + m + k) = 0;
        }
        tab.run(cols);
        if (tab.t(m, cols) != 0) {
            res.status = LPStatus::infeasible;
            return res;
        }
        std::vector<int> drop;
        for (int i = 0; i < m; ++i) {
            if (tab.basis[static_cast<std::size_t>(i)] < d + m) {
                continue;
            }
            int c = -1;
            for (int j = 0; j < d + m; ++j) {
                if (tab.t(i, j) != 0) {
                    c = j;
                    break;
                }
            }
            if (c >= 0) {
                tab.pivot(i, c);
            } else {
                drop.push_back(i);
            }
        }
        if (!drop.empty()) {
            Tableau kept;
            const int mk = m - static_cast<int>(drop.size());
            kept.t = RMat(mk + 1, cols + 1);
            int r = 0;
            for (int i = 0; i < m; ++i) {
                if (std::find(drop.begin(), drop.end(), i) == drop.end()) {
                    kept.t.row(r) = tab.t.row(i);
                    kept.basis.push_back(tab.basis[static_cast<std::size_t>(i)]);
                    ++r;
                }
            }
            tab = std::move(kept);
        }
    }

    // Phase 2 reduced costs.
    const int mr = tab.rows();
    auto cost = [&](int j) -> Rational { return j < d ? obj[j] : Rational(0); };
    for (int j = 0; j <= cols; ++j) {
        Rational acc = j < cols ? cost(j) : Rational(0);
        for (int i = 0; i < mr; ++i) {
            const Rational cb = cost(tab.basis[static_cast<std::size_t>(i)]);
            if (cb != 0) {
                acc -= cb * tab.t(i, j);
            }
        }
        tab.t(mr, j) = acc;
    }
    if (!tab.run(d + m)) {
        res.status = LPStatus::unbounded;
        return res;
    }

    RVec xf = zero_vec(d);
    for (int i = 0; i < mr; ++i) {
        const int b = tab.basis[static_cast<std::size_t>(i)];
        if (b < d) {
            xf[b] = tab.t(i, cols);
        }
    }
    RVec x = zero_vec(n);
    for (int j = 0; j < d; ++j) {
        x[sub.free_vars[static_cast<std::size_t>(j)]] = xf[j];
    }
    for (const auto& [c, row] : sub.pivots) {
        Rational v = row[0];
        for (int j = 0; j < d; ++j) {
            v -= row[1 + j] * xf[j];
        }
        x[c] = v;
    }
    require_feasible(p, x);
    res.status = LPStatus::optimal;
    res.x = x;
    res.value = dot(p.objective, x) + p.objective_constant;
    if (res.value != dot(obj, xf) + obj_const) {
        throw computation_error("simplex objective bookkeeping mismatch");
    }
    return res;
}

LPProblem lp_from_region(const RegionSpec& region, const RVec& objective) {
    const int n = region.n;
    if (objective.size() != n + 1) {
        throw contract_error("objective must have N+1 entries");
    }
    LPProblem p;
    p.n_vars = n;
    p.objective = objective.tail(n);
    p.objective_constant = objective[0];
    auto fill = [n](const std::vector<Constraint>& rows, RMat& a, RVec& b, std::vector<std::string>& ids) {
        a = RMat(static_cast<Eigen::Index>(rows.size()), n);
        b = RVec(static_cast<Eigen::Index>(rows.size()));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            a.row(static_cast<Eigen::Index>(r)) = rows[r].coeffs.tail(n).transpose();
            b[static_cast<Eigen::Index>(r)] = rows[r].rhs - rows[r].coeffs[0];
            ids.push_back(rows[r].id);
        }
    };
    fill(region.inequalities, p.a_ub, p.b_ub, p.ub_ids);
    fill(region.equalities, p.a_eq, p.b_eq, p.eq_ids);
    return p;
}

LPProblem build_maxSN_primal(int n) {
    if (n % 2) {
        throw capability_error("max S_N for odd N (2^{N-1}) is a cited constant, not certified here");
    }
    if (n < 4 || n > 16) {
        throw contract_error("build_maxSN_primal needs even N in 4..16");
    }
    LPProblem p;
    p.n_vars = n;
    p.objective = zero_vec(n);
    p.objective[n - 1] = 1;
    const int nq = n / 2 - 1;
    p.a_ub = RMat::Constant(nq, n, Rational(0));
    p.b_ub = RVec(nq);
    for (int q = 1; q <= nq; ++q) {
        for (int m = 2; m <= n; m += 2) {
            p.a_ub(q - 1, m - 1) = binom<Rational>(n - m, 2 * q + 1 - m);
        }
        p.b_ub[q - 1] = (pow2(2 * q) - 1) * binom<Rational>(n, 2 * q + 1);
        p.ub_ids.push_back("even-part<=[" + std::to_string(2 * q + 1) + "]");
    }
    const int nk = n / 2;
    p.a_eq = RMat(nk, n);
    p.b_eq = RVec(nk);
    for (int k = 0; k < nk; ++k) {
        for (int m = 1; m <= n; ++m) {
            p.a_eq(k, m - 1) = binom<Rational>(n - m, k) * pow2(k - n) - binom<Rational>(n - m, n - k) * pow2(-k);
        }
        p.b_eq[k] = (pow2(-k) - pow2(k - n)) * binom<Rational>(n, k);
        p.eq_ids.push_back("macwilliams[" + std::to_string(k) + "]");
    }
    return p;
}

DualWitness verify_dual_witness(int n) {
    if (n % 2 || n < 4 || n > 24) {
        throw contract_error("verify_dual_witness needs even N in 4..24");
    }
    const int nq = n / 2 - 1;
    const int nk = n / 2;
    DualWitness w;
    w.n = n;
    w.y = zero_vec(nq);
    for (int q = 1; q <= nq; ++q) {
        if (n % 4 == 2 && q == (n - 2) / 4) {
            w.y[q - 1] = pow2(1 - n / 2);
        } else if (q >= (n + 2) / 4) {
            w.y[q - 1] = pow2(1 - 2 * q);
        }
    }
    w.y_prime = RVec(nk);
    w.y_prime[0] = pow2(n);
    for (int k = 1; k < nk; ++k) {
        const Rational inner = pow2(n - k) - pow2(k) + 1;
        w.y_prime[k] = ((k % 2) ? Rational(-inner) : inner) - 1;
    }

    // Coefficients are those of the primal rows, extended to any even N <= 24.
    auto a = [n](int q, int m) { return (m % 2) ? Rational(0) : binom<Rational>(n - m, 2 * q + 1 - m); };
    auto a_eq = [n](int k, int m) {
        return binom<Rational>(n - m, k) * pow2(k - n) - binom<Rational>(n - m, n - k) * pow2(-k);
    };
    w.q = RVec(n);
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int q = 1; q <= nq; ++q) {
            acc += a(q, m) * w.y[q - 1];
        }
        for (int k = 0; k < nk; ++k) {
            acc += a_eq(k, m) * w.y_prime[k];
        }
        w.q[m - 1] = acc;
    }
    w.objective = 0;
    for (int q = 1; q <= nq; ++q) {
        w.objective += (pow2(2 * q) - 1) * binom<Rational>(n, 2 * q + 1) * w.y[q - 1];
    }
    for (int k = 0; k < nk; ++k) {
        w.objective += (pow2(-k) - pow2(k - n)) * binom<Rational>(n, k) * w.y_prime[k];
    }

    auto fail = [n](const std::string& what) {
        throw computation_error("dual witness for N=" + std::to_string(n) + ": " + what);
    };
    for (int q = 1; q <= nq; ++q) {
        if (w.y[q - 1] < 0) {
            fail("y_" + std::to_string(q) + " < 0");
        }
    }
    for (int m = 1; m <= n; ++m) {
        const Rational c = m == n ? 1 : 0;
        if (w.q[m - 1] < c) {
            fail("Q_" + std::to_string(m) + " = " + to_string(w.q[m - 1]) + " < c_" + std::to_string(m));
        }
    }
    if (w.q[n - 1] != 1) {
        fail("Q_N = " + to_string(w.q[n - 1]) + " != 1");
    }
    for (int r = 1; r <= n - 1; ++r) {
        const Rational& v = w.q[n - r - 1];
        const bool must_vanish = r <= n / 2 - 1 || (r % 2 == 0 && r >= n / 2);
        if (must_vanish && v != 0) {
            fail("Q_" + std::to_string(n - r) + " = " + to_string(v) + " != 0");
        }
    }
    if (w.objective != pow2(n - 1) + 1) {
        fail("objective " + to_string(w.objective) + " != 2^{N-1}+1");
    }
    return w;
}

S1S2Bound bound_S1_S2(int n) {
    if (n < 2) {
        throw contract_error("bound_S1_S2 needs N >= 2");
    }
    const auto rows = schmidt_rows(n);
    auto find = [&](const std::string& id) -> const Constraint& {
        for (const auto& c : rows) {
            if (c.id == id) {
                return c;
            }
        }
        throw computation_error("missing row " + id);
    };
    S1S2Bound out;
    {
        // Upper purity row plus lower overlap row at k = 2: only S_1 survives.
        const Constraint& up = find("purity-sum<=[2]");
        const Constraint& lo = find("overlap-sum>=[2]");
        RVec sum = up.coeffs + lo.coeffs;
        Rational rhs = up.rhs + lo.rhs - sum[0];
        for (int m = 2; m <= n; ++m) {
            if (sum[m] != 0) {
                throw computation_error("k = 2 combination does not isolate S_1");
            }
        }
        out.s1 = rhs / sum[1];
    }
    if (n >= 3) {
        const Constraint& ev = find("even-part<=[3]");
        for (int m = 1; m <= n; ++m) {
            if (m != 2 && ev.coeffs[m] != 0) {
                throw computation_error("k = 3 even-part row does not isolate S_2");
            }
        }
        out.s2 = (ev.rhs - ev.coeffs[0]) / ev.coeffs[2];
    } else {
        // S_1 + S_2 = 3 with S_1 >= 0.
        out.small_n = true;
        out.s2 = 3;
    }
    const RegionSpec r3 = build_region(n, "R3");
    for (int m : {1, 2}) {
        LPResult lp = solve_lp(lp_from_region(r3, objective_sector(n, m)));
        const Rational& claimed = m == 1 ? out.s1 : out.s2;
        if (lp.status != LPStatus::optimal || lp.value != claimed) {
            throw computation_error("S_" + std::to_string(m) + " bound " + to_string(claimed) +
                                    " disagrees with the LP over R3 (" + to_string(lp.value) + ")");
        }
    }
    return out;
}

}  // namespace sectorlens
