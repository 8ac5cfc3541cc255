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

#include "sectorlens/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "sectorlens/lp.hpp"
#include "sectorlens/tables.hpp"

namespace sectorlens {

namespace {

double real_dot(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    return (a.adjoint() * b)(0, 0).real();
}

// Index maps splitting a basis index into (A part, complement part), first
// label of each part most significant.
struct Split {
    std::vector<Eigen::Index> a;
    std::vector<Eigen::Index> b;
    Eigen::Index dim_a = 0;
    Eigen::Index dim_b = 0;
};

Split make_split(int n, const std::vector<int>& subset) {
    std::vector<int> rest;
    for (int q = 1; q <= n; ++q) {
        if (std::find(subset.begin(), subset.end(), q) == subset.end()) {
            rest.push_back(q);
        }
    }
    Split s;
    s.dim_a = Eigen::Index{1} << subset.size();
    s.dim_b = Eigen::Index{1} << rest.size();
    const std::uint64_t dim = std::uint64_t{1} << n;
    s.a.resize(dim);
    s.b.resize(dim);
    for (std::uint64_t j = 0; j < dim; ++j) {
        Eigen::Index ia = 0, ib = 0;
        for (int q : subset) {
            ia = (ia << 1) | ((j & qubit_bit(q, n)) ? 1 : 0);
        }
        for (int q : rest) {
            ib = (ib << 1) | ((j & qubit_bit(q, n)) ? 1 : 0);
        }
        s.a[j] = ia;
        s.b[j] = ib;
    }
    return s;
}

Eigen::MatrixXcd reshape(const Split& split, const Eigen::VectorXcd& psi) {
    Eigen::MatrixXcd m(split.dim_a, split.dim_b);
    for (Eigen::Index j = 0; j < psi.size(); ++j) {
        m(split.a[static_cast<std::size_t>(j)], split.b[static_cast<std::size_t>(j)]) = psi[j];
    }
    return m;
}

// Value and (optionally) gradient in one pass.
double evaluate_objective(const SearchObjective& obj, const Eigen::VectorXcd& psi, Eigen::VectorXcd* grad) {
    const auto dim = static_cast<std::size_t>(psi.size());
    if (dim != (std::size_t{1} << obj.n)) {
        throw contract_error("amplitude vector does not match the objective's qubit count");
    }
    if (obj.kind == SearchObjective::Kind::purity_overlap) {
        const Split split = make_split(obj.n, obj.subset);
        const Eigen::MatrixXcd m = reshape(split, psi);
        const Eigen::MatrixXcd rho = m * m.adjoint();
        const Eigen::MatrixXcd flipped = spin_flip(rho);
        const double value = (rho * rho).trace().real() + (rho * flipped).trace().real();
        if (grad != nullptr) {
            const Eigen::MatrixXcd g = 4.0 * (rho + flipped) * m;
            grad->resize(psi.size());
            for (Eigen::Index j = 0; j < psi.size(); ++j) {
                (*grad)[j] = g(split.a[static_cast<std::size_t>(j)], split.b[static_cast<std::size_t>(j)]);
            }
        }
        return value;
    }
    std::vector<double> weight(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        weight[i] = obj.coeffs[std::popcount(i)];
    }
    if (grad != nullptr) {
        *grad = Eigen::VectorXcd::Zero(psi.size());
    }
    std::vector<Complex> row(dim);
    double value = 0.0;
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t i = 0; i < dim; ++i) {
            row[i] = std::conj(psi[static_cast<Eigen::Index>(i ^ a)]) * psi[static_cast<Eigen::Index>(i)];
        }
        walsh_hadamard(row.data(), dim);
        for (std::size_t b = 0; b < dim; ++b) {
            const double w = weight[a | b];
            value += w * std::norm(row[b]);
            row[b] = w * std::conj(row[b]);
        }
        if (grad != nullptr) {
            walsh_hadamard(row.data(), dim);
            for (std::size_t j = 0; j < dim; ++j) {
                (*grad)[static_cast<Eigen::Index>(j ^ a)] += 4.0 * row[j] * psi[static_cast<Eigen::Index>(j)];
            }
        }
    }
    return value;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct RestartOutcome {
    Eigen::VectorXcd psi;
    RestartTrace trace;
};

RestartOutcome descend(const SearchProblem& p, Eigen::VectorXcd psi) {
    const double sign = p.direction == Direction::maximize ? -1.0 : 1.0;
    constexpr double armijo = 1e-4;
    psi.normalize();
    Eigen::VectorXcd grad;
    double f = sign * evaluate_objective(p.objective, psi, &grad);
    grad *= sign;
    Eigen::VectorXcd g = grad - real_dot(psi, grad) * psi;
    double step = 0.1 / std::max(1.0, g.norm());
    RestartOutcome out;
    int it = 0;
    for (; it < p.max_iterations; ++it) {
        const double gnorm2 = g.squaredNorm();
        // The second test stops once the predicted decrease is below round-off in f,
        // where the gradient norm can no longer shrink reliably.
        if (std::sqrt(gnorm2) < p.gradient_tol || step * gnorm2 <= 1e-15 * std::max(1.0, std::abs(f))) {
            out.trace.converged = true;
            break;
        }
        Eigen::VectorXcd trial;
        Eigen::VectorXcd trial_grad;
        double ft = 0.0;
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            trial = (psi - step * g).normalized();
            ft = sign * evaluate_objective(p.objective, trial, &trial_grad);
            if (ft <= f - armijo * step * gnorm2) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            // No decrease representable at this precision: treat as converged.
            out.trace.converged = true;
            break;
        }
        trial_grad *= sign;
        const Eigen::VectorXcd g_new = trial_grad - real_dot(trial, trial_grad) * trial;
        const Eigen::VectorXcd s = trial - psi;
        const Eigen::VectorXcd y = g_new - g;
        const double sy = real_dot(s, y);
        step = sy > 0 ? std::clamp(s.squaredNorm() / sy, 1e-12, 1e3) : std::min(step * 2, 1e3);
        psi = trial;
        g = g_new;
        f = ft;
    }
    out.trace.iterations = it;
    out.trace.value = sign * f;
    out.psi = std::move(psi);
    return out;
}

double recompute(const SearchObjective& obj, const PureState& state, const SectorVector& s) {
    if (obj.kind == SearchObjective::Kind::purity_overlap) {
        return purity_overlap_functional(state, obj.subset);
    }
    return obj.coeffs.dot(s);
}

}  // namespace

Direction parse_direction(const std::string& text) {
    if (text == "min" || text == "minimize") {
        return Direction::minimize;
    }
    if (text == "max" || text == "maximize") {
        return Direction::maximize;
    }
    throw contract_error("direction must be min or max, got '" + text + "'");
}

std::string to_string(Direction d) {
    return d == Direction::maximize ? "max" : "min";
}

SearchObjective linear_objective(int n, const RVec& coeffs, std::string label) {
    if (coeffs.size() != n + 1) {
        throw contract_error("objective needs N + 1 coefficients");
    }
    SearchObjective o;
    o.kind = SearchObjective::Kind::linear;
    o.n = n;
    o.coeffs.resize(n + 1);
    for (int m = 0; m <= n; ++m) {
        o.coeffs[m] = to_double(coeffs[m]);
    }
    o.label = std::move(label);
    return o;
}

SearchObjective linear_objective(int n, const std::string& text) {
    return linear_objective(n, parse_objective(n, text), text);
}

SearchObjective purity_overlap_objective(int n, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    if (subset.empty() || static_cast<int>(subset.size()) >= n ||
        std::adjacent_find(subset.begin(), subset.end()) != subset.end() || subset.front() < 1 ||
        subset.back() > n) {
        throw contract_error("subset must be a proper nonempty subset of 1..N");
    }
    SearchObjective o;
    o.kind = SearchObjective::Kind::purity_overlap;
    o.n = n;
    o.subset = std::move(subset);
    o.label = "purity+overlap";
    return o;
}

double objective_value(const SearchObjective& objective, const Eigen::VectorXcd& psi) {
    return evaluate_objective(objective, psi, nullptr);
}

Eigen::VectorXcd objective_gradient(const SearchObjective& objective, const Eigen::VectorXcd& psi) {
    Eigen::VectorXcd g;
    evaluate_objective(objective, psi, &g);
    return g;
}

int default_restarts(int n) {
    return n <= 6 ? 64 : 256;
}

int worker_count(int requested) {
    int n = requested;
    if (n <= 0) {
        n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
        if (const char* env = std::getenv("SECTORLENS_THREADS")) {
            const int cap = std::atoi(env);
            if (cap > 0) {
                n = std::min(n, cap);
            }
        }
    }
    return n;
}

std::uint64_t restart_seed(std::uint64_t seed, int index) {
    return splitmix64(seed + static_cast<std::uint64_t>(index));
}

SearchResult optimize(const SearchProblem& problem) {
    const int n = problem.objective.n;
    const int cap = problem.objective.kind == SearchObjective::Kind::linear ? kSearchMaxQubits
                                                                           : kPurityOverlapMaxQubits;
    if (n < 1 || n > cap) {
        throw capability_error("optimize supports N <= " + std::to_string(cap) + ", got " + std::to_string(n));
    }
    for (const auto& s : problem.starts) {
        if (s.n_qubits() != n) {
            throw contract_error("start state has the wrong qubit count");
        }
    }
    const int restarts = problem.restarts > 0 ? problem.restarts : default_restarts(n);
    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(restarts));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < restarts; i = next++) {
            Eigen::VectorXcd start;
            std::uint64_t seed = 0;
            if (i < static_cast<int>(problem.starts.size())) {
                start = problem.starts[static_cast<std::size_t>(i)].amplitudes();
            } else {
                seed = restart_seed(problem.seed, i);
                std::mt19937_64 rng(seed);
                start = haar_random(n, rng).amplitudes();
            }
            RestartOutcome r = descend(problem, std::move(start));
            r.trace.index = i;
            r.trace.seed = seed;
            outcomes[static_cast<std::size_t>(i)] = std::move(r);
        }
    };
    const int workers = std::min(worker_count(problem.threads), restarts);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    SearchResult result;
    int best = 0;
    for (int i = 0; i < restarts; ++i) {
        const double v = outcomes[static_cast<std::size_t>(i)].trace.value;
        const double b = outcomes[static_cast<std::size_t>(best)].trace.value;
        if (problem.direction == Direction::maximize ? v > b : v < b) {
            best = i;
        }
        result.trace.push_back(outcomes[static_cast<std::size_t>(i)].trace);
    }
    result.best_restart = best;
    result.state = PureState(n, outcomes[static_cast<std::size_t>(best)].psi);
    result.sectors = n <= kEnumerationCap ? sector_lengths(result.state) : sector_lengths_walsh(result.state);
    result.value = recompute(problem.objective, result.state, result.sectors);
    if (std::abs(result.value - outcomes[static_cast<std::size_t>(best)].trace.value) > 1e-9) {
        throw computation_error("optimizer value disagrees with the recomputed value");
    }
    if (n >= 2 && n <= kMaxQubits) {
        result.region = check_membership(result.sectors, build_region(n, "R"));
    }
    return result;
}

PurityOverlapResult optimize_purity_overlap(int n, const std::vector<int>& subset, int restarts,
                                            std::uint64_t seed) {
    if (n > kPurityOverlapMaxQubits) {
        throw capability_error("purity+overlap search supports N <= 10");
    }
    SearchProblem p;
    p.objective = purity_overlap_objective(n, subset);
    p.direction = Direction::minimize;
    p.restarts = restarts;
    p.seed = seed;
    PurityOverlapResult out;
    out.search = optimize(p);
    const ReducedState r = partial_trace(out.search.state, p.objective.subset);
    out.purity = purity(r.matrix);
    out.overlap = overlap_R(r);
    out.conjecture = purity_overlap_conjecture(n, static_cast<int>(subset.size()));
    out.gap = out.search.value - to_double(out.conjecture);
    return out;
}

GapReport gap_probe(int n, const RVec& objective, Direction direction, int restarts, std::uint64_t seed) {
    if (n < 2 || n > kSearchMaxQubits) {
        throw capability_error("gap probe supports 2 <= N <= 8");
    }
    const RegionSpec region = build_region(n, "R");
    const bool maximize = direction == Direction::maximize;
    const LPResult lp = solve_lp(lp_from_region(region, maximize ? objective : RVec(-objective)));
    if (lp.status != LPStatus::optimal) {
        throw computation_error("LP over R is " + to_string(lp.status));
    }
    GapReport g;
    g.n = n;
    g.direction = direction;
    g.lp_value = maximize ? lp.value : Rational(-lp.value);
    SearchProblem p;
    p.objective = linear_objective(n, objective, "objective");
    p.direction = direction;
    p.restarts = restarts;
    p.seed = seed;
    g.search = optimize(p);
    g.search_value = g.search.value;
    g.gap = std::abs(to_double(g.lp_value) - g.search_value);
    return g;
}

}  // namespace sectorlens
