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

#include "sectorlens/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sectorlens {

Int128 binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    Int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n - k + i) is divisible by i at every step.
        Int128 next = r * (n - k + i);
        if (next / (n - k + i) != r) {
            throw capability_error("binomial overflow");
        }
        r = next / i;
    }
    return r;
}

std::string to_string(Int128 v) {
    if (v == 0) {
        return "0";
    }
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) {
        s.push_back('-');
    }
    std::reverse(s.begin(), s.end());
    return s;
}

Rational to_rational(Int128 v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
        return Rational(static_cast<long long>(v));
    }
    return Rational(to_string(v));
}

std::string to_string(const Rational& q) {
    return q.str();
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

Rational pow2(int e) {
    using boost::multiprecision::mpz_int;
    mpz_int p = 1;
    p <<= std::abs(e);
    Rational r(p);
    return e >= 0 ? r : Rational(1) / r;
}

Rational snap(double x, std::int64_t max_den) {
    if (!std::isfinite(x)) {
        throw contract_error("cannot snap a non-finite value");
    }
    // Convergents h/k of the continued fraction of x.
    long double v = x;
    long double h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        long double a = std::floor(v);
        long double h2 = a * h1 + h0;
        long double k2 = a * k1 + k0;
        if (k2 > static_cast<long double>(max_den)) {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        long double frac = v - a;
        if (std::fabs(static_cast<long double>(x) - h1 / k1) < 1e-18L || frac < 1e-18L) {
            break;
        }
        v = 1.0L / frac;
    }
    return Rational(static_cast<long long>(h1)) / Rational(static_cast<long long>(k1));
}

std::optional<RVec> solve_exact(RMat a, RVec b) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || b.size() != n) {
        throw contract_error("solve_exact needs a square system");
    }
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = c;
        while (p < n && a(p, c) == 0) {
            ++p;
        }
        if (p == n) {
            return std::nullopt;
        }
        if (p != c) {
            a.row(p).swap(a.row(c));
            std::swap(b[p], b[c]);
        }
        const Rational inv = 1 / a(c, c);
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0) {
                continue;
            }
            const Rational f = a(r, c) * inv;
            for (Eigen::Index k = c; k < n; ++k) {
                a(r, k) -= f * a(c, k);
            }
            b[r] -= f * b[c];
        }
    }
    RVec x(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        x[i] = b[i] / a(i, i);
    }
    return x;
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) {
        return out;
    }
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) {
        cur[i] = i + 1;
    }
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i + 1) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++cur[i];
        for (int j = i + 1; j < k; ++j) {
            cur[j] = cur[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace sectorlens
