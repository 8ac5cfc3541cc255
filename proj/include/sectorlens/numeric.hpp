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

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace sectorlens {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Int128 = __int128;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using RVec = Vec<Rational>;
using RMat = Mat<Rational>;

// Bad arguments or violated preconditions.
struct contract_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request exceeds a size cap of some code path.
struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency check or certification failed.
struct computation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// C(n, k); zero when k < 0 or k > n. Throws on overflow.
Int128 binomial(int n, int k);

Rational to_rational(Int128 v);
std::string to_string(Int128 v);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

// 2^e for any integer e.
Rational pow2(int e);

template <typename Scalar>
Scalar from_integer(Int128 v) {
    if constexpr (std::is_floating_point_v<Scalar>) {
        return static_cast<Scalar>(v);
    } else {
        return to_rational(v);
    }
}

template <typename Scalar>
Scalar binom(int n, int k) {
    return from_integer<Scalar>(binomial(n, k));
}

template <typename Scalar>
Scalar power_of_two(int e) {
    if constexpr (std::is_floating_point_v<Scalar>) {
        return std::ldexp(Scalar(1), e);
    } else {
        return pow2(e);
    }
}

// Best rational approximation with denominator <= max_den (continued fractions).
Rational snap(double x, std::int64_t max_den = 1000000000);

// Exact solve of a square system; nullopt when singular.
std::optional<RVec> solve_exact(RMat a, RVec b);

// All k-subsets of {1..n}, lexicographic.
std::vector<std::vector<int>> subsets(int n, int k);

}  // namespace sectorlens
