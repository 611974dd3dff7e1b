// Copyright 2026 The meskit Authors
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

#include <gtest/gtest.h>

#include "meskit/four_qubit.hpp"
#include "meskit/lu3.hpp"
#include "meskit/qla.hpp"
#include "meskit/rng.hpp"
#include "meskit/states.hpp"

namespace meskit::testing {

inline ::testing::AssertionResult MatNear(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return ::testing::AssertionFailure() << "shape mismatch";
    const double d = max_abs(a - b);
    if (d <= tol) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "max deviation " << d << " exceeds " << tol;
}

inline Mat2 mat(Complex a, Complex b, Complex c, Complex d) {
    Mat2 m;
    m << a, b, c, d;
    return m;
}

inline Mat2 random_invertible(Rng& rng) {
    Mat2 m;
    do {
        m << rng.complex_normal(), rng.complex_normal(), rng.complex_normal(), rng.complex_normal();
    } while (std::abs(m.determinant()) < 0.1);
    return m;
}

/// Multiplies every local by a Haar-random unitary from the left.
inline FactoredState random_lu(FactoredState fs, Rng& rng) {
    for (Mat2& g : fs.locals) g = rng.haar_unitary() * g;
    return fs;
}

inline StateVector product_state(const ProductOperator& ops, const StateVector& s) { return apply_product(ops, s); }

}  // namespace meskit::testing
