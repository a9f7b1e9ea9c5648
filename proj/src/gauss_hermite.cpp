// SPDX-License-Identifier: Apache-2.0
//
// mimoec — queueing-constrained throughput analysis for multi-antenna fading links
// Copyright (C) 2026 The mimoec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "mimoec/gauss_hermite.hpp"

#include "mimoec/linalg.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mimoec {

namespace {

GaussHermiteRule build_rule(int n)
{
    if (n < 1)
        throw std::invalid_argument("gauss_hermite: order must be positive.");

    // Symmetric tridiagonal Jacobi matrix of the Hermite recurrence;
    // off-diagonal b_k = sqrt(k/2).
    CMat J(n, n);
    for (int k = 1; k < n; ++k) {
        const double b = std::sqrt(0.5 * k);
        J(k - 1, k) = b;
        J(k, k - 1) = b;
    }
    HermitianEig e = hermitian_eig(J, 1e-14, 200);

    const double sqrt_pi = std::sqrt(M_PI);
    GaussHermiteRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // eigenvalues come back descending; store ascending
    for (int j = 0; j < n; ++j) {
        const int src = n - 1 - j;
        rule.nodes[j] = e.eigenvalues[src];
        rule.weights[j] = sqrt_pi * std::norm(e.eigenvectors(0, src));
    }
    return rule;
}

} // namespace

const GaussHermiteRule &gauss_hermite(int order)
{
    static std::mutex mtx;
    static std::map<int, GaussHermiteRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end())
        it = cache.emplace(order, build_rule(order)).first;
    return it->second;
}

} // namespace mimoec
