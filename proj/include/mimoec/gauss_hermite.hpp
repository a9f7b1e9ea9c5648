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

#ifndef MIMOEC_GAUSS_HERMITE_HPP
#define MIMOEC_GAUSS_HERMITE_HPP

#include <vector>

namespace mimoec {

/// Nodes and weights for the physicists' Gauss-Hermite rule:
/// integral of e^{-x^2} f(x) dx ~= sum_i w_i f(x_i).
struct GaussHermiteRule {
    std::vector<double> nodes;   // ascending
    std::vector<double> weights; // positive, sum = sqrt(pi)
};

/// Rule of the given order, computed by Golub-Welsch on the Hermite
/// recurrence tridiagonal. Results are cached per order.
const GaussHermiteRule &gauss_hermite(int order);

} // namespace mimoec

#endif
