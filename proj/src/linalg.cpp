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

#include "mimoec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mimoec {

CMat CMat::adjoint() const
{
    CMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r(j, i) = std::conj((*this)(i, j));
    return r;
}

CMat CMat::operator*(const CMat &rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("CMat multiply: inner dimensions do not match.");
    CMat r(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const cxd aik = (*this)(i, k);
            if (aik == cxd(0.0, 0.0))
                continue;
            for (int j = 0; j < rhs.cols_; ++j)
                r(i, j) += aik * rhs(k, j);
        }
    return r;
}

std::vector<cxd> CMat::apply(const std::vector<cxd> &x) const
{
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("CMat apply: vector length does not match columns.");
    std::vector<cxd> y(rows_);
    for (int i = 0; i < rows_; ++i) {
        cxd acc = 0.0;
        for (int j = 0; j < cols_; ++j)
            acc += (*this)(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

double CMat::frobenius_norm_sq() const
{
    double s = 0.0;
    for (const cxd &v : a_)
        s += std::norm(v);
    return s;
}

double CMat::frobenius_norm() const { return std::sqrt(frobenius_norm_sq()); }

namespace {

double offdiag_norm(const CMat &A)
{
    double s = 0.0;
    const int n = A.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                s += std::norm(A(i, j));
    return std::sqrt(s);
}

} // namespace

HermitianEig hermitian_eig(CMat A, double tol, int max_sweeps)
{
    const int n = A.rows();
    if (n != A.cols())
        throw std::invalid_argument("hermitian_eig: matrix must be square.");

    CMat V = CMat::identity(n);
    if (n <= 1) {
        HermitianEig r;
        r.eigenvalues.assign(n, n == 1 ? A(0, 0).real() : 0.0);
        r.eigenvectors = V;
        return r;
    }

    const double scale = std::max(A.frobenius_norm(), 1e-300);
    const double stop = tol * scale;
    // Rotations below this threshold cannot move the residual meaningfully.
    const double skip = stop / (static_cast<double>(n) * n);

    double off = offdiag_norm(A);
    int sweep = 0;
    while (off > stop && sweep < max_sweeps) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cxd apq = A(p, q);
                const double r = std::abs(apq);
                if (r <= skip)
                    continue;
                const double app = A(p, p).real();
                const double aqq = A(q, q).real();
                const cxd phase = apq / r; // e^{i phi}

                const double tau = (app - aqq) / (2.0 * r);
                const double t =
                    (tau >= 0.0 ? -1.0 / (tau + std::hypot(1.0, tau)) : -1.0 / (tau - std::hypot(1.0, tau)));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cxd sp = s * phase;        // s e^{i phi}
                const cxd spc = std::conj(sp);   // s e^{-i phi}

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q)
                        continue;
                    const cxd akp = A(k, p);
                    const cxd akq = A(k, q);
                    A(k, p) = c * akp - spc * akq;
                    A(k, q) = sp * akp + c * akq;
                    A(p, k) = std::conj(A(k, p));
                    A(q, k) = std::conj(A(k, q));
                }
                A(p, p) = c * c * app - 2.0 * c * s * r + s * s * aqq;
                A(q, q) = s * s * app + 2.0 * c * s * r + c * c * aqq;
                A(p, q) = 0.0;
                A(q, p) = 0.0;

                for (int k = 0; k < n; ++k) {
                    const cxd vkp = V(k, p);
                    const cxd vkq = V(k, q);
                    V(k, p) = c * vkp - spc * vkq;
                    V(k, q) = sp * vkp + c * vkq;
                }
            }
        }
        off = offdiag_norm(A);
        ++sweep;
    }
    if (off > stop)
        throw EigensolverFailure("hermitian_eig: Jacobi sweeps did not converge, residual " +
                                     std::to_string(off),
                                 off);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return A(i, i).real() > A(j, j).real(); });

    HermitianEig res;
    res.eigenvalues.resize(n);
    res.eigenvectors = CMat(n, n);
    for (int j = 0; j < n; ++j) {
        res.eigenvalues[j] = A(order[j], order[j]).real();
        for (int i = 0; i < n; ++i)
            res.eigenvectors(i, j) = V(i, order[j]);
    }
    return res;
}

CMat hermitian_sqrt(const CMat &A)
{
    HermitianEig e = hermitian_eig(A);
    const int n = A.rows();
    CMat r(n, n);
    for (int k = 0; k < n; ++k) {
        const double lam = std::max(e.eigenvalues[k], 0.0);
        const double s = std::sqrt(lam);
        if (s == 0.0)
            continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                r(i, j) += s * e.eigenvectors(i, k) * std::conj(e.eigenvectors(j, k));
    }
    return r;
}

} // namespace mimoec
