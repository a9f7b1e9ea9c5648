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

#ifndef MIMOEC_LINALG_HPP
#define MIMOEC_LINALG_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mimoec {

using cxd = std::complex<double>;

/// Dense row-major complex matrix. Dimensions stay small (antenna counts),
/// so everything is plain loops over contiguous storage.
class CMat {
  public:
    CMat() = default;
    CMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static CMat identity(int n)
    {
        CMat m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cxd &operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const cxd &operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    CMat adjoint() const;
    CMat operator*(const CMat &rhs) const;

    /// y = A * x
    std::vector<cxd> apply(const std::vector<cxd> &x) const;

    double frobenius_norm() const;
    double frobenius_norm_sq() const;

    bool same_shape(const CMat &o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<cxd> a_;
};

/// Thrown when the iterative eigensolver fails to reach its tolerance
/// within the sweep cap; carries the remaining off-diagonal residual.
class EigensolverFailure : public std::runtime_error {
  public:
    EigensolverFailure(const std::string &msg, double residual)
        : std::runtime_error(msg), residual_(residual)
    {
    }
    double offdiag_residual() const { return residual_; }

  private:
    double residual_;
};

struct HermitianEig {
    std::vector<double> eigenvalues; // descending
    CMat eigenvectors;               // columns, unitary
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Off-diagonal Frobenius tolerance is relative to the input
/// norm; the sweep cap guards against pathological non-convergence.
HermitianEig hermitian_eig(CMat A, double tol = 1e-12, int max_sweeps = 100);

/// Hermitian PSD square root via the eigendecomposition, with eigenvalues
/// clamped at zero.
CMat hermitian_sqrt(const CMat &A);

} // namespace mimoec

#endif
