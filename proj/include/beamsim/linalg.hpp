// SPDX-License-Identifier: Apache-2.0
//
// beamsim: reconfigurable-antenna beamspace MIMO simulation library
// Copyright (C) 2026 The beamsim authors
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

#ifndef BEAMSIM_LINALG_HPP
#define BEAMSIM_LINALG_HPP

#include "beamsim/complex_matrix.hpp"

namespace beamsim
{
    // Lower-triangular Cholesky factor L with A = L L^H. Only the lower
    // triangle of A is read. Throws SingularMatrix if a pivot is not positive.
    ComplexMatrix cholesky(const ComplexMatrix &a);

    // log2 det(A) for Hermitian positive definite A, via Cholesky.
    double log2_det_hpd(const ComplexMatrix &a);

    // log2 |I + c M M^H|. Factors whichever Gram matrix (M M^H or M^H M) is
    // smaller; both give the same determinant.
    // Throws InvalidInput on non-finite entries or c <= 0.
    double logdet_capacity(const ComplexMatrix &m, double c);

    // Inverse of a Hermitian positive definite matrix. Throws SingularMatrix.
    ComplexMatrix hpd_inverse(const ComplexMatrix &a);
}

#endif
