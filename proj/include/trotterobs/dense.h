// Copyright 2026 The trotterobs Authors
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

#ifndef TROTTEROBS_DENSE_H
#define TROTTEROBS_DENSE_H

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace trotterobs {

/// Row/column index b of a DenseOperator is the computational basis state
/// whose bit q is the value of qubit q.
using DenseOperator = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kOperatorTolerance = 1e-10;

bool is_power_of_two_dim(const DenseOperator &a);
bool is_finite(const DenseOperator &a);
bool is_hermitian(const DenseOperator &a, double tol = kOperatorTolerance);
bool is_unitary(const DenseOperator &a, double tol = kOperatorTolerance);
/// Hermitian, unit trace and positive semidefinite, each to `tol`.
bool is_density_matrix(const DenseOperator &rho, double tol = kOperatorTolerance);

DenseOperator identity(Eigen::Index dim);
DenseOperator commutator(const DenseOperator &a, const DenseOperator &b);
DenseOperator hermitian_part(const DenseOperator &a);

struct HermitianEigen {
    RealVector values;  // ascending
    DenseOperator vectors;  // columns are eigenvectors
};

/// A = Q diag(values) Q^dagger.
HermitianEigen herm_eig(const DenseOperator &a);
RealVector herm_eigenvalues(const DenseOperator &a);

/// e^{i * scale * H}.
DenseOperator exp_herm(const DenseOperator &h, double scale);
DenseOperator exp_herm(const HermitianEigen &spectrum, double scale);

/// Spectral data of a unitary W = V diag(e^{i phases}) V^dagger.
struct UnitarySpectrum {
    RealVector phases;  // each in (-pi, pi]
    DenseOperator vectors;
    bool branch_ambiguous = false;  // some phase sat within 1e-12 of -pi
};

UnitarySpectrum unitary_eig(const DenseOperator &w);

struct PrincipalLog {
    DenseOperator generator;  // Hermitian G with e^{iG} = W
    bool branch_ambiguous = false;
};

/// Principal logarithm of a unitary: every eigenphase of the generator lies in
/// (-pi, pi]. Phases within 1e-12 of -pi are mapped to +pi and flagged.
PrincipalLog log_unitary_principal(const DenseOperator &w);

double spectral_norm(const DenseOperator &a);
double trace_norm(const DenseOperator &a);
double frobenius_norm(const DenseOperator &a);

/// U A U^dagger.
DenseOperator conjugate(const DenseOperator &u, const DenseOperator &a);

/// Tr(O rho) for Hermitian O and a density matrix rho.
double expectation(const DenseOperator &o, const DenseOperator &rho);

struct SylvesterSolution {
    DenseOperator m;
    double residual = 0;  // ||[iM, H] - Hp||_F
    bool exists = false;
};

/// Minimum-Frobenius-norm Hermitian M with [iM, H] = Hp, solved in the
/// eigenbasis of H. Entries coupling eigenvalues closer than 1e-10 ||H||
/// are left at zero and reported through `residual`.
SylvesterSolution solve_sylvester_for_M(const DenseOperator &h, const DenseOperator &hp);

/// a^k by binary powering.
DenseOperator matrix_power(const DenseOperator &a, std::uint64_t k);

}  // namespace trotterobs

#endif
