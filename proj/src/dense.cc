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

#include "trotterobs/dense.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "trotterobs/errors.h"

namespace trotterobs {

namespace {

double scale_of(const DenseOperator &a) {
    return std::max(1.0, a.cwiseAbs().maxCoeff());
}

void require_square(const DenseOperator &a, const char *what) {
    if (a.rows() != a.cols()) {
        throw DimensionError(std::string(what) + ": matrix is not square");
    }
}

void require_same_shape(const DenseOperator &a, const DenseOperator &b, const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(what) + ": dimension mismatch");
    }
}

void require_hermitian(const DenseOperator &a, const char *what) {
    require_square(a, what);
    if (!is_hermitian(a)) {
        throw DomainError(std::string(what) + ": operator is not Hermitian");
    }
}

// Tight structural test used to pick the cheaper eigenvalue route for norms.
bool nearly_hermitian(const DenseOperator &a) {
    if (a.rows() != a.cols() || a.size() == 0) {
        return false;
    }
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= 1e-13 * scale_of(a);
}

bool nearly_anti_hermitian(const DenseOperator &a) {
    if (a.rows() != a.cols() || a.size() == 0) {
        return false;
    }
    return (a + a.adjoint()).cwiseAbs().maxCoeff() <= 1e-13 * scale_of(a);
}

RealVector singular_values(const DenseOperator &a) {
    if (nearly_hermitian(a)) {
        return herm_eigenvalues(hermitian_part(a)).cwiseAbs();
    }
    if (nearly_anti_hermitian(a)) {
        DenseOperator h = std::complex<double>(0, 1) * a;
        return herm_eigenvalues(hermitian_part(h)).cwiseAbs();
    }
    Eigen::BDCSVD<DenseOperator> svd(a);
    return svd.singularValues();
}

}  // namespace

bool is_power_of_two_dim(const DenseOperator &a) {
    auto d = a.rows();
    return a.rows() == a.cols() && d > 0 && (d & (d - 1)) == 0;
}

bool is_finite(const DenseOperator &a) {
    return a.allFinite();
}

bool is_hermitian(const DenseOperator &a, double tol) {
    if (a.rows() != a.cols()) {
        return false;
    }
    if (a.size() == 0) {
        return true;
    }
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol * scale_of(a);
}

bool is_unitary(const DenseOperator &a, double tol) {
    if (a.rows() != a.cols()) {
        return false;
    }
    DenseOperator p = a.adjoint() * a;
    p.diagonal().array() -= 1.0;
    return p.size() == 0 || p.cwiseAbs().maxCoeff() <= tol;
}

bool is_density_matrix(const DenseOperator &rho, double tol) {
    if (!is_hermitian(rho, tol) || rho.size() == 0) {
        return false;
    }
    if (std::abs(rho.trace() - 1.0) > tol) {
        return false;
    }
    return herm_eigenvalues(hermitian_part(rho)).minCoeff() >= -tol;
}

DenseOperator identity(Eigen::Index dim) {
    return DenseOperator::Identity(dim, dim);
}

DenseOperator commutator(const DenseOperator &a, const DenseOperator &b) {
    require_same_shape(a, b, "commutator");
    return a * b - b * a;
}

DenseOperator hermitian_part(const DenseOperator &a) {
    return (a + a.adjoint()) * 0.5;
}

HermitianEigen herm_eig(const DenseOperator &a) {
    require_hermitian(a, "herm_eig");
    Eigen::SelfAdjointEigenSolver<DenseOperator> solver(hermitian_part(a));
    if (solver.info() != Eigen::Success) {
        throw NumericalError("herm_eig: eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector herm_eigenvalues(const DenseOperator &a) {
    require_hermitian(a, "herm_eigenvalues");
    Eigen::SelfAdjointEigenSolver<DenseOperator> solver(hermitian_part(a), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("herm_eigenvalues: eigensolver did not converge");
    }
    return solver.eigenvalues();
}

DenseOperator exp_herm(const HermitianEigen &spectrum, double scale) {
    const auto &v = spectrum.vectors;
    ComplexVector phases(spectrum.values.size());
    for (Eigen::Index k = 0; k < phases.size(); ++k) {
        phases[k] = std::polar(1.0, scale * spectrum.values[k]);
    }
    return v * phases.asDiagonal() * v.adjoint();
}

DenseOperator exp_herm(const DenseOperator &h, double scale) {
    if (scale == 0) {
        require_hermitian(h, "exp_herm");
        return identity(h.rows());
    }
    return exp_herm(herm_eig(h), scale);
}

UnitarySpectrum unitary_eig(const DenseOperator &w) {
    require_square(w, "unitary_eig");
    if (!is_unitary(w)) {
        throw DomainError("unitary_eig: operator is not unitary");
    }
    // The Schur form of a normal matrix is diagonal and its Schur vectors
    // stay orthonormal even inside degenerate eigenspaces.
    Eigen::ComplexSchur<DenseOperator> schur(w);
    if (schur.info() != Eigen::Success) {
        throw NumericalError("unitary_eig: Schur decomposition did not converge");
    }
    UnitarySpectrum out;
    out.vectors = schur.matrixU();
    const auto &t = schur.matrixT();
    out.phases.resize(t.rows());
    for (Eigen::Index k = 0; k < t.rows(); ++k) {
        double phase = std::arg(t(k, k));
        if (phase <= -std::numbers::pi + 1e-12) {
            phase = std::numbers::pi;
            out.branch_ambiguous = true;
        }
        out.phases[k] = phase;
    }
    return out;
}

PrincipalLog log_unitary_principal(const DenseOperator &w) {
    auto spectrum = unitary_eig(w);
    DenseOperator g = spectrum.vectors * spectrum.phases.cast<std::complex<double>>().asDiagonal() *
                      spectrum.vectors.adjoint();
    return {hermitian_part(g), spectrum.branch_ambiguous};
}

double spectral_norm(const DenseOperator &a) {
    if (a.size() == 0) {
        return 0;
    }
    return singular_values(a).maxCoeff();
}

double trace_norm(const DenseOperator &a) {
    if (a.size() == 0) {
        return 0;
    }
    return singular_values(a).sum();
}

double frobenius_norm(const DenseOperator &a) {
    return a.norm();
}

DenseOperator conjugate(const DenseOperator &u, const DenseOperator &a) {
    require_square(u, "conjugate");
    require_same_shape(u, a, "conjugate");
    return u * a * u.adjoint();
}

double expectation(const DenseOperator &o, const DenseOperator &rho) {
    require_hermitian(o, "expectation");
    require_same_shape(o, rho, "expectation");
    if (!is_density_matrix(rho)) {
        throw DomainError("expectation: rho is not a density matrix");
    }
    std::complex<double> tr = (o.array() * rho.transpose().array()).sum();
    if (std::abs(tr.imag()) > 1e-10 * scale_of(o)) {
        throw NumericalError("expectation: Tr(O rho) has a non-negligible imaginary part");
    }
    return tr.real();
}

SylvesterSolution solve_sylvester_for_M(const DenseOperator &h, const DenseOperator &hp) {
    require_hermitian(h, "solve_sylvester_for_M");
    require_hermitian(hp, "solve_sylvester_for_M");
    require_same_shape(h, hp, "solve_sylvester_for_M");

    auto spectrum = herm_eig(h);
    const auto &q = spectrum.vectors;
    const auto &lambda = spectrum.values;
    double h_norm = lambda.size() ? lambda.cwiseAbs().maxCoeff() : 0.0;
    double gap_floor = 1e-10 * h_norm;

    // i (M H - H M) = Hp reads i (lambda_l - lambda_k) M_kl = Hp_kl in the eigenbasis.
    DenseOperator hp_hat = q.adjoint() * hp * q;
    DenseOperator m_hat = DenseOperator::Zero(h.rows(), h.cols());
    const std::complex<double> i(0, 1);
    for (Eigen::Index l = 0; l < h.cols(); ++l) {
        for (Eigen::Index k = 0; k < h.rows(); ++k) {
            double gap = lambda[l] - lambda[k];
            if (std::abs(gap) > gap_floor) {
                m_hat(k, l) = hp_hat(k, l) / (i * gap);
            }
        }
    }

    SylvesterSolution out;
    out.m = hermitian_part(q * m_hat * q.adjoint());
    DenseOperator lhs = i * commutator(out.m, h);
    out.residual = (lhs - hp).norm();
    out.exists = out.residual <= 1e-8 * hp.norm();
    return out;
}

DenseOperator matrix_power(const DenseOperator &a, std::uint64_t k) {
    require_square(a, "matrix_power");
    DenseOperator result = identity(a.rows());
    DenseOperator base = a;
    bool first = true;
    while (k != 0) {
        if (k & 1) {
            result = first ? base : DenseOperator(base * result);
            first = false;
        }
        k >>= 1;
        if (k != 0) {
            base = base * base;
        }
    }
    return result;
}

}  // namespace trotterobs
