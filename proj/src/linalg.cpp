#include "echarge/linalg.hpp"

#include "echarge/errors.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace echarge {

void Tolerances::validate() const {
    auto check = [](double v, const char *name) {
        if(!(v > 0.0) || !std::isfinite(v))
            throw ValidationError("tolerances.positive", fmt::format("{} must be strictly positive, got {}", name, v), v);
    };
    check(hermiticity_tol, "hermiticity_tol");
    check(trace_tol, "trace_tol");
    check(eigenvalue_clamp, "eigenvalue_clamp");
    check(orthogonality_tol, "orthogonality_tol");
    check(prob_floor, "prob_floor");
}

namespace {
    void check_joint_dim(long da, long db) {
        if(da * db > kMaxJointDim)
            throw ResourceLimitError(fmt::format("joint dimension {}x{} = {} exceeds the cap of {}", da, db, da * db, kMaxJointDim));
    }
} // namespace

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    check_joint_dim(a.rows(), b.rows());
    check_joint_dim(a.cols(), b.cols());
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for(Eigen::Index i = 0; i < a.rows(); ++i)
        for(Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexVector kron_vec(const ComplexVector &a, const ComplexVector &b) {
    check_joint_dim(a.size(), b.size());
    ComplexVector out(a.size() * b.size());
    for(Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &m, long dA, long dB, Party traced) {
    if(dA < 1 || dB < 1 || m.rows() != m.cols() || m.rows() != dA * dB)
        throw ShapeError(fmt::format("partial trace of a {}x{} matrix with dA={}, dB={}", m.rows(), m.cols(), dA, dB));
    if(traced == Party::B) {
        // Each dB x dB block (i, j) contributes its trace to entry (i, j).
        ComplexMatrix out(dA, dA);
        for(long i = 0; i < dA; ++i)
            for(long j = 0; j < dA; ++j) out(i, j) = m.block(i * dB, j * dB, dB, dB).trace();
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(dB, dB);
    for(long i = 0; i < dA; ++i) out += m.block(i * dB, i * dB, dB, dB);
    return out;
}

double hermiticity_defect(const ComplexMatrix &m) {
    if(m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix &m) {
    return m.allFinite();
}

ComplexMatrix hermitian_part(const ComplexMatrix &m, const Tolerances &tol) {
    if(m.rows() != m.cols()) throw ShapeError(fmt::format("expected a square matrix, got {}x{}", m.rows(), m.cols()));
    if(!all_finite(m)) throw ValidationError("matrix.finite", "matrix has NaN or Inf entries");
    const double defect = hermiticity_defect(m);
    if(defect > tol.hermiticity_tol)
        throw ValidationError("hermiticity_tol", fmt::format("max |m - m^dagger| = {:.3e} exceeds {:.1e}", defect, tol.hermiticity_tol),
                              defect);
    return (m + m.adjoint()) * 0.5;
}

HermitianEigen hermitian_eigensystem(const ComplexMatrix &m, const Tolerances &tol) {
    const ComplexMatrix                              h = hermitian_part(m, tol);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::ComputeEigenvectors);
    if(solver.info() != Eigen::Success) throw Error("Hermitian eigensolver failed to converge");
    HermitianEigen out;
    out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    out.vectors = solver.eigenvectors();
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m, const Tolerances &tol) {
    const ComplexMatrix                              h = hermitian_part(m, tol);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    if(solver.info() != Eigen::Success) throw Error("Hermitian eigensolver failed to converge");
    std::vector<double> vals(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(vals.begin(), vals.end());
    return vals;
}

} // namespace echarge
