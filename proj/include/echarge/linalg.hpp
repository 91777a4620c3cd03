#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace echarge {

using cplx          = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Numeric tolerance policy shared by every module.
struct Tolerances {
    double hermiticity_tol   = 1e-10;
    double trace_tol         = 1e-9;
    double eigenvalue_clamp  = 1e-12;
    double orthogonality_tol = 1e-9;
    /// Probabilities at or below this are "numerically zero" for support counting.
    double prob_floor = 1e-12;

    static Tolerances defaults() { return {}; }
    static Tolerances strict() { return {1e-12, 1e-11, 1e-14, 1e-11, 1e-14}; }

    /// Throws ValidationError unless every tolerance is strictly positive.
    void validate() const;
};

/// Joint Hilbert-space dimensions above this are refused.
inline constexpr long kMaxJointDim = 64;

enum class Party { A, B };

[[nodiscard]] ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
[[nodiscard]] ComplexVector kron_vec(const ComplexVector &a, const ComplexVector &b);

/// Traces out `traced` from a (dA*dB)-dimensional operator, A being the
/// slow (row-major outer) index.
[[nodiscard]] ComplexMatrix partial_trace(const ComplexMatrix &m, long dA, long dB, Party traced);

/// Largest |m - m^dagger| entry.
[[nodiscard]] double hermiticity_defect(const ComplexMatrix &m);

/// (m + m^dagger) / 2 after checking the defect against `tol.hermiticity_tol`.
[[nodiscard]] ComplexMatrix hermitian_part(const ComplexMatrix &m, const Tolerances &tol);

[[nodiscard]] std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m, const Tolerances &tol = {});

struct HermitianEigen {
    std::vector<double> values; // ascending
    ComplexMatrix       vectors;  // columns
};
[[nodiscard]] HermitianEigen hermitian_eigensystem(const ComplexMatrix &m, const Tolerances &tol = {});

/// f(m) for Hermitian m, applied on the spectrum. Used for square roots and
/// inverse square roots of positive operators.
template<typename F>
[[nodiscard]] ComplexMatrix hermitian_function(const ComplexMatrix &m, F &&f, const Tolerances &tol = {}) {
    auto eig = hermitian_eigensystem(m, tol);
    Eigen::VectorXcd diag(static_cast<Eigen::Index>(eig.values.size()));
    for(std::size_t i = 0; i < eig.values.size(); ++i) diag(static_cast<Eigen::Index>(i)) = f(eig.values[i]);
    return eig.vectors * diag.asDiagonal() * eig.vectors.adjoint();
}

[[nodiscard]] bool all_finite(const ComplexMatrix &m);

} // namespace echarge
