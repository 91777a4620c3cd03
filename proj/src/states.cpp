#include "echarge/states.hpp"

#include "echarge/errors.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <fmt/format.h>
#include <limits>

namespace echarge {

void BipartiteDims::validate() const {
    if(dA < 1 || dB < 1) throw ShapeError(fmt::format("local dimensions must be >= 1, got dA={}, dB={}", dA, dB));
    if(dA * dB > kMaxJointDim)
        throw ResourceLimitError(fmt::format("joint dimension {}x{} = {} exceeds the cap of {}", dA, dB, dA * dB, kMaxJointDim));
}

const ComplexVector &BipartiteState::vector() const {
    if(const auto *v = std::get_if<ComplexVector>(&data_)) return *v;
    throw UnsupportedFormError("operation requires a pure state, got a density matrix");
}

const ComplexMatrix &BipartiteState::matrix() const {
    if(const auto *m = std::get_if<ComplexMatrix>(&data_)) return *m;
    throw UnsupportedFormError("operation requires a density matrix, got a pure vector");
}

BipartiteState validate_state(BipartiteDims dims, ComplexVector amplitudes, const Tolerances &tol) {
    dims.validate();
    if(amplitudes.size() != dims.joint())
        throw ShapeError(fmt::format("pure state has {} amplitudes but dA*dB = {}", amplitudes.size(), dims.joint()));
    if(!amplitudes.allFinite()) throw ValidationError("state.finite", "pure state has NaN or Inf amplitudes");
    const double norm2 = amplitudes.squaredNorm();
    const double dev   = std::abs(norm2 - 1.0);
    if(dev > tol.trace_tol)
        throw ValidationError("trace_tol", fmt::format("pure state has squared norm {:.17g}, deviation {:.3e} > trace_tol {:.1e}", norm2, dev, tol.trace_tol), dev);
    // Vectors already normalized to rounding are kept bit-for-bit so that
    // canonical files round-trip exactly.
    if(dev > 8.0 * std::numeric_limits<double>::epsilon()) amplitudes /= std::sqrt(norm2);
    return BipartiteState(dims, std::move(amplitudes));
}

BipartiteState validate_state(BipartiteDims dims, ComplexMatrix rho, const Tolerances &tol) {
    dims.validate();
    if(rho.rows() != dims.joint() || rho.cols() != dims.joint())
        throw ShapeError(fmt::format("density matrix is {}x{} but dA*dB = {}", rho.rows(), rho.cols(), dims.joint()));
    if(!rho.allFinite()) throw ValidationError("state.finite", "density matrix has NaN or Inf entries");
    const double defect = hermiticity_defect(rho);
    if(defect > tol.hermiticity_tol)
        throw ValidationError("hermiticity_tol",
                              fmt::format("density matrix is not Hermitian: max |rho - rho^dagger| = {:.3e} > {:.1e}", defect, tol.hermiticity_tol),
                              defect);

    const auto   evals    = hermitian_eigenvalues(rho, tol);
    const double min_eval = evals.front();
    const double trace    = rho.trace().real();
    const double tr_dev   = std::abs(trace - 1.0);

    std::string problems;
    std::string first;
    double      magnitude = 0.0;
    if(min_eval < -tol.eigenvalue_clamp) {
        first     = "eigenvalue_clamp";
        magnitude = -min_eval;
        problems += fmt::format("negative eigenvalue {:.6g} < -eigenvalue_clamp {:.1e}", min_eval, tol.eigenvalue_clamp);
    }
    if(tr_dev > tol.trace_tol) {
        if(first.empty()) {
            first     = "trace_tol";
            magnitude = tr_dev;
        }
        if(!problems.empty()) problems += "; ";
        problems += fmt::format("trace {:.17g} deviates from 1 by {:.3e} > trace_tol {:.1e}", trace, tr_dev, tol.trace_tol);
    }
    if(!first.empty()) throw ValidationError(first, "density matrix: " + problems, magnitude);
    return BipartiteState(dims, std::move(rho));
}

ComplexMatrix density_of(const BipartiteState &s) {
    if(s.is_pure_form()) {
        const auto &v = s.vector();
        return v * v.adjoint();
    }
    return s.matrix();
}

namespace {
    // Coefficient matrix C with psi = sum_ij C(i,j) |i>|j>.
    ComplexMatrix coefficient_matrix(const BipartiteState &s) {
        const auto &v = s.vector();
        const auto  d = s.dims();
        ComplexMatrix c(d.dA, d.dB);
        for(long i = 0; i < d.dA; ++i)
            for(long j = 0; j < d.dB; ++j) c(i, j) = v(i * d.dB + j);
        return c;
    }
} // namespace

ComplexMatrix reduced_state(const BipartiteState &s, Party kept) {
    if(s.is_pure_form()) {
        const ComplexMatrix c = coefficient_matrix(s);
        if(kept == Party::A) return c * c.adjoint();
        return c.transpose() * c.conjugate();
    }
    const auto d = s.dims();
    return partial_trace(s.matrix(), d.dA, d.dB, kept == Party::A ? Party::B : Party::A);
}

std::vector<double> schmidt_coefficients(const BipartiteState &s) {
    const ComplexMatrix                 c = coefficient_matrix(s);
    Eigen::JacobiSVD<ComplexMatrix> svd(c);
    const auto                          &sv = svd.singularValues();
    return {sv.data(), sv.data() + sv.size()}; // Eigen returns them descending
}

bool is_maximally_entangled(const BipartiteState &s, const Tolerances &tol) {
    const auto d = s.dims();
    if(!s.is_pure_form() || d.dA != d.dB || d.dA < 2) return false;
    const ComplexMatrix target = ComplexMatrix::Identity(d.dA, d.dA) / static_cast<double>(d.dA);
    for(Party p : {Party::A, Party::B})
        if((reduced_state(s, p) - target).norm() > tol.orthogonality_tol) return false;
    return true;
}

bool is_product(const BipartiteState &s, const Tolerances &tol) {
    const auto coeffs = schmidt_coefficients(s);
    return coeffs.front() >= 1.0 - tol.orthogonality_tol;
}

double overlap(const BipartiteState &x, const BipartiteState &y) {
    if(x.dims() != y.dims()) throw ShapeError("overlap of states with different dimensions");
    if(x.is_pure_form() && y.is_pure_form()) return std::norm(x.vector().dot(y.vector()));
    if(x.is_pure_form()) {
        const auto &v = x.vector();
        return (v.adjoint() * y.matrix() * v)(0, 0).real();
    }
    if(y.is_pure_form()) return overlap(y, x);
    return (x.matrix() * y.matrix()).trace().real();
}

OrthogonalityResult pairwise_orthogonal(std::span<const BipartiteState> states, const Tolerances &tol) {
    for(std::size_t i = 1; i < states.size(); ++i)
        if(states[i].dims() != states[0].dims()) throw ShapeError(fmt::format("state {} has dimensions different from state 0", i));
    for(std::size_t i = 0; i < states.size(); ++i)
        for(std::size_t j = i + 1; j < states.size(); ++j) {
            const double ov = overlap(states[i], states[j]);
            if(ov > tol.orthogonality_tol) return {false, OrthogonalityResult::Witness{i, j, ov}};
        }
    return {};
}

} // namespace echarge
