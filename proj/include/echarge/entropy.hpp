#pragma once

#include "echarge/linalg.hpp"
#include "echarge/states.hpp"

#include <span>
#include <vector>

/// Entropic functionals. Every value is in bits.
namespace echarge {

/// -sum p log2 p with 0 log 0 = 0. Validates non-negativity and unit sum.
[[nodiscard]] double shannon_entropy(std::span<const double> p, const Tolerances &tol = {});
[[nodiscard]] double binary_entropy(double x);

/// Entropy of the clamped spectrum. Eigenvalues in [-clamp, clamp] count as
/// zero; anything below -clamp is a ValidationError.
[[nodiscard]] double von_neumann_entropy(const ComplexMatrix &rho, const Tolerances &tol = {});

/// S(rho_AB) - S(rho_B) when conditioned on B, S(rho_AB) - S(rho_A) when
/// conditioned on A. May be negative.
[[nodiscard]] double conditional_entropy(const ComplexMatrix &rho_ab, const BipartiteDims &dims, Party conditioned_on,
                                         const Tolerances &tol = {});

[[nodiscard]] double quantum_mutual_information(const ComplexMatrix &rho_ab, const BipartiteDims &dims, const Tolerances &tol = {});

/// S(sum p rho) - sum p S(rho).
[[nodiscard]] double holevo_chi(std::span<const double> probs, std::span<const ComplexMatrix> states, const Tolerances &tol = {});

/// Shannon entropy of the squared Schmidt coefficients of a pure state.
[[nodiscard]] double entanglement_entropy(const BipartiteState &s);

/// Clamped spectrum used by von_neumann_entropy, exposed for diagnostics.
[[nodiscard]] std::vector<double> clamped_spectrum(const ComplexMatrix &rho, const Tolerances &tol = {});

} // namespace echarge
