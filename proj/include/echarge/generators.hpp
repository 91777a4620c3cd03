#pragma once

#include "echarge/ensembles.hpp"

#include <optional>
#include <span>
#include <string>

namespace echarge {

/// Phi+, Phi-, Psi+, Psi- in that order.
[[nodiscard]] Ensemble bell_basis(std::span<const double> probs, const Tolerances &tol = {});

/// The d^2 shift-and-phase states (1/sqrt d) sum_k w^{bk} |k>|k+a mod d>,
/// member index a*d + b. For d = 2 this reproduces bell_basis up to phases.
[[nodiscard]] Ensemble generalized_bell_basis(long d, std::span<const double> probs, const Tolerances &tol = {});

/// Computational basis |i>|j>, member index i*dB + j.
[[nodiscard]] Ensemble product_basis(long dA, long dB, std::span<const double> probs, const Tolerances &tol = {});

/// U(-theta)|ab> for ab = 00, 01, 10, 11 with
/// U(-theta) = exp(-i theta sx(x)sx) = cos(theta) I - i sin(theta) sx(x)sx.
[[nodiscard]] Ensemble rotated_basis(double theta, std::span<const double> probs, const Tolerances &tol = {});

/// The two-qubit gate U(-theta) itself.
[[nodiscard]] ComplexMatrix rotation_gate(double theta);

/// A literature value for N attached to a recognized ensemble, kept apart
/// from anything computed.
struct KnownValue {
    double      value;
    std::string source;
};

/// Full computational product bases are distinguishable by local
/// measurement in the computational basis, hence carry N = 0.
[[nodiscard]] std::optional<KnownValue> known_charge_annotation(const Ensemble &e);

/// Uniform distribution over n outcomes.
[[nodiscard]] std::vector<double> uniform_probs(std::size_t n);

} // namespace echarge
