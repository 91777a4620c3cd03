#pragma once

#include "echarge/linalg.hpp"

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace echarge {

struct BipartiteDims {
    long dA = 1;
    long dB = 1;

    [[nodiscard]] long joint() const noexcept { return dA * dB; }
    /// Throws ShapeError / ResourceLimitError unless 1 <= dA, dB and dA*dB <= cap.
    void validate() const;

    friend bool operator==(const BipartiteDims &, const BipartiteDims &) = default;
};

/// A validated bipartite state: either a unit vector or a density matrix on
/// C^dA (x) C^dB. Instances are only produced by `validate_state` and the
/// `make_*` helpers, so every BipartiteState satisfies its invariants.
class BipartiteState {
public:
    enum class Form { pure, density };

    [[nodiscard]] const BipartiteDims &dims() const noexcept { return dims_; }
    [[nodiscard]] Form form() const noexcept { return std::holds_alternative<ComplexVector>(data_) ? Form::pure : Form::density; }
    [[nodiscard]] bool is_pure_form() const noexcept { return form() == Form::pure; }

    /// Throws UnsupportedFormError for density-form states.
    [[nodiscard]] const ComplexVector &vector() const;
    /// Throws UnsupportedFormError for pure-form states.
    [[nodiscard]] const ComplexMatrix &matrix() const;

    friend BipartiteState validate_state(BipartiteDims, ComplexVector, const Tolerances &);
    friend BipartiteState validate_state(BipartiteDims, ComplexMatrix, const Tolerances &);

private:
    BipartiteState(BipartiteDims dims, std::variant<ComplexVector, ComplexMatrix> data) : dims_(dims), data_(std::move(data)) {}

    BipartiteDims                              dims_;
    std::variant<ComplexVector, ComplexMatrix> data_;
};

/// Validates a pure state. Norms within trace_tol of one are renormalized;
/// anything further off is rejected.
[[nodiscard]] BipartiteState validate_state(BipartiteDims dims, ComplexVector amplitudes, const Tolerances &tol = {});
/// Validates a density matrix: Hermitian, PSD (eigenvalues >= -eigenvalue_clamp) and unit trace.
[[nodiscard]] BipartiteState validate_state(BipartiteDims dims, ComplexMatrix rho, const Tolerances &tol = {});

/// |psi><psi| for pure states; the stored matrix otherwise.
[[nodiscard]] ComplexMatrix density_of(const BipartiteState &s);

/// Reduced density matrix of `kept`.
[[nodiscard]] ComplexMatrix reduced_state(const BipartiteState &s, Party kept);

/// Singular values of the dA x dB coefficient matrix, descending, length min(dA, dB).
[[nodiscard]] std::vector<double> schmidt_coefficients(const BipartiteState &s);

[[nodiscard]] bool is_maximally_entangled(const BipartiteState &s, const Tolerances &tol = {});

/// Largest Schmidt coefficient >= 1 - orthogonality_tol. Pure states only.
[[nodiscard]] bool is_product(const BipartiteState &s, const Tolerances &tol = {});

/// Tr(rho_x rho_y); |<x|y>|^2 for two pure states.
[[nodiscard]] double overlap(const BipartiteState &x, const BipartiteState &y);

struct OrthogonalityResult {
    bool ok = true;
    struct Witness {
        std::size_t first;
        std::size_t second;
        double      overlap;
    };
    std::optional<Witness> witness;

    explicit operator bool() const noexcept { return ok; }
};

/// Checks Tr(rho_x rho_y) <= orthogonality_tol for every pair; reports the
/// first violating pair in (x, y) lexicographic order.
[[nodiscard]] OrthogonalityResult pairwise_orthogonal(std::span<const BipartiteState> states, const Tolerances &tol = {});

} // namespace echarge
