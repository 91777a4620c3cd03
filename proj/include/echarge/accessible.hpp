#pragma once

#include "echarge/ensembles.hpp"
#include "echarge/interval.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace echarge {

/// A finite POVM on the joint space. Construction validates positivity and
/// completeness (sum of elements equal to the identity within 1e-8, Frobenius).
class Povm {
public:
    Povm(BipartiteDims dims, std::vector<ComplexMatrix> elements, const Tolerances &tol = {});

    [[nodiscard]] const BipartiteDims              &dims() const noexcept { return dims_; }
    [[nodiscard]] const std::vector<ComplexMatrix> &elements() const noexcept { return elements_; }
    [[nodiscard]] std::size_t                       size() const noexcept { return elements_.size(); }

private:
    BipartiteDims              dims_;
    std::vector<ComplexMatrix> elements_;
};

inline constexpr double kPovmCompletenessTol = 1e-8;

/// I(X;Y) = H(X) + H(Y) - H(XY) for p(x, y) = p_x Tr(rho_x M_y).
[[nodiscard]] double mutual_information_of_measurement(const Ensemble &e, const Povm &m, const Tolerances &tol = {});

/// H(X); requires mutually orthogonal members.
[[nodiscard]] double accessible_info_exact_orthogonal(const Ensemble &e, const Tolerances &tol = {});

struct OptimizerConfig {
    int           outcomes  = 0; ///< 0 selects max(2, ensemble size)
    int           restarts  = 8;
    int           max_iters = 500;
    double        step_tol  = 1e-9;
    std::uint64_t seed      = 0;

    void validate() const;
    [[nodiscard]] int resolved_outcomes(std::size_t ensemble_size) const;
};

struct RestartResult {
    double             value      = 0.0;
    int                iterations = 0;
    bool               converged  = false;
    std::vector<ComplexMatrix> povm; ///< normalized elements at the best point
};

struct AccessibleInfoEstimate {
    Interval                   interval;
    bool                       exact = false; ///< orthogonal short-circuit
    std::vector<RestartResult> restarts;
    int                        best_restart = -1;
    std::vector<std::string>   notes;
};

/// One seeded local-search run. Pure function of (ensemble, cfg, restart);
/// both estimate drivers are built on it.
[[nodiscard]] RestartResult run_restart(const Ensemble &e, const OptimizerConfig &cfg, int restart, const Tolerances &tol = {});

/// Brackets the globally accessible information. Restarts run in parallel
/// (OpenMP); the result is identical to `reference::estimate_accessible_info`.
[[nodiscard]] AccessibleInfoEstimate estimate_accessible_info(const Ensemble &e, const OptimizerConfig &cfg = {}, const Tolerances &tol = {});

/// Shared by the parallel and serial drivers: merges per-restart results.
[[nodiscard]] AccessibleInfoEstimate merge_restarts(const Ensemble &e, const OptimizerConfig &cfg, std::vector<RestartResult> restarts,
                                                    const Tolerances &tol = {});

/// min(H(X), Holevo chi) of the joint ensemble.
[[nodiscard]] double holevo_cap(const Ensemble &e, const Tolerances &tol = {});

/// [S(rho_AB) - info.hi, S(rho_AB) - info.lo].
[[nodiscard]] Interval delta_epsilon(const Ensemble &e, const Interval &info, const Tolerances &tol = {});

/// sum p S(rho_x^A) - I(A;B) - delta.hi. Pure members only.
[[nodiscard]] double lower_bound_general(const Ensemble &e, const Interval &info, const Tolerances &tol = {});

} // namespace echarge
