#pragma once

#include "echarge/charge.hpp"

#include <optional>
#include <span>
#include <vector>

// OpenMP batch kernels. Each has a serial twin in echarge/reference.hpp that
// must produce bit-identical results.
namespace echarge {

/// Evenly spaced angles: steps == 1 yields {lo}; lo <= hi required.
[[nodiscard]] std::vector<double> theta_grid(double lo, double hi, int steps);

[[nodiscard]] std::vector<ChargeReport> analyze_batch(std::span<const Ensemble> ensembles, const AnalyzeOptions &opts = {},
                                                      const Tolerances &tol = {});

/// One FamilyReport per angle, in input order.
[[nodiscard]] std::vector<FamilyReport> sweep_rotated(std::span<const double> thetas, std::span<const double> probs,
                                                      std::optional<double> gate_cost = std::nullopt, const Tolerances &tol = {});

/// Threads OpenMP would use; 1 when built without OpenMP.
[[nodiscard]] int parallel_threads() noexcept;

} // namespace echarge
