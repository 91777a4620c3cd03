#pragma once

#include "echarge/accessible.hpp"
#include "echarge/charge.hpp"

#include <optional>
#include <span>
#include <vector>

/// Serial reference implementations of the OpenMP kernels.
namespace echarge::reference {

[[nodiscard]] AccessibleInfoEstimate estimate_accessible_info(const Ensemble &e, const OptimizerConfig &cfg = {}, const Tolerances &tol = {});

[[nodiscard]] std::vector<ChargeReport> analyze_batch(std::span<const Ensemble> ensembles, const AnalyzeOptions &opts = {},
                                                      const Tolerances &tol = {});

[[nodiscard]] std::vector<FamilyReport> sweep_rotated(std::span<const double> thetas, std::span<const double> probs,
                                                      std::optional<double> gate_cost = std::nullopt, const Tolerances &tol = {});

} // namespace echarge::reference
