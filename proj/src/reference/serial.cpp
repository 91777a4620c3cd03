#include "echarge/reference.hpp"

namespace echarge::reference {

AccessibleInfoEstimate estimate_accessible_info(const Ensemble &e, const OptimizerConfig &cfg, const Tolerances &tol) {
    cfg.validate();
    const auto states = e.states();
    if(pairwise_orthogonal(states, tol)) {
        const double           h = shannon_of(e, tol);
        AccessibleInfoEstimate est;
        est.interval = {h, h};
        est.exact    = true;
        return est;
    }
    std::vector<RestartResult> results;
    results.reserve(static_cast<std::size_t>(cfg.restarts));
    for(int r = 0; r < cfg.restarts; ++r) results.push_back(run_restart(e, cfg, r, tol));
    return merge_restarts(e, cfg, std::move(results), tol);
}

std::vector<ChargeReport> analyze_batch(std::span<const Ensemble> ensembles, const AnalyzeOptions &opts, const Tolerances &tol) {
    std::vector<ChargeReport> out;
    out.reserve(ensembles.size());
    for(const auto &e : ensembles) out.push_back(analyze(e, opts, tol));
    return out;
}

std::vector<FamilyReport> sweep_rotated(std::span<const double> thetas, std::span<const double> probs, std::optional<double> gate_cost,
                                        const Tolerances &tol) {
    std::vector<FamilyReport> out;
    out.reserve(thetas.size());
    for(double t : thetas) out.push_back(rotated_family_report(t, probs, gate_cost, tol));
    return out;
}

} // namespace echarge::reference
