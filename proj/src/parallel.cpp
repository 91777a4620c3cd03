#include "echarge/parallel.hpp"

#include "echarge/errors.hpp"

#include <exception>
#include <fmt/format.h>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace echarge {

namespace {
    // out[i] = fn(i) for i in [0, n), first exception rethrown after the loop.
    template<typename T, typename Fn>
    std::vector<T> parallel_map(std::size_t n, Fn &&fn) {
        std::vector<std::optional<T>> slots(n);
        std::exception_ptr            failure;
        const auto                    count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
        for(long i = 0; i < count; ++i) {
            try {
                slots[static_cast<std::size_t>(i)].emplace(fn(static_cast<std::size_t>(i)));
            } catch(...) {
#pragma omp critical
                if(!failure) failure = std::current_exception();
            }
        }
        if(failure) std::rethrow_exception(failure);
        std::vector<T> out;
        out.reserve(n);
        for(auto &s : slots) out.push_back(std::move(*s));
        return out;
    }
} // namespace

std::vector<double> theta_grid(double lo, double hi, int steps) {
    if(steps < 1) throw ValidationError("sweep.steps", fmt::format("steps must be >= 1, got {}", steps), steps);
    if(!(lo <= hi)) throw ValidationError("sweep.range", fmt::format("empty theta range [{}, {}]", lo, hi), lo - hi);
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(steps));
    if(steps == 1) return {lo};
    for(int i = 0; i < steps; ++i) grid.push_back(i == steps - 1 ? hi : lo + (hi - lo) * i / (steps - 1));
    return grid;
}

std::vector<ChargeReport> analyze_batch(std::span<const Ensemble> ensembles, const AnalyzeOptions &opts, const Tolerances &tol) {
    return parallel_map<ChargeReport>(ensembles.size(), [&](std::size_t i) { return analyze(ensembles[i], opts, tol); });
}

std::vector<FamilyReport> sweep_rotated(std::span<const double> thetas, std::span<const double> probs, std::optional<double> gate_cost,
                                        const Tolerances &tol) {
    return parallel_map<FamilyReport>(thetas.size(), [&](std::size_t i) { return rotated_family_report(thetas[i], probs, gate_cost, tol); });
}

int parallel_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace echarge
