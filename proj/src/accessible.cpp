#include "echarge/accessible.hpp"

#include "echarge/entropy.hpp"
#include "echarge/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <exception>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace echarge {

Povm::Povm(BipartiteDims dims, std::vector<ComplexMatrix> elements, const Tolerances &tol) : dims_(dims), elements_(std::move(elements)) {
    dims_.validate();
    if(elements_.empty()) throw ValidationError("povm.nonempty", "a POVM needs at least one element");
    const long    n   = dims_.joint();
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for(std::size_t y = 0; y < elements_.size(); ++y) {
        const auto &el = elements_[y];
        if(el.rows() != n || el.cols() != n) throw ShapeError(fmt::format("POVM element {} is {}x{}, expected {}x{}", y, el.rows(), el.cols(), n, n));
        const auto evals = hermitian_eigenvalues(el, tol); // throws on non-Hermitian
        if(evals.front() < -tol.eigenvalue_clamp)
            throw ValidationError("povm.psd", fmt::format("POVM element {} has eigenvalue {:.3e}", y, evals.front()), -evals.front());
        sum += el;
    }
    const double defect = (sum - ComplexMatrix::Identity(n, n)).norm();
    if(defect > kPovmCompletenessTol)
        throw ValidationError("povm.completeness", fmt::format("POVM elements sum to identity only within {:.3e}", defect), defect);
}

namespace {
    double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

    /// Mutual information for the joint table built from the ensemble
    /// densities and the given POVM elements. No validation.
    double mutual_information_raw(std::span<const double> px, std::span<const ComplexMatrix> rhos, std::span<const ComplexMatrix> povm) {
        double hx = 0.0;
        for(double p : px) hx -= xlog2x(p);
        double hxy = 0.0;
        double hy  = 0.0;
        for(const auto &m : povm) {
            double py = 0.0;
            for(std::size_t x = 0; x < px.size(); ++x) {
                if(px[x] <= 0.0) continue;
                const double tr  = rhos[x].cwiseProduct(m.transpose()).sum().real();
                const double pxy = px[x] * std::max(tr, 0.0);
                hxy -= xlog2x(pxy);
                py += pxy;
            }
            hy -= xlog2x(py);
        }
        return hx + hy - hxy;
    }

    std::vector<ComplexMatrix> densities(const Ensemble &e) {
        std::vector<ComplexMatrix> out;
        out.reserve(e.size());
        for(const auto &m : e.members()) out.push_back(density_of(m.state));
        return out;
    }

    /// M_y = S^{-1/2} F_y^dagger F_y S^{-1/2} with S = sum_y F_y^dagger F_y.
    std::vector<ComplexMatrix> normalize(const std::vector<ComplexMatrix> &factors, const Tolerances &tol) {
        const long    n = factors.front().rows();
        ComplexMatrix s = ComplexMatrix::Zero(n, n);
        std::vector<ComplexMatrix> raw;
        raw.reserve(factors.size());
        for(const auto &f : factors) {
            raw.push_back(f.adjoint() * f);
            s += raw.back();
        }
        const double        floor    = 1e-300;
        const ComplexMatrix inv_sqrt = hermitian_function(
            s, [floor](double l) { return cplx(1.0 / std::sqrt(std::max(l, floor)), 0.0); }, tol);
        for(auto &m : raw) {
            m = inv_sqrt * m * inv_sqrt;
            m = (m + m.adjoint()).eval() * 0.5;
        }
        return raw;
    }

    std::mt19937_64 restart_rng(std::uint64_t seed, int restart) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(restart), 0x5eedu};
        return std::mt19937_64(seq);
    }
} // namespace

double mutual_information_of_measurement(const Ensemble &e, const Povm &m, const Tolerances &tol) {
    if(m.dims() != e.dims()) throw ShapeError("POVM and ensemble dimensions differ");
    const auto px   = e.probabilities();
    const auto rhos = densities(e);
    (void) tol;
    const double mi = mutual_information_raw(px, rhos, m.elements());
    return std::max(mi, 0.0);
}

double accessible_info_exact_orthogonal(const Ensemble &e, const Tolerances &tol) {
    const auto states = e.states();
    const auto ortho  = pairwise_orthogonal(states, tol);
    if(!ortho)
        throw PreconditionError(fmt::format("accessible information is exact only for mutually orthogonal members; members {} and {} overlap by {:.3e}",
                                            ortho.witness->first, ortho.witness->second, ortho.witness->overlap));
    return shannon_of(e, tol);
}

void OptimizerConfig::validate() const {
    if(outcomes != 0 && outcomes < 2) throw ValidationError("optimizer.outcomes", fmt::format("outcomes must be >= 2, got {}", outcomes));
    if(restarts < 1) throw ValidationError("optimizer.restarts", fmt::format("restarts must be >= 1, got {}", restarts));
    if(max_iters < 1) throw ValidationError("optimizer.max_iters", fmt::format("max_iters must be >= 1, got {}", max_iters));
    if(!(step_tol > 0.0)) throw ValidationError("optimizer.step_tol", fmt::format("step_tol must be positive, got {}", step_tol));
}

int OptimizerConfig::resolved_outcomes(std::size_t ensemble_size) const {
    if(outcomes != 0) return outcomes;
    return std::max(2, static_cast<int>(ensemble_size));
}

RestartResult run_restart(const Ensemble &e, const OptimizerConfig &cfg, int restart, const Tolerances &tol) {
    cfg.validate();
    const auto px      = e.probabilities();
    const auto rhos    = densities(e);
    const long n       = e.dims().joint();
    const int  k       = cfg.resolved_outcomes(e.size());
    auto       rng     = restart_rng(cfg.seed, restart);
    std::normal_distribution<double> gauss(0.0, 1.0);

    const double scale = 1.0 / std::sqrt(static_cast<double>(k * n));
    std::vector<ComplexMatrix> factors(static_cast<std::size_t>(k), ComplexMatrix::Zero(n, n));
    for(int y = 0; y < k; ++y) {
        auto &f = factors[static_cast<std::size_t>(y)];
        // Restart 0 starts near the square-root measurement.
        const bool   seeded = restart == 0 && static_cast<std::size_t>(y) < rhos.size();
        const double noise  = seeded ? 1e-3 * scale : scale;
        if(seeded)
            f = hermitian_function(
                px[static_cast<std::size_t>(y)] * rhos[static_cast<std::size_t>(y)], [](double l) { return cplx(std::sqrt(std::max(l, 0.0)), 0.0); }, tol);
        for(long i = 0; i < n; ++i)
            for(long j = 0; j < n; ++j) f(i, j) += cplx(noise * gauss(rng), noise * gauss(rng));
    }

    auto evaluate = [&](const std::vector<ComplexMatrix> &fs) { return mutual_information_raw(px, rhos, normalize(fs, tol)); };

    double best = evaluate(factors);
    double step = 0.1;
    RestartResult out;
    for(out.iterations = 0; out.iterations < cfg.max_iters;) {
        ++out.iterations;
        bool improved = false;
        for(int y = 0; y < k; ++y)
            for(long i = 0; i < n; ++i)
                for(long j = 0; j < n; ++j)
                    for(const cplx dir : {cplx(1.0, 0.0), cplx(0.0, 1.0)}) {
                        auto      &entry    = factors[static_cast<std::size_t>(y)](i, j);
                        const cplx original = entry;
                        for(const double sign : {1.0, -1.0}) {
                            entry            = original + sign * step * dir;
                            const double val = evaluate(factors);
                            if(val > best) {
                                best     = val;
                                improved = true;
                                break;
                            }
                            entry = original;
                        }
                    }
        if(!improved) {
            step *= 0.5;
            if(step < cfg.step_tol) {
                out.converged = true;
                break;
            }
        }
    }
    out.value = std::max(best, 0.0);
    out.povm  = normalize(factors, tol);
    return out;
}

double holevo_cap(const Ensemble &e, const Tolerances &tol) {
    const auto px = e.probabilities();
    return std::min(shannon_entropy(px, tol), holevo_chi(px, densities(e), tol));
}

AccessibleInfoEstimate merge_restarts(const Ensemble &e, const OptimizerConfig &cfg, std::vector<RestartResult> restarts, const Tolerances &tol) {
    AccessibleInfoEstimate est;
    const double           cap = holevo_cap(e, tol);
    double                 best = -1.0;
    for(std::size_t r = 0; r < restarts.size(); ++r) {
        if(restarts[r].value > best) {
            best              = restarts[r].value;
            est.best_restart  = static_cast<int>(r);
        }
        if(!restarts[r].converged)
            est.notes.push_back(fmt::format("restart {} stopped at max_iters={} before the step fell below step_tol", r, cfg.max_iters));
    }
    if(best > cap + 1e-9) est.notes.push_back(fmt::format("optimizer value {:.17g} exceeded the Holevo cap {:.17g}; clamped", best, cap));
    est.interval = {std::min(std::max(best, 0.0), cap), cap};
    est.restarts = std::move(restarts);
    return est;
}

AccessibleInfoEstimate estimate_accessible_info(const Ensemble &e, const OptimizerConfig &cfg, const Tolerances &tol) {
    cfg.validate();
    const auto states = e.states();
    if(pairwise_orthogonal(states, tol)) {
        const double h = shannon_of(e, tol);
        AccessibleInfoEstimate est;
        est.interval = {h, h};
        est.exact    = true;
        return est;
    }
    std::vector<RestartResult> results(static_cast<std::size_t>(cfg.restarts));
    std::exception_ptr         failure;
#pragma omp parallel for schedule(dynamic)
    for(int r = 0; r < cfg.restarts; ++r) {
        try {
            results[static_cast<std::size_t>(r)] = run_restart(e, cfg, r, tol);
        } catch(...) {
#pragma omp critical
            if(!failure) failure = std::current_exception();
        }
    }
    if(failure) std::rethrow_exception(failure);
    return merge_restarts(e, cfg, std::move(results), tol);
}

Interval delta_epsilon(const Ensemble &e, const Interval &info, const Tolerances &tol) {
    const double s_ab = von_neumann_entropy(average_state(e), tol);
    return {s_ab - info.hi, s_ab - info.lo};
}

double lower_bound_general(const Ensemble &e, const Interval &info, const Tolerances &tol) {
    for(std::size_t i = 0; i < e.size(); ++i)
        if(!e.members()[i].state.is_pure_form())
            throw PreconditionError(fmt::format("the generalized lower bound needs pure members; member {} is a density matrix", i));
    double mean_ent = 0.0;
    for(const auto &m : e.members())
        if(m.prob > 0.0) mean_ent += m.prob * von_neumann_entropy(reduced_state(m.state, Party::A), tol);
    const double mi    = quantum_mutual_information(average_state(e), e.dims(), tol);
    const auto   delta = delta_epsilon(e, info, tol);
    return mean_ent - mi - delta.hi;
}

} // namespace echarge
