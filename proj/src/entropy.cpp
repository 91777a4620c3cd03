#include "echarge/entropy.hpp"

#include "echarge/errors.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numeric>

namespace echarge {

namespace {
    double xlog2x_sum(std::span<const double> p) {
        double h = 0.0;
        for(double x : p)
            if(x > 0.0) h -= x * std::log2(x);
        return h;
    }
} // namespace

double shannon_entropy(std::span<const double> p, const Tolerances &tol) {
    double sum = 0.0;
    for(std::size_t i = 0; i < p.size(); ++i) {
        if(!std::isfinite(p[i]) || p[i] < 0.0)
            throw ValidationError("probability.nonnegative", fmt::format("entry {} is {}", i, p[i]), std::abs(p[i]));
        sum += p[i];
    }
    if(std::abs(sum - 1.0) > tol.trace_tol)
        throw ValidationError("trace_tol", fmt::format("probabilities sum to {:.17g}, deviation {:.3e} > trace_tol {:.1e}", sum, std::abs(sum - 1.0), tol.trace_tol),
                              std::abs(sum - 1.0));
    return xlog2x_sum(p);
}

double binary_entropy(double x) {
    if(!(x >= 0.0 && x <= 1.0)) throw ValidationError("binary_entropy.range", fmt::format("argument {} outside [0, 1]", x), x);
    const double p[2] = {x, 1.0 - x};
    return xlog2x_sum(p);
}

std::vector<double> clamped_spectrum(const ComplexMatrix &rho, const Tolerances &tol) {
    auto evals = hermitian_eigenvalues(rho, tol);
    if(evals.front() < -tol.eigenvalue_clamp)
        throw ValidationError("eigenvalue_clamp",
                              fmt::format("density matrix has eigenvalue {:.6g} < -eigenvalue_clamp {:.1e}", evals.front(), tol.eigenvalue_clamp),
                              -evals.front());
    for(auto &e : evals)
        if(std::abs(e) <= tol.eigenvalue_clamp) e = 0.0;
    const double tr = std::accumulate(evals.begin(), evals.end(), 0.0);
    if(std::abs(tr - 1.0) > tol.trace_tol)
        throw ValidationError("trace_tol", fmt::format("density matrix has trace {:.17g}, deviation {:.3e} > trace_tol {:.1e}", tr, std::abs(tr - 1.0), tol.trace_tol),
                              std::abs(tr - 1.0));
    return evals;
}

double von_neumann_entropy(const ComplexMatrix &rho, const Tolerances &tol) {
    const auto spectrum = clamped_spectrum(rho, tol);
    return xlog2x_sum(spectrum);
}

double conditional_entropy(const ComplexMatrix &rho_ab, const BipartiteDims &dims, Party conditioned_on, const Tolerances &tol) {
    const Party traced = conditioned_on == Party::B ? Party::A : Party::B;
    return von_neumann_entropy(rho_ab, tol) - von_neumann_entropy(partial_trace(rho_ab, dims.dA, dims.dB, traced), tol);
}

double quantum_mutual_information(const ComplexMatrix &rho_ab, const BipartiteDims &dims, const Tolerances &tol) {
    const double s_a  = von_neumann_entropy(partial_trace(rho_ab, dims.dA, dims.dB, Party::B), tol);
    const double s_b  = von_neumann_entropy(partial_trace(rho_ab, dims.dA, dims.dB, Party::A), tol);
    const double s_ab = von_neumann_entropy(rho_ab, tol);
    return s_a + s_b - s_ab;
}

double holevo_chi(std::span<const double> probs, std::span<const ComplexMatrix> states, const Tolerances &tol) {
    if(probs.size() != states.size() || states.empty())
        throw ValidationError("ensemble.size", fmt::format("{} probabilities for {} states", probs.size(), states.size()));
    (void) shannon_entropy(probs, tol); // validates the distribution
    const auto    dim = states.front().rows();
    ComplexMatrix avg = ComplexMatrix::Zero(dim, dim);
    double        mean_entropy = 0.0;
    for(std::size_t i = 0; i < states.size(); ++i) {
        if(states[i].rows() != dim || states[i].cols() != dim) throw ShapeError(fmt::format("state {} has a different dimension", i));
        avg += probs[i] * states[i];
        const double s = von_neumann_entropy(states[i], tol);
        if(probs[i] > 0.0) mean_entropy += probs[i] * s;
    }
    bool identical = true;
    for(std::size_t i = 1; i < states.size() && identical; ++i) identical = states[i] == states[0];
    if(identical) return 0.0;
    return von_neumann_entropy(avg, tol) - mean_entropy;
}

double entanglement_entropy(const BipartiteState &s) {
    auto coeffs = schmidt_coefficients(s);
    for(auto &c : coeffs) c *= c;
    return xlog2x_sum(coeffs);
}

} // namespace echarge
