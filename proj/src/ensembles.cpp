#include "echarge/ensembles.hpp"

#include "echarge/entropy.hpp"
#include "echarge/errors.hpp"

#include <cmath>
#include <fmt/format.h>

namespace echarge {

Ensemble::Ensemble(BipartiteDims dims, std::vector<Member> members, std::optional<std::string> label, const Tolerances &tol)
    : dims_(dims), members_(std::move(members)), label_(std::move(label)) {
    dims_.validate();
    if(members_.empty()) throw ValidationError("ensemble.nonempty", "an ensemble needs at least one member");
    double sum = 0.0;
    for(std::size_t i = 0; i < members_.size(); ++i) {
        const auto &m = members_[i];
        if(!std::isfinite(m.prob) || m.prob < 0.0)
            throw ValidationError("probability.nonnegative", fmt::format("member {} has probability {}", i, m.prob), std::abs(m.prob));
        if(m.state.dims() != dims_)
            throw ShapeError(fmt::format("member {} has dims ({}, {}) but the ensemble has ({}, {})", i, m.state.dims().dA,
                                         m.state.dims().dB, dims_.dA, dims_.dB));
        sum += m.prob;
    }
    const double dev = std::abs(sum - 1.0);
    if(dev > tol.trace_tol)
        throw ValidationError("trace_tol", fmt::format("member probabilities sum to {:.17g}, deviation {:.3e} > trace_tol {:.1e}", sum, dev, tol.trace_tol),
                              dev);
}

std::vector<double> Ensemble::probabilities() const {
    std::vector<double> p;
    p.reserve(members_.size());
    for(const auto &m : members_) p.push_back(m.prob);
    return p;
}

std::vector<BipartiteState> Ensemble::states() const {
    std::vector<BipartiteState> s;
    s.reserve(members_.size());
    for(const auto &m : members_) s.push_back(m.state);
    return s;
}

ComplexMatrix average_state(const Ensemble &e) {
    const long    n   = e.dims().joint();
    ComplexMatrix avg = ComplexMatrix::Zero(n, n);
    for(const auto &m : e.members())
        if(m.prob > 0.0) avg += m.prob * density_of(m.state);
    return avg;
}

ReducedEnsemble reduced_ensemble(const Ensemble &e, Party kept) {
    ReducedEnsemble out;
    out.probs = e.probabilities();
    out.states.reserve(e.size());
    for(const auto &m : e.members()) out.states.push_back(reduced_state(m.state, kept));
    return out;
}

StructureFlags classify_structure(const Ensemble &e, const Tolerances &tol) {
    StructureFlags f;
    f.all_pure                = true;
    f.all_maximally_entangled = true;
    f.all_product             = true;
    for(const auto &m : e.members()) {
        if(m.prob > tol.prob_floor) ++f.support_size;
        const bool pure = m.state.is_pure_form();
        f.all_pure      = f.all_pure && pure;
        f.all_maximally_entangled = f.all_maximally_entangled && is_maximally_entangled(m.state, tol);
        f.all_product             = f.all_product && pure && is_product(m.state, tol);
    }
    const auto states  = e.states();
    const auto ortho   = pairwise_orthogonal(states, tol);
    f.mutually_orthogonal  = ortho.ok;
    f.orthogonality_witness = ortho.witness;
    return f;
}

double shannon_of(const Ensemble &e, const Tolerances &tol) {
    const auto p = e.probabilities();
    return shannon_entropy(p, tol);
}

} // namespace echarge
