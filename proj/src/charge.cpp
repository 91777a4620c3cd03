#include "echarge/charge.hpp"

#include "echarge/entropy.hpp"
#include "echarge/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <stdexcept>

namespace echarge {

std::string_view to_string(Verdict v) noexcept {
    switch(v) {
        case Verdict::information_nonlocality: return "information_nonlocality";
        case Verdict::entanglement_nonlocality: return "entanglement_nonlocality";
        case Verdict::neither: return "neither";
        case Verdict::indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

namespace {
    void require_orthogonal(const Ensemble &e, const Tolerances &tol, const char *what) {
        const auto states = e.states();
        const auto ortho  = pairwise_orthogonal(states, tol);
        if(!ortho)
            throw PreconditionError(fmt::format("{} requires mutually orthogonal members; members {} and {} have overlap {:.3e}", what,
                                                ortho.witness->first, ortho.witness->second, ortho.witness->overlap));
    }

    void require_pure(const Ensemble &e, const char *what) {
        for(std::size_t i = 0; i < e.size(); ++i)
            if(!e.members()[i].state.is_pure_form())
                throw PreconditionError(fmt::format("{} requires pure members; member {} is a density matrix", what, i));
    }

    struct JointEntropies {
        double s_ab;
        double s_a;
        double s_b;
    };

    JointEntropies joint_entropies(const Ensemble &e, const Tolerances &tol) {
        const auto rho = average_state(e);
        const auto d   = e.dims();
        return {von_neumann_entropy(rho, tol), von_neumann_entropy(partial_trace(rho, d.dA, d.dB, Party::B), tol),
                von_neumann_entropy(partial_trace(rho, d.dA, d.dB, Party::A), tol)};
    }

    double mean_local_entropy(const Ensemble &e, Party p, const Tolerances &tol) {
        double s = 0.0;
        for(const auto &m : e.members())
            if(m.prob > 0.0) s += m.prob * von_neumann_entropy(reduced_state(m.state, p), tol);
        return s;
    }
} // namespace

MergingBounds upper_bound_merging(const Ensemble &e, const Tolerances &tol) {
    require_orthogonal(e, tol, "the state-merging upper bound");
    const auto s = joint_entropies(e, tol);
    return {s.s_ab - s.s_b, s.s_ab - s.s_a};
}

double upper_bound_compress_teleport(const Ensemble &e, const Tolerances &tol) {
    require_orthogonal(e, tol, "the compress-and-teleport upper bound");
    return joint_entropies(e, tol).s_a;
}

double lower_bound_pure(const Ensemble &e, const Tolerances &tol) {
    require_pure(e, "the pure-state lower bound");
    require_orthogonal(e, tol, "the pure-state lower bound");
    const auto s = joint_entropies(e, tol);
    return mean_local_entropy(e, Party::A, tol) - (s.s_a + s.s_b - s.s_ab);
}

ChiBracket chi_rewrite_bounds(const Ensemble &e, const Tolerances &tol) {
    require_pure(e, "the Holevo rewriting of the bounds");
    require_orthogonal(e, tol, "the Holevo rewriting of the bounds");
    const auto   s     = joint_entropies(e, tol);
    const auto   red_a = reduced_ensemble(e, Party::A);
    const auto   red_b = reduced_ensemble(e, Party::B);
    const double chi_a = holevo_chi(red_a.probs, red_a.states, tol);
    const double chi_b = holevo_chi(red_b.probs, red_b.states, tol);
    ChiBracket   out{chi_a, chi_b, {}};
    if(chi_a <= chi_b) {
        const double upper = s.s_ab - s.s_b;
        out.bracket        = {upper - chi_a, upper};
    } else {
        const double upper = s.s_ab - s.s_a;
        out.bracket        = {upper - chi_b, upper};
    }
    return out;
}

double exact_charge_max_entangled(const Ensemble &e, const Tolerances &tol) {
    const auto d = e.dims();
    if(d.dA != d.dB) throw PreconditionError(fmt::format("maximally entangled basis formula needs dA = dB, got {}x{}", d.dA, d.dB));
    for(std::size_t i = 0; i < e.size(); ++i)
        if(!is_maximally_entangled(e.members()[i].state, tol))
            throw PreconditionError(fmt::format("maximally entangled basis formula needs maximally entangled members; member {} is not", i));
    require_orthogonal(e, tol, "the maximally entangled basis formula");
    const double value    = shannon_of(e, tol) - std::log2(static_cast<double>(d.dA));
    const auto   s        = joint_entropies(e, tol);
    const double via_cond = s.s_ab - s.s_b;
    if(std::abs(value - via_cond) > kChargeTol)
        throw std::logic_error(fmt::format("H(X) - log d = {:.17g} disagrees with S(AB) - S(B) = {:.17g}", value, via_cond));
    return value;
}

namespace {
    void finalize(ChargeReport &r) {
        double hi = r.upper_bounds.front().value;
        for(const auto &b : r.upper_bounds) hi = std::min(hi, b.value);
        r.interval = {r.lower_bound.value, hi};
        if(r.interval.lo > r.interval.hi + kChargeTol)
            throw std::logic_error(fmt::format("lower bound {:.17g} exceeds upper bound {:.17g}", r.interval.lo, r.interval.hi));
        if(r.exact_value && std::abs(r.interval.hi - r.interval.lo) > kChargeTol)
            throw std::logic_error(fmt::format("exact value {:.17g} reported but interval [{:.17g}, {:.17g}] is not degenerate", *r.exact_value,
                                               r.interval.lo, r.interval.hi));

        if(r.interval.lo > kChargeTol)
            r.verdict = Verdict::information_nonlocality;
        else if(r.interval.hi < -kChargeTol)
            r.verdict = Verdict::entanglement_nonlocality;
        else if(r.exact_value && std::abs(*r.exact_value) <= kChargeTol)
            r.verdict = Verdict::neither;
        else
            r.verdict = Verdict::indeterminate;
    }
} // namespace

ChargeReport analyze(const Ensemble &e, const AnalyzeOptions &opts, const Tolerances &tol) {
    ChargeReport r;
    r.flags           = classify_structure(e, tol);
    r.shannon         = shannon_of(e, tol);
    r.accessible_info = opts.accessible_info;
    r.known_value     = known_charge_annotation(e);
    if(r.flags.all_pure)
        for(const auto &m : e.members()) r.member_entanglement.push_back(entanglement_entropy(m.state));

    const double dim_floor = std::log2(static_cast<double>(std::min(e.dims().dA, e.dims().dB)));
    const bool   pure_orth = r.flags.all_pure && r.flags.mutually_orthogonal;

    if(r.flags.mutually_orthogonal) {
        const auto merging = upper_bound_merging(e, tol);
        r.upper_bounds.push_back({"merging_AtoB", merging.a_given_b});
        r.upper_bounds.push_back({"merging_BtoA", merging.b_given_a});
        r.upper_bounds.push_back({"compress_teleport", upper_bound_compress_teleport(e, tol)});
    } else {
        r.upper_bounds.push_back({"teleport_smaller_side", dim_floor});
        r.notes.push_back(fmt::format("members {} and {} are not orthogonal (overlap {:.3e}); orthogonal-ensemble upper bounds skipped, "
                                      "using the teleportation ceiling log2 min(dA, dB)",
                                      r.flags.orthogonality_witness->first, r.flags.orthogonality_witness->second,
                                      r.flags.orthogonality_witness->overlap));
    }
    for(const auto &b : opts.extra_upper_bounds) r.upper_bounds.push_back(b);

    r.lower_bound = {"dimension_floor", -dim_floor, false};
    if(pure_orth) r.lower_bound = {"pure_orthogonal", lower_bound_pure(e, tol), true};
    if(opts.accessible_info) {
        if(r.flags.all_pure) {
            const double general = lower_bound_general(e, *opts.accessible_info, tol);
            if(!r.lower_bound.informative || general > r.lower_bound.value) r.lower_bound = {"general_pure", general, true};
        } else {
            r.notes.push_back("generalized lower bound skipped: it is defined here for pure members only");
        }
    }
    if(!r.lower_bound.informative)
        r.notes.push_back("lower bound is the uninformative floor -log2 min(dA, dB)");

    if(pure_orth) {
        const auto chi = chi_rewrite_bounds(e, tol);
        r.chi_a        = chi.chi_a;
        r.chi_b        = chi.chi_b;
        if(chi.chi_a <= kChargeTol) {
            r.exact_value = r.upper_bounds[0].value;
            r.exact_rule  = "chi_A_zero";
        } else if(chi.chi_b <= kChargeTol) {
            r.exact_value = r.upper_bounds[1].value;
            r.exact_rule  = "chi_B_zero";
        }
    }
    if(r.flags.mutually_orthogonal && r.flags.all_maximally_entangled && e.dims().dA == e.dims().dB) {
        r.exact_value = exact_charge_max_entangled(e, tol);
        r.exact_rule  = "maximally_entangled_basis";
    }

    for(const auto &b : opts.extra_upper_bounds)
        if(b.value < r.lower_bound.value - kChargeTol)
            throw ValidationError("upper_bound.consistency",
                                  fmt::format("supplied upper bound {} = {:.17g} lies below the certified lower bound {:.17g}", b.name, b.value,
                                              r.lower_bound.value),
                                  r.lower_bound.value - b.value);

    finalize(r);
    return r;
}

FamilyReport rotated_family_report(double theta, std::span<const double> probs, std::optional<double> gate_cost, const Tolerances &tol) {
    const Ensemble e = rotated_basis(theta, probs, tol);
    FamilyReport   f;
    f.theta                  = theta;
    f.probs.assign(probs.begin(), probs.end());
    f.external_gate_cost     = gate_cost;
    f.entanglement_per_state = entanglement_entropy(e.members().front().state);
    const double c2          = std::cos(theta) * std::cos(theta);
    const double h_c2        = binary_entropy(std::clamp(c2, 0.0, 1.0));
    if(std::abs(f.entanglement_per_state - h_c2) > kChargeTol)
        throw std::logic_error(fmt::format("per-state entanglement {:.17g} differs from H(cos^2 theta) = {:.17g}", f.entanglement_per_state, h_c2));

    const double shannon = shannon_of(e, tol);
    f.refined_bound      = shannon - h_c2;

    const auto  rho  = average_state(e);
    const double s_a = von_neumann_entropy(partial_trace(rho, 2, 2, Party::B), tol);
    const double mean_a = mean_local_entropy(e, Party::A, tol);
    if(s_a < mean_a - kChargeTol)
        throw std::logic_error(fmt::format("S(rho_A) = {:.17g} below the mean local entropy {:.17g}", s_a, mean_a));

    AnalyzeOptions opts;
    opts.extra_upper_bounds.push_back({"family_refined", f.refined_bound});
    if(gate_cost) opts.extra_upper_bounds.push_back({"external_gate_cost", *gate_cost});
    f.charge = analyze(e, opts, tol);

    const auto merging = upper_bound_merging(e, tol);
    f.theorem1_bound   = merging.min();
    f.lower_bound      = f.charge.lower_bound.value;
    return f;
}

} // namespace echarge
