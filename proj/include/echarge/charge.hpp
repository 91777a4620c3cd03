#pragma once

#include "echarge/accessible.hpp"
#include "echarge/ensembles.hpp"
#include "echarge/generators.hpp"
#include "echarge/interval.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace echarge {

/// Dead zone around zero for signed verdicts and exactness checks.
inline constexpr double kChargeTol = 1e-9;

enum class Verdict { information_nonlocality, entanglement_nonlocality, neither, indeterminate };
[[nodiscard]] std::string_view to_string(Verdict v) noexcept;

struct NamedBound {
    std::string name;
    double      value;
};

struct LowerBound {
    std::string name;
    double      value       = 0.0;
    bool        informative = false; ///< false for the dimensional floor
};

struct ChargeReport {
    StructureFlags            flags;
    double                    shannon = 0.0; ///< H(X)
    std::optional<double>     chi_a;
    std::optional<double>     chi_b;
    std::vector<NamedBound>   upper_bounds;
    LowerBound                lower_bound;
    std::optional<double>     exact_value;
    std::string               exact_rule; ///< empty unless exact_value is set
    Interval                  interval;
    Verdict                   verdict = Verdict::indeterminate;
    std::optional<Interval>   accessible_info;
    std::optional<KnownValue> known_value;
    /// Entanglement entropy of each member, pure ensembles only.
    std::vector<double>       member_entanglement;
    std::vector<std::string>  notes;
};

struct MergingBounds {
    double a_given_b; ///< S(A|B): merge Alice's share to Bob
    double b_given_a; ///< S(B|A): merge Bob's share to Alice

    [[nodiscard]] double min() const noexcept { return a_given_b < b_given_a ? a_given_b : b_given_a; }
};

/// (S(rho_AB) - S(rho_B), S(rho_AB) - S(rho_A)) of the average state. Needs mutually orthogonal members.
[[nodiscard]] MergingBounds upper_bound_merging(const Ensemble &e, const Tolerances &tol = {});

/// S(rho_A): compress Alice's share and teleport it. Needs mutually orthogonal members.
[[nodiscard]] double upper_bound_compress_teleport(const Ensemble &e, const Tolerances &tol = {});

/// sum p S(rho_x^A) - I(A;B). Needs pure, mutually orthogonal members.
[[nodiscard]] double lower_bound_pure(const Ensemble &e, const Tolerances &tol = {});

struct ChiBracket {
    double   chi_a;
    double   chi_b;
    Interval bracket; ///< [S(A|B) - chi_A, S(A|B)] if chi_A <= chi_B, else the B-side bracket
};
[[nodiscard]] ChiBracket chi_rewrite_bounds(const Ensemble &e, const Tolerances &tol = {});

/// H(X) - log2 d for mutually orthogonal d x d maximally entangled members.
[[nodiscard]] double exact_charge_max_entangled(const Ensemble &e, const Tolerances &tol = {});

struct AnalyzeOptions {
    std::optional<Interval> accessible_info;
    /// Additional externally justified upper bounds, folded into the interval.
    std::vector<NamedBound> extra_upper_bounds;
};

[[nodiscard]] ChargeReport analyze(const Ensemble &e, const AnalyzeOptions &opts = {}, const Tolerances &tol = {});

struct FamilyReport {
    double                theta = 0.0;
    std::vector<double>   probs;
    double                entanglement_per_state = 0.0;
    double                theorem1_bound         = 0.0; ///< min of the two merging bounds
    double                refined_bound          = 0.0; ///< H(X) - H(cos^2 theta)
    double                lower_bound            = 0.0;
    std::optional<double> external_gate_cost;
    ChargeReport          charge;
};

/// Analysis of the U(-theta) product-basis family. `gate_cost`, when given,
/// is a caller-supplied entanglement cost of implementing U(theta).
[[nodiscard]] FamilyReport rotated_family_report(double theta, std::span<const double> probs, std::optional<double> gate_cost = std::nullopt,
                                                 const Tolerances &tol = {});

} // namespace echarge
