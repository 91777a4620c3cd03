#pragma once

#include "echarge/states.hpp"

#include <optional>
#include <string>
#include <vector>

namespace echarge {

struct Member {
    double         prob;
    BipartiteState state;
};

/// A finite ensemble {p_x, rho_x} of bipartite states sharing one set of
/// dimensions. Immutable once constructed; construction validates the
/// distribution and dimension agreement.
class Ensemble {
public:
    Ensemble(BipartiteDims dims, std::vector<Member> members, std::optional<std::string> label = std::nullopt,
             const Tolerances &tol = {});

    [[nodiscard]] const BipartiteDims              &dims() const noexcept { return dims_; }
    [[nodiscard]] const std::vector<Member>        &members() const noexcept { return members_; }
    [[nodiscard]] const std::optional<std::string> &label() const noexcept { return label_; }
    [[nodiscard]] std::size_t                       size() const noexcept { return members_.size(); }

    [[nodiscard]] std::vector<double>         probabilities() const;
    [[nodiscard]] std::vector<BipartiteState> states() const;

private:
    BipartiteDims              dims_;
    std::vector<Member>        members_;
    std::optional<std::string> label_;
};

struct StructureFlags {
    bool        all_pure                = false;
    bool        mutually_orthogonal     = false;
    bool        all_maximally_entangled = false;
    bool        all_product             = false;
    std::size_t support_size            = 0;
    /// First non-orthogonal pair when mutually_orthogonal is false.
    std::optional<OrthogonalityResult::Witness> orthogonality_witness;
};

/// sum_x p_x rho_x.
[[nodiscard]] ComplexMatrix average_state(const Ensemble &e);

struct ReducedEnsemble {
    std::vector<double>        probs;
    std::vector<ComplexMatrix> states;
};
/// Per-member reduced states on `kept`, probabilities unchanged.
[[nodiscard]] ReducedEnsemble reduced_ensemble(const Ensemble &e, Party kept);

[[nodiscard]] StructureFlags classify_structure(const Ensemble &e, const Tolerances &tol = {});

/// H(X) of the member distribution.
[[nodiscard]] double shannon_of(const Ensemble &e, const Tolerances &tol = {});

} // namespace echarge
