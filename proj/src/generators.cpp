#include "echarge/generators.hpp"

#include "echarge/errors.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numbers>

namespace echarge {

namespace {
    void check_length(std::span<const double> probs, std::size_t expected, const char *family) {
        if(probs.size() != expected)
            throw ValidationError("probs.length", fmt::format("{} needs {} probabilities, got {}", family, expected, probs.size()));
    }

    Ensemble from_vectors(BipartiteDims dims, std::span<const double> probs, std::vector<ComplexVector> vecs, std::string label,
                          const Tolerances &tol) {
        std::vector<Member> members;
        members.reserve(vecs.size());
        for(std::size_t i = 0; i < vecs.size(); ++i) members.push_back({probs[i], validate_state(dims, std::move(vecs[i]), tol)});
        return Ensemble(dims, std::move(members), std::move(label), tol);
    }

    ComplexVector basis_vector(long n, long k) {
        ComplexVector v = ComplexVector::Zero(n);
        v(k)            = 1.0;
        return v;
    }
} // namespace

Ensemble bell_basis(std::span<const double> probs, const Tolerances &tol) {
    check_length(probs, 4, "bell");
    const double               r = 1.0 / std::numbers::sqrt2;
    std::vector<ComplexVector> vecs(4, ComplexVector::Zero(4));
    vecs[0](0) = r; vecs[0](3) = r;
    vecs[1](0) = r; vecs[1](3) = -r;
    vecs[2](1) = r; vecs[2](2) = r;
    vecs[3](1) = r; vecs[3](2) = -r;
    return from_vectors({2, 2}, probs, std::move(vecs), "bell", tol);
}

Ensemble generalized_bell_basis(long d, std::span<const double> probs, const Tolerances &tol) {
    if(d < 2 || d * d > kMaxJointDim)
        throw ValidationError("gbell.d", fmt::format("d must satisfy 2 <= d and d*d <= {}, got {}", kMaxJointDim, d), static_cast<double>(d));
    check_length(probs, static_cast<std::size_t>(d * d), "gbell");
    const double               norm = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<ComplexVector> vecs;
    vecs.reserve(static_cast<std::size_t>(d * d));
    for(long a = 0; a < d; ++a)
        for(long b = 0; b < d; ++b) {
            ComplexVector v = ComplexVector::Zero(d * d);
            for(long k = 0; k < d; ++k) {
                // Reduce the phase index mod d so that w^0 is exactly 1.
                const double angle = 2.0 * std::numbers::pi * static_cast<double>((b * k) % d) / static_cast<double>(d);
                v(k * d + (k + a) % d) = norm * std::polar(1.0, angle);
            }
            vecs.push_back(std::move(v));
        }
    return from_vectors({d, d}, probs, std::move(vecs), fmt::format("gbell-d{}", d), tol);
}

Ensemble product_basis(long dA, long dB, std::span<const double> probs, const Tolerances &tol) {
    const BipartiteDims dims{dA, dB};
    dims.validate();
    check_length(probs, static_cast<std::size_t>(dims.joint()), "product");
    std::vector<ComplexVector> vecs;
    for(long k = 0; k < dims.joint(); ++k) vecs.push_back(basis_vector(dims.joint(), k));
    return from_vectors(dims, probs, std::move(vecs), fmt::format("product-{}x{}", dA, dB), tol);
}

ComplexMatrix rotation_gate(double theta) {
    ComplexMatrix sx(2, 2);
    sx << 0.0, 1.0, 1.0, 0.0;
    return std::cos(theta) * ComplexMatrix::Identity(4, 4) - cplx(0.0, std::sin(theta)) * kron(sx, sx);
}

Ensemble rotated_basis(double theta, std::span<const double> probs, const Tolerances &tol) {
    if(!(theta >= 0.0 && theta <= std::numbers::pi / 2))
        throw ValidationError("theta.range", fmt::format("theta must lie in [0, pi/2], got {}", theta), theta);
    check_length(probs, 4, "rotated");
    const ComplexMatrix        u = rotation_gate(theta);
    std::vector<ComplexVector> vecs;
    for(long k = 0; k < 4; ++k) vecs.push_back(u.col(k));
    return from_vectors({2, 2}, probs, std::move(vecs), fmt::format("rotated-theta-{:.17g}", theta), tol);
}

std::optional<KnownValue> known_charge_annotation(const Ensemble &e) {
    const long n = e.dims().joint();
    if(static_cast<long>(e.size()) != n) return std::nullopt;
    for(long k = 0; k < n; ++k) {
        const auto &s = e.members()[static_cast<std::size_t>(k)].state;
        if(!s.is_pure_form()) return std::nullopt;
        if(s.vector() != basis_vector(n, k)) return std::nullopt;
    }
    return KnownValue{0.0, "full computational product basis: locally distinguishable product states have N = 0"};
}

std::vector<double> uniform_probs(std::size_t n) {
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

} // namespace echarge
