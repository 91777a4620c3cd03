#include "doctest.h"
#include "echarge/ensembles.hpp"
#include "echarge/errors.hpp"
#include "echarge/generators.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

using namespace echarge;

namespace {
    Ensemble shuffled(const Ensemble &e, std::mt19937_64 &rng) {
        auto members = e.members();
        std::shuffle(members.begin(), members.end(), rng);
        return Ensemble(e.dims(), members, e.label());
    }
} // namespace

TEST_CASE("ensemble validation") {
    const auto s = validate_state({2, 2}, ComplexVector(ComplexVector::Unit(4, 0)));
    CHECK_THROWS_AS(Ensemble({2, 2}, {}), ValidationError);
    try {
        Ensemble({2, 2}, {{0.9, s}});
        FAIL("expected error");
    } catch(const ValidationError &e) {
        CHECK(e.invariant() == "trace_tol");
    }
    CHECK_THROWS_AS(Ensemble({2, 2}, {{1.2, s}, {-0.2, s}}), ValidationError);
    const auto other = validate_state({1, 4}, ComplexVector(ComplexVector::Unit(4, 0)));
    CHECK_THROWS_AS(Ensemble({2, 2}, {{0.5, s}, {0.5, other}}), ShapeError);
}

TEST_CASE("average state") {
    const auto bell = bell_basis(uniform_probs(4));
    // Explicit matrix-sum oracle.
    ComplexMatrix sum = ComplexMatrix::Zero(4, 4);
    for(const auto &m : bell.members()) sum += m.prob * m.state.vector() * m.state.vector().adjoint();
    CHECK((average_state(bell) - sum).norm() < 1e-15);
    CHECK((average_state(bell) - ComplexMatrix::Identity(4, 4) / 4.0).norm() < 1e-12);

    const auto single = bell_basis(std::vector<double>{1, 0, 0, 0});
    CHECK((average_state(single) - density_of(single.members()[0].state)).norm() == 0.0);

    CHECK((average_state(product_basis(2, 2, uniform_probs(4))) - ComplexMatrix::Identity(4, 4) / 4.0).norm() < 1e-15);
}

TEST_CASE("full orthonormal bases with equal weights average to the maximally mixed state") {
    std::mt19937_64 rng(50);
    for(long d : {4L, 6L, 9L}) {
        const BipartiteDims dims = d == 4 ? BipartiteDims{2, 2} : d == 6 ? BipartiteDims{2, 3} : BipartiteDims{3, 3};
        const auto          vecs = oracle::random_orthonormal(d, d, rng);
        std::vector<Member> members;
        for(const auto &v : vecs) members.push_back({1.0 / d, validate_state(dims, v)});
        CHECK((average_state(Ensemble(dims, members)) - ComplexMatrix::Identity(d, d) / static_cast<double>(d)).norm() < 1e-12);
    }
}

TEST_CASE("reduced ensembles") {
    const auto bell = bell_basis(std::vector<double>{0.1, 0.2, 0.3, 0.4});
    for(Party p : {Party::A, Party::B}) {
        const auto red = reduced_ensemble(bell, p);
        CHECK(red.probs == bell.probabilities());
        for(const auto &r : red.states) CHECK((r - ComplexMatrix::Identity(2, 2) / 2.0).norm() < 1e-12);
    }

    const auto prod = reduced_ensemble(product_basis(2, 2, uniform_probs(4)), Party::A);
    const int  expected[4] = {0, 0, 1, 1};
    for(int k = 0; k < 4; ++k) {
        ComplexMatrix want = ComplexMatrix::Zero(2, 2);
        want(expected[k], expected[k]) = 1.0;
        CHECK((prod.states[static_cast<std::size_t>(k)] - want).norm() < 1e-15);
    }

    const double theta = 0.4;
    const double c2 = std::cos(theta) * std::cos(theta), s2 = std::sin(theta) * std::sin(theta);
    const auto   rot = rotated_basis(theta, uniform_probs(4));
    const auto   ra  = reduced_ensemble(rot, Party::A);
    for(int k = 0; k < 4; ++k) {
        const auto want = oracle::partial_trace_loops(density_of(rot.members()[static_cast<std::size_t>(k)].state), 2, 2, true);
        CHECK((ra.states[static_cast<std::size_t>(k)] - want).norm() < 1e-14);
        const bool flip = k >= 2;
        CHECK(ra.states[static_cast<std::size_t>(k)](0, 0).real() == doctest::Approx(flip ? s2 : c2));
        CHECK(std::abs(ra.states[static_cast<std::size_t>(k)](0, 1)) < 1e-15);
    }
}

TEST_CASE("reduce-then-average equals average-then-reduce") {
    std::mt19937_64 rng(51);
    for(int t = 0; t < 30; ++t) {
        const BipartiteDims dims{2, 3};
        std::vector<Member> members;
        const auto          p = oracle::random_probs(3, rng);
        for(int i = 0; i < 3; ++i) members.push_back({p[static_cast<std::size_t>(i)], validate_state(dims, oracle::random_density(6, rng))});
        const Ensemble e(dims, members);
        for(Party kept : {Party::A, Party::B}) {
            const auto    red = reduced_ensemble(e, kept);
            ComplexMatrix avg = ComplexMatrix::Zero(red.states[0].rows(), red.states[0].cols());
            for(std::size_t i = 0; i < red.states.size(); ++i) avg += red.probs[i] * red.states[i];
            const auto direct = partial_trace(average_state(e), 2, 3, kept == Party::A ? Party::B : Party::A);
            CHECK((avg - direct).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("structure flags") {
    const auto bell = classify_structure(bell_basis(uniform_probs(4)));
    CHECK(bell.all_pure);
    CHECK(bell.mutually_orthogonal);
    CHECK(bell.all_maximally_entangled);
    CHECK_FALSE(bell.all_product);
    CHECK(bell.support_size == 4);

    const auto prod = classify_structure(product_basis(2, 2, uniform_probs(4)));
    CHECK(prod.all_product);
    CHECK_FALSE(prod.all_maximally_entangled);

    CHECK(classify_structure(bell_basis(std::vector<double>{1, 0, 0, 0})).support_size == 1);

    const auto s = validate_state({2, 2}, ComplexVector(ComplexVector::Unit(4, 0)));
    const auto f = classify_structure(Ensemble({2, 2}, {{0.5, s}, {0.5, s}}));
    CHECK_FALSE(f.mutually_orthogonal);
    REQUIRE(f.orthogonality_witness);
    CHECK(f.orthogonality_witness->second == 1);
}

TEST_CASE("structure flags are permutation invariant") {
    std::mt19937_64 rng(52);
    const std::vector<Ensemble> cases{bell_basis(std::vector<double>{0.4, 0.3, 0.2, 0.1}), product_basis(2, 3, uniform_probs(6)),
                                      rotated_basis(0.3, std::vector<double>{0.7, 0.1, 0.1, 0.1}), generalized_bell_basis(3, uniform_probs(9))};
    for(const auto &e : cases) {
        const auto base = classify_structure(e);
        for(int p = 0; p < 5; ++p) {
            const auto f = classify_structure(shuffled(e, rng));
            CHECK(f.all_pure == base.all_pure);
            CHECK(f.mutually_orthogonal == base.mutually_orthogonal);
            CHECK(f.all_maximally_entangled == base.all_maximally_entangled);
            CHECK(f.all_product == base.all_product);
            CHECK(f.support_size == base.support_size);
        }
    }
}

TEST_CASE("flags exclude numerically-zero members from the support only") {
    auto probs = std::vector<double>{1.0 - 1e-13, 1e-13, 0.0, 0.0};
    const auto f = classify_structure(bell_basis(probs));
    CHECK(f.support_size == 1);
    CHECK(f.mutually_orthogonal);
}

TEST_CASE("shannon_of") {
    CHECK(shannon_of(bell_basis(uniform_probs(4))) == doctest::Approx(2.0));
    CHECK(shannon_of(bell_basis(std::vector<double>{1, 0, 0, 0})) == 0.0);
    CHECK(shannon_of(bell_basis(std::vector<double>{0.5, 0.25, 0.125, 0.125})) == doctest::Approx(1.75));
}
