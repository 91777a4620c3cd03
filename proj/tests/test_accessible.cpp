#include "doctest.h"
#include "echarge/accessible.hpp"
#include "echarge/entropy.hpp"
#include "echarge/errors.hpp"
#include "echarge/generators.hpp"
#include "echarge/reference.hpp"
#include "oracles.hpp"

#include <Eigen/Eigenvalues>
#include <cstring>
#include <numbers>

using namespace echarge;

namespace {
    const double kPi = std::numbers::pi;

    Ensemble qubit_pair(double angle, double p0 = 0.5) {
        ComplexVector a(2), b(2);
        a << 1.0, 0.0;
        b << std::cos(angle), std::sin(angle);
        return Ensemble({1, 2}, {{p0, validate_state({1, 2}, a)}, {1.0 - p0, validate_state({1, 2}, b)}});
    }

    // Normalized random POVM built with Eigen directly.
    std::vector<ComplexMatrix> random_povm(long n, int outcomes, std::mt19937_64 &rng) {
        std::vector<ComplexMatrix> g;
        ComplexMatrix              s = ComplexMatrix::Zero(n, n);
        for(int y = 0; y < outcomes; ++y) {
            const ComplexMatrix f = oracle::random_ginibre(n, n, rng);
            g.push_back(f.adjoint() * f);
            s += g.back();
        }
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(s);
        const ComplexMatrix                          w = es.eigenvectors() * es.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
        for(auto &m : g) {
            m = w * m * w;
            m = (m + m.adjoint()) * 0.5;
        }
        return g;
    }

    bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }
} // namespace

TEST_CASE("POVM validation") {
    const BipartiteDims d{1, 2};
    ComplexMatrix       p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    CHECK_NOTHROW(Povm(d, {p0, p1}));
    CHECK_THROWS_AS(Povm(d, {}), ValidationError);
    CHECK_THROWS_AS(Povm(d, {p0}), ValidationError);
    try {
        (void) Povm(d, {p0, p1 * 0.9});
        FAIL("expected throw");
    } catch(const ValidationError &e) { CHECK(e.invariant() == "povm.completeness"); }
    ComplexMatrix neg = p1;
    neg(1, 1)         = 1.5;
    ComplexMatrix bad = p0;
    bad(1, 1)         = -0.5;
    try {
        (void) Povm(d, {bad, neg});
        FAIL("expected throw");
    } catch(const ValidationError &e) { CHECK(e.invariant() == "povm.psd"); }
    CHECK_THROWS_AS(Povm(d, {ComplexMatrix::Identity(3, 3)}), ShapeError);
}

TEST_CASE("mutual information of fixed measurements") {
    const auto e = qubit_pair(kPi / 4);
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    // joint table: x=0 -> (1/2, 0); x=1 -> (1/4, 1/4)
    const double want = oracle::entropy_bits({0.5, 0.5}) + oracle::entropy_bits({0.75, 0.25}) - oracle::entropy_bits({0.5, 0.25, 0.25});
    CHECK(mutual_information_of_measurement(e, Povm({1, 2}, {p0, p1})) == doctest::Approx(want).epsilon(1e-12));
    CHECK(std::abs(mutual_information_of_measurement(e, Povm({1, 2}, {ComplexMatrix::Identity(2, 2)}))) < 1e-12);

    // Bell basis read out in the Bell basis
    const auto           bell = bell_basis(std::vector<double>{0.4, 0.3, 0.2, 0.1});
    std::vector<ComplexMatrix> proj;
    for(const auto &m : bell.members()) proj.push_back(density_of(m.state));
    CHECK(mutual_information_of_measurement(bell, Povm({2, 2}, proj)) == doctest::Approx(oracle::entropy_bits({0.4, 0.3, 0.2, 0.1})).epsilon(1e-12));
    CHECK_THROWS_AS((void) mutual_information_of_measurement(bell, Povm({1, 2}, {p0, p1})), ShapeError);
}

TEST_CASE("orthogonal ensembles: exact accessible information") {
    const std::vector<double> p{0.5, 0.25, 0.125, 0.125};
    CHECK(accessible_info_exact_orthogonal(bell_basis(p)) == doctest::Approx(1.75).epsilon(1e-12));
    CHECK_THROWS_AS((void) accessible_info_exact_orthogonal(qubit_pair(0.3)), PreconditionError);

    const auto est = estimate_accessible_info(product_basis(2, 2, p));
    CHECK(est.exact);
    CHECK(est.interval.lo == doctest::Approx(1.75).epsilon(1e-12));
    CHECK(est.interval.hi == doctest::Approx(1.75).epsilon(1e-12));
}

TEST_CASE("identical states carry no information") {
    const auto e   = qubit_pair(0.0);
    const auto est = estimate_accessible_info(e);
    CHECK(std::abs(est.interval.lo) < 1e-12);
    CHECK(std::abs(est.interval.hi) < 1e-12);
}

TEST_CASE("two non-orthogonal qubit states match a dense projective grid") {
    const double theta = kPi / 8;
    const auto   e     = qubit_pair(theta);
    const auto   est   = estimate_accessible_info(e, OptimizerConfig{.seed = 7});
    const double grid  = oracle::grid_projective_mi({0.5, 0.5}, {{{1.0, 0.0}}, {{std::cos(theta), std::sin(theta)}}}, 10000);
    // two equiprobable pure states: the symmetric projective measurement is optimal
    const double closed = 1.0 - binary_entropy(0.5 * (1.0 + std::sin(theta)));
    CHECK(std::abs(grid - closed) < 1e-6);
    CHECK(std::abs(est.interval.lo - grid) < 1e-3);
    CHECK(est.interval.lo <= est.interval.hi);
    CHECK(est.interval.hi <= 1.0 + 1e-12);
    CHECK(est.interval.hi == doctest::Approx(holevo_cap(e)).epsilon(1e-12));
    REQUIRE(est.best_restart >= 0);
    CHECK(est.restarts.size() == 8);
}

TEST_CASE("estimates are deterministic and match the serial reference") {
    std::mt19937_64 rng(5);
    const long      n = 4;
    const auto      v = oracle::random_orthonormal(n, 2, rng);
    // three non-orthogonal members in (2,2)
    ComplexVector mix = (v[0] + v[1]) / std::sqrt(2.0);
    const Ensemble e({2, 2}, {{0.3, validate_state({2, 2}, v[0])}, {0.3, validate_state({2, 2}, v[1])}, {0.4, validate_state({2, 2}, mix)}});
    const OptimizerConfig cfg{.restarts = 4, .max_iters = 200, .seed = 42};
    const auto            a = estimate_accessible_info(e, cfg);
    const auto            b = estimate_accessible_info(e, cfg);
    const auto            r = reference::estimate_accessible_info(e, cfg);
    CHECK(same_bits(a.interval.lo, b.interval.lo));
    CHECK(same_bits(a.interval.lo, r.interval.lo));
    CHECK(same_bits(a.interval.hi, r.interval.hi));
    CHECK(a.best_restart == r.best_restart);
    REQUIRE(a.restarts.size() == r.restarts.size());
    for(std::size_t i = 0; i < a.restarts.size(); ++i) {
        CHECK(same_bits(a.restarts[i].value, r.restarts[i].value));
        CHECK(a.restarts[i].iterations == r.restarts[i].iterations);
    }
}

TEST_CASE("optimizer config validation") {
    const auto e = qubit_pair(0.4);
    CHECK_THROWS_AS((void) estimate_accessible_info(e, OptimizerConfig{.outcomes = 1}), ValidationError);
    CHECK_THROWS_AS((void) estimate_accessible_info(e, OptimizerConfig{.restarts = 0}), ValidationError);
    CHECK_THROWS_AS((void) estimate_accessible_info(e, OptimizerConfig{.max_iters = 0}), ValidationError);
    CHECK_THROWS_AS((void) estimate_accessible_info(e, OptimizerConfig{.step_tol = 0.0}), ValidationError);
    CHECK(OptimizerConfig{}.resolved_outcomes(1) == 2);
    CHECK(OptimizerConfig{}.resolved_outcomes(5) == 5);
    CHECK(OptimizerConfig{.outcomes = 3}.resolved_outcomes(5) == 3);
}

TEST_CASE("random measurements respect the Shannon and Holevo caps") {
    std::mt19937_64 rng(99);
    for(int t = 0; t < 200; ++t) {
        const long          dA = 1 + t % 2, dB = 2;
        const BipartiteDims dims{dA, dB};
        const long          n = dims.joint();
        std::vector<Member> members;
        const auto          p = oracle::random_probs(3, rng);
        for(double px : p) {
            if(t % 3 == 0) members.push_back({px, validate_state(dims, oracle::random_density(n, rng))});
            else members.push_back({px, validate_state(dims, oracle::random_unit_vector(n, rng))});
        }
        const Ensemble e(dims, members);
        const auto     povm = random_povm(n, 2 + t % 3, rng);
        const double   mi   = mutual_information_of_measurement(e, Povm(dims, povm));
        CHECK(mi >= -1e-12);
        CHECK(mi <= oracle::entropy_bits(p) + 1e-9);
        CHECK(mi <= holevo_cap(e) + 1e-9);

        // coarse-graining two outcomes never helps
        auto coarse = povm;
        coarse[0] += coarse[1];
        coarse.erase(coarse.begin() + 1);
        CHECK(mutual_information_of_measurement(e, Povm(dims, coarse)) <= mi + 1e-9);
        // splitting an outcome in half changes nothing
        auto fine = povm;
        fine[0] *= 0.5;
        fine.push_back(fine[0]);
        CHECK(std::abs(mutual_information_of_measurement(e, Povm(dims, fine)) - mi) < 1e-9);
    }
}

TEST_CASE("delta epsilon and the generalized lower bound") {
    const auto bell = bell_basis(uniform_probs(4));
    const auto info = estimate_accessible_info(bell).interval;
    const auto d    = delta_epsilon(bell, info);
    CHECK(std::abs(d.lo) < 1e-12);
    CHECK(std::abs(d.hi) < 1e-12);
    CHECK(lower_bound_general(bell, info) == doctest::Approx(1.0).epsilon(1e-12));

    const auto phi = bell.members()[0].state;
    const Ensemble same({2, 2}, {{0.5, phi}, {0.5, phi}});
    const auto     zero = estimate_accessible_info(same).interval;
    CHECK(std::abs(zero.hi) < 1e-12);
    CHECK(lower_bound_general(same, zero) == doctest::Approx(-1.0).epsilon(1e-12));

    // wider information interval widens delta by the same amount
    const auto wide = delta_epsilon(bell, Interval{1.5, 2.0});
    CHECK(wide.lo == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(wide.hi == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(lower_bound_general(bell, Interval{1.5, 2.0}) == doctest::Approx(0.5).epsilon(1e-12));

    ComplexMatrix a = ComplexMatrix::Zero(4, 4);
    a.diagonal() << 1, 0, 0, 0;
    const Ensemble mixed({2, 2}, {{1.0, validate_state({2, 2}, a)}});
    CHECK_THROWS_AS((void) lower_bound_general(mixed, Interval{0, 0}), PreconditionError);
}
