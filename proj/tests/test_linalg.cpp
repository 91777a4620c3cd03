#include "doctest.h"
#include "echarge/errors.hpp"
#include "echarge/linalg.hpp"
#include "oracles.hpp"

using namespace echarge;

namespace {
    ComplexMatrix pauli_x() {
        ComplexMatrix m(2, 2);
        m << 0.0, 1.0, 1.0, 0.0;
        return m;
    }
    ComplexMatrix diag(std::initializer_list<double> d) {
        Eigen::VectorXcd v(static_cast<Eigen::Index>(d.size()));
        Eigen::Index     i = 0;
        for(double x : d) v(i++) = x;
        return v.asDiagonal();
    }
} // namespace

TEST_CASE("kron of identities and permutations") {
    CHECK(kron(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)) == ComplexMatrix::Identity(4, 4));
    const auto xx = kron(pauli_x(), pauli_x());
    CHECK(xx(3, 0) == cplx(1.0));
    ComplexVector e00 = ComplexVector::Zero(4);
    e00(0)            = 1.0;
    CHECK((xx * e00)(3) == cplx(1.0));
    CHECK(kron(diag({1, 2}), diag({3, 4})) == diag({3, 4, 6, 8}));
}

TEST_CASE("kron is associative entry-wise") {
    std::mt19937_64 rng(11);
    for(int t = 0; t < 20; ++t) {
        const auto a = oracle::random_ginibre(2, 2, rng);
        const auto b = oracle::random_ginibre(3, 3, rng);
        const auto c = oracle::random_ginibre(2, 2, rng);
        // Exact equality is guaranteed: each entry is the same triple product.
        const auto lhs = kron(a, kron(b, c));
        const auto rhs = kron(kron(a, b), c);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 4 * std::numeric_limits<double>::epsilon() * lhs.cwiseAbs().maxCoeff());
    }
}

TEST_CASE("kron refuses joint dimensions above the cap") {
    CHECK_THROWS_AS((void) kron(ComplexMatrix::Identity(8, 8), ComplexMatrix::Identity(9, 9)), ResourceLimitError);
    CHECK_NOTHROW((void) kron(ComplexMatrix::Identity(8, 8), ComplexMatrix::Identity(8, 8)));
}

TEST_CASE("partial trace examples") {
    ComplexVector phi = ComplexVector::Zero(4);
    phi(0) = phi(3)   = 1.0 / std::sqrt(2.0);
    const ComplexMatrix bell = phi * phi.adjoint();
    CHECK((partial_trace(bell, 2, 2, Party::B) - ComplexMatrix::Identity(2, 2) / 2.0).norm() < 1e-15);

    std::mt19937_64 rng(5);
    const auto      rho   = oracle::random_density(2, rng);
    const auto      sigma = oracle::random_density(3, rng);
    CHECK((partial_trace(kron(rho, sigma), 2, 3, Party::A) - sigma).norm() < 1e-12);
    CHECK((partial_trace(kron(rho, sigma), 2, 3, Party::B) - rho).norm() < 1e-12);
}

TEST_CASE("partial trace matches the index-loop oracle and preserves trace") {
    std::mt19937_64 rng(7);
    for(int t = 0; t < 50; ++t) {
        const long dA = 1 + t % 3, dB = 1 + (t / 3) % 3;
        const auto m  = oracle::random_ginibre(dA * dB, dA * dB, rng);
        for(bool trace_b : {true, false}) {
            const auto got = partial_trace(m, dA, dB, trace_b ? Party::B : Party::A);
            CHECK((got - oracle::partial_trace_loops(m, dA, dB, trace_b)).cwiseAbs().maxCoeff() < 1e-12);
            CHECK(std::abs(got.trace() - m.trace()) < 1e-12);
        }
    }
    const auto a = oracle::random_ginibre(2, 2, rng);
    const auto b = oracle::random_ginibre(3, 3, rng);
    CHECK((partial_trace(kron(a, b), 2, 3, Party::A) - a.trace() * b).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial trace shape errors") {
    CHECK_THROWS_AS((void) partial_trace(ComplexMatrix::Identity(4, 4), 2, 3, Party::A), ShapeError);
    CHECK_THROWS_AS((void) partial_trace(ComplexMatrix::Identity(4, 4), 0, 4, Party::A), ShapeError);
}

TEST_CASE("hermitian eigenvalues: known spectra") {
    const auto d = hermitian_eigenvalues(diag({0.25, 0.75}));
    CHECK(d == std::vector<double>{0.25, 0.75});
    const auto x = hermitian_eigenvalues(pauli_x());
    CHECK(x[0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("hermitian eigenvalues agree with the characteristic polynomial") {
    std::mt19937_64 rng(3);
    for(int t = 0; t < 100; ++t) {
        const long n    = 1 + t % 4;
        const auto h    = oracle::random_hermitian(n, rng);
        const auto got  = hermitian_eigenvalues(h);
        const auto want = oracle::charpoly_eigenvalues(h);
        REQUIRE(got.size() == want.size());
        for(std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= 1e-8);
    }
}

TEST_CASE("eigensystem reconstructs the input and the trace") {
    std::mt19937_64 rng(9);
    const auto      h   = oracle::random_hermitian(6, rng);
    const auto      eig = hermitian_eigensystem(h);
    Eigen::VectorXcd lam(6);
    double           sum = 0.0;
    for(int i = 0; i < 6; ++i) sum += (lam(i) = eig.values[static_cast<std::size_t>(i)]).real();
    const ComplexMatrix rec = eig.vectors * lam.asDiagonal() * eig.vectors.adjoint();
    CHECK((h - rec).norm() <= 1e-8 * h.norm());
    CHECK(std::abs(sum - h.trace().real()) < 1e-9);
    CHECK(std::is_sorted(eig.values.begin(), eig.values.end()));
}

TEST_CASE("PSD spectra stay above -eigenvalue_clamp") {
    std::mt19937_64 rng(13);
    const Tolerances tol;
    for(int t = 0; t < 100; ++t) {
        const auto rho = oracle::random_density(1 + t % 6, rng);
        CHECK(hermitian_eigenvalues(rho, tol).front() >= -tol.eigenvalue_clamp);
    }
}

TEST_CASE("non-Hermitian input is rejected") {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS((void) hermitian_eigenvalues(m), ValidationError);
    // Within tolerance the Hermitian part is used.
    m << 1.0, 1e-12, 0.0, 1.0;
    CHECK_NOTHROW((void) hermitian_eigenvalues(m));
}

TEST_CASE("tolerance validation") {
    CHECK_NOTHROW(Tolerances::defaults().validate());
    CHECK_NOTHROW(Tolerances::strict().validate());
    Tolerances bad;
    bad.trace_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
}
