#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "spinpst/network.hpp"
#include "spinpst/oracle.hpp"
#include "spinpst/spectral.hpp"

#include "../support/test_support.hpp"

using namespace spinpst;
using testsupport::Rng;

namespace {

HamiltonianMatrix random_symmetric(Rng& rng, int order) {
    HamiltonianMatrix h(order);
    for (int i = 0; i < order; ++i) {
        for (int j = i; j < order; ++j) {
            h.set_symmetric(i, j, rng.uniform(-2.0, 2.0));
        }
    }
    return h;
}

}  // namespace

TEST_CASE("eigendecomposition of the two-vertex Hamiltonian") {
    HamiltonianMatrix h(2);
    h.set_symmetric(0, 1, 0.5);
    const EigenDecomposition eig = sym_eigen(h);
    CHECK(eig.eigenvalues[0] == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(eig.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("eigendecomposition of the zero matrix") {
    const EigenDecomposition eig = sym_eigen(HamiltonianMatrix(3));
    for (double value : eig.eigenvalues) CHECK(value == 0.0);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double ip = 0.0;
            for (int k = 0; k < 3; ++k) ip += eig.vector_entry(k, i) * eig.vector_entry(k, j);
            CHECK(ip == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-14));
        }
    }
}

TEST_CASE("hypercube d=3 spectrum") {
    const EigenDecomposition eig = sym_eigen(hamiltonian(build_hypercube_column(3)));
    const std::vector<double> expected{-1.5, -0.5, -0.5, -0.5, 0.5, 0.5, 0.5, 1.5};
    REQUIRE(eig.eigenvalues.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(eig.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-12));
    }
}

TEST_CASE("reconstruction and orthonormality on random matrices") {
    Rng rng(20240811);
    for (int trial = 0; trial < 100; ++trial) {
        const int order = rng.uniform_int(1, 32);
        const HamiltonianMatrix h = random_symmetric(rng, order);
        const EigenDecomposition eig = sym_eigen(h);

        double rebuild_error = 0.0;
        double gram_error = 0.0;
        for (int i = 0; i < order; ++i) {
            for (int j = 0; j < order; ++j) {
                double sum = 0.0;
                double gram = 0.0;
                for (int l = 0; l < order; ++l) {
                    sum += eig.vector_entry(i, l) * eig.eigenvalues[l] * eig.vector_entry(j, l);
                    gram += eig.vector_entry(l, i) * eig.vector_entry(l, j);
                }
                rebuild_error = std::max(rebuild_error, std::abs(sum - h.at(i, j)));
                gram_error = std::max(gram_error, std::abs(gram - (i == j ? 1.0 : 0.0)));
            }
        }
        CHECK(rebuild_error <= 1e-10 * std::max(h.max_abs(), 1e-30));
        CHECK(gram_error <= 1e-10);
        for (int l = 0; l + 1 < order; ++l) CHECK(eig.eigenvalues[l] <= eig.eigenvalues[l + 1]);
    }
}

TEST_CASE("non-finite input trips the sweep limit") {
    HamiltonianMatrix h(2);
    h.set_symmetric(0, 1, std::numeric_limits<double>::quiet_NaN());
    CHECK_THROWS_AS(sym_eigen(h), ConvergenceError);
}

TEST_CASE("evolution basics") {
    SUBCASE("t=0 is the identity") {
        const HamiltonianMatrix h = hamiltonian(build_star_extended());
        std::vector<std::complex<double>> source(5, 0.0);
        source[2] = {0.6, 0.0};
        source[4] = {0.0, 0.8};
        const auto out = evolve(h, source, 0.0);
        for (int i = 0; i < 5; ++i) CHECK(std::abs(out[i] - source[i]) <= 1e-12);
    }
    SUBCASE("two-vertex transfer at t=pi") {
        const HamiltonianMatrix h = hamiltonian(from_edge_list(2, {{1, 2, 1.0}}));
        std::vector<std::complex<double>> source{{1.0, 0.0}, {0.0, 0.0}};
        const auto out = evolve(h, source, std::numbers::pi);
        CHECK(std::abs(out[1] - std::complex<double>(0.0, -1.0)) <= 1e-12);
        CHECK(std::abs(out[0]) <= 1e-12);
    }
    SUBCASE("norm preservation at random times") {
        Rng rng(7);
        const HamiltonianMatrix h = hamiltonian(build_binary_tree_modulated());
        std::vector<std::complex<double>> source(16, 0.0);
        source[0] = 1.0;
        for (int trial = 0; trial < 20; ++trial) {
            const auto out = evolve(h, source, rng.uniform(-20.0, 20.0));
            double norm = 0.0;
            for (const auto& amp : out) norm += std::norm(amp);
            CHECK(std::abs(norm - 1.0) <= 1e-10);
        }
    }
    SUBCASE("dimension mismatch") {
        std::vector<std::complex<double>> source(3, 0.0);
        CHECK_THROWS_AS(evolve(HamiltonianMatrix(2), source, 1.0), Error);
    }
}

TEST_CASE("full-space transfer amplitudes") {
    SUBCASE("W network reaches vertex 8 at pi/sqrt(3)") {
        const double t = std::numbers::pi / std::sqrt(3.0);
        const auto f = amplitude_full(build_w_network(), t, TransferTarget::vertex(8));
        CHECK(std::abs(f) == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("circulant ring reaches vertex 6 at pi") {
        const auto f = amplitude_full(build_circulant6(), std::numbers::pi, TransferTarget::vertex(6));
        CHECK(std::abs(f) == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("t=0 at the reference") {
        const auto f = amplitude_full(build_star_extended(), 0.0, TransferTarget::vertex(1));
        CHECK(std::abs(f - 1.0) <= 1e-12);
    }
    SUBCASE("invalid targets") {
        const SpinNetwork net = build_star_extended();
        CHECK_THROWS_AS(amplitude_full(net, 1.0, TransferTarget::vertex(0)), InvalidTargetError);
        CHECK_THROWS_AS(amplitude_full(net, 1.0, TransferTarget::vertex(6)), InvalidTargetError);
        CHECK_THROWS_AS(amplitude_full(net, 1.0, TransferTarget::layer(-1)), InvalidTargetError);
        CHECK_THROWS_AS(amplitude_full(net, 1.0, TransferTarget::layer(3)), InvalidTargetError);
    }
}

TEST_CASE("walk counting") {
    const SpinNetwork w = build_w_network().as_adjacency_mode();
    CHECK(walk_count(w, 0) == 1);
    CHECK(walk_count(w, 2) == 6);

    SUBCASE("no odd closed walks on layered bipartite examples") {
        for (const SpinNetwork& net : {build_w_network().as_adjacency_mode(),
                                       build_hypercube_column(3).as_adjacency_mode(),
                                       build_binary_tree_unweighted().as_adjacency_mode()}) {
            for (int m = 1; m <= 9; m += 2) CHECK(walk_count(net, m) == 0);
        }
    }
    SUBCASE("matches dense adjacency powers") {
        const SpinNetwork net = build_hypercube_column(3).as_adjacency_mode();
        const HamiltonianMatrix a = hamiltonian(net);
        std::vector<double> v(a.order(), 0.0);
        v[net.reference() - 1] = 1.0;
        for (int m = 0; m <= 10; ++m) {
            CHECK(static_cast<double>(walk_count(net, m)) == doctest::Approx(v[net.reference() - 1]).epsilon(1e-12));
            v = a.apply(v);
        }
    }
    SUBCASE("mode and range guards") {
        CHECK_THROWS_AS(walk_count(build_w_network(), 2), ModeMismatchError);
        CHECK_THROWS_AS(walk_count(build_star_extended().as_adjacency_mode(), 2), ModeMismatchError);
        CHECK_THROWS_AS(walk_count(w, 21), ModeMismatchError);
        CHECK_THROWS_AS(walk_count(w, -1), ModeMismatchError);
    }
}

TEST_CASE("measure moments count closed walks through m=10") {
    for (const SpinNetwork& base :
         {build_w_network(), build_hypercube_column(1), build_hypercube_column(2), build_hypercube_column(3),
          build_hypercube_column(4), build_binary_tree_unweighted()}) {
        const SpinNetwork net = base.as_adjacency_mode();
        const SpectralMeasure measure = gauss_measure(reduce(net));
        for (int m = 0; m <= 10; ++m) {
            const double walks = static_cast<double>(walk_count(net, m));
            CHECK(moment(measure, m) == doctest::Approx(walks).epsilon(1e-10));
        }
    }
}
