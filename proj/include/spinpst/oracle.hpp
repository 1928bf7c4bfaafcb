#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "spinpst/network.hpp"

namespace spinpst {

/// Full eigendecomposition of a real symmetric matrix. Eigenvalues ascend;
/// eigenvector l is the l-th column of the (row-major) vector matrix.
struct EigenDecomposition {
    int order = 0;
    std::vector<double> eigenvalues;
    std::vector<double> eigenvectors;  // row-major order x order

    double vector_entry(int row, int col) const { return eigenvectors[static_cast<std::size_t>(row) * order + col]; }
};

/// Cyclic plane-rotation (Jacobi) eigensolver. Sweeps until the
/// off-diagonal Frobenius mass falls below 1e-14 * ||H||_F; throws
/// ConvergenceError past 100 sweeps.
EigenDecomposition sym_eigen(const HamiltonianMatrix& h);

/// exp(-iHt) applied to a state vector, via the eigendecomposition.
std::vector<std::complex<double>> evolve(const HamiltonianMatrix& h, std::span<const std::complex<double>> source,
                                         double t);

/// Destination of a transfer amplitude: either a single vertex or a whole
/// distance layer (the layer vector phi_k).
struct TransferTarget {
    enum class Kind { vertex, layer };

    static TransferTarget vertex(int id) { return {Kind::vertex, id}; }
    static TransferTarget layer(int index) { return {Kind::layer, index}; }

    Kind kind;
    int index;
};

/// Overlap of exp(-iHt)|reference> with the target vertex eigenket or
/// layer vector, computed on the full site space.
std::complex<double> amplitude_full(const SpinNetwork& net, double t, TransferTarget target);

/// Exact number of closed walks of the given length at the reference
/// vertex, by integer matrix powering. Requires an adjacency-mode network
/// with unit couplings and steps <= 20.
std::uint64_t walk_count(const SpinNetwork& net, int steps);

}  // namespace spinpst
