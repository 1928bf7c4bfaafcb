#pragma once

#include <vector>

#include "spinpst/network.hpp"

namespace spinpst {

/// Partition of the vertex set into breadth-first distance layers from the
/// reference vertex. layers[k] holds the 1-based vertex ids at distance k,
/// ascending.
struct Stratification {
    std::vector<std::vector<int>> layers;

    int depth() const noexcept { return static_cast<int>(layers.size()) - 1; }
};

/// Unit vectors over the site space, one per layer: amplitude
/// 1/sqrt(|V_k|) on each vertex of layer k, zero elsewhere.
using LayerVectors = std::vector<std::vector<double>>;

/// The tridiagonal reduction coefficients: omega holds (w_1..w_d), all
/// positive; alpha holds (a_1..a_{d+1}).
struct JacobiSequences {
    std::vector<double> omega;
    std::vector<double> alpha;

    int depth() const noexcept { return static_cast<int>(omega.size()); }

    friend bool operator==(const JacobiSequences&, const JacobiSequences&) = default;
};

/// Breadth-first layers from the reference vertex. Depth equals the
/// eccentricity of the reference.
Stratification stratify(const SpinNetwork& net);

/// The layer vectors of a stratification over vertex_count sites.
LayerVectors layer_vectors(const Stratification& strat, int vertex_count);

/// Project the Hamiltonian onto the layer-vector basis and extract the
/// tridiagonal coefficients, verifying closure: at every layer the residual
/// of H phi_k outside span{phi_{k-1}, phi_k, phi_{k+1}} must not exceed
/// 1e-12 * ||H phi_k||. Throws QuotientClosureError when the network is not
/// layer-regular from its reference vertex.
JacobiSequences reduce(const SpinNetwork& net);

/// (d+1) x (d+1) symmetric tridiagonal matrix with diagonal alpha and
/// off-diagonal sqrt(omega).
HamiltonianMatrix quotient_matrix(const JacobiSequences& seq);

}  // namespace spinpst
