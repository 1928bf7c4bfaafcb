#pragma once

#include <span>
#include <vector>

#include "spinpst/errors.hpp"

namespace spinpst {

/// Undirected weighted edge between two 1-based vertex ids. Endpoints are
/// stored with a < b.
struct Edge {
    int a = 0;
    int b = 0;
    double coupling = 0.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Dense real symmetric matrix. Indices are 0-based; vertex id v maps to
/// row/column v-1.
class HamiltonianMatrix {
public:
    HamiltonianMatrix() = default;
    explicit HamiltonianMatrix(int order) : order_(order), entries_(static_cast<std::size_t>(order) * order, 0.0) {}

    int order() const noexcept { return order_; }

    double at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * order_ + j]; }
    double& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * order_ + j]; }

    void set_symmetric(int i, int j, double value) {
        at(i, j) = value;
        at(j, i) = value;
    }

    /// Matrix-vector product.
    std::vector<double> apply(std::span<const double> x) const;

    double max_abs() const;
    double frobenius_norm() const;

    std::span<const double> data() const noexcept { return entries_; }

private:
    int order_ = 0;
    std::vector<double> entries_;
};

/// A weighted spin network: connected undirected graph with positive
/// couplings, a reference vertex, and a global energy scale. Immutable
/// after construction; construct through from_edge_list or a builder.
class SpinNetwork {
public:
    int vertex_count() const noexcept { return vertex_count_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    int reference() const noexcept { return reference_; }
    double scale() const noexcept { return scale_; }
    bool adjacency_mode() const noexcept { return adjacency_mode_; }

    /// Copy with the Hamiltonian entry convention switched to the bare
    /// coupling (H_ij = scale * J_ij), used for walk-count checks.
    SpinNetwork as_adjacency_mode() const;

    /// Copy restratified from a different reference vertex.
    SpinNetwork with_reference(int reference) const;

    /// Copy with a different global scale.
    SpinNetwork with_scale(double scale) const;

    /// Adjacency lists indexed by vertex id (index 0 unused).
    std::vector<std::vector<int>> adjacency() const;

    friend bool operator==(const SpinNetwork&, const SpinNetwork&) = default;

    friend SpinNetwork from_edge_list(int vertex_count, const std::vector<Edge>& edges, int reference, double scale,
                                      bool adjacency_mode);

private:
    SpinNetwork() = default;

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    int reference_ = 1;
    double scale_ = 1.0;
    bool adjacency_mode_ = false;
};

/// Validate and build a network from an explicit edge list.
///
/// Throws InvalidEdgeError for out-of-range ids, self-loops, duplicate
/// edges or non-positive couplings, and DisconnectedGraphError when some
/// vertex is unreachable from the reference.
SpinNetwork from_edge_list(int vertex_count, const std::vector<Edge>& edges, int reference = 1, double scale = 1.0,
                           bool adjacency_mode = false);

// ---------------------------------------------------------------------------
// Example-family builders. All use unit scale and reference vertex 1.
// ---------------------------------------------------------------------------

/// Column graph of the d-dimensional hypercube layered by Hamming weight:
/// d+1 columns of sizes C(d,k), unit couplings. Vertices are numbered
/// column by column, ascending bitmask within a column.
SpinNetwork build_hypercube_column(int dimension);

/// Eight vertices; vertex 1 and vertex 8 each coupled to all of 2..7.
SpinNetwork build_w_network();

/// Complete binary tree on 7 vertices rooted at vertex 1, unit couplings.
SpinNetwork build_binary_tree_unweighted();

/// Path 1-2-...-n with couplings J_{k,k+1} = sqrt(k(n-k)).
SpinNetwork build_engineered_chain(int length);

/// Five vertices: edge (1,2) with coupling sqrt(3); hub 2 coupled to
/// 3, 4, 5 with unit couplings.
SpinNetwork build_star_extended();

/// Six-vertex circulant-style ring: couplings sqrt(3/2), 2, sqrt(3/2) by
/// distance layer, arranged so every vertex has degree 2.
SpinNetwork build_circulant6();

/// Depth-4 binary tree on 16 vertices (a chain vertex above the root) with
/// modulated couplings 2, sqrt(3), sqrt(3), sqrt(2) by level.
SpinNetwork build_binary_tree_modulated();

/// Single-excitation Hamiltonian in the site basis: H[i][j] is
/// scale * J_ij / 2 on edges (scale * J_ij in adjacency mode), zero
/// elsewhere, zero diagonal.
HamiltonianMatrix hamiltonian(const SpinNetwork& net);

}  // namespace spinpst
